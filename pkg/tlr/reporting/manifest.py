import hashlib
import json
import logging
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Optional
from uuid import uuid4

import yaml
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.yaml"


class RunStatus(str, Enum):
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


def config_digest(config: BaseModel) -> str:
    """SHA-256 of the canonical JSON of a validated config; key order does not matter."""
    canonical = json.dumps(config.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class RunManifest(BaseModel):
    run_id: str = Field(default_factory=lambda: uuid4().hex)
    command: str
    config_digest: str
    seed: int
    started: str = Field(default_factory=_now)
    finished: Optional[str] = None
    status: RunStatus = RunStatus.RUNNING
    files: list[str] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)
    error: Optional[str] = None


class ManifestRecorder:
    """Keeps exactly one manifest per output directory up to date."""

    def __init__(self, out_dir: Path, manifest: RunManifest) -> None:
        self.out_dir = Path(out_dir)
        self.manifest = manifest
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self._write()

    @property
    def path(self) -> Path:
        return self.out_dir / MANIFEST_NAME

    def record(self, *paths: Path) -> None:
        for path in paths:
            relative = str(Path(path).relative_to(self.out_dir))
            if relative not in self.manifest.files:
                self.manifest.files.append(relative)
        self._write()

    def note(self, **details: Any) -> None:
        self.manifest.details.update(details)
        self._write()

    def finish(self, status: RunStatus, error: Optional[str] = None) -> None:
        self.manifest.status = status
        self.manifest.error = error
        self.manifest.finished = _now()
        self._write()
        logger.info(f"Run {self.manifest.run_id} {status.value}; manifest at {self.path}")

    def _write(self) -> None:
        with open(self.path, "w", encoding="utf-8") as f:
            yaml.safe_dump(self.manifest.model_dump(mode="json"), f, sort_keys=False)
