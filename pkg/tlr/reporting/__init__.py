from .manifest import ManifestRecorder, RunManifest, RunStatus, config_digest

__all__ = ["ManifestRecorder", "RunManifest", "RunStatus", "config_digest"]
