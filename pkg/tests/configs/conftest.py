import pytest


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("TLR_SEED", "TLR_JOBS", "TLR_OUT_DIR"):
        monkeypatch.delenv(name, raising=False)
