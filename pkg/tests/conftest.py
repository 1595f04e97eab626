import pathlib

import pytest

REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]
ARTIFACTS_DIR = REPO_ROOT / "artifacts" / "acceptance"


@pytest.fixture(scope="session")
def artifacts_dir():
    """Where the acceptance suite drops its CSV/JSON evidence."""
    ARTIFACTS_DIR.mkdir(parents=True, exist_ok=True)
    return ARTIFACTS_DIR
