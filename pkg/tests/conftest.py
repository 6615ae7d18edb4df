import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from config import PROJECT_ROOT, load_presets  # noqa: E402


@pytest.fixture(scope="session")
def presets():
    return load_presets(PROJECT_ROOT / "presets.yaml")
