import os
from pathlib import Path

import django
import pytest

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'nullsolve.config.django_settings')
django.setup()

DATA = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def fresh_configuration():
    """Every test starts from the defaults and leaves no overrides behind."""
    from nullsolve.apps.configuration import services

    services.reset()
    yield
    services.reset()


@pytest.fixture
def data_file():
    def _path(name: str) -> str:
        return str(DATA / name)

    return _path
