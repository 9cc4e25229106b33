import os

import pytest

from src.common import config
from src.graphs import generators
from src.setsys.set_system import SetSystem, example_chain


FIXTURE_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'resources', 'fixtures')


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from the default caps, whatever the environment says."""
    monkeypatch.delenv(config.ENV_MAX_N, raising=False)
    monkeypatch.delenv(config.ENV_THREADS, raising=False)
    config.reset()
    yield
    config.reset()


@pytest.fixture
def chain3() -> SetSystem:
    return example_chain(3)


@pytest.fixture
def k4_cycle_space() -> SetSystem:
    from src.graphs.matchings import cycle_space
    return cycle_space(generators.complete(4))


@pytest.fixture
def fixture_path():
    def path(name: str) -> str:
        return os.path.join(FIXTURE_DIR, name)
    return path
