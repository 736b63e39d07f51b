from typing import Callable

import pytest

from tests.fakes import make_config
from tlr.simulation.domain import SimulationConfig


@pytest.fixture
def config_factory() -> Callable[..., SimulationConfig]:
    return make_config
