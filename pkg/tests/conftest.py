import logging
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from utils.games import matching_pennies, quadratic_bowl, two_well  # noqa: E402
from utils.optimizers import sim_sgd  # noqa: E402


@pytest.fixture
def mp():
    return matching_pennies()


@pytest.fixture
def bowl():
    return quadratic_bowl((1.0, 2.0))


@pytest.fixture
def wells():
    return two_well()


@pytest.fixture
def bowl_op(bowl):
    return sim_sgd(bowl, 0.1)


@pytest.fixture
def wells_op(wells):
    return sim_sgd(wells, 0.1)


@pytest.fixture
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)
