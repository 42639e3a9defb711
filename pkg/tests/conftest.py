from pathlib import Path

import pytest

from colocal import load_quiver

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def a2():
    return load_quiver(DATA / "quivers" / "a2.quiver")


@pytest.fixture
def kronecker():
    return load_quiver(DATA / "quivers" / "kronecker.quiver")


@pytest.fixture
def loop_square():
    return load_quiver(DATA / "quivers" / "loop_square.quiver")


@pytest.fixture
def sink_pair():
    return load_quiver(DATA / "quivers" / "sink_pair.quiver")


@pytest.fixture
def two_paths():
    return load_quiver(DATA / "quivers" / "two_paths.quiver")


@pytest.fixture
def two_cycle():
    return load_quiver(DATA / "quivers" / "two_cycle.quiver")
