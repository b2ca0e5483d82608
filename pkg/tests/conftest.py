import math
import random
from pathlib import Path

import pytest

from hypfour import geom, kernels
from hypfour.document import PolygonDocument

DATA = Path(__file__).parent / "data"


def random_point(rng: random.Random, rmax: float = 0.8):
    r = rmax * math.sqrt(rng.random())
    t = rng.uniform(0, 2 * math.pi)
    return geom.from_poincare((r * math.cos(t), r * math.sin(t)))


def load_polygon(name: str):
    return PolygonDocument.load(DATA / name).to_polygon()


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def pentagon():
    return load_polygon("pentagon.json")


@pytest.fixture
def hexagon():
    return load_polygon("hexagon.json")


@pytest.fixture
def square():
    return load_polygon("square.json")


@pytest.fixture
def dart():
    return load_polygon("dart.json")


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
