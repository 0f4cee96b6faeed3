import pytest

from pkcheck.generators import gen_bm, gen_braid, gen_generic, gen_seven_lines
from pkcheck.lattice import cached_lattice


@pytest.fixture(scope="module")
def a4():
    return gen_braid(4)


@pytest.fixture(scope="module")
def a5():
    return gen_braid(5)


@pytest.fixture(scope="module")
def b3():
    return gen_bm(3)


@pytest.fixture(scope="module")
def seven():
    return gen_seven_lines()


@pytest.fixture(scope="module")
def generic4():
    return gen_generic(2, 4)


@pytest.fixture(scope="module")
def lat_a4(a4):
    return cached_lattice(a4)


@pytest.fixture(scope="module")
def lat_a5(a5):
    return cached_lattice(a5)


@pytest.fixture(scope="module")
def lat_b3(b3):
    return cached_lattice(b3)


def by_label(arr, *labels):
    """Hyperplane indices for the given labels."""
    return [arr.labels.index(l) for l in labels]
