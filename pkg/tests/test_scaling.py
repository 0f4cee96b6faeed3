import pytest

from pkcheck.checker import braid_weights, check_theorem
from pkcheck.generators import gen_bm, gen_braid
from pkcheck.lattice import build_lattice
from pkcheck.weights import WeightedArrangement


def test_braid_a6_lattice():
    lat = build_lattice(gen_braid(6))
    assert lat.counts() == {1: 15, 2: 65, 3: 90, 4: 31, 5: 1}
    assert len(lat.irreducible_flats()) == 57


def test_braid_a6_check():
    arr = gen_braid(6)
    w = WeightedArrangement(arr, braid_weights(["1/6"] * 6))
    assert check_theorem(w).verdict


@pytest.mark.slow
def test_bm4_uniform():
    arr = gen_bm(4)
    w = WeightedArrangement(arr, ("1/4",) * 16)
    assert check_theorem(w).verdict


def test_bench_row():
    from pkcheck.bench import bench_braid

    row = bench_braid(4, trials=2)
    assert row["hyperplanes"] == 6
    assert row["delta2"] == 1
    assert row["G"] == 11
