from itertools import combinations

import pytest
import sympy

from pkcheck.exactla import rank
from pkcheck.exceptions import InputError
from pkcheck.generators import braid_pair, gen_bm, gen_braid, gen_generic, gen_seven_lines


def test_family_sizes():
    assert len(gen_braid(4).hyperplanes) == 6
    assert len(gen_braid(5).hyperplanes) == 10
    assert gen_braid(5).dim == 3
    assert len(gen_bm(3).hyperplanes) == 9
    assert gen_bm(3).dim == 2
    assert len(gen_seven_lines().hyperplanes) == 7


def test_braid_pairs_match_labels():
    arr = gen_braid(5)
    for h, label in zip(arr.hyperplanes, arr.labels):
        i, j = braid_pair(h)
        assert label == f"H{i}{j}"


def test_bad_parameters():
    with pytest.raises(InputError):
        gen_braid(2)
    with pytest.raises(InputError):
        gen_bm(1)
    with pytest.raises(InputError):
        gen_generic(2, 2)


def test_generic_is_in_general_position():
    arr = gen_generic(2, 5, seed=11)
    assert len(arr.hyperplanes) == 5
    m = arr.normal_matrix()
    for triple in combinations(range(5), 3):
        assert rank(m.select(triple)) == 3


def test_generic_is_reproducible():
    assert gen_generic(3, 5, seed=4) == gen_generic(3, 5, seed=4)


def test_seven_lines_are_a_pulled_back_conic():
    arr = gen_seven_lines()
    x, y, z = sympy.symbols("x y z")
    X, Y, Z = x ** 2, y ** 2, z ** 2
    conic = X ** 2 + Y ** 2 + Z ** 2 - 2 * X * Y - 2 * Y * Z - 2 * Z * X
    product = 1
    for i in range(len(arr.hyperplanes)):
        if arr.label(i) in ("x+y+z", "-x+y+z", "x-y+z", "x+y-z"):
            a, b, c = arr.hyperplanes[i].normal
            product *= a * x + b * y + c * z
    # -x+y+z is stored as x-y-z, which fixes the overall sign
    assert sympy.expand(product - conic) == 0
    coords = [arr.hyperplanes[i].normal for i in range(7) if arr.label(i) in ("x", "y", "z")]
    assert sorted(coords) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
