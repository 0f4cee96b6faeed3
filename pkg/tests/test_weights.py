import random
from fractions import Fraction

import pytest

from pkcheck.arrangement import Arrangement
from pkcheck.exceptions import InputError, MalformedWeights, NotContained
from pkcheck.lattice import cached_lattice
from pkcheck.weights import (
    QFormula,
    WeightedArrangement,
    a_of_flat,
    b_coeff,
    hirzebruch_q,
    multiplicity,
    random_simplex,
    random_weights,
)

from conftest import by_label


def test_weight_validation(a4):
    with pytest.raises(MalformedWeights):
        WeightedArrangement(a4, ("1/2",) * 5)
    with pytest.raises(MalformedWeights):
        WeightedArrangement(a4, ("1/2",) * 5 + ("0",))
    with pytest.raises(MalformedWeights):
        WeightedArrangement(a4, ("1/2",) * 5 + ("-1/3",))
    w = WeightedArrangement(a4, ("1/2",) * 5 + ("1",))
    assert w.at_least_one() == [5]
    assert w.total == Fraction(7, 2)


def test_a_of_flat_and_b_coeff(a4, lat_a4):
    w = WeightedArrangement(a4, ("1/2",) * 6)
    t = lat_a4.find(by_label(a4, "H12", "H13", "H23"))
    h = lat_a4.hyperplane(by_label(a4, "H12")[0])
    assert a_of_flat(w, t) == Fraction(3, 4)
    assert a_of_flat(w, lat_a4.empty) == 1
    assert b_coeff(lat_a4, lat_a4.empty, h) == 1
    assert b_coeff(lat_a4, t, h) == 0
    assert b_coeff(lat_a4, lat_a4.empty, t) == 0
    with pytest.raises(NotContained):
        b_coeff(lat_a4, h, t)


def test_multiplicity(b3, lat_b3):
    quad = [f for f in lat_b3.irreducible_of_rank(2) if len(f.closure) == 4][0]
    assert multiplicity(lat_b3, quad) == 4
    with pytest.raises(InputError):
        multiplicity(lat_b3, lat_b3.hyperplane(0))


def test_q_domain(a4, lat_a4):
    w = WeightedArrangement(a4, ("1/2",) * 6)
    double = lat_a4.join(*(lat_a4.hyperplane(i) for i in by_label(a4, "H12", "H34")))
    with pytest.raises(InputError):
        hirzebruch_q(w, double)
    t = lat_a4.find(by_label(a4, "H12", "H13", "H23"))
    assert hirzebruch_q(w, t) == 0
    assert hirzebruch_q(w, lat_a4.hyperplane(0)) == 0


def test_q_uniform_braid_a4_vanishes(a4, lat_a4):
    w = WeightedArrangement(a4, ("1/2",) * 6)
    assert hirzebruch_q(w, lat_a4.empty) == 0


def test_q_generic_four_lines(generic4):
    rnd = random.Random(5)
    lat = cached_lattice(generic4)
    for _ in range(20):
        w = WeightedArrangement(generic4, random_weights(generic4, rnd, cy=True))
        expected = (sum(x * x for x in w.a) - 3) / 2
        assert hirzebruch_q(w, lat.empty) == expected
        assert expected < 0


@pytest.mark.parametrize("name", ["a4", "a5", "b3", "seven", "generic4"])
def test_q_formulas_agree(name, request):
    arr = request.getfixturevalue(name)
    lat = cached_lattice(arr)
    rnd = random.Random(17)
    for _ in range(50):
        w = WeightedArrangement(arr, random_weights(arr, rnd))
        for flat in lat.irreducible_flats():
            if flat.rank >= 3:
                assert (hirzebruch_q(w, flat, QFormula.PRIMARY)
                        == hirzebruch_q(w, flat, "alternative"))


def test_random_simplex():
    rnd = random.Random(1)
    for k in (2, 3, 6):
        a = random_simplex(k, rnd)
        assert len(a) == k and sum(a) == 1 and all(x > 0 for x in a)
    with pytest.raises(InputError):
        random_simplex(1, rnd)


def test_random_weights(b3):
    rnd = random.Random(2)
    for _ in range(10):
        a = random_weights(b3, rnd, cy=True)
        assert sum(a) == 3
        assert all(0 < x < 1 for x in a)
        assert all(0 < x < 1 for x in random_weights(b3, rnd))


def test_random_cy_weights_need_enough_hyperplanes():
    coords = Arrangement.from_normals(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(MalformedWeights):
        random_weights(coords, random.Random(0), cy=True)
