import random
from fractions import Fraction

import pytest

from pkcheck.chern import (
    PairKind,
    chern2_pair,
    eta,
    omega_closed_form,
    omega_ohtsuki,
    opposite_chain_form,
    parch2,
    parch2_closed_form,
    transverse_coordinates,
    verify_identities,
)
from pkcheck.checker import braid_weights, uniform_reflection_weights
from pkcheck.exceptions import MalformedWeights
from pkcheck.generators import gen_braid
from pkcheck.lattice import cached_lattice
from pkcheck.weights import WeightedArrangement, hirzebruch_q, random_simplex, random_weights
from pkcheck.wonder import PI_H, H2Class, Monomial2, wonderful_model


def test_chern2_pair_values():
    assert chern2_pair(PairKind.EQUAL, 2, 2, Fraction(3, 4), Fraction(3, 4)) == Fraction(9, 16)
    assert chern2_pair("chain", 2, 1, Fraction(1, 3), Fraction(1, 5)) == Fraction(1, 15)
    assert chern2_pair("transverse", 1, 1, Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)
    assert chern2_pair("equal", 1, 1, Fraction(1, 2), Fraction(1, 2)) == 0


def test_eta_uniform_a4(a4):
    w = WeightedArrangement(a4, ("1/3",) * 6)
    assert eta(w) == H2Class({PI_H: 1})


@pytest.mark.parametrize("name", ["a4", "a5", "b3", "seven"])
def test_eta_in_basis(name, request):
    arr = request.getfixturevalue(name)
    rnd = random.Random(8)
    for _ in range(50):
        w = WeightedArrangement(arr, random_weights(arr, rnd))
        assert eta(w) == H2Class({PI_H: arr.dim + 1 - w.total})


def test_eta_vanishes_with_cy_weights(b3):
    w = WeightedArrangement(b3, uniform_reflection_weights(b3))
    assert eta(w).is_zero()


@pytest.mark.parametrize("name", ["a5", "b3"])
def test_identities_with_cy_weights(name, request):
    arr = request.getfixturevalue(name)
    rnd = random.Random(0)
    for _ in range(20):
        w = WeightedArrangement(arr, random_weights(arr, rnd, cy=True))
        omega, pch2 = verify_identities(w, constrain_cy=True)
        assert omega.passed, omega.mismatches
        assert pch2.passed, pch2.mismatches
        assert not omega.skipped


@pytest.mark.parametrize("name, trials", [("a5", 10), ("b3", 20)])
def test_identities_without_cy(name, trials, request):
    arr = request.getfixturevalue(name)
    rnd = random.Random(1)
    model = wonderful_model(cached_lattice(arr))
    top = Monomial2(model.empty, model.empty)
    for _ in range(trials):
        w = WeightedArrangement(arr, random_weights(arr, rnd))
        omega, pch2 = verify_identities(w, constrain_cy=False)
        assert omega.passed and pch2.passed
        assert [e.key for e in omega.skipped] == [top]
        assert [e.key for e in pch2.skipped] == [top]
        assert len(omega.entries) == len(model.delta2)


def test_opposite_chain_sign_is_reported_not_asserted(a5):
    rnd = random.Random(4)
    w = WeightedArrangement(a5, random_weights(a5, rnd, cy=True))
    omega, pch2 = verify_identities(w)
    assert all(e.opposite is None for e in omega.entries)
    assert all(e.opposite is not None for e in pch2.entries)
    # every chain through a rank-2 flat has closed form 0, so both signs agree
    assert not pch2.opposite_disagreements
    assert pch2.passed
    assert parch2_closed_form(w) == omega_closed_form(w)


def test_cy_required_when_asked(a5):
    w = WeightedArrangement(a5, ("1/10",) * 10)
    with pytest.raises(MalformedWeights):
        verify_identities(w, constrain_cy=True)


def test_chain_coordinates_through_rank_two_vanish(a5):
    model = wonderful_model(cached_lattice(a5))
    rnd = random.Random(6)
    w = WeightedArrangement(a5, random_weights(a5, rnd, cy=True))
    omega, pch2 = omega_ohtsuki(w), parch2(w)
    chains = [m for m in model.delta2 if not m.is_square]
    assert len(chains) == 10
    for m in chains:
        assert omega[m] == 0 and pch2[m] == 0


@pytest.mark.slow
def test_braid_a6_chain_sign_and_transverse_part():
    arr = gen_braid(6)
    model = wonderful_model(cached_lattice(arr))
    rnd = random.Random(6)
    transverse = [m for m in model.delta2
                  if not m.is_square and model.transverse(m.first, m.second)]
    deep = [m for m in model.delta2
            if not m.is_square and m.first.comparable(m.second)
            and min(m.first.rank, m.second.rank) >= 3]
    assert transverse and len(deep) == 15
    for _ in range(3):
        w = WeightedArrangement(arr, random_weights(arr, rnd, cy=True))
        omega, pch2 = verify_identities(w, constrain_cy=True)
        assert omega.passed and pch2.passed
        cls_omega, cls_pch2 = omega_ohtsuki(w), parch2(w)
        assert cls_omega == cls_pch2
        assert not any(transverse_coordinates(model, cls_pch2).values())
        assert any(cls_pch2[m] for m in deep)
        flipped = {e.key for e in pch2.opposite_disagreements}
        assert flipped == {m for m in deep if cls_pch2[m]}
        opposite = opposite_chain_form(w)
        for m in deep:
            assert opposite[m] == -cls_pch2[m]


def test_classes_vanish_when_the_metric_exists(a5, b3):
    rnd = random.Random(12)
    for _ in range(5):
        w = WeightedArrangement(a5, braid_weights(random_simplex(5, rnd)))
        assert omega_ohtsuki(w).is_zero()
        assert parch2(w).is_zero()
    w = WeightedArrangement(b3, uniform_reflection_weights(b3))
    assert omega_ohtsuki(w).is_zero() and parch2(w).is_zero()
    assert omega_closed_form(w).is_zero() and parch2_closed_form(w).is_zero()


def test_generic_lines_omega_is_q(generic4):
    lat = cached_lattice(generic4)
    top = Monomial2(lat.empty, lat.empty)
    rnd = random.Random(2)
    for _ in range(5):
        w = WeightedArrangement(generic4, random_weights(generic4, rnd, cy=True))
        q = hirzebruch_q(w, lat.empty)
        assert q != 0
        assert omega_ohtsuki(w)[top] == q
        assert parch2(w)[top] == q
