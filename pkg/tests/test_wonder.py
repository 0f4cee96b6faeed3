import pytest

from pkcheck.arrangement import Arrangement
from pkcheck.exceptions import InputError, UnsupportedArrangement
from pkcheck.generators import gen_bm, gen_braid
from pkcheck.lattice import build_lattice, cached_lattice
from pkcheck.wonder import (
    PI_H,
    H2Class,
    H4Class,
    Monomial2,
    MonomialType,
    WonderfulModel,
    compare_with_oracle,
    wonderful_model,
)

from conftest import by_label


@pytest.fixture(scope="module")
def m4(lat_a4):
    return wonderful_model(lat_a4)


@pytest.fixture(scope="module")
def m5(lat_a5):
    return wonderful_model(lat_a5)


def _a4_flats(a4, lat):
    h12, h34 = (lat.hyperplane(i) for i in by_label(a4, "H12", "H34"))
    t = lat.find(by_label(a4, "H12", "H13", "H23"))
    return h12, h34, t, lat.empty


def test_basis_sizes(m4, m5, lat_b3, seven):
    assert len(m4.delta2) == 1
    assert len(m5.delta2) == 16
    assert len(wonderful_model(lat_b3).delta2) == 1
    assert len(wonderful_model(cached_lattice(seven)).delta2) == 1
    assert len(m4.enumerate_delta(1)) == 5
    with pytest.raises(InputError):
        m4.enumerate_delta(3)


def test_oracle_dimension_matches_basis(m4, m5, lat_b3):
    for model in (m4, m5, wonderful_model(lat_b3)):
        assert model.oracle.dimension == len(model.delta2)


def test_classification_on_a4(a4, lat_a4, m4):
    h12, h34, t, empty = _a4_flats(a4, lat_a4)
    h13 = lat_a4.hyperplane(by_label(a4, "H13")[0])
    cases = {
        (h12, h12): MonomialType.M1,
        (t, t): MonomialType.M2,
        (empty, t): MonomialType.M3,
        (empty, h12): MonomialType.M4,
        (t, h12): MonomialType.M5,
        (h12, h34): MonomialType.M7,
        (h12, h13): MonomialType.ZERO,
        (t, h34): MonomialType.ZERO,
        (empty, empty): MonomialType.BASIC,
    }
    for (a, b), kind in cases.items():
        assert m4.classify_monomial(Monomial2(a, b)) is kind
        assert m4.classify_monomial(Monomial2(b, a)) is kind


def test_a4_products(a4, lat_a4, m4):
    h12, h34, t, empty = _a4_flats(a4, lat_a4)
    top = Monomial2(empty, empty)

    def value(a, b):
        cls = m4.reduce_monomial(Monomial2(a, b))
        assert set(cls) <= {top}
        return cls[top]

    assert value(empty, empty) == 1
    assert value(t, t) == -1
    assert value(h12, h12) == -1
    assert value(h12, h34) == 1
    assert value(empty, h12) == -1
    assert value(t, h12) == 1
    assert value(empty, t) == 0


def test_bm4_has_transverse_types():
    # B_4 has rank-2 flats transverse to hyperplanes
    model = wonderful_model(cached_lattice(gen_bm(4)))
    kinds = {model.classify_monomial(m) for m in model.all_monomials()}
    assert MonomialType.M6 in kinds
    assert MonomialType.M7 in kinds


@pytest.mark.parametrize("name", ["a4", "a5", "b3", "seven"])
def test_table_agrees_with_oracle(name, request):
    arr = request.getfixturevalue(name)
    model = wonderful_model(cached_lattice(arr))
    sweep = compare_with_oracle(model)
    assert sweep.passed, sweep.mismatches[:3]
    assert sweep.monomials == len(model.G) * (len(model.G) + 1) // 2
    assert sweep.quotient_dimension == len(model.delta2)


def test_blowup_numbers_on_b3(lat_b3):
    model = wonderful_model(lat_b3)
    top = Monomial2(model.empty, model.empty)
    for m in model.all_monomials():
        assert model.reduce_monomial(m)[top] == model.blowup_intersection(m)


def test_blowup_only_for_planes(m5):
    with pytest.raises(UnsupportedArrangement):
        m5.blowup_intersection(Monomial2(m5.empty, m5.empty))


def test_relations_reduce_to_zero(m4, m5, lat_b3):
    for model in (m4, m5, wonderful_model(lat_b3)):
        assert model.relation_residues() == []


@pytest.mark.slow
def test_braid_a6_and_b4():
    for arr in (gen_braid(6), gen_bm(4)):
        model = WonderfulModel(build_lattice(arr))
        assert compare_with_oracle(model).passed


def test_non_nested_products_vanish(m5):
    for m in m5.all_monomials():
        if not m5.is_nested_pair(m.first, m.second):
            assert m5.reduce_monomial(m).is_zero()
            assert m5.oracle_reduce(m).is_zero()


def test_reduce_h2(a4, lat_a4, m4):
    h12, _, t, empty = _a4_flats(a4, lat_a4)
    assert m4.reduce_h2({empty: 1}) == H2Class({PI_H: -1})
    cls = m4.reduce_h2({h12: 1})
    assert cls[PI_H] == 1
    assert cls[t] == -1
    assert len(cls) == 3
    assert m4.reduce_h2({h12: 1, PI_H: -1, t: 2})[t] == 1


def test_sparse_class_arithmetic(m4):
    top = Monomial2(m4.empty, m4.empty)
    x = H4Class({top: 2})
    assert (x - x).is_zero()
    assert (3 * x)[top] == 6
    assert (-x + x) == H4Class()
    assert x.dump() == [(top.render(), "2")]


@pytest.mark.parametrize("arr", [
    Arrangement.from_normals(2, [[1, 0, 0], [0, 1, 0], [1, 1, 0]]),
    Arrangement.from_normals(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    Arrangement.from_normals(1, [[1, 0], [0, 1], [1, 1]]),
])
def test_unsupported(arr):
    with pytest.raises(UnsupportedArrangement):
        WonderfulModel(build_lattice(arr))


def _below(model, flat):
    """Members of 𝓖 contained in *flat*, the flat itself included."""
    return [f for f in model.G if f == flat or model.sub(f, flat)]


def _reduce_sum(model, pairs):
    total = H4Class()
    for a, b in pairs:
        total = total + model.reduce_monomial(Monomial2(a, b))
    return total


@pytest.mark.parametrize("name", ["a4", "a5", "b3", "seven"])
def test_cover_relation_reduces_to_zero(name, request):
    model = wonderful_model(cached_lattice(request.getfixturevalue(name)))
    checked = 0
    for low in model.G:
        for high in model.G:
            if model.covers(low, high):
                assert _reduce_sum(model, ((f, high) for f in _below(model, low))).is_zero()
                checked += 1
    assert checked


@pytest.mark.parametrize("name", ["a4", "a5", "b3", "seven"])
def test_square_of_a_point_class_reduces_to_zero(name, request):
    model = wonderful_model(cached_lattice(request.getfixturevalue(name)))
    points = [f for f in model.G if f.rank == 2]
    assert points
    for flat in points:
        below = _below(model, flat)
        assert _reduce_sum(model, ((a, b) for a in below for b in below)).is_zero()


def test_basis_members_are_basic(m4, m5):
    for model in (m4, m5):
        assert all(model.is_basic(m) for m in model.delta2)
        assert sum(model.is_basic(m) for m in model.all_monomials()) == len(model.delta2)
