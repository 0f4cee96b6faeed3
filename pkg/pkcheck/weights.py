"""
pkcheck.weights
===============

Weighted arrangements and the quantities built from the weights.

``a_of_flat``      a_L = r(L)⁻¹ · Σ_{H ⊇ L} a_H
``b_coeff``        B(L1, L2) = #{L' ∈ 𝓖 : L1 ⊆ L' ⋖ L2} − 1
``hirzebruch_q``   the quadratic form Q_L, in two equivalent formulations
``multiplicity``   number of hyperplanes through a rank-2 flat
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, prod

from .arrangement import Arrangement, Flat
from .exactla import as_rational
from .exceptions import InputError, MalformedWeights, NotContained
from .lattice import IntersectionLattice, cached_lattice


class QFormula(str, Enum):
    PRIMARY = "primary"
    ALTERNATIVE = "alternative"


@dataclass(frozen=True)
class WeightedArrangement:
    base: Arrangement
    a: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(as_rational(x) for x in self.a)
        if len(weights) != len(self.base.hyperplanes):
            raise MalformedWeights(
                f"{len(weights)} weights for {len(self.base.hyperplanes)} hyperplanes"
            )
        bad = [i for i, x in enumerate(weights) if x <= 0]
        if bad:
            raise MalformedWeights(
                "weights must be positive; offending hyperplanes: "
                + ", ".join(f"{self.base.label(i)}={weights[i]}" for i in bad)
            )
        object.__setattr__(self, "a", weights)

    @property
    def lattice(self) -> IntersectionLattice:
        return cached_lattice(self.base)

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def total(self) -> Fraction:
        return sum(self.a, Fraction(0))

    def at_least_one(self) -> list[int]:
        """Indices whose weight leaves the open unit interval from above."""
        return [i for i, x in enumerate(self.a) if x >= 1]


def a_of_flat(w: WeightedArrangement, L: Flat) -> Fraction:
    return sum((w.a[i] for i in L.closure), Fraction(0)) / L.rank


def b_coeff(lat: IntersectionLattice, L1: Flat, L2: Flat) -> int:
    if not L1.le(L2):
        raise NotContained(f"{L1.label()} is not contained in {L2.label()}")
    return sum(1 for lp in lat.lower_covers(L2) if L1.le(lp)) - 1


def multiplicity(lat: IntersectionLattice, L: Flat) -> int:
    lat.require(L)
    if L.rank != 2:
        raise InputError(f"multiplicity is defined for rank-2 flats, {L.label()} has rank {L.rank}")
    return len(L.closure)


def hirzebruch_q(w: WeightedArrangement, L: Flat,
                 formula: QFormula | str = QFormula.PRIMARY) -> Fraction:
    lat = w.lattice
    lat.require(L)
    formula = QFormula(formula)
    if not lat.is_irreducible_flat(L):
        raise InputError(f"Q_L needs an irreducible flat, {L.label()} is reducible")
    r = L.rank
    if r <= 2:
        return Fraction(0)

    a_l = a_of_flat(w, L)
    g2 = [m for m in lat.irreducible_of_rank(2) if m.members <= L.members]
    g2_sum = sum((a_of_flat(w, m) ** 2 for m in g2), Fraction(0))

    if formula is QFormula.PRIMARY:
        b_sum = sum((b_coeff(lat, L, lat.hyperplane(i)) * w.a[i] ** 2 for i in L.closure),
                    Fraction(0))
        return g2_sum - b_sum / 2 - Fraction(r, 2) * a_l ** 2

    reducible_pairs = sum((prod(w.a[i] for i in m.closure)
                           for m in lat.flats_by_rank.get(2, ())
                           if m.members <= L.members and not lat.is_irreducible_flat(m)),
                          Fraction(0))
    return comb(r, 2) * a_l ** 2 - g2_sum - reducible_pairs


# -------------------------------------------------------------------
# random weights for seeded trials
# -------------------------------------------------------------------
def random_simplex(k: int, rnd: random.Random, spread: int = 12) -> tuple[Fraction, ...]:
    """k positive rationals summing to 1."""
    if k < 2:
        raise InputError("need at least two parts")
    u = [rnd.randint(1, spread) for _ in range(k)]
    s = sum(u)
    return tuple(Fraction(x, s) for x in u)


def random_weights(arr: Arrangement, rnd: random.Random, *, cy: bool = False,
                   spread: int = 20, attempts: int = 10_000) -> tuple[Fraction, ...]:
    """Random weights in (0, 1); with *cy* they also sum to n+1."""
    n_hyp, target = len(arr.hyperplanes), arr.dim + 1
    if not cy:
        out = []
        for _ in range(n_hyp):
            den = rnd.randint(2, spread)
            out.append(Fraction(rnd.randint(1, den - 1), den))
        return tuple(out)
    if n_hyp <= target:
        raise MalformedWeights(
            f"{n_hyp} weights in (0,1) cannot sum to {target}"
        )
    for _ in range(attempts):
        u = [rnd.randint(1, spread) for _ in range(n_hyp)]
        if max(u) * target < sum(u):
            s = sum(u)
            return tuple(Fraction(x * target, s) for x in u)
    raise MalformedWeights(f"no admissible weights found after {attempts} draws")
