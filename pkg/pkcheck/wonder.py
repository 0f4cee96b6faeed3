"""
pkcheck.wonder
==============

Degree ≤ 2 cohomology of the minimal wonderful model X → CP^n of an
essential irreducible arrangement.

H*(X) is generated by classes γ_L, L ∈ 𝓖 (γ_∅ = −π*h), subject to

  R1  γ_{L1}·γ_{L2} = 0 when {L1, L2} is not nested,
  R2  Σ_{L ⊆ H} γ_L = 0 for every hyperplane H.

Degree-4 classes are written in the basic-monomial basis Δ₂. Two reducers
are provided: the closed reduction table (:meth:`WonderfulModel.reduce_monomial`)
and a presentation oracle that row-reduces the relations above
(:class:`PresentationOracle`). They must agree on every monomial.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Hashable, Iterable, Iterator, Mapping

from .arrangement import Flat
from .exactla import SparseEchelon, format_rational
from .exceptions import InputError, InternalInconsistency, UnsupportedArrangement
from .lattice import IntersectionLattice
from .weights import b_coeff

logger = logging.getLogger(__name__)

PI_H = "pi*h"


# -------------------------------------------------------------------
# monomials and sparse classes
# -------------------------------------------------------------------
@dataclass(frozen=True)
class Monomial2:
    """Unordered pair γ_A·γ_B, stored with the lower (rank, closure) first."""

    first: Flat
    second: Flat

    def __post_init__(self):
        if self.second.key < self.first.key:
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    @property
    def is_square(self) -> bool:
        return self.first == self.second

    @property
    def sort_key(self) -> tuple:
        return (self.first.key, self.second.key)

    def render(self) -> str:
        if self.is_square:
            return f"g{self.first.label()}²"
        return f"g{self.first.label()}*g{self.second.label()}"


class MonomialType(str, Enum):
    ZERO = "zero"
    BASIC = "basic"
    M1 = "M1"  # γ_H²
    M2 = "M2"  # γ_L², r(L) = 2
    M3 = "M3"  # γ_L γ_M, L ⋖ M, r(M) ≥ 2
    M4 = "M4"  # γ_L γ_H, L ⊂ H, r(L) ≥ 3
    M5 = "M5"  # γ_L γ_H, L ⊂ H, r(L) = 2
    M6 = "M6"  # γ_L γ_H, L ⋔ H, r(L) ≥ 2
    M7 = "M7"  # γ_H γ_H', H ⋔ H'


class SparseClass:
    """Immutable sparse rational vector; zero coordinates are never stored."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Mapping[Hashable, Any] | None = None):
        self._coords = {k: Fraction(v) for k, v in (coords or {}).items() if v}

    @staticmethod
    def _sort_key(key: Hashable) -> tuple:
        raise NotImplementedError

    def __getitem__(self, key: Hashable) -> Fraction:
        return self._coords.get(key, Fraction(0))

    def __iter__(self) -> Iterator[Hashable]:
        return iter(sorted(self._coords, key=self._sort_key))

    def __len__(self) -> int:
        return len(self._coords)

    def items(self) -> list[tuple[Hashable, Fraction]]:
        return [(k, self._coords[k]) for k in self]

    def is_zero(self) -> bool:
        return not self._coords

    def _combine(self, other: SparseClass, sign: int):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._coords)
        for k, v in other._coords.items():
            out[k] = out.get(k, 0) + sign * v
        return type(self)(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._coords.items()})

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return type(self)({k: scalar * v for k, v in self._coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._coords == other._coords

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{self._render_key(k)}: {format_rational(v)}" for k, v in self.items())
        return f"{type(self).__name__}({{{body}}})"

    @staticmethod
    def _render_key(key: Hashable) -> str:
        return str(key)

    def dump(self) -> list[tuple[str, str]]:
        return [(self._render_key(k), format_rational(v)) for k, v in self.items()]


class H2Class(SparseClass):
    """Coordinates over {π*h} ∪ {γ_L : L ∈ 𝓖, 2 ≤ r(L) ≤ n}."""

    @staticmethod
    def _sort_key(key):
        return (0, ()) if key == PI_H else (1, key.key)

    @staticmethod
    def _render_key(key):
        return PI_H if key == PI_H else f"g{key.label()}"


class H4Class(SparseClass):
    """Coordinates over the basic monomials Δ₂."""

    @staticmethod
    def _sort_key(key):
        return key.sort_key

    @staticmethod
    def _render_key(key):
        return key.render()


# -------------------------------------------------------------------
# the model
# -------------------------------------------------------------------
class WonderfulModel:
    """Combinatorics of 𝓖 plus the reduction table for degree-2 monomials."""

    def __init__(self, lattice: IntersectionLattice):
        if lattice.dim < 2:
            raise UnsupportedArrangement("the wonderful model needs n >= 2")
        if not lattice.is_essential:
            raise UnsupportedArrangement("the wonderful model needs an essential arrangement")
        if not lattice.is_irreducible:
            raise UnsupportedArrangement("the wonderful model needs an irreducible arrangement")
        self.lattice = lattice
        self.n = lattice.dim
        self.G: tuple[Flat, ...] = lattice.irreducible_flats()
        self.g_set = frozenset(self.G)
        self.empty: Flat = lattice.empty
        self.hyperplanes = tuple(lattice.hyperplane(i)
                                 for i in range(len(lattice.arrangement.hyperplanes)))
        self._b: dict[tuple[Flat, Flat], int] = {}
        self._transverse: dict[Monomial2, bool] = {}
        self._oracle: PresentationOracle | None = None
        self._delta2: tuple[Monomial2, ...] | None = None

    # ------------------------------------------------------------------
    # order relations on 𝓖
    # ------------------------------------------------------------------
    @staticmethod
    def sub(a: Flat, b: Flat) -> bool:
        """a ⊊ b as subspaces."""
        return b.members < a.members

    @staticmethod
    def covers(a: Flat, b: Flat) -> bool:
        """a ⋖ b."""
        return b.members < a.members and a.rank == b.rank + 1

    @staticmethod
    def deep(a: Flat, b: Flat) -> bool:
        """a ⋐ b: proper containment with rank gap at least 2."""
        return b.members < a.members and a.rank >= b.rank + 2

    def transverse(self, a: Flat, b: Flat) -> bool:
        """a ⋔ b: incomparable with reducible intersection."""
        key = Monomial2(a, b)
        found = self._transverse.get(key)
        if found is None:
            found = (a != b and not a.comparable(b)
                     and self.lattice.join(a, b) not in self.g_set)
            self._transverse[key] = found
        return found

    def is_nested_pair(self, a: Flat, b: Flat) -> bool:
        return a == b or a.comparable(b) or self.transverse(a, b)

    def b(self, a: Flat, b: Flat) -> int:
        key = (a, b)
        found = self._b.get(key)
        if found is None:
            found = b_coeff(self.lattice, a, b)
            self._b[key] = found
        return found

    def _require(self, *flats: Flat) -> None:
        for f in flats:
            if f not in self.g_set:
                raise InputError(f"{f.label()} is not an irreducible flat")

    # ------------------------------------------------------------------
    # bases
    # ------------------------------------------------------------------
    def enumerate_delta(self, k: int) -> tuple:
        if k == 1:
            return tuple(f for f in self.G if f.rank >= 2)
        if k == 2:
            return self.delta2
        raise InputError(f"only degrees 1 and 2 are modelled, got {k}")

    @property
    def delta2(self) -> tuple[Monomial2, ...]:
        if self._delta2 is None:
            out = [Monomial2(a, b) for a, b in combinations_with_replacement(self.G, 2)
                   if self.is_nested_pair(a, b) and self._is_basic(a, b)]
            self._delta2 = tuple(sorted(out, key=lambda m: m.sort_key))
        return self._delta2

    def _is_basic(self, a: Flat, b: Flat) -> bool:
        if a == b:
            return a.rank >= 3
        if self.sub(a, b):
            return self.deep(a, b) and b.rank >= 2
        if self.sub(b, a):
            return self.deep(b, a) and a.rank >= 2
        return self.transverse(a, b) and a.rank >= 2 and b.rank >= 2

    def is_basic(self, m: Monomial2) -> bool:
        return self.is_nested_pair(m.first, m.second) and self._is_basic(m.first, m.second)

    def classify_monomial(self, m: Monomial2) -> MonomialType:
        a, b = m.first, m.second
        self._require(a, b)
        if a == b:
            return {1: MonomialType.M1, 2: MonomialType.M2}.get(a.rank, MonomialType.BASIC)
        if self.sub(b, a):
            a, b = b, a
        if self.sub(a, b):
            if b.rank == 1:
                return MonomialType.M4 if a.rank >= 3 else MonomialType.M5
            return MonomialType.BASIC if self.deep(a, b) else MonomialType.M3
        if not self.transverse(a, b):
            return MonomialType.ZERO
        hyperplanes = (a.rank == 1) + (b.rank == 1)
        return (MonomialType.BASIC, MonomialType.M6, MonomialType.M7)[hyperplanes]

    # ------------------------------------------------------------------
    # the reduction table
    # ------------------------------------------------------------------
    def reduce_monomial(self, m: Monomial2) -> H4Class:
        kind = self.classify_monomial(m)
        if kind is MonomialType.ZERO:
            return H4Class()
        if kind is MonomialType.BASIC:
            return H4Class({m: 1})
        a, b = m.first, m.second
        if self.sub(b, a):
            a, b = b, a
        coords: defaultdict[Monomial2, Fraction] = defaultdict(Fraction)
        handler = {
            MonomialType.M1: self._square_hyperplane,
            MonomialType.M2: self._square_rank2,
            MonomialType.M3: self._cover_pair,
            MonomialType.M4: self._deep_on_hyperplane,
            MonomialType.M5: self._rank2_on_hyperplane,
            MonomialType.M6: self._flat_transverse_hyperplane,
            MonomialType.M7: self._hyperplanes_transverse,
        }[kind]
        handler(a, b, coords)
        return H4Class(coords)

    def _deep_below(self, top: Flat) -> Iterator[Flat]:
        return (f for f in self.G if self.deep(f, top))

    def _square_hyperplane(self, h, _h, c) -> None:
        for lo in self.G:
            if self.sub(lo, h) and lo.rank >= 3:
                c[Monomial2(lo, lo)] -= self.b(lo, h)
        for mid in self.G:
            if self.sub(mid, h):
                bh = self.b(mid, h)
                if bh:
                    for lo in self._deep_below(mid):
                        c[Monomial2(lo, mid)] += 2 * self.b(lo, mid) * bh

    def _square_rank2(self, top, _top, c) -> None:
        for lo in self.G:
            if self.sub(lo, top):
                c[Monomial2(lo, lo)] -= 1
        for mid in self.G:
            if mid == top or self.sub(mid, top):
                for lo in self._deep_below(mid):
                    c[Monomial2(lo, mid)] += 2 * self.b(lo, mid)

    def _cover_pair(self, lower, upper, c) -> None:
        for lo in self.G:
            if self.sub(lo, lower):
                c[Monomial2(lo, upper)] -= 1

    def _deep_on_hyperplane(self, flat, h, c) -> None:
        c[Monomial2(flat, flat)] -= 1
        for lo in self._deep_below(flat):
            c[Monomial2(lo, flat)] += self.b(lo, flat)
        for up in self.G:
            if not self.sub(up, h):
                continue
            if self.deep(flat, up):
                c[Monomial2(flat, up)] -= 1
            elif self.covers(flat, up):
                for lo in self.G:
                    if self.sub(lo, flat):
                        c[Monomial2(lo, up)] += 1

    def _rank2_on_hyperplane(self, flat, h, c) -> None:
        for lo in self.G:
            if self.sub(lo, flat):
                c[Monomial2(lo, lo)] += 1
        for lo in self._deep_below(flat):
            c[Monomial2(lo, flat)] -= self.b(lo, flat)
        for mid in self.G:
            if self.sub(mid, flat):
                for lo in self._deep_below(mid):
                    c[Monomial2(lo, mid)] -= 2 * self.b(lo, mid)

    def _flat_transverse_hyperplane(self, a, b, c) -> None:
        flat, h = (a, b) if b.rank == 1 else (b, a)
        for lo in self.G:
            if self.sub(lo, h) and (self.deep(lo, flat) or self.transverse(lo, flat)):
                c[Monomial2(lo, flat)] -= 1

    def _hyperplanes_transverse(self, h1, h2, c) -> None:
        under1 = [f for f in self.G if self.sub(f, h1)]
        under2 = [f for f in self.G if self.sub(f, h2)]
        both = set(under1) & set(under2)
        for lo in both:
            if lo.rank >= 3:
                c[Monomial2(lo, lo)] += 1
        for top in self.G:
            if top.rank < 2:
                continue
            for lo in self._deep_below(top):
                if top in both:
                    c[Monomial2(lo, top)] -= 2 * self.b(lo, top)
                    continue
                if top in under2 and lo in under1 and self.transverse(top, h1):
                    c[Monomial2(lo, top)] += 1
                if top in under1 and lo in under2 and self.transverse(top, h2):
                    c[Monomial2(lo, top)] += 1
        for x in under1:
            for y in under2:
                if self.transverse(x, y):
                    c[Monomial2(x, y)] += 1

    # ------------------------------------------------------------------
    # degree 2
    # ------------------------------------------------------------------
    def reduce_h2(self, combo: Mapping[Any, Any]) -> H2Class:
        """Rewrite a formal sum over 𝓖 ∪ {π*h} in the basis of H²."""
        out: defaultdict[Any, Fraction] = defaultdict(Fraction)
        for key, coef in combo.items():
            coef = Fraction(coef)
            if key == PI_H:
                out[PI_H] += coef
                continue
            self._require(key)
            if key == self.empty:
                out[PI_H] -= coef
            elif key.rank == 1:
                out[PI_H] += coef
                for f in self.G:
                    if 2 <= f.rank <= self.n and self.sub(f, key):
                        out[f] -= coef
            else:
                out[key] += coef
        return H2Class(out)

    # ------------------------------------------------------------------
    # relations and oracles
    # ------------------------------------------------------------------
    def relation(self, flat: Flat, h: Flat) -> dict[Monomial2, int]:
        """γ_flat · Σ_{L ⊆ h} γ_L expanded over unordered pairs."""
        row: defaultdict[Monomial2, int] = defaultdict(int)
        for other in self.G:
            if other == h or self.sub(other, h):
                row[Monomial2(flat, other)] += 1
        return dict(row)

    def relation_residues(self) -> list[tuple[Flat, Flat, H4Class]]:
        """Table reductions of every relation generator that do not vanish."""
        bad = []
        for flat in self.G:
            for h in self.hyperplanes:
                total = H4Class()
                for m, coef in self.relation(flat, h).items():
                    total = total + coef * self.reduce_monomial(m)
                if not total.is_zero():
                    bad.append((flat, h, total))
        return bad

    @property
    def oracle(self) -> PresentationOracle:
        if self._oracle is None:
            self._oracle = PresentationOracle(self)
        return self._oracle

    def oracle_reduce(self, m: Monomial2) -> H4Class:
        return self.oracle.reduce(m)

    def all_monomials(self) -> Iterator[Monomial2]:
        for a, b in combinations_with_replacement(self.G, 2):
            yield Monomial2(a, b)

    def blowup_intersection(self, m: Monomial2) -> Fraction:
        """Intersection number of a product on CP² blown up at the irreducible points."""
        if self.n != 2:
            raise UnsupportedArrangement("the blowup oracle is for n = 2")
        self._require(m.first, m.second)

        def divisor(f: Flat) -> dict[Any, int]:
            if f == self.empty:
                return {PI_H: -1}
            if f.rank == 2:
                return {f: 1}
            d: dict[Any, int] = {PI_H: 1}
            for p in self.G:
                if p.rank == 2 and self.sub(p, f):
                    d[p] = -1
            return d

        x, y = divisor(m.first), divisor(m.second)
        total = Fraction(0)
        for k, v in x.items():
            if k in y:
                total += v * y[k] * (1 if k == PI_H else -1)
        return total


@lru_cache(maxsize=16)
def wonderful_model(lattice: IntersectionLattice) -> WonderfulModel:
    return WonderfulModel(lattice)


# -------------------------------------------------------------------
# presentation oracle
# -------------------------------------------------------------------
class PresentationOracle:
    """Degree-4 quotient computed directly from the presentation.

    Columns are the nested pairs (non-nested ones are zero by R1); rows are
    γ_L · R2(H) for all L ∈ 𝓖 and hyperplanes H. Non-basic columns are
    preferred as pivots, so the pivot set must be exactly the non-basic
    nested monomials; anything else means |Δ₂| is not the quotient dimension.
    """

    def __init__(self, model: WonderfulModel):
        self.model = model
        columns = [m for m in model.all_monomials() if model.is_nested_pair(m.first, m.second)]
        basic = frozenset(model.delta2)
        order = sorted(columns, key=lambda m: (m in basic, m.sort_key))
        priority = {m: i for i, m in enumerate(order)}
        self.columns = tuple(columns)
        self._echelon = SparseEchelon(priority.__getitem__)
        nested = frozenset(columns)
        for flat in model.G:
            for h in model.hyperplanes:
                row = {m: v for m, v in model.relation(flat, h).items() if m in nested}
                self._echelon.add(row)
        self.dimension = len(columns) - len(self._echelon)
        nonbasic = nested - basic
        if self._echelon.pivots != nonbasic or self.dimension != len(basic):
            raise InternalInconsistency(
                f"presentation quotient has dimension {self.dimension} "
                f"but the basic monomials number {len(basic)}"
            )
        logger.debug("oracle: %d nested monomials, %d relations of rank %d, quotient %d",
                     len(columns), len(model.G) * len(model.hyperplanes),
                     len(self._echelon), self.dimension)

    def reduce(self, m: Monomial2) -> H4Class:
        if not self.model.is_nested_pair(m.first, m.second):
            return H4Class()
        return H4Class(self._echelon.reduce({m: 1}))


# -------------------------------------------------------------------
# sweeps
# -------------------------------------------------------------------
@dataclass(frozen=True)
class OracleSweep:
    monomials: int
    basis_size: int
    quotient_dimension: int
    mismatches: tuple[tuple[Monomial2, H4Class, H4Class], ...]
    blowup_mismatches: tuple[tuple[Monomial2, Fraction, Fraction], ...] = ()
    relation_failures: int = 0

    @property
    def passed(self) -> bool:
        return not (self.mismatches or self.blowup_mismatches or self.relation_failures)


def compare_with_oracle(model: WonderfulModel,
                        monomials: Iterable[Monomial2] | None = None) -> OracleSweep:
    checked = 0
    mismatches, blowup = [], []
    for m in (model.all_monomials() if monomials is None else monomials):
        checked += 1
        table, oracle = model.reduce_monomial(m), model.oracle_reduce(m)
        if table != oracle:
            mismatches.append((m, table, oracle))
        if model.n == 2:
            expected = model.blowup_intersection(m)
            got = table[Monomial2(model.empty, model.empty)]
            if expected != got:
                blowup.append((m, got, expected))
    failures = len(model.relation_residues())
    if mismatches or blowup or failures:
        logger.warning("table vs oracle: %d mismatches, %d blowup mismatches, %d relation failures",
                       len(mismatches), len(blowup), failures)
    return OracleSweep(checked, len(model.delta2), model.oracle.dimension,
                       tuple(mismatches), tuple(blowup), failures)
