"""
pkcheck.checker
===============

Decision procedure for polyhedral Kähler metrics on CP^n with cone angles
2π(1 − a_H) along a weighted arrangement. Such a metric exists exactly when

  (i)   Σ_H a_H = n + 1,
  (ii)  Σ_{H ⊇ L} a_H < r(L) for every nonempty proper flat L,
  (iii) Q_L(a) = 0 for every irreducible flat L of rank ≥ 3 (∅ included).

Every condition is evaluated exactly and reported with its witnesses.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .arrangement import Arrangement, Flat, is_essential
from .exactla import as_rational
from .exceptions import InputError, InternalInconsistency, MalformedWeights
from .generators import SEVEN_LINES, braid_pair, gen_braid, gen_seven_lines
from .weights import QFormula, WeightedArrangement, hirzebruch_q

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CYResult:
    passed: bool
    total: Fraction
    target: int


@dataclass(frozen=True)
class KltEntry:
    flat: Flat
    total: Fraction
    rank: int

    @property
    def margin(self) -> Fraction:
        return self.rank - self.total

    @property
    def violated(self) -> bool:
        return self.total >= self.rank


@dataclass(frozen=True)
class KltResult:
    passed: bool
    violations: tuple[KltEntry, ...]
    min_margin: dict[int, Fraction]
    scope: str = "all"


@dataclass(frozen=True)
class QValue:
    flat: Flat
    value: Fraction
    is_empty: bool = False


@dataclass(frozen=True)
class QuadraticResult:
    passed: bool
    values: tuple[QValue, ...]


@dataclass(frozen=True)
class CheckReport:
    cy: CYResult
    klt: KltResult
    quadratic: QuadraticResult
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.cy.passed and self.klt.passed and self.quadratic.passed


# ====================== the three conditions ========================

def check_cy(w: WeightedArrangement) -> CYResult:
    target = w.dim + 1
    return CYResult(w.total == target, w.total, target)


def check_klt(w: WeightedArrangement, irreducible_only: bool = False) -> KltResult:
    lat = w.lattice
    flats = lat.proper_flats()
    if irreducible_only:
        flats = (f for f in flats if lat.is_irreducible_flat(f))
    entries = [KltEntry(f, sum((w.a[i] for i in f.closure), Fraction(0)), f.rank)
               for f in flats]
    violations = tuple(e for e in entries if e.violated)
    margins: dict[int, Fraction] = {}
    for e in entries:
        if e.rank not in margins or e.margin < margins[e.rank]:
            margins[e.rank] = e.margin
    if violations:
        logger.info("klt fails on %d flat(s), first %s", len(violations),
                    violations[0].flat.label())
    return KltResult(not violations, violations, margins,
                     "irreducible" if irreducible_only else "all")


def check_quadratic(w: WeightedArrangement) -> QuadraticResult:
    lat = w.lattice
    values = []
    for flat in lat.irreducible_flats():
        if flat.rank < 3:
            continue
        q = hirzebruch_q(w, flat, QFormula.PRIMARY)
        q_alt = hirzebruch_q(w, flat, QFormula.ALTERNATIVE)
        if q != q_alt:
            raise InternalInconsistency(
                f"Q at {flat.label()}: primary {q} != alternative {q_alt}"
            )
        values.append(QValue(flat, q, flat == lat.empty))
    return QuadraticResult(all(v.value == 0 for v in values), tuple(values))


def check_theorem(w: WeightedArrangement, klt_irreducible_only: bool = False) -> CheckReport:
    lat = w.lattice
    meta = {
        "dim": w.dim,
        "hyperplanes": len(w.base.hyperplanes),
        "essential": lat.is_essential,
        "irreducible": lat.is_irreducible,
        "flats_per_rank": lat.counts(),
        "irreducible_per_rank": lat.irreducible_counts(),
    }
    report = CheckReport(check_cy(w), check_klt(w, klt_irreducible_only), check_quadratic(w), meta)
    logger.info("verdict %s (cy=%s klt=%s quadratic=%s)", report.verdict,
                report.cy.passed, report.klt.passed, report.quadratic.passed)
    return report


# ====================== weight families =============================

def _check_simplex(a: Sequence[Fraction], what: str) -> None:
    if any(x <= 0 or x >= 1 for x in a):
        raise MalformedWeights(f"{what} entries must lie in (0, 1)")
    if sum(a, Fraction(0)) != 1:
        raise MalformedWeights(f"{what} entries must sum to 1, got {sum(a, Fraction(0))}")


def braid_weights(a: Sequence[Any]) -> tuple[Fraction, ...]:
    """a_ij = a_i + a_j, aligned with ``gen_braid(len(a)).hyperplanes``."""
    a = [as_rational(x) for x in a]
    if len(a) < 3:
        raise InputError(f"braid weights need at least 3 entries, got {len(a)}")
    _check_simplex(a, "braid")
    arr = gen_braid(len(a))
    return tuple(a[i - 1] + a[j - 1] for i, j in map(braid_pair, arr.hyperplanes))


def uniform_reflection_weights(arr: Arrangement) -> tuple[Fraction, ...]:
    """Every weight equal to (n+1)/N."""
    if not is_essential(arr):
        raise InputError("uniform reflection weights need an essential arrangement")
    value = Fraction(arr.dim + 1, len(arr.hyperplanes))
    return (value,) * len(arr.hyperplanes)


def seven_lines_weights(alpha: Sequence[Any]) -> tuple[Fraction, ...]:
    """1 − 2αᵢ on the coordinate lines and 1/2 on the four others."""
    alpha = [as_rational(x) for x in alpha]
    if len(alpha) != 3:
        raise InputError(f"seven-lines weights take 3 parameters, got {len(alpha)}")
    if any(x <= 0 or 2 * x >= 1 for x in alpha):
        raise MalformedWeights("seven-lines parameters must lie in (0, 1/2)")
    _check_simplex(alpha, "seven-lines")
    arr = gen_seven_lines()
    coord = {tuple(n): i for i, (n, _) in enumerate(SEVEN_LINES[:3])}
    return tuple(1 - 2 * alpha[coord[h.normal]] if h.normal in coord else Fraction(1, 2)
                 for h in arr.hyperplanes)
