"""
pkcheck.exactla
===============

Exact rational linear algebra on top of :class:`fractions.Fraction`.

* :class:`Matrix`        – immutable dense row-major matrix of rationals
* :func:`rank`           – Gaussian elimination, first-nonzero pivoting
* :func:`in_span`        – row-span membership
* :func:`solve_in_basis` – one exact solution of ``generatorsᵀ · x = target``
* :class:`SparseEchelon` – incrementally maintained reduced echelon form over
  dict rows, used for the presentation quotients in :mod:`pkcheck.wonder`

No floating point is used anywhere.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .exceptions import DimensionMismatch, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def as_rational(value: Any) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string; floats are refused."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise ParseError(f"malformed rational {value!r} (expected 'p' or 'p/q')")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError(f"zero denominator in {value!r}")
        return Fraction(int(m.group(1)), den)
    raise ParseError(f"not an exact rational: {value!r}")


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# -------------------------------------------------------------------
# dense matrices
# -------------------------------------------------------------------
@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative matrix dimension")
        entries = tuple(as_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Any]], cols: int | None = None) -> Matrix:
        data = [tuple(r) for r in rows]
        if cols is None:
            if not data:
                raise DimensionMismatch("column count required for an empty matrix")
            cols = len(data[0])
        for r in data:
            if len(r) != cols:
                raise DimensionMismatch(f"row of length {len(r)} in a {cols}-column matrix")
        return cls(len(data), cols, tuple(e for r in data for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def select(self, indices: Iterable[int]) -> Matrix:
        """Sub-matrix made of the given rows, in the given order."""
        return Matrix.from_rows((self.row(i) for i in indices), self.cols)

    def combine(self, coeffs: Sequence[Any]) -> tuple[Fraction, ...]:
        """Σ coeffs[i] · row(i)."""
        if len(coeffs) != self.rows:
            raise DimensionMismatch(f"{len(coeffs)} coefficients for {self.rows} rows")
        out = [Fraction(0)] * self.cols
        for c, row in zip(coeffs, self.row_list()):
            c = as_rational(c)
            if c:
                for j, e in enumerate(row):
                    out[j] += c * e
        return tuple(out)


def _echelon(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce *rows* in place to reduced row-echelon form; return pivot columns.

    Pivoting is deterministic: for each column left to right the first row
    (in current order) with a nonzero entry becomes the pivot row.
    """
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        pick = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pick is None:
            continue
        rows[r], rows[pick] = rows[pick], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return pivots


def rank(m: Matrix) -> int:
    return len(_echelon([list(r) for r in m.row_list()], m.cols))


class RowSpace:
    """Row span of a matrix, reduced once and queried many times."""

    def __init__(self, rows: Iterable[Sequence[Any]], cols: int):
        self.cols = cols
        reduced = [[as_rational(e) for e in r] for r in rows]
        for r in reduced:
            if len(r) != cols:
                raise DimensionMismatch(f"row of length {len(r)} in a {cols}-column space")
        self._pivots = _echelon(reduced, cols)
        self._rows = reduced[:len(self._pivots)]

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def residual(self, v: Sequence[Any]) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.cols} columns")
        out = [as_rational(e) for e in v]
        for row, p in zip(self._rows, self._pivots):
            f = out[p]
            if f:
                out = [a - f * b for a, b in zip(out, row)]
        return out

    def __contains__(self, v: Sequence[Any]) -> bool:
        return not any(self.residual(v))


def in_span(v: Sequence[Any], basis_rows: Matrix) -> bool:
    if len(v) != basis_rows.cols:
        raise DimensionMismatch(f"vector of length {len(v)} against {basis_rows.cols} columns")
    return v in RowSpace(basis_rows.row_list(), basis_rows.cols)


def solve_in_basis(target: Sequence[Any], generators: Matrix) -> tuple[Fraction, ...] | None:
    """Return x with Σ xᵢ·generators[i] = target, or ``None`` when unsolvable.

    Free unknowns are set to zero, so the answer uses the earliest
    generators that suffice.
    """
    if len(target) != generators.cols:
        raise DimensionMismatch(
            f"target of length {len(target)} against {generators.cols} columns"
        )
    k = generators.rows
    t = [as_rational(e) for e in target]
    # one equation per coordinate: Σ_i x_i g_i[j] = t_j
    system = [[generators.entries[i * generators.cols + j] for i in range(k)] + [t[j]]
              for j in range(generators.cols)]
    pivots = _echelon(system, k + 1)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row, col in zip(system, pivots):
        x[col] = row[k]
    return tuple(x)


# -------------------------------------------------------------------
# sparse elimination
# -------------------------------------------------------------------
class SparseEchelon:
    """Reduced row-echelon form kept up to date under row insertion.

    Rows are ``{column: coefficient}`` dicts keyed by any hashable column
    label. Every stored row has coefficient 1 at its pivot and 0 at every
    other pivot, so a single pass of :meth:`reduce` yields normal forms.
    A new row pivots on its lowest column under *priority*; the resulting
    pivot set is the set of leading columns of the row space in that order.
    """

    def __init__(self, priority: Callable[[Hashable], Any] | None = None):
        self._priority = priority or (lambda c: c)
        self._rows: dict[Hashable, dict[Hashable, Fraction]] = {}  # pivot -> row
        self._cols: defaultdict[Hashable, set] = defaultdict(set)  # column -> pivots using it

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> frozenset:
        return frozenset(self._rows)

    def row(self, pivot: Hashable) -> dict[Hashable, Fraction]:
        return dict(self._rows[pivot])

    def reduce(self, vec: Mapping[Hashable, Any]) -> dict[Hashable, Fraction]:
        out = {c: Fraction(v) for c, v in vec.items() if v}
        for p in [c for c in out if c in self._rows]:
            coef = out.pop(p)
            for c, v in self._rows[p].items():
                if c == p:
                    continue
                nv = out.get(c, 0) - coef * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def add(self, vec: Mapping[Hashable, Any]) -> bool:
        """Insert a row; return ``False`` when it was already in the span."""
        new = self.reduce(vec)
        if not new:
            return False
        pivot = min(new, key=self._priority)
        inv = 1 / new[pivot]
        new = {c: v * inv for c, v in new.items()}

        for p in list(self._cols.get(pivot, ())):
            row = self._rows[p]
            coef = row[pivot]
            for c, v in new.items():
                nv = row.get(c, 0) - coef * v
                if nv:
                    if c not in row:
                        self._cols[c].add(p)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    self._cols[c].discard(p)

        self._rows[pivot] = new
        for c in new:
            self._cols[c].add(pivot)
        return True
