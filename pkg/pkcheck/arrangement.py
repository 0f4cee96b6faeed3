"""
pkcheck.arrangement
===================

Projective hyperplane arrangements and their flats.

A hyperplane of CP^n is stored as the canonical integer normal of its
defining linear form (gcd 1, first nonzero entry positive). A flat is stored
as the set of hyperplane indices containing it (its *closure*) plus its
codimension; the empty subspace of an essential arrangement is the flat of
rank n+1 whose closure is every index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import networkx as nx

from .exactla import Matrix, RowSpace, solve_in_basis
from .exceptions import InputError, ParseError


@dataclass(frozen=True, order=True)
class Hyperplane:
    normal: tuple[int, ...]

    @classmethod
    def canonical(cls, normal: Sequence[int]) -> Hyperplane:
        coords = []
        for c in normal:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ParseError(f"hyperplane normals must be integers, got {c!r}")
            coords.append(c)
        if not any(coords):
            raise InputError("zero normal vector does not define a hyperplane")
        g = 0
        for c in coords:
            g = gcd(g, c)
        lead = next(c for c in coords if c)
        if lead < 0:
            g = -g
        return cls(tuple(c // g for c in coords))


def canonicalize(dim: int, normals: Iterable[Sequence[int]]) -> tuple[list[Hyperplane], list[int]]:
    """Canonical hyperplanes in sorted order, plus the input position of each."""
    hyps = []
    for pos, normal in enumerate(normals):
        if len(normal) != dim + 1:
            raise InputError(
                f"hyperplane #{pos} has {len(normal)} coordinates, expected {dim + 1}"
            )
        hyps.append(Hyperplane.canonical(normal))
    order = sorted(range(len(hyps)), key=lambda i: hyps[i])
    ordered = [hyps[i] for i in order]
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise InputError(f"duplicate hyperplane {list(a.normal)}")
    return ordered, order


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise InputError(f"projective dimension must be >= 1, got {self.dim}")
        for h in self.hyperplanes:
            if len(h.normal) != self.dim + 1:
                raise InputError(f"normal {list(h.normal)} does not live in CP^{self.dim}")
        if list(self.hyperplanes) != sorted(set(self.hyperplanes)):
            raise InputError("hyperplanes must be distinct and in canonical order")
        if self.labels is not None and len(self.labels) != len(self.hyperplanes):
            raise InputError("one label per hyperplane expected")

    @classmethod
    def from_normals(cls, dim: int, normals: Iterable[Sequence[int]],
                     labels: Sequence[str] | None = None) -> Arrangement:
        hyps, order = canonicalize(dim, normals)
        if labels is not None:
            labels = list(labels)
            if len(labels) != len(order):
                raise InputError("one label per hyperplane expected")
            labels = tuple(labels[i] for i in order)
        return cls(dim, tuple(hyps), labels)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return f"H{i}"

    def normal_matrix(self, indices: Iterable[int] | None = None) -> Matrix:
        idx = range(len(self.hyperplanes)) if indices is None else indices
        return Matrix.from_rows((self.hyperplanes[i].normal for i in idx), self.dim + 1)

    def index_of(self, hyperplane: Hyperplane) -> int:
        return self.hyperplanes.index(hyperplane)


@dataclass(frozen=True)
class Flat:
    closure: tuple[int, ...]
    rank: int
    members: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "closure", tuple(sorted(self.closure)))
        object.__setattr__(self, "members", frozenset(self.closure))

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.rank, self.closure)

    def le(self, other: Flat) -> bool:
        """Subspace containment ``self ⊆ other``."""
        return other.members <= self.members

    def lt(self, other: Flat) -> bool:
        return other.members < self.members

    def comparable(self, other: Flat) -> bool:
        return self.le(other) or other.le(self)

    def label(self) -> str:
        return "[" + ",".join(map(str, self.closure)) + "]"


# -------------------------------------------------------------------
# closure and rank
# -------------------------------------------------------------------
def closure(arr: Arrangement, subset: Iterable[int]) -> Flat:
    subset = sorted(set(subset))
    if not subset:
        raise InputError("closure of an empty index set")
    space = RowSpace((arr.hyperplanes[i].normal for i in subset), arr.dim + 1)
    members = [i for i, h in enumerate(arr.hyperplanes) if h.normal in space]
    return Flat(tuple(members), space.rank)


def is_essential(arr: Arrangement) -> bool:
    if not arr.hyperplanes:
        return False
    return RowSpace((h.normal for h in arr.hyperplanes), arr.dim + 1).rank == arr.dim + 1


def greedy_basis(rows: Sequence[Sequence]) -> list[int]:
    """Indices of the first maximal independent subsequence of *rows*."""
    basis: list[int] = []
    chosen: list[Sequence] = []
    for i, r in enumerate(rows):
        if r not in RowSpace(chosen, len(r)):
            basis.append(i)
            chosen.append(r)
    return basis


def matroid_components(normals: Matrix) -> tuple[tuple[int, ...], ...]:
    """Connected components of the vector matroid on the rows of *normals*.

    Each non-basis row is linked to the basis rows of its fundamental
    circuit; components of that graph are the direct summands.
    """
    rows = normals.row_list()
    graph = nx.Graph()
    graph.add_nodes_from(range(len(rows)))
    basis = greedy_basis(rows)
    base = normals.select(basis)
    for i, r in enumerate(rows):
        if i in basis:
            continue
        coeffs = solve_in_basis(r, base)
        for b, c in zip(basis, coeffs):
            if c:
                graph.add_edge(i, b)
    blocks = (tuple(sorted(c)) for c in nx.connected_components(graph))
    return tuple(sorted(blocks))


def is_irreducible(arr: Arrangement) -> bool:
    if not arr.hyperplanes:
        return False
    return len(matroid_components(arr.normal_matrix())) == 1
