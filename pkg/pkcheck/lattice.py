"""
pkcheck.lattice
===============

Intersection lattice of an arrangement.

Flats are enumerated rank by rank: every flat of rank r+1 is the closure of
a flat of rank r together with one hyperplane outside it. Each flat is then
classified as irreducible or not by splitting the normals of its closure
into matroid components.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Iterator

from .arrangement import (
    Arrangement,
    Flat,
    Hyperplane,
    closure,
    greedy_basis,
    is_essential,
    is_irreducible,
    matroid_components,
)
from .exactla import rank, solve_in_basis
from .exceptions import InputError, InternalInconsistency

logger = logging.getLogger(__name__)


class IntersectionLattice:
    """All flats of an arrangement, grouped by rank, with irreducibility marks."""

    def __init__(self, arr: Arrangement, flats_by_rank: dict[int, tuple[Flat, ...]],
                 components: dict[Flat, tuple[tuple[int, ...], ...]]):
        self.arrangement = arr
        self.flats_by_rank = flats_by_rank
        self.components = components
        self.irreducible = {f: len(c) == 1 for f, c in components.items()}
        self._index = {f.closure: f for f in components}
        self._join: dict[frozenset[int], Flat] = {}
        self._lower_covers: dict[Flat, tuple[Flat, ...]] = {}
        self._g = tuple(sorted((f for f, irr in self.irreducible.items() if irr),
                               key=lambda f: f.key))

    # ------------------------------------------------------------------
    # basic queries
    # ------------------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.arrangement.dim

    def __contains__(self, flat: Flat) -> bool:
        return self._index.get(flat.closure) == flat

    def flats(self) -> Iterator[Flat]:
        for r in sorted(self.flats_by_rank):
            yield from self.flats_by_rank[r]

    def proper_flats(self) -> Iterator[Flat]:
        """Nonempty flats: ranks 1..n."""
        for f in self.flats():
            if f.rank <= self.dim:
                yield f

    @property
    def empty(self) -> Flat | None:
        top = self.flats_by_rank.get(self.dim + 1, ())
        return top[0] if top else None

    @property
    def is_essential(self) -> bool:
        return self.empty is not None

    @property
    def is_irreducible(self) -> bool:
        if self.empty is not None:
            return self.irreducible[self.empty]
        return is_irreducible(self.arrangement)

    def irreducible_flats(self) -> tuple[Flat, ...]:
        """𝓖, ordered by rank then closure; contains ∅ iff it is irreducible."""
        return self._g

    def irreducible_of_rank(self, r: int) -> list[Flat]:
        return [f for f in self._g if f.rank == r]

    def is_irreducible_flat(self, flat: Flat) -> bool:
        return self.irreducible.get(flat, False)

    def hyperplane(self, i: int) -> Flat:
        return self._index[(i,)]

    def find(self, indices: Iterable[int]) -> Flat:
        key = tuple(sorted(set(indices)))
        try:
            return self._index[key]
        except KeyError:
            raise InputError(f"{list(key)} is not the closure of a flat") from None

    def require(self, flat: Flat) -> Flat:
        if flat not in self:
            raise InputError(f"flat {flat.label()} does not belong to this lattice")
        return flat

    def join(self, a: Flat, b: Flat) -> Flat:
        """The flat ``a ∩ b`` (closure of the union of both closures)."""
        key = a.members | b.members
        found = self._join.get(key)
        if found is None:
            found = self._index[closure(self.arrangement, key).closure]
            self._join[key] = found
        return found

    def lower_covers(self, flat: Flat) -> tuple[Flat, ...]:
        """Irreducible flats L with L ⋖ flat."""
        found = self._lower_covers.get(flat)
        if found is None:
            found = tuple(f for f in self._g
                          if f.rank == flat.rank + 1 and flat.members < f.members)
            self._lower_covers[flat] = found
        return found

    def counts(self) -> dict[int, int]:
        return {r: len(fs) for r, fs in sorted(self.flats_by_rank.items())}

    def irreducible_counts(self) -> dict[int, int]:
        out = {r: 0 for r in sorted(self.flats_by_rank)}
        for f in self._g:
            out[f.rank] += 1
        return out

    def rank2_count(self, i: int) -> int:
        """Number of irreducible rank-2 flats lying on hyperplane *i*."""
        return sum(1 for f in self.irreducible_of_rank(2) if i in f.members)


# -------------------------------------------------------------------
# construction
# -------------------------------------------------------------------
def build_lattice(arr: Arrangement) -> IntersectionLattice:
    if not arr.hyperplanes:
        raise InputError("cannot build the lattice of an empty arrangement")
    n_hyp = len(arr.hyperplanes)
    level = [Flat((i,), 1) for i in range(n_hyp)]
    by_rank: dict[int, tuple[Flat, ...]] = {1: tuple(level)}

    for r in range(2, arr.dim + 2):
        found: dict[tuple[int, ...], Flat] = {}
        for flat in level:
            covered = set(flat.members)
            for h in range(n_hyp):
                if h in covered:
                    continue
                nxt = closure(arr, flat.closure + (h,))
                if nxt.rank != r:
                    raise InternalInconsistency(
                        f"closure of {flat.label()} and H{h} has rank {nxt.rank}, expected {r}"
                    )
                covered |= nxt.members
                found.setdefault(nxt.closure, nxt)
        if not found:
            break
        level = sorted(found.values(), key=lambda f: f.key)
        by_rank[r] = tuple(level)

    components: dict[Flat, tuple[tuple[int, ...], ...]] = {}
    for r, flats in by_rank.items():
        for flat in flats:
            local = matroid_components(arr.normal_matrix(flat.closure))
            components[flat] = tuple(tuple(flat.closure[i] for i in block) for block in local)

    lat = IntersectionLattice(arr, by_rank, components)
    _verify(lat)
    logger.debug("lattice of %d hyperplanes in CP^%d: %s flats by rank, %d irreducible",
                 n_hyp, arr.dim, lat.counts(), len(lat.irreducible_flats()))
    return lat


def _verify(lat: IntersectionLattice) -> None:
    arr = lat.arrangement
    for flat in lat.flats():
        if rank(arr.normal_matrix(flat.closure)) != flat.rank:
            raise InternalInconsistency(f"rank of {flat.label()} is not {flat.rank}")
        if flat.rank == 2 and lat.irreducible[flat] != (len(flat.closure) >= 3):
            raise InternalInconsistency(
                f"rank-2 flat {flat.label()} misclassified as "
                f"{'irreducible' if lat.irreducible[flat] else 'reducible'}"
            )
    if lat.is_essential != is_essential(arr):
        raise InternalInconsistency("empty flat present iff essential failed")


@lru_cache(maxsize=32)
def _lattice_for(arr: Arrangement, labels: tuple[str, ...] | None) -> IntersectionLattice:
    return build_lattice(arr)


def cached_lattice(arr: Arrangement) -> IntersectionLattice:
    # Arrangement equality ignores labels; the lattice carries them
    return _lattice_for(arr, arr.labels)


# -------------------------------------------------------------------
# localization
# -------------------------------------------------------------------
@dataclass(frozen=True)
class Localization:
    """The hyperplanes through a flat L, seen as an arrangement of their own."""

    flat: Flat
    indices: tuple[int, ...]
    arrangement: Arrangement
    flats: tuple[Flat, ...]

    def essentialize(self) -> tuple[Arrangement, dict[int, int]]:
        """Standalone essential arrangement in CP^{r(L)-1}.

        Every normal is written in coordinates of the greedy basis of their
        span and scaled to a primitive integer vector. Returns the new
        arrangement and the map ambient index -> index in it.
        """
        if self.flat.rank < 2:
            raise InputError("a localization at a hyperplane has no essential model")
        normals = [h.normal for h in self.arrangement.hyperplanes]
        basis = greedy_basis(normals)
        base = self.arrangement.normal_matrix(basis)
        coords = []
        for v in normals:
            x = solve_in_basis(v, base)
            scale = lcm(*(Fraction(c).denominator for c in x))
            coords.append([int(c * scale) for c in x])
        labels = None
        if self.arrangement.labels is not None:
            labels = list(self.arrangement.labels)
        local = Arrangement.from_normals(len(basis) - 1, coords, labels)
        position = {h: i for i, h in enumerate(local.hyperplanes)}
        mapping = {amb: position[Hyperplane.canonical(c)]
                   for amb, c in zip(self.indices, coords)}
        return local, mapping


def localize(lat: IntersectionLattice, flat: Flat) -> Localization:
    lat.require(flat)
    arr = lat.arrangement
    labels = None
    if arr.labels is not None:
        labels = tuple(arr.labels[i] for i in flat.closure)
    sub = Arrangement(arr.dim, tuple(arr.hyperplanes[i] for i in flat.closure), labels)
    above = tuple(f for f in lat.flats() if f.members <= flat.members)
    return Localization(flat, flat.closure, sub, above)
