"""
pkcheck.generators
==================

Named arrangement families.

* ``gen_braid(k)``      – braid arrangement of C(k,2) hyperplanes in CP^{k-2}
* ``gen_bm(m)``         – type-B reflection arrangement of m² hyperplanes in CP^{m-1}
* ``gen_seven_lines()`` – the three coordinate lines plus the four lines ±x±y+z
* ``gen_generic(n, k)`` – k hyperplanes in general position, drawn from a seed
"""

from __future__ import annotations

import random
from itertools import combinations

from .arrangement import Arrangement, Hyperplane
from .exactla import RowSpace
from .exceptions import InputError


def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def braid_pair(h: Hyperplane) -> tuple[int, int]:
    """The pair (i, j), i < j, indexing a braid hyperplane H_ij (1-based).

    Coordinates are x_1..x_{k-1} with the gauge x_k = 0, so H_ik is x_i = 0
    and H_ij (j < k) is x_i - x_j = 0.
    """
    support = [p for p, c in enumerate(h.normal) if c]
    k = len(h.normal) + 1
    if len(support) == 1 and h.normal[support[0]] == 1:
        return support[0] + 1, k
    if len(support) == 2 and h.normal[support[0]] == 1 and h.normal[support[1]] == -1:
        return support[0] + 1, support[1] + 1
    raise InputError(f"{list(h.normal)} is not a braid hyperplane")


def _pair_label(i: int, j: int, k: int) -> str:
    return f"H{i}{j}" if k <= 9 else f"H{i},{j}"


def gen_braid(k: int) -> Arrangement:
    if k < 3:
        raise InputError(f"braid arrangement needs k >= 3, got {k}")
    m = k - 1
    normals, labels = [], []
    for i in range(1, k):
        for j in range(i + 1, k + 1):
            v = _unit(m, i - 1)
            if j < k:
                v[j - 1] = -1
            normals.append(v)
            labels.append(_pair_label(i, j, k))
    return Arrangement.from_normals(k - 2, normals, labels)


def gen_bm(m: int) -> Arrangement:
    if m < 2:
        raise InputError(f"B_m arrangement needs m >= 2, got {m}")
    normals, labels = [], []
    for i in range(m):
        normals.append(_unit(m, i))
        labels.append(f"x{i + 1}")
    for i, j in combinations(range(m), 2):
        for sign in (-1, 1):
            v = _unit(m, i)
            v[j] = sign
            normals.append(v)
            labels.append(f"x{i + 1}{'+' if sign > 0 else '-'}x{j + 1}")
    return Arrangement.from_normals(m - 1, normals, labels)


SEVEN_LINES = (
    ((1, 0, 0), "x"),
    ((0, 1, 0), "y"),
    ((0, 0, 1), "z"),
    ((1, 1, 1), "x+y+z"),
    ((-1, 1, 1), "-x+y+z"),
    ((1, -1, 1), "x-y+z"),
    ((1, 1, -1), "x+y-z"),
)


def gen_seven_lines() -> Arrangement:
    return Arrangement.from_normals(2, [n for n, _ in SEVEN_LINES], [l for _, l in SEVEN_LINES])


def gen_generic(n: int, k: int, seed: int = 0, bound: int | None = None) -> Arrangement:
    """k hyperplanes of CP^n any n+1 of which are independent.

    Candidates are drawn from ``random.Random(seed)`` with entries in
    [-bound, bound] and rejected until the independence condition holds.
    """
    if n < 1:
        raise InputError(f"projective dimension must be >= 1, got {n}")
    if k < n + 1:
        raise InputError(f"general position needs k >= n+1 = {n + 1}, got {k}")
    rnd = random.Random(seed)
    bound = bound or max(3, k)
    chosen: list[tuple[int, ...]] = []
    while len(chosen) < k:
        cand = tuple(rnd.randint(-bound, bound) for _ in range(n + 1))
        if not any(cand):
            continue
        size = min(len(chosen), n)
        if all(RowSpace(list(t) + [cand], n + 1).rank == size + 1
               for t in combinations(chosen, size)):
            chosen.append(cand)
    return Arrangement.from_normals(n, chosen)
