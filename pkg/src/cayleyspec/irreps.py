"""Irreducible representations of Sym(n) in Young's orthogonal form."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .perms import (
    MAX_ENUM_DEGREE,
    IntegerPartition,
    Permutation,
    as_partition,
    integer_partitions,
)

RANK_TOL = 1e-8

Tableau = tuple[tuple[int, ...], ...]


def standard_tableaux(shape) -> list[Tableau]:
    """Standard Young tableaux of the given shape, in a fixed order
    (fill 1..n, placing each entry in the lowest-index admissible row first)."""
    shape = as_partition(shape).parts
    n = sum(shape)
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def rec(k):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(shape):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1)
                rows[i].pop()

    rec(1)
    return out


def hook_length_dimension(shape) -> int:
    parts = as_partition(shape).parts
    conj = as_partition(shape).conjugate().parts
    hooks = 1
    for i, row in enumerate(parts):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(sum(parts)) // hooks


def _positions(t: Tableau) -> dict[int, tuple[int, int]]:
    return {x: (i, j) for i, row in enumerate(t) for j, x in enumerate(row)}


def _swap(t: Tableau, a: int, b: int) -> Tableau:
    m = {a: b, b: a}
    return tuple(tuple(m.get(x, x) for x in row) for row in t)


@dataclass(frozen=True)
class Irrep:
    shape: IntegerPartition
    tableaux: tuple[Tableau, ...]
    # adjacent[i-1] is the matrix of the transposition (i, i+1)
    adjacent: tuple[np.ndarray, ...] = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def __str__(self) -> str:
        return str(self.shape)


def _build_irrep(shape: IntegerPartition) -> Irrep:
    tabs = standard_tableaux(shape)
    index = {t: k for k, t in enumerate(tabs)}
    n, d = shape.n, len(tabs)
    mats = []
    for i in range(1, n):
        m = np.zeros((d, d))
        for k, t in enumerate(tabs):
            pos = _positions(t)
            (r1, c1), (r2, c2) = pos[i], pos[i + 1]
            axial = (c2 - r2) - (c1 - r1)
            m[k, k] = 1.0 / axial
            if abs(axial) > 1:
                other = index[_swap(t, i, i + 1)]
                m[other, k] = math.sqrt(1.0 - 1.0 / axial**2)
        mats.append(m)
    for m in mats:
        m.setflags(write=False)
    return Irrep(shape, tuple(tabs), tuple(mats))


@lru_cache(maxsize=None)
def irrep(shape) -> Irrep:
    return _build_irrep(as_partition(shape))


def irreps(n: int) -> list[Irrep]:
    """One irrep per partition of n, in reverse lexicographic partition order."""
    if not 1 <= n <= MAX_ENUM_DEGREE:
        raise ValueError(f"n={n} outside supported range 1..{MAX_ENUM_DEGREE}")
    return [irrep(mu) for mu in integer_partitions(n)]


def adjacent_decomposition(p: Permutation) -> list[int]:
    """Indices i_1, ..., i_k with p = compose(s_{i_1}, compose(s_{i_2}, ...)),
    s_i = (i, i+1).  Bubble sort on the one-line word."""
    word = list(p.images)
    out = []
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                out.append(i + 1)
                changed = True
    return out


def irrep_matrix(rho: Irrep, p: Permutation) -> np.ndarray:
    """rho(p), a homomorphism for left-to-right composition:
    rho(compose(p, q)) == rho(p) @ rho(q)."""
    if p.n != rho.n:
        raise ValueError(f"degree mismatch: permutation {p.n}, irrep {rho.n}")
    hit = rho._cache.get(p.images)
    if hit is not None:
        return hit
    m = np.eye(rho.dim)
    for i in adjacent_decomposition(p):
        m = m @ rho.adjacent[i - 1]
    m.setflags(write=False)
    if len(rho._cache) < 50_000:
        rho._cache[p.images] = m
    return m


def rho_sum(rho: Irrep, elements: Iterable[Permutation]) -> np.ndarray:
    total = np.zeros((rho.dim, rho.dim))
    for p in elements:
        total += irrep_matrix(rho, p)
    return total


def rank_of(matrix, tolerance: float = RANK_TOL, scale: float = 1.0) -> int:
    """Numerical rank: singular values above tolerance * max(largest singular
    value, scale).  ``scale`` keeps an all-roundoff matrix at rank 0."""
    m = np.asarray(matrix, dtype=float)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(s > tolerance * max(s[0], scale)))


def kostka(shape, content) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    lam = as_partition(shape).parts
    mu = as_partition(content).parts if not isinstance(content, (list, tuple)) else tuple(content)
    if sum(lam) != sum(mu):
        raise ValueError("shape and content must have the same size")

    # Fill symbol by symbol: the cells holding 1..k form a sub-shape, and
    # each symbol adds a horizontal strip.
    @lru_cache(maxsize=None)
    def count(k: int, inner: tuple[int, ...]) -> int:
        if k == len(mu):
            return 1 if inner == lam else 0
        total = 0
        for outer in _horizontal_strips(inner, lam, mu[k]):
            total += count(k + 1, outer)
        return total

    return count(0, tuple(0 for _ in lam))


def _horizontal_strips(inner, lam, size):
    """Shapes inner <= outer <= lam with |outer/inner| = size and no two
    added cells in one column."""
    rows = len(lam)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield tuple(acc)
            return
        upper = lam[i] if i == 0 else min(lam[i], inner[i - 1])
        for new in range(inner[i], min(upper, inner[i] + left) + 1):
            acc.append(new)
            yield from rec(i + 1, left - (new - inner[i]), acc)
            acc.pop()

    yield from rec(0, size, [])


def irrep_to_dict(rho: Irrep) -> dict:
    return {
        "shape": str(rho.shape),
        "dimension": rho.dim,
        "tableaux": [[list(r) for r in t] for t in rho.tableaux],
        "generators": {
            f"({i},{i + 1})": [[round(float(x), 15) for x in row] for row in m]
            for i, m in enumerate(rho.adjacent, start=1)
        },
    }
