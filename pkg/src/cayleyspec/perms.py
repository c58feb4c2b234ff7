"""Permutations of [1..n], integer partitions, Young subgroups and class words.

Permutations are stored in one-line form: ``images[i-1] == p(i)``.
Composition is read left to right, ``compose(p, q)(i) == q(p(i))``, which makes
the column representation ``P(p)[i, j] = [p(i) == j]`` multiplicative:
``P(compose(p, q)) == P(p) @ P(q)``.
"""

from __future__ import annotations

import itertools
import math
import re
import string
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ENUM_DEGREE = 9


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of [1..{len(imgs)}]: {imgs}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"cycle entry {x} outside [1..{n}]")
                if x in seen:
                    raise ValueError(f"entry {x} repeated in cycles")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse cycle notation ``"(14)(23)"`` / ``"(1,4)(2,3)"`` or one-line ``"2314"``.

        A cycle ``(2341)`` is read as 2->3->4->1->2.  ``"e"`` and ``"()"`` are the
        identity and need ``n``.
        """
        s = text.strip()
        if s in ("e", "()", ""):
            if n is None:
                raise ValueError("identity needs an explicit degree")
            return cls.identity(n)
        if s.startswith("("):
            cycles = []
            for body in re.findall(r"\(([^()]*)\)", s):
                if "," in body or " " in body.strip():
                    cyc = [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
                else:
                    cyc = [int(ch) for ch in body]
                if cyc:
                    cycles.append(cyc)
            if re.sub(r"\([^()]*\)", "", s).strip():
                raise ValueError(f"malformed cycle string: {text!r}")
            degree = n if n is not None else max((max(c) for c in cycles), default=0)
            return cls.from_cycles(cycles, degree)
        if "," in s or " " in s:
            images = tuple(int(t) for t in re.split(r"[,\s]+", s) if t)
        else:
            images = tuple(int(ch) for ch in s)
        p = cls(images)
        if n is not None and p.n != n:
            raise ValueError(f"degree mismatch: {text!r} has degree {p.n}, expected {n}")
        return p

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "e"
        sep = "," if self.n > 9 else ""
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)

    def one_line(self) -> str:
        sep = "," if self.n > 9 else ""
        return sep.join(map(str, self.images))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        return self.cycle_string()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(q.images[x - 1] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def permutation_matrix(p: Permutation) -> np.ndarray:
    """Column representation: entry (i, j) is 1 iff p(i) = j."""
    m = np.zeros((p.n, p.n), dtype=np.int64)
    m[np.arange(p.n), np.asarray(p.images) - 1] = 1
    return m


def _check_degree(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_DEGREE:
        raise ValueError(f"degree {n} outside supported range 1..{MAX_ENUM_DEGREE}")


def enumerate_sym(n: int) -> Iterator[Permutation]:
    """All n! permutations, lexicographic in one-line form."""
    _check_degree(n)
    for imgs in itertools.permutations(range(1, n + 1)):
        yield Permutation(imgs)


@dataclass(frozen=True, order=True)
class IntegerPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts or any(x < 1 for x in parts):
            raise ValueError(f"invalid partition parts: {self.parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str) -> "IntegerPartition":
        return cls(tuple(int(t) for t in text.replace(" ", "").split("+")))

    def conjugate(self) -> "IntegerPartition":
        return IntegerPartition(
            tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))


def integer_partitions(n: int) -> list[IntegerPartition]:
    """All partitions of n in reverse lexicographic order (n first, 1+...+1 last)."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return [IntegerPartition(p) for p in rec(n, n)]


def as_partition(mu) -> IntegerPartition:
    if isinstance(mu, IntegerPartition):
        return mu
    if isinstance(mu, str):
        return IntegerPartition.parse(mu)
    return IntegerPartition(tuple(mu))


@dataclass(frozen=True, order=True)
class ClassLabel:
    """Word of length n over symbols 0..r-1 (printed a, b, c, ...)."""

    word: tuple[int, ...]
    content: IntegerPartition = field(compare=False)

    def __str__(self) -> str:
        if len(self.content) <= 26:
            return "".join(string.ascii_lowercase[s] for s in self.word)
        return ",".join(map(str, self.word))


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    total = sum(counts)
    if total == 0:
        yield ()
        return
    for sym, c in enumerate(counts):
        if c:
            counts[sym] -= 1
            for tail in _multiset_permutations(counts):
                yield (sym,) + tail
            counts[sym] += 1


def words_with_content(mu) -> list[ClassLabel]:
    """All words where symbol i occurs mu[i] times, lexicographic (so the
    identity's word a..ab..b... comes first)."""
    mu = as_partition(mu)
    return [ClassLabel(w, mu) for w in _multiset_permutations(list(mu.parts))]


def multinomial(mu) -> int:
    mu = as_partition(mu)
    return math.factorial(mu.n) // math.prod(math.factorial(k) for k in mu.parts)


@dataclass(frozen=True)
class Subgroup:
    degree: int
    blocks: tuple[tuple[int, ...], ...]
    elements: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)


def default_blocks(mu) -> tuple[tuple[int, ...], ...]:
    """V_1 = first n_1 positions, V_2 = next n_2, ..."""
    mu = as_partition(mu)
    out, start = [], 1
    for k in mu.parts:
        out.append(tuple(range(start, start + k)))
        start += k
    return tuple(out)


def _validate_blocks(blocks: Sequence[Sequence[int]]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    flat = [x for b in blocks for x in b]
    n = len(flat)
    if any(len(b) == 0 for b in blocks):
        raise ValueError("empty block")
    if len(set(flat)) != n:
        raise ValueError(f"overlapping blocks: {blocks}")
    if set(flat) != set(range(1, n + 1)):
        raise ValueError(f"blocks do not cover [1..{n}]: {blocks}")
    return n, tuple(tuple(sorted(b)) for b in blocks)


def young_subgroup(blocks: Sequence[Sequence[int]]) -> Subgroup:
    """All permutations mapping every block onto itself."""
    n, blocks = _validate_blocks(blocks)
    _check_degree(n)
    elements = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = [0] * n
        for block, img in zip(blocks, choice):
            for x, y in zip(block, img):
                images[x - 1] = y
        elements.append(Permutation(tuple(images)))
    elements.sort()
    return Subgroup(n, blocks, tuple(elements))
