"""Eigenvalues, multiplicity clustering, and spectra of lifts assembled from
irreducible representations."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cayley import Digraph, adjacency_matrix
from .irreps import Irrep, irreps, rank_of, rho_sum
from .lift import VoltageGraph, rho_base_matrix
from .perms import Permutation, Subgroup, as_partition, default_blocks, young_subgroup
from .quotient import quotient_matrix

CLUSTER_TOL = 1e-6
MAX_EIG_DIM = 5040
THREADS_ENV = "CAYLEYSPEC_THREADS"


class EigenSolveError(RuntimeError):
    pass


def eigenvalues(matrix, name: str = "matrix") -> np.ndarray:
    """All eigenvalues with algebraic multiplicity (LAPACK; symmetric inputs
    take the Hermitian path and come back real)."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name}: expected a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_EIG_DIM:
        raise ValueError(f"{name}: dimension {a.shape[0]} exceeds {MAX_EIG_DIM}")
    if a.size == 0:
        return np.zeros(0, dtype=complex)
    if not np.isfinite(a).all():
        raise ValueError(f"{name}: non-finite entries")
    try:
        if np.array_equal(a, a.T):
            return np.linalg.eigvalsh(a).astype(complex)
        return np.linalg.eigvals(a).astype(complex)
    except np.linalg.LinAlgError as exc:
        raise EigenSolveError(f"{name}: eigenvalue iteration did not converge") from exc


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues with multiplicities, sorted by (real desc, imag asc)."""

    entries: tuple[tuple[complex, int], ...]
    source: str = ""

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> np.ndarray:
        return np.array([v for v, m in self.entries for _ in range(m)], dtype=complex)

    def multiplicity(self, value, tol: float = 1e-6) -> int:
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def __len__(self) -> int:
        return len(self.entries)

    def pretty(self, digits: int = 6) -> str:
        return "{" + ", ".join(f"[{format_value(v, digits)}]^{m}" for v, m in self.entries) + "}"

    def to_records(self, digits: int = 12) -> list[dict]:
        return [
            {"re": _clean(v.real, digits), "im": _clean(v.imag, digits), "multiplicity": m}
            for v, m in self.entries
        ]

    def __str__(self) -> str:
        return self.pretty()


def _clean(x: float, digits: int) -> float:
    x = round(float(x), digits)
    return 0.0 if x == 0 else x


def format_value(v: complex, digits: int = 6) -> str:
    re, im = _clean(v.real, digits), _clean(v.imag, digits)
    fmt = f"{{:.{digits}g}}"
    if im == 0:
        return fmt.format(re)
    return f"{fmt.format(re)}{'+' if im > 0 else '-'}{fmt.format(abs(im))}i"


def _sort_key(v: complex):
    return (-round(v.real, 9), round(v.imag, 9))


def cluster(values: Iterable[complex], tol: float = CLUSTER_TOL, weights=None, source: str = "") -> Spectrum:
    """Merge values closer than ``tol * max(1, spectral radius)`` (single
    linkage); each cluster is represented by its weighted mean."""
    vals = np.asarray(list(values), dtype=complex)
    if vals.size == 0:
        return Spectrum((), source)
    w = np.ones(len(vals), dtype=np.int64) if weights is None else np.asarray(weights, dtype=np.int64)
    atol = tol * max(1.0, float(np.max(np.abs(vals))))
    order = np.argsort(vals.real, kind="stable")
    v = vals[order]
    parent = list(range(len(v)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(v)):
        j = i + 1
        while j < len(v) and v[j].real - v[i].real <= atol:
            if abs(v[j] - v[i]) <= atol:
                parent[find(j)] = find(i)
            j += 1
    groups: dict[int, list[int]] = {}
    for i in range(len(v)):
        groups.setdefault(find(i), []).append(i)
    entries = []
    for members in groups.values():
        ws = w[order[members]]
        mean = complex(np.sum(v[members] * ws) / np.sum(ws))
        if abs(mean.imag) <= atol:
            mean = complex(mean.real, 0.0)
        entries.append((mean, int(np.sum(ws))))
    entries.sort(key=lambda e: _sort_key(e[0]))
    return Spectrum(tuple(entries), source)


def from_pairs(pairs: Iterable[tuple[complex, int]], source: str = "") -> Spectrum:
    """Spectrum from explicit (value, multiplicity) pairs, e.g. golden data."""
    pairs = list(pairs)
    return cluster([complex(v) for v, _ in pairs], weights=[m for _, m in pairs], source=source)


def matrix_spectrum(matrix, tol: float = CLUSTER_TOL, name: str = "matrix", source: str = "oracle") -> Spectrum:
    return cluster(eigenvalues(matrix, name), tol, source=source)


def oracle_spectrum(graph: Digraph, tol: float = CLUSTER_TOL) -> Spectrum:
    """Direct eigensolve of the full adjacency matrix."""
    return matrix_spectrum(adjacency_matrix(graph), tol, name=graph.name or "adjacency")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn, items):
    items = list(items)
    n = _threads()
    if n == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(n) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class IrrepBlock:
    irrep: Irrep
    matrix: np.ndarray
    spectrum: Spectrum
    weight: int  # d_rho (regular) or rank rho(H) (relative)


def irrep_blocks(vg: VoltageGraph, H: Subgroup | None = None, tol: float = CLUSTER_TOL) -> list[IrrepBlock]:
    """Per-irrep data: rho(B), its spectrum, and the repetition weight."""

    def one(rho: Irrep) -> IrrepBlock:
        M = rho_base_matrix(vg, rho)
        weight = rho.dim if H is None else rank_of(rho_sum(rho, H.elements), scale=len(H))
        spec = matrix_spectrum(M, tol, name=f"rho_{rho.shape}(B)", source="irrep")
        return IrrepBlock(rho, M, spec, weight)

    return _map(one, irreps(vg.degree))


def _assemble(blocks: Sequence[IrrepBlock], tol: float, source: str) -> Spectrum:
    vals, ws = [], []
    for b in blocks:
        if b.weight == 0:
            continue
        for v, m in b.spectrum.entries:
            vals.append(v)
            ws.append(m * b.weight)
    return cluster(vals, tol, weights=ws, source=source)


def assemble_regular(vg: VoltageGraph, tol: float = CLUSTER_TOL) -> Spectrum:
    """spec of the regular lift = union over irreps of d_rho copies of spec rho(B)."""
    return _assemble(irrep_blocks(vg, None, tol), tol, "representation")


def assemble_relative(vg: VoltageGraph, H: Subgroup, tol: float = CLUSTER_TOL) -> Spectrum:
    """spec of the relative lift = union of rank(rho(H)) copies of spec rho(B)."""
    return _assemble(irrep_blocks(vg, H, tol), tol, "representation")


def quotient_spectrum(generators: Sequence[Permutation], mu, blocks=None, tol: float = CLUSTER_TOL) -> Spectrum:
    mu = as_partition(mu)
    H = young_subgroup(blocks or default_blocks(mu))
    return assemble_relative(VoltageGraph.singleton(generators), H, tol)


def quotient_matrix_spectrum(generators, mu, tol: float = CLUSTER_TOL) -> Spectrum:
    return matrix_spectrum(quotient_matrix(generators, mu).matrix, tol, source="quotient")


@dataclass(frozen=True)
class Comparison:
    equal: bool
    mismatches: tuple[tuple[complex, int, int], ...]


def compare(a: Spectrum, b: Spectrum, tol: float = CLUSTER_TOL) -> Comparison:
    """Multiset equality after clustering both spectra together."""
    vals = [v for v, _ in a.entries] + [v for v, _ in b.entries]
    if not vals:
        return Comparison(True, ())
    joint = cluster(vals, tol)
    atol = tol * max(1.0, max(abs(v) for v in vals))
    mism = []
    for v, _ in joint.entries:
        ma = sum(m for x, m in a.entries if abs(x - v) <= 2 * atol)
        mb = sum(m for x, m in b.entries if abs(x - v) <= 2 * atol)
        if ma != mb:
            mism.append((v, ma, mb))
    return Comparison(not mism, tuple(mism))


def contains(big: Spectrum, small: Spectrum, tol: float = CLUSTER_TOL) -> bool:
    """True if ``small`` is a sub-multiset of ``big``."""
    atol = tol * max([1.0] + [abs(v) for v, _ in big.entries + small.entries])
    for v, m in small.entries:
        if sum(mb for x, mb in big.entries if abs(x - v) <= 2 * atol) < m:
            return False
    return True


def values_close(spec: Spectrum, expected: dict, tol: float = 1e-9) -> bool:
    """Exact-multiplicity match against ``{value: multiplicity}`` golden data,
    values within ``tol``."""
    if len(spec.entries) != len(expected):
        return False
    remaining = dict(expected)
    for v, m in spec.entries:
        hit = [k for k in remaining if abs(complex(k) - v) <= tol]
        if len(hit) != 1 or remaining.pop(hit[0]) != m:
            return False
    return not remaining


def expected_total(vg: VoltageGraph, H: Subgroup | None = None) -> int:
    order = math.factorial(vg.degree)
    return vg.k * (order if H is None else order // len(H))
