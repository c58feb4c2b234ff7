"""Cayley (di/mixed) graphs of permutation groups: pancake graphs, the mixed
graphs Gamma(d, n, r), and structural analytics."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .perms import Permutation, compose, enumerate_sym


@dataclass(frozen=True)
class Digraph:
    """Vertices plus colored arcs ``(source, target, color)``.

    An undirected edge is a digon (two opposite arcs of the same color).
    Loops and multiple arcs are allowed.
    """

    vertices: tuple
    arcs: tuple[tuple[int, int, int], ...]
    colors: tuple[str, ...]
    generators: tuple[Permutation, ...] | None = None
    edge_degree: int | None = None  # r: digon-neighbours per vertex
    arc_degree: int | None = None  # z: one-way out-neighbours per vertex
    name: str = ""
    _index: dict = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, vertex) -> int:
        if self._index is None:
            object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        return self._index[vertex]

    def out_neighbours(self, u: int) -> list[int]:
        return [t for s, t, _ in self.arcs if s == u]

    def arc_array(self) -> np.ndarray:
        return np.asarray(self.arcs, dtype=np.int64).reshape(-1, 3)


def _suffix_reversal(n: int, j: int) -> Permutation:
    images = list(range(1, n + 1))
    images[n - j:] = reversed(images[n - j:])
    return Permutation(tuple(images))


def _move_to_end(n: int, k: int) -> Permutation:
    """Word action x_1..x_n -> x_1..x_{k-1} x_{k+1}..x_n x_k."""
    images = list(range(1, n + 1))
    images = images[: k - 1] + images[k:] + [k]
    return Permutation(tuple(images))


def pancake_generators(n: int) -> list[Permutation]:
    """Suffix reversals of length 2..n, in that order."""
    if n < 2:
        raise ValueError("pancake graphs need n >= 2")
    return [_suffix_reversal(n, j) for j in range(2, n + 1)]


def check_gamma_params(d: int, n: int, r: int) -> None:
    if not (n >= 2 and r >= 1 and d >= 1 and r < n <= d + 1):
        raise ValueError(f"Gamma(d,n,r) needs n>=2, r>=1, r<n<=d+1; got d={d}, n={n}, r={r}")


def gamma_generators(d: int, n: int, r: int) -> list[Permutation]:
    """Generators of Gamma(d, n, r) as a Cayley digraph of Sym(d+1).

    Only available when n >= d (at most one symbol is missing).  For n == d the
    missing symbol is written in front of the word, so each vertex becomes a
    permutation of d+1 letters.  Order: r reversals, d-n+1 append arcs, then
    n-r-1 rotation arcs, matching the order used by :func:`build_gamma`.
    """
    check_gamma_params(d, n, r)
    if n < d:
        raise ValueError(f"Gamma({d},{n},{r}) is not a Cayley digraph of Sym({d + 1}) (n < d)")
    m = d + 1
    shift = m - n  # 0 or 1 prefix positions
    gens = [_suffix_reversal(m, j) for j in range(2, r + 2)]
    if shift:
        gens.append(_move_to_end(m, 1))
    for k in range(n - r - 1, 0, -1):
        gens.append(_move_to_end(m, k + shift))
    return gens


def build_cayley(n: int, generators: Sequence[Permutation], name: str = "") -> Digraph:
    """Cay(Sym(n), S): an arc g -> compose(pi, g) of color i for each generator pi_i."""
    gens = tuple(generators)
    for p in gens:
        if p.n != n:
            raise ValueError(f"generator {p} has degree {p.n}, expected {n}")
    verts = tuple(p.images for p in enumerate_sym(n))
    index = {v: i for i, v in enumerate(verts)}
    arcs = []
    for u, g in enumerate(verts):
        for c, pi in enumerate(gens):
            arcs.append((u, index[tuple(g[x - 1] for x in pi.images)], c))
    digons = _count_symmetric_generators(gens)
    return Digraph(
        vertices=verts,
        arcs=tuple(arcs),
        colors=tuple(p.cycle_string() for p in gens),
        generators=gens,
        edge_degree=digons,
        arc_degree=len(gens) - digons,
        name=name or f"Cay(S{n})",
        _index=index,
    )


def _count_symmetric_generators(gens: Sequence[Permutation]) -> int:
    s = set(gens)
    return sum(1 for p in gens if p.inverse() in s)


def build_pancake(n: int) -> Digraph:
    return build_cayley(n, pancake_generators(n), name=f"P({n})")


def build_gamma(d: int, n: int, r: int) -> Digraph:
    """Gamma(d, n, r) on n-permutation words of the symbols 1..d+1."""
    check_gamma_params(d, n, r)
    symbols = range(1, d + 2)
    verts = tuple(itertools.permutations(symbols, n))
    index = {v: i for i, v in enumerate(verts)}
    colors = [f"rev{j}" for j in range(2, r + 2)]
    colors += [f"append{y}" for y in range(1, d - n + 2)]
    colors += [f"rot{k}" for k in range(n - r - 1, 0, -1)]
    arcs = []
    for u, w in enumerate(verts):
        c = 0
        for j in range(2, r + 2):
            arcs.append((u, index[w[: n - j] + w[n - j:][::-1]], c))
            c += 1
        missing = [y for y in symbols if y not in w]
        for y in missing:
            arcs.append((u, index[w[1:] + (y,)], c))
            c += 1
        for k in range(n - r - 1, 0, -1):
            arcs.append((u, index[w[: k - 1] + w[k:] + (w[k - 1],)], c))
            c += 1
    return Digraph(
        vertices=verts,
        arcs=tuple(arcs),
        colors=tuple(colors),
        edge_degree=r,
        arc_degree=d - r,
        name=f"Gamma({d},{n},{r})",
        _index=index,
    )


def adjacency_matrix(graph: Digraph, as_sparse: bool = False):
    """A[u, v] = number of arcs u -> v."""
    arr = graph.arc_array()
    N = graph.order
    a = sparse.coo_matrix(
        (np.ones(len(arr), dtype=np.int64), (arr[:, 0], arr[:, 1])), shape=(N, N)
    ).tocsr()
    a.sum_duplicates()
    return a if as_sparse else a.toarray()


class NotStronglyConnected(ValueError):
    def __init__(self, source, target):
        super().__init__(f"vertex {target} is unreachable from vertex {source}")
        self.source = source
        self.target = target


def diameter(graph: Digraph, chunk: int = 512) -> int:
    """Maximum directed BFS eccentricity over all vertices."""
    a = adjacency_matrix(graph, as_sparse=True)
    N = graph.order
    best = 0
    for start in range(0, N, chunk):
        idx = np.arange(start, min(N, start + chunk))
        dist = csgraph.shortest_path(a, method="D", unweighted=True, indices=idx)
        if np.isinf(dist).any():
            i, j = np.argwhere(np.isinf(dist))[0]
            raise NotStronglyConnected(graph.vertices[idx[i]], graph.vertices[j])
        best = max(best, int(dist.max()))
    return best


def is_symmetric(graph: Digraph) -> bool:
    a = adjacency_matrix(graph, as_sparse=True)
    return (a != a.T).nnz == 0


def find_perfect_codes(graph: Digraph) -> list[tuple[int, ...]]:
    """All perfect codes (efficient dominating sets) of an undirected graph.

    A perfect code is a set C whose closed neighbourhoods partition the vertex
    set, so the search is an exact cover (Knuth's Algorithm X) of vertices by
    closed neighbourhoods.
    """
    if not is_symmetric(graph):
        raise ValueError("perfect codes are defined here for undirected graphs only")
    N = graph.order
    closed = [frozenset([u, *graph.out_neighbours(u)]) for u in range(N)]
    # column v -> candidate code vertices whose closed neighbourhood covers v
    cols: dict[int, set[int]] = {v: set() for v in range(N)}
    for u, nb in enumerate(closed):
        for v in nb:
            cols[v].add(u)

    solutions: list[tuple[int, ...]] = []
    partial: list[int] = []

    def select(u):
        removed = []
        for v in closed[u]:
            for w in cols[v]:
                for x in closed[w]:
                    if x != v:
                        cols[x].discard(w)
            removed.append((v, cols.pop(v)))
        return removed

    def deselect(u, removed):
        for v, rows in reversed(removed):
            cols[v] = rows
            for w in rows:
                for x in closed[w]:
                    if x != v:
                        cols[x].add(w)

    def search():
        if not cols:
            solutions.append(tuple(sorted(partial)))
            return
        v = min(cols, key=lambda c: len(cols[c]))
        for u in sorted(cols[v]):
            partial.append(u)
            removed = select(u)
            search()
            deselect(u, removed)
            partial.pop()

    search()
    return sorted(solutions)
