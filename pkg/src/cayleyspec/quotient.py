"""Regular partitions of Cayley digraphs induced by integer partitions of n,
their quotient matrices, and the closed-form pancake / mixed-graph families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy

from .cayley import Digraph, adjacency_matrix, build_pancake, find_perfect_codes, gamma_generators, pancake_generators
from .perms import (
    ClassLabel,
    IntegerPartition,
    Permutation,
    as_partition,
    default_blocks,
    permutation_matrix,
    words_with_content,
)


@dataclass(frozen=True)
class PhiMap:
    """Onto map from [1..n] to symbols 0..r-1 with fibres ``blocks``."""

    mu: IntegerPartition
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_partition(cls, mu, blocks: Sequence[Sequence[int]] | None = None) -> "PhiMap":
        mu = as_partition(mu)
        if blocks is None:
            blocks = default_blocks(mu)
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        if tuple(len(b) for b in blocks) != mu.parts:
            raise ValueError(f"block sizes {[len(b) for b in blocks]} do not match {mu}")
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, mu.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition [1..{mu.n}]")
        return cls(mu, blocks)

    @property
    def n(self) -> int:
        return self.mu.n

    def symbol_table(self) -> tuple[int, ...]:
        table = [0] * self.n
        for s, b in enumerate(self.blocks):
            for x in b:
                table[x - 1] = s
        return tuple(table)


def project_vertex(g, phi: PhiMap) -> ClassLabel:
    """Word whose i-th symbol is phi(g(i))."""
    images = g.images if isinstance(g, Permutation) else tuple(g)
    if len(images) != phi.n:
        raise ValueError("degree mismatch")
    table = phi.symbol_table()
    return ClassLabel(tuple(table[x - 1] for x in images), phi.mu)


def act_on_word(pi: Permutation, word: tuple[int, ...]) -> tuple[int, ...]:
    """Positions act as on vertices: (pi . sigma)(i) = sigma(pi(i))."""
    return tuple(word[x - 1] for x in pi.images)


@dataclass(frozen=True)
class QuotientMatrix:
    matrix: np.ndarray
    labels: tuple

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


def quotient_matrix(generators: Sequence[Permutation], mu, blocks=None) -> QuotientMatrix:
    """(B)_{sigma,tau} = #{pi in S : pi . sigma = tau}.

    Rows are the words of the orbit of the identity's word under <S>, in
    :func:`words_with_content` order.
    """
    phi = PhiMap.from_partition(mu, blocks)
    gens = list(generators)
    for p in gens:
        if p.n != phi.n:
            raise ValueError(f"generator {p} has degree {p.n}, expected {phi.n}")
    eps = project_vertex(Permutation.identity(phi.n), phi).word
    orbit = {eps}
    frontier = [eps]
    while frontier:
        nxt = []
        for w in frontier:
            for p in gens:
                t = act_on_word(p, w)
                if t not in orbit:
                    orbit.add(t)
                    nxt.append(t)
        frontier = nxt
    labels = tuple(lab for lab in words_with_content(phi.mu) if lab.word in orbit)
    index = {lab.word: i for i, lab in enumerate(labels)}
    B = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for i, lab in enumerate(labels):
        for p in gens:
            B[i, index[act_on_word(p, lab.word)]] += 1
    return QuotientMatrix(B, labels)


def position_partition_quotient(generators: Sequence[Permutation]) -> QuotientMatrix:
    """Quotient for the cells "a fixed symbol sits at position i", i = 1..n.

    Under the vertex action the symbol at position i moves to position
    pi^{-1}(i), so the matrix is the sum of P(pi^{-1}) = P(pi)^T.
    """
    gens = list(generators)
    n = gens[0].n
    B = sum((permutation_matrix(p.inverse()) for p in gens), np.zeros((n, n), dtype=np.int64))
    return QuotientMatrix(B, tuple(range(1, n + 1)))


def position_order(labels: Sequence[ClassLabel]) -> list[int]:
    """For (n-1,1) labels: indices ordered by the position of the lone symbol."""
    return sorted(range(len(labels)), key=lambda i: labels[i].word.index(1))


# -- regular partitions ------------------------------------------------------


@dataclass(frozen=True)
class RegularPartition:
    cells: tuple[tuple[int, ...], ...]
    labels: tuple | None = None

    @property
    def order(self) -> int:
        return sum(len(c) for c in self.cells)

    def cell_of(self) -> np.ndarray:
        out = np.full(self.order, -1, dtype=np.int64)
        for k, c in enumerate(self.cells):
            out[list(c)] = k
        if (out < 0).any():
            raise ValueError("cells do not cover all vertices")
        return out

    def characteristic_matrix(self) -> np.ndarray:
        S = np.zeros((self.order, len(self.cells)), dtype=np.int64)
        S[np.arange(self.order), self.cell_of()] = 1
        return S


def phi_partition(graph: Digraph, phi: PhiMap) -> RegularPartition:
    """Cells V_sigma = {g : phi . g = sigma}, ordered like words_with_content."""
    groups: dict[tuple, list[int]] = {}
    for u, v in enumerate(graph.vertices):
        groups.setdefault(project_vertex(v, phi).word, []).append(u)
    labels = tuple(lab for lab in words_with_content(phi.mu) if lab.word in groups)
    return RegularPartition(tuple(tuple(groups[lab.word]) for lab in labels), labels)


def discrete_partition(graph: Digraph) -> RegularPartition:
    return RegularPartition(tuple((u,) for u in range(graph.order)), tuple(graph.vertices))


@dataclass(frozen=True)
class Regularity:
    regular: bool
    B: np.ndarray | None = None
    witness: tuple[int, int, int] | None = None  # (u, u', target cell)


def verify_regular(graph: Digraph, partition: RegularPartition) -> Regularity:
    """Check A S = S B in integer arithmetic; on failure report two vertices of
    one cell whose arc counts into some cell differ."""
    A = adjacency_matrix(graph, as_sparse=True)
    S = partition.characteristic_matrix()
    AS = np.asarray(A @ S)
    m = len(partition.cells)
    B = np.zeros((m, m), dtype=np.int64)
    for k, cell in enumerate(partition.cells):
        rows = AS[list(cell)]
        bad = np.nonzero((rows != rows[0]).any(axis=1))[0]
        if bad.size:
            j = int(np.nonzero(rows[bad[0]] != rows[0])[0][0])
            return Regularity(False, witness=(cell[0], cell[int(bad[0])], j))
        B[k] = rows[0]
    assert np.array_equal(AS, S @ B)
    return Regularity(True, B=B)


def lift_eigenvector(graph: Digraph, partition: RegularPartition, x, B=None, tol: float = 1e-9):
    """S x, checked to be an eigenvector of A with the same eigenvalue as x for B."""
    x = np.asarray(x)
    if B is None:
        reg = verify_regular(graph, partition)
        if not reg.regular:
            raise ValueError(f"partition is not regular (witness {reg.witness})")
        B = reg.B
    Bx = B @ x
    k = int(np.argmax(np.abs(x)))
    lam = Bx[k] / x[k]
    if np.linalg.norm(Bx - lam * x) > tol * max(1.0, np.linalg.norm(x)):
        raise ValueError("x is not an eigenvector of the quotient matrix")
    y = partition.characteristic_matrix() @ x
    A = adjacency_matrix(graph, as_sparse=True)
    if np.linalg.norm(A @ y - lam * y) > tol * max(1.0, np.linalg.norm(y)):
        raise ArithmeticError("lifted vector failed the eigenvector residual check")
    return y, lam


# -- closed forms ----------------------------------------------------------


def _diag_part(n: int) -> np.ndarray:
    return np.diag(np.arange(n - 2, -2, -1)).astype(np.int64)


def _anti_triangle(n: int, strict: bool) -> np.ndarray:
    i, j = np.indices((n, n)) + 1
    return ((i + j > n + 1) if strict else (i + j >= n + 1)).astype(np.int64)


def pancake_eigenpairs(n: int) -> list[tuple[int, tuple[int, ...]]]:
    """All-ones vector plus the two families of integer eigenvectors of B_n."""
    pairs = [(n - 1, tuple([1] * n))]
    top = n // 2 if n % 2 else n // 2 - 1
    for r in range(1, top + 1):
        v = [0] * (r - 1) + [n - 2 * r] + [-1] * (n - 2 * r) + [0] * r
        pairs.append((n - r - 1, tuple(v)))
    for r in range(n // 2, 0, -1):
        v = [0] * (r - 1) + [-1] * (n - 2 * r + 1) + [n - 2 * r + 1] + [0] * (r - 1)
        pairs.append((r - 2, tuple(v)))
    return pairs


@dataclass(frozen=True)
class ClosedForm:
    B: np.ndarray
    eigenpairs: tuple[tuple[int, tuple[int, ...]], ...] = ()
    certified_eigenvalues: tuple[int, ...] = ()


def pancake_closed_form(n: int) -> ClosedForm:
    """B_n = D_n + T_n with each returned eigenpair checked exactly."""
    if n < 3:
        raise ValueError("closed form needs n >= 3")
    B = _diag_part(n) + _anti_triangle(n, strict=False)
    pairs = pancake_eigenpairs(n)
    for lam, v in pairs:
        v_arr = np.array(v, dtype=np.int64)
        if not np.array_equal(B @ v_arr, lam * v_arr):
            raise ArithmeticError(f"B_{n} v != {lam} v for v={v}")
    return ClosedForm(B, tuple(pairs))


def gamma_family_generators(n: int) -> list[Permutation]:
    """Degree-n generators of the family behind B'_n: n-2 suffix reversals
    plus the full rotation (the Cayley form of Gamma(n-1, n-1, n-2))."""
    return gamma_generators(n - 1, n - 1, n - 2)


def gamma_closed_form(n: int) -> ClosedForm:
    """B'_n = D_n + C_n + T'_n; certifies n-1, n-3, -1 as eigenvalues by exact
    rank deficiency of lambda I - B'_n."""
    if n < 3:
        raise ValueError("closed form needs n >= 3")
    shift = np.roll(np.eye(n, dtype=np.int64), -1, axis=1)  # (i, i-1) and (1, n)
    B = _diag_part(n) + shift + _anti_triangle(n, strict=True)
    certified = []
    for lam in (n - 1, n - 3, -1):
        M = sympy.Matrix(lam * np.eye(n, dtype=np.int64) - B)
        if M.rank() < n:
            certified.append(lam)
    return ClosedForm(B, certified_eigenvalues=tuple(certified))


def exact_rank(vectors) -> int:
    return sympy.Matrix([[Fraction(int(x)) for x in v] for v in vectors]).rank()


def last_symbol_codes(n: int) -> list[tuple[int, ...]]:
    """Vertex sets {g in P(n): g(n) = s}, s = 1..n, as index tuples of P(n)."""
    graph = build_pancake(n)
    return [tuple(u for u, v in enumerate(graph.vertices) if v[-1] == s) for s in range(1, n + 1)]


def perfect_code_eigenvectors(n: int, graph: Digraph | None = None) -> np.ndarray:
    """One lifted (-1)-eigenvector of P(n) per symbol s: n-1 on the vertices
    ending in s, -1 elsewhere (via the regular partition "position of s")."""
    if n < 2:
        raise ValueError("n >= 2 required")
    graph = graph or build_pancake(n)
    gens = pancake_generators(n)
    vecs = []
    for s in range(1, n + 1):
        rest = tuple(x for x in range(1, n + 1) if x != s)
        phi = PhiMap.from_partition((n - 1, 1), [rest, (s,)])
        part = phi_partition(graph, phi)
        order = position_order(part.labels)
        # x = (-1, ..., -1, n-1) indexed by the position of s
        x = np.zeros(len(part.labels))
        for pos, idx in enumerate(order, start=1):
            x[idx] = n - 1 if pos == n else -1
        B = quotient_matrix(gens, phi.mu, phi.blocks).matrix
        y, lam = lift_eigenvector(graph, part, x, B=B)
        if lam != -1:
            raise ArithmeticError(f"lifted vector for symbol {s} has eigenvalue {lam}, expected -1")
        vecs.append(y)
    return np.array(vecs)


def perfect_code_multiplicity_bound(n: int) -> int:
    """Lower bound n-1 on the multiplicity of -1 in spec P(n), obtained as the
    rank of the stacked perfect-code eigenvectors."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return exact_rank(perfect_code_eigenvectors(n))


def check_perfect_codes(n: int) -> bool:
    graph = build_pancake(n)
    return find_perfect_codes(graph) == sorted(last_symbol_codes(n))
