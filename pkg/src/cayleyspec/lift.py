"""Voltage digraphs over Sym(n), base matrices, regular and relative lifts."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cayley import Digraph
from .irreps import Irrep, irrep_matrix
from .perms import Permutation, Subgroup, compose, enumerate_sym, young_subgroup

MAX_LIFT_ORDER = 5040 * 8


@dataclass(frozen=True)
class VoltageGraph:
    """Base digraph on ``k`` vertices; each arc (u, v, voltage) carries an
    element of Sym(degree)."""

    k: int
    degree: int
    arcs: tuple[tuple[int, int, Permutation], ...]
    blocks: tuple[tuple[int, ...], ...] | None = None  # optional relative subgroup

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("base digraph needs at least one vertex")
        for u, v, a in self.arcs:
            if not (0 <= u < self.k and 0 <= v < self.k):
                raise ValueError(f"arc ({u},{v}) outside base vertex range")
            if a.n != self.degree:
                raise ValueError(f"voltage {a} has degree {a.n}, expected {self.degree}")

    @classmethod
    def singleton(cls, generators: Sequence[Permutation]) -> "VoltageGraph":
        """One vertex with a loop per generator: its lift is Cay(Sym(n), S)."""
        gens = tuple(generators)
        return cls(1, gens[0].n, tuple((0, 0, p) for p in gens))

    def subgroup(self) -> Subgroup | None:
        return young_subgroup(self.blocks) if self.blocks else None

    @classmethod
    def from_json(cls, text: str) -> "VoltageGraph":
        data = json.loads(text)
        n = int(data["degree"])
        verts = data["vertices"]
        k = verts if isinstance(verts, int) else len(verts)
        names = {name: i for i, name in enumerate(verts)} if not isinstance(verts, int) else None

        def vid(x):
            return names[x] if names is not None else int(x)

        arcs = tuple(
            (vid(a["from"]), vid(a["to"]), Permutation.parse(a["voltage"], n)) for a in data["arcs"]
        )
        blocks = data.get("subgroup")
        return cls(k, n, arcs, tuple(tuple(b) for b in blocks) if blocks else None)

    def to_json(self) -> str:
        data = {
            "degree": self.degree,
            "vertices": self.k,
            "arcs": [{"from": u, "to": v, "voltage": a.cycle_string()} for u, v, a in self.arcs],
        }
        if self.blocks:
            data["subgroup"] = [list(b) for b in self.blocks]
        return json.dumps(data, sort_keys=True)


def base_matrix(vg: VoltageGraph) -> list[list[list[Permutation]]]:
    """k x k group-algebra entries, each a multiset (list) of voltages."""
    B: list[list[list[Permutation]]] = [[[] for _ in range(vg.k)] for _ in range(vg.k)]
    for u, v, a in vg.arcs:
        B[u][v].append(a)
    return B


def rho_base_matrix(vg: VoltageGraph, rho: Irrep) -> np.ndarray:
    """Block (u, v) is the sum of rho(alpha)^T over arcs u -> v.

    The fibre map g -> compose(alpha, g) reverses products, so the lift
    decomposes along the transposed (= inverse, rho being orthogonal) blocks.
    With a single base vertex the transpose does not change the spectrum.
    """
    d = rho.dim
    out = np.zeros((vg.k * d, vg.k * d))
    for u, v, a in vg.arcs:
        out[u * d:(u + 1) * d, v * d:(v + 1) * d] += irrep_matrix(rho, a).T
    return out


def _guard(order: int) -> None:
    if order > MAX_LIFT_ORDER:
        raise ValueError(f"lift would have {order} vertices (limit {MAX_LIFT_ORDER})")


def expand_lift(vg: VoltageGraph) -> Digraph:
    """Regular lift: arc (u, g) -> (v, compose(alpha, g)) for every base arc."""
    _guard(vg.k * math.factorial(vg.degree))
    group = [p.images for p in enumerate_sym(vg.degree)]
    gindex = {g: i for i, g in enumerate(group)}
    G = len(group)
    arcs = []
    for u in range(vg.k):
        for gi, g in enumerate(group):
            for c, (s, t, a) in enumerate(vg.arcs):
                if s != u:
                    continue
                h = tuple(g[x - 1] for x in a.images)
                arcs.append((u * G + gi, t * G + gindex[h], c))
    verts = tuple((u, g) for u in range(vg.k) for g in group)
    arcs.sort()
    return Digraph(verts, tuple(arcs), tuple(a.cycle_string() for _, _, a in vg.arcs), name="lift")


def left_cosets(H: Subgroup) -> tuple[list[Permutation], dict[tuple, int]]:
    """Left cosets gH = {compose(g, h)}; representative = lexicographically
    smallest element.  Returns the representatives and an element -> coset map."""
    reps: list[Permutation] = []
    owner: dict[tuple, int] = {}
    for g in enumerate_sym(H.degree):
        if g.images in owner:
            continue
        idx = len(reps)
        reps.append(g)
        for h in H.elements:
            owner[compose(g, h).images] = idx
    return reps, owner


def expand_relative_lift(vg: VoltageGraph, H: Subgroup) -> Digraph:
    """Relative lift over G/H: arc (u, J) -> (v, beta(a) J)."""
    if H.degree != vg.degree:
        raise ValueError("subgroup degree differs from voltage degree")
    _guard(vg.k * math.factorial(vg.degree) // len(H))
    reps, owner = left_cosets(H)
    m = len(reps)
    arcs = []
    for u in range(vg.k):
        for j, g in enumerate(reps):
            for c, (s, t, a) in enumerate(vg.arcs):
                if s == u:
                    arcs.append((u * m + j, t * m + owner[compose(a, g).images], c))
    verts = tuple((u, g.images) for u in range(vg.k) for g in reps)
    arcs.sort()
    return Digraph(verts, tuple(arcs), tuple(a.cycle_string() for _, _, a in vg.arcs), name="relative lift")
