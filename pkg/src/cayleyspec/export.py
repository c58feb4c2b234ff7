"""DOT / CSV / JSON writers."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter

import numpy as np

from .cayley import Digraph
from .spectra import Spectrum

PALETTE = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


def _vertex_name(v) -> str:
    if isinstance(v, tuple) and len(v) == 2 and isinstance(v[1], tuple):
        return f"{v[0]}:{''.join(map(str, v[1]))}"
    if isinstance(v, tuple):
        return "".join(map(str, v)) if all(x < 10 for x in v) else ",".join(map(str, v))
    return str(v)


def graph_to_dot(graph: Digraph) -> str:
    """Digons become undirected edges (dir=none); one-way arcs keep direction."""
    lines = [f'digraph "{graph.name}" {{']
    for i, v in enumerate(graph.vertices):
        lines.append(f'  {i} [label="{_vertex_name(v)}"];')
    counts = Counter(graph.arcs)
    for (s, t, c) in sorted(counts):
        color = PALETTE[c % len(PALETTE)]
        attrs = f'color={color}, label="{graph.colors[c]}"'
        paired = min(counts[(s, t, c)], counts.get((t, s, c), 0)) if s != t else 0
        if s < t:
            lines += [f"  {s} -> {t} [dir=none, {attrs}];"] * paired
        lines += [f"  {s} -> {t} [{attrs}];"] * (counts[(s, t, c)] - paired)
    lines.append("}")
    return "\n".join(lines) + "\n"


def quotient_to_dot(B: np.ndarray, labels, name: str = "quotient") -> str:
    """Weighted quotient digraph: an arc i -> j with weight b_ij when b_ij != 0."""
    lines = [f'digraph "{name}" {{']
    for i, lab in enumerate(labels):
        lines.append(f'  {i} [label="{lab}"];')
    for i in range(B.shape[0]):
        for j in range(B.shape[1]):
            if B[i, j]:
                lines.append(f'  {i} -> {j} [label="{int(B[i, j])}", weight={int(B[i, j])}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_to_csv(M: np.ndarray, labels=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if labels is not None:
        w.writerow([""] + [str(x) for x in labels])
    for i, row in enumerate(np.asarray(M)):
        cells = [int(x) if float(x).is_integer() else repr(float(x)) for x in row]
        w.writerow(([str(labels[i])] if labels is not None else []) + cells)
    return buf.getvalue()


def spectrum_to_csv(spec: Spectrum) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "multiplicity"])
    for rec in spec.to_records():
        w.writerow([rec["re"], rec["im"], rec["multiplicity"]])
    return buf.getvalue()


def graph_summary(graph: Digraph) -> dict:
    out = np.zeros(graph.order, dtype=np.int64)
    for s, _, _ in graph.arcs:
        out[s] += 1
    return {
        "name": graph.name,
        "vertices": graph.order,
        "arcs": len(graph.arcs),
        "colors": list(graph.colors),
        "edge_degree": graph.edge_degree,
        "arc_degree": graph.arc_degree,
        "out_degree": sorted({int(x) for x in out}),
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
