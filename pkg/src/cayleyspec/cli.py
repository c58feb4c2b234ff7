"""Command-line front end.

    cayleyspec spectrum pancake 4 --partition all
    cayleyspec quotient gamma 3 3 2 --partition 2+2 --dot out.dot
    cayleyspec verify pancake 5 --perfect-codes

Exit status: 0 all checks pass, 1 verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import export
from .cayley import (
    Digraph,
    build_cayley,
    build_gamma,
    build_pancake,
    check_gamma_params,
    diameter,
    find_perfect_codes,
    gamma_generators,
    pancake_generators,
)
from .irreps import irrep_to_dict, irreps, kostka, rank_of, rho_sum
from .lift import VoltageGraph
from .perms import IntegerPartition, Permutation, default_blocks, integer_partitions, young_subgroup
from .quotient import (
    gamma_closed_form,
    gamma_family_generators,
    last_symbol_codes,
    pancake_closed_form,
    perfect_code_multiplicity_bound,
    phi_partition,
    PhiMap,
    position_partition_quotient,
    quotient_matrix,
    verify_regular,
)
from .spectra import (
    CLUSTER_TOL,
    assemble_regular,
    compare,
    irrep_blocks,
    oracle_spectrum,
    quotient_matrix_spectrum,
    quotient_spectrum,
)

# known pancake diameters k(n), n = 1..17
PANCAKE_DIAMETERS = (0, 1, 3, 4, 5, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18, 19)
MAX_GRAPH_DEGREE = 8
MAX_ORACLE_ORDER = 720


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    family: str
    params: list[str]
    partition: str | None = None
    fmt: str = "pretty"
    tol: float = CLUSTER_TOL
    oracle: bool = False
    output: str | None = None
    allow_large: bool = False
    generators: list[Permutation] | None = field(default=None, init=False)
    degree: int = field(default=0, init=False)

    def __post_init__(self):
        fam, p = self.family, self.params
        try:
            if fam == "pancake":
                if len(p) != 1:
                    raise UsageError("pancake takes one parameter n")
                n = int(p[0])
                if not 2 <= n <= MAX_GRAPH_DEGREE:
                    raise UsageError(f"pancake n must be in 2..{MAX_GRAPH_DEGREE}")
                self.generators = pancake_generators(n)
                self.degree = n
            elif fam == "gamma":
                if len(p) != 3:
                    raise UsageError("gamma takes three parameters d n r")
                d, n, r = map(int, p)
                check_gamma_params(d, n, r)
                if d + 1 > MAX_GRAPH_DEGREE:
                    raise UsageError(f"gamma needs d+1 <= {MAX_GRAPH_DEGREE}")
                self.degree = d + 1
                self.generators = gamma_generators(d, n, r) if n >= d else None
            elif fam == "custom":
                if len(p) < 2:
                    raise UsageError("custom takes n followed by generators")
                n = int(p[0])
                if not 1 <= n <= MAX_GRAPH_DEGREE:
                    raise UsageError(f"custom n must be in 1..{MAX_GRAPH_DEGREE}")
                self.generators = [Permutation.parse(g, n) for g in p[1:]]
                self.degree = n
            else:
                raise UsageError(f"unknown family {fam!r}")
        except UsageError:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    def build_graph(self) -> Digraph:
        if self.family == "pancake":
            return build_pancake(self.degree)
        if self.family == "gamma":
            d, n, r = map(int, self.params)
            return build_gamma(d, n, r)
        return build_cayley(self.degree, self.generators, name="custom")

    def require_generators(self) -> list[Permutation]:
        if self.generators is None:
            raise UsageError(
                f"Gamma({','.join(self.params)}) is not a Cayley digraph of Sym(d+1) (n < d); "
                "only direct (oracle) computations are available"
            )
        return self.generators

    def partitions(self) -> list[IntegerPartition]:
        if self.partition in (None, "all"):
            return integer_partitions(self.degree)
        try:
            mu = IntegerPartition.parse(self.partition)
        except ValueError as exc:
            raise UsageError(f"bad partition {self.partition!r}: {exc}") from exc
        if mu.n != self.degree:
            raise UsageError(f"partition {mu} does not sum to {self.degree}")
        return [mu]


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _oracle_allowed(cfg: RunConfig, order: int) -> None:
    if order > MAX_ORACLE_ORDER and not cfg.allow_large:
        raise UsageError(f"oracle eigensolve of order {order} needs --allow-large")


# -- spectrum ----------------------------------------------------------------


def cmd_spectrum(cfg: RunConfig) -> int:
    status = 0
    if cfg.partition is None:
        if cfg.generators is None:
            graph = cfg.build_graph()
            _oracle_allowed(cfg, graph.order)
            spec = oracle_spectrum(graph, cfg.tol)
            report = {"graph": graph.name, "spectrum": spec.to_records(), "pretty": spec.pretty(), "source": "oracle"}
        else:
            vg = VoltageGraph.singleton(cfg.generators)
            spec = assemble_regular(vg, cfg.tol)
            report = {"spectrum": spec.to_records(), "pretty": spec.pretty(), "source": spec.source}
            if cfg.oracle:
                graph = cfg.build_graph()
                _oracle_allowed(cfg, graph.order)
                cmp = compare(spec, oracle_spectrum(graph, cfg.tol), cfg.tol)
                report["oracle_equal"] = cmp.equal
                report["mismatches"] = [[str(v), a, b] for v, a, b in cmp.mismatches]
                status = 0 if cmp.equal else 1
        return _emit_spectrum_report(cfg, [report], status)

    gens = cfg.require_generators()
    vg = VoltageGraph.singleton(gens)
    blocks = irrep_blocks(vg)
    reports = []
    for mu in cfg.partitions():
        H = young_subgroup(default_blocks(mu))
        ranks = {str(b.irrep.shape): rank_of(rho_sum(b.irrep, H.elements), scale=len(H)) for b in blocks}
        spec = quotient_spectrum(gens, mu, tol=cfg.tol)
        rep = {
            "partition": str(mu),
            "ranks": ranks,
            "spectrum": spec.to_records(),
            "pretty": spec.pretty(),
            "source": spec.source,
        }
        if cfg.oracle:
            cmp = compare(spec, quotient_matrix_spectrum(gens, mu, cfg.tol), cfg.tol)
            rep["oracle_equal"] = cmp.equal
            if not cmp.equal:
                status = 1
        reports.append(rep)
    return _emit_spectrum_report(cfg, reports, status, per_irrep=blocks)


def _emit_spectrum_report(cfg, reports, status, per_irrep=None) -> int:
    if cfg.fmt == "json":
        payload = {"family": cfg.family, "params": cfg.params, "results": reports}
        if per_irrep is not None:
            payload["irreps"] = [
                {"shape": str(b.irrep.shape), "dimension": b.irrep.dim, "spectrum": b.spectrum.to_records()}
                for b in per_irrep
            ]
        _emit(export.dumps(payload), cfg)
    elif cfg.fmt == "csv":
        lines = ["partition,re,im,multiplicity"]
        for rep in reports:
            for rec in rep["spectrum"]:
                lines.append(f"{rep.get('partition', 'full')},{rec['re']},{rec['im']},{rec['multiplicity']}")
        _emit("\n".join(lines) + "\n", cfg)
    else:
        out = []
        if per_irrep is not None:
            shapes = [str(b.irrep.shape) for b in per_irrep]
            out.append("partition  | ranks " + " ".join(f"{s:>8}" for s in shapes) + " | spectrum")
            for rep in reports:
                ranks = " ".join(f"{rep['ranks'][s]:>8}" for s in shapes)
                out.append(f"{rep['partition']:<10} |       {ranks} | {rep['pretty']}")
            out.append("spec rho(B): " + "; ".join(f"{b.irrep.shape}: {b.spectrum.pretty()}" for b in per_irrep))
        else:
            out.append(reports[0]["pretty"])
        for rep in reports:
            if "oracle_equal" in rep:
                out.append(f"oracle {rep.get('partition', 'full')}: {'equal' if rep['oracle_equal'] else 'MISMATCH'}")
        _emit("\n".join(out) + "\n", cfg)
    return status


# -- quotient ----------------------------------------------------------------


def cmd_quotient(cfg: RunConfig, dot_path: str | None = None) -> int:
    gens = cfg.require_generators()
    mus = cfg.partitions()
    graph = _cayley_graph(cfg) if cfg.degree <= 7 else None
    status = 0
    results = []
    for mu in mus:
        q = quotient_matrix(gens, mu)
        rec = {"partition": str(mu), "labels": [str(x) for x in q.labels], "matrix": q.matrix.tolist()}
        if graph is not None:
            reg = verify_regular(graph, phi_partition(graph, PhiMap.from_partition(mu)))
            ok = reg.regular and np.array_equal(reg.B, q.matrix)
            rec["regular"] = bool(reg.regular)
            rec["SC_equals_AS"] = bool(ok)
            if not ok:
                status = 1
        results.append(rec)
        if dot_path:
            path = dot_path if len(mus) == 1 else dot_path.replace(".dot", f"_{mu}.dot")
            with open(path, "w") as fh:
                fh.write(export.quotient_to_dot(q.matrix, q.labels, name=f"quotient {mu}"))
    if cfg.fmt == "json":
        _emit(export.dumps({"family": cfg.family, "params": cfg.params, "results": results}), cfg)
    elif cfg.fmt == "csv":
        _emit("".join(export.matrix_to_csv(np.array(r["matrix"]), r["labels"]) for r in results), cfg)
    elif cfg.fmt == "dot":
        _emit("".join(export.quotient_to_dot(np.array(r["matrix"]), r["labels"], f"quotient {r['partition']}") for r in results), cfg)
    else:
        out = []
        for r in results:
            out.append(f"partition {r['partition']}  ({len(r['labels'])} classes)")
            width = max(len(x) for x in r["labels"])
            for lab, row in zip(r["labels"], r["matrix"]):
                out.append(f"  {lab:>{width}}  " + " ".join(f"{x:>2}" for x in row))
            if "regular" in r:
                out.append(f"  regular: {r['regular']}  SC=AS: {r['SC_equals_AS']}")
        _emit("\n".join(out) + "\n", cfg)
    return status


# -- verify ------------------------------------------------------------------


def _cayley_graph(cfg: RunConfig) -> Digraph:
    if cfg.family == "pancake":
        return build_pancake(cfg.degree)
    return build_cayley(cfg.degree, cfg.require_generators(), name=f"{cfg.family}{tuple(cfg.params)}")


def check_regularity(cfg):
    graph = _cayley_graph(cfg)
    for mu in integer_partitions(cfg.degree):
        reg = verify_regular(graph, phi_partition(graph, PhiMap.from_partition(mu)))
        if not reg.regular:
            return False, f"partition {mu} not regular, witness {reg.witness}"
        if not np.array_equal(reg.B, quotient_matrix(cfg.generators, mu).matrix):
            return False, f"partition {mu}: quotient matrix differs from A S = S B solution"
    return True, f"A S = S B for all {len(integer_partitions(cfg.degree))} partitions"


def check_oracle(cfg):
    graph = _cayley_graph(cfg)
    _oracle_allowed(cfg, graph.order)
    full = assemble_regular(VoltageGraph.singleton(cfg.generators), cfg.tol)
    cmp = compare(full, oracle_spectrum(graph, cfg.tol), cfg.tol)
    if not cmp.equal:
        return False, f"full spectrum mismatch {cmp.mismatches[:3]}"
    for mu in integer_partitions(cfg.degree):
        cmp = compare(quotient_spectrum(cfg.generators, mu, tol=cfg.tol), quotient_matrix_spectrum(cfg.generators, mu, cfg.tol), cfg.tol)
        if not cmp.equal:
            return False, f"quotient {mu} mismatch {cmp.mismatches[:3]}"
    return True, f"full spectrum {full.pretty(4)}"


def check_closed_form(cfg):
    n = cfg.degree
    if cfg.family == "pancake" and n >= 3:
        cf = pancake_closed_form(n)
        ok = np.array_equal(cf.B, position_partition_quotient(cfg.generators).matrix)
        return ok, f"B_{n} = D_n + T_n with {len(cf.eigenpairs)} exact eigenpairs"
    if cfg.family == "gamma" and n >= 3 and cfg.generators == gamma_family_generators(n):
        cf = gamma_closed_form(n)
        ok = np.array_equal(cf.B, position_partition_quotient(cfg.generators).matrix)
        ok = ok and set(cf.certified_eigenvalues) == {n - 1, n - 3, -1}
        return ok, f"B'_{n} certified eigenvalues {list(cf.certified_eigenvalues)}"
    return None, "no closed form for this family"


def check_perfect_codes(cfg):
    if cfg.family != "pancake":
        return None, "perfect codes checked for pancake graphs only"
    n = cfg.degree
    graph = build_pancake(n)
    codes = find_perfect_codes(graph)
    ok = codes == sorted(last_symbol_codes(n))
    bound = perfect_code_multiplicity_bound(n)
    m = assemble_regular(VoltageGraph.singleton(cfg.generators), cfg.tol).multiplicity(-1)
    ok = ok and bound == n - 1 and m >= bound
    return ok, f"{len(codes)} codes, m(-1) >= {bound} (actual {m})"


def check_diameter(cfg):
    graph = cfg.build_graph()
    k = diameter(graph)
    if cfg.family == "pancake":
        return k == PANCAKE_DIAMETERS[cfg.degree - 1], f"diameter {k}"
    return True, f"diameter {k}"


def check_kostka(cfg):
    n = cfg.degree
    reps = irreps(n)
    for mu in integer_partitions(n):
        H = young_subgroup(default_blocks(mu))
        for rho in reps:
            r = rank_of(rho_sum(rho, H.elements), scale=len(H))
            if r != kostka(rho.shape, mu):
                return False, f"rank rho_{rho.shape}(H_{mu}) = {r} != K = {kostka(rho.shape, mu)}"
    return True, f"rank = Kostka for all {len(reps)}x{len(reps)} pairs"


CHECKS = {
    "regularity": check_regularity,
    "oracle": check_oracle,
    "closed_form": check_closed_form,
    "perfect_codes": check_perfect_codes,
    "diameter": check_diameter,
    "kostka": check_kostka,
}


def cmd_verify(cfg: RunConfig, selected: list[str]) -> int:
    selected = selected or list(CHECKS)
    if cfg.generators is None:
        selected = [c for c in selected if c == "diameter"]
    results = []
    status = 0
    for name in selected:
        passed, detail = CHECKS[name](cfg)
        if passed is None:
            results.append({"check": name, "status": "skipped", "detail": detail})
            continue
        results.append({"check": name, "status": "pass" if passed else "fail", "detail": detail})
        if not passed:
            status = 1
            break
    if cfg.fmt == "json":
        _emit(export.dumps({"family": cfg.family, "params": cfg.params, "checks": results}), cfg)
    else:
        _emit("".join(f"{r['status'].upper():7} {r['check']}: {r['detail']}\n" for r in results), cfg)
    return status


# -- misc --------------------------------------------------------------------


def cmd_diameter(cfg: RunConfig) -> int:
    k = diameter(cfg.build_graph())
    _emit(export.dumps({"diameter": k}) if cfg.fmt == "json" else f"{k}\n", cfg)
    return 0


def cmd_perfect_codes(cfg: RunConfig) -> int:
    graph = cfg.build_graph()
    codes = find_perfect_codes(graph)
    words = [[export._vertex_name(graph.vertices[u]) for u in c] for c in codes]
    if cfg.fmt == "json":
        _emit(export.dumps({"count": len(codes), "codes": words}), cfg)
    else:
        _emit(f"{len(codes)} perfect codes\n" + "".join(" ".join(w) + "\n" for w in words), cfg)
    return 0


def cmd_export_dot(cfg: RunConfig) -> int:
    if cfg.partition:
        mu = cfg.partitions()[0]
        q = quotient_matrix(cfg.require_generators(), mu)
        _emit(export.quotient_to_dot(q.matrix, q.labels, name=f"quotient {mu}"), cfg)
    else:
        _emit(export.graph_to_dot(cfg.build_graph()), cfg)
    return 0


def cmd_irreps(n: int, fmt: str, output: str | None) -> int:
    if not 1 <= n <= 9:
        raise UsageError("irreps n must be in 1..9")
    reps = irreps(n)
    cfg = RunConfig("custom", [str(n), "e"], fmt=fmt, output=output)
    if fmt == "json":
        _emit(export.dumps([irrep_to_dict(r) for r in reps]), cfg)
    else:
        lines = [f"{r.shape}: dimension {r.dim}" for r in reps]
        lines.append(f"sum of squared dimensions: {sum(r.dim ** 2 for r in reps)} = {n}! = {math.factorial(n)}")
        _emit("\n".join(lines) + "\n", cfg)
    return 0


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayleyspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("family", choices=["pancake", "gamma", "custom"])
        p.add_argument("params", nargs="+", help="n | d n r | n GEN...")
        p.add_argument("--format", dest="fmt", choices=["json", "csv", "dot", "pretty"], default="pretty")
        p.add_argument("--output", "-o")
        p.add_argument("--tol", type=float, default=CLUSTER_TOL)
        p.add_argument("--allow-large", action="store_true", help="allow oracle eigensolves beyond 720 vertices")

    p = sub.add_parser("spectrum", help="full or quotient spectrum")
    family_args(p)
    p.add_argument("--partition", help='integer partition such as "3+1", or "all"')
    p.add_argument("--oracle", action="store_true", help="compare with a direct eigensolve")

    p = sub.add_parser("quotient", help="quotient matrix of the partition-induced regular partition")
    family_args(p)
    p.add_argument("--partition", required=True)
    p.add_argument("--dot", help="write the weighted quotient digraph to this DOT file")

    p = sub.add_parser("verify", help="run the invariant battery")
    family_args(p)
    p.add_argument("--all", action="store_true")
    for name in CHECKS:
        p.add_argument("--" + name.replace("_", "-"), action="append_const", const=name, dest="checks")

    for name, help_ in (("diameter", "directed diameter"), ("perfect-codes", "all perfect codes")):
        p = sub.add_parser(name, help=help_)
        family_args(p)

    p = sub.add_parser("export-dot", help="graph (or quotient with --partition) as DOT")
    family_args(p)
    p.add_argument("--partition")

    p = sub.add_parser("irreps", help="irreducible representations of Sym(n)")
    p.add_argument("n", type=int)
    p.add_argument("--format", dest="fmt", choices=["json", "pretty"], default="pretty")
    p.add_argument("--output", "-o")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "irreps":
            return cmd_irreps(args.n, args.fmt, args.output)
        cfg = RunConfig(
            args.family,
            args.params,
            partition=getattr(args, "partition", None),
            fmt=args.fmt,
            tol=args.tol,
            oracle=getattr(args, "oracle", False),
            output=args.output,
            allow_large=args.allow_large,
        )
        if cfg.fmt == "dot" and args.command not in ("quotient", "export-dot"):
            raise UsageError(f"--format dot is not available for {args.command}")
        if args.command == "spectrum":
            return cmd_spectrum(cfg)
        if args.command == "quotient":
            return cmd_quotient(cfg, args.dot)
        if args.command == "verify":
            return cmd_verify(cfg, [] if args.all else (args.checks or []))
        if args.command == "diameter":
            return cmd_diameter(cfg)
        if args.command == "perfect-codes":
            return cmd_perfect_codes(cfg)
        if args.command == "export-dot":
            return cmd_export_dot(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
