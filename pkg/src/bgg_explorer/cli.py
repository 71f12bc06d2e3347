"""Command line interface: ``bgg-explorer <command> ...``.

Exit codes: 0 success, 1 internal consistency failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import random
import sys
from contextlib import redirect_stdout
from dataclasses import dataclass, field

from .bggdiag import REALFORMS, bgg_diagram, curvature_kind, homogeneity, parse_lambda
from .errors import BGGError, ConfigurationError, ConsistencyError, DomainError, GuardError
from .hasse import hasse_graph
from .parabolic import GradingInfo, grading_from_text
from .rootlat import root_name

COMMANDS = ("hasse", "bgg", "subcomplexes", "oracle", "symbol-check", "accept")
FORMATS = ("json", "dot", "text")
DEFAULT_SEED = 20240601


class UsageError(ConfigurationError):
    pass


@dataclass
class JobSpec:
    command: str
    diagram: str | None = None
    grading: GradingInfo | None = field(default=None, repr=False)
    lam: tuple | None = None
    realform: str = "split"
    e0: str = "preset:torsion-free"
    fmt: str = "text"
    seed: int = DEFAULT_SEED
    jobs: int = 1
    options: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p, formats=FORMATS):
    p.add_argument("--format", dest="fmt", choices=formats, default="text")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized runs")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for independent checks")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bgg-explorer", description="BGG diagrams, subcomplexes and symbol checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hasse", help="Hasse graph of W^p for a crossed diagram")
    p.add_argument("diagram", nargs="+", help='e.g. A5 x{2}')
    _common(p)

    p = sub.add_parser("bgg", help="BGG diagram for a dominant weight")
    p.add_argument("diagram", nargs="+")
    p.add_argument("--lambda", dest="lam", default="adjoint", help='"1,0,0,0,1", "adjoint" or "0"')
    p.add_argument("--realform", default="split", choices=sorted(REALFORMS))
    _common(p)

    p = sub.add_parser("subcomplexes", help="maximal chains certified by the weight criterion")
    p.add_argument("diagram", nargs="+")
    p.add_argument("--lambda", dest="lam", default="adjoint")
    p.add_argument("--realform", default="split", choices=sorted(REALFORMS))
    p.add_argument("--e0", default="preset:torsion-free", help='"preset:torsion-free" or names like "w_{1,1}"')
    p.add_argument("--verdicts", action="store_true", help="include every pair verdict")
    _common(p)

    p = sub.add_parser("oracle", help="brute-force Lie algebra homology against the diagram")
    p.add_argument("diagram", nargs="+")
    p.add_argument("--rep", default="adjoint", choices=("adjoint", "standard", "dual_standard"))
    _common(p, ("json", "text"))

    p = sub.add_parser("symbol-check", help="exactness of the symbol sequences")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--x", default=None, help='"a1,...,an;b1,...,bn"; random generic if omitted')
    _common(p, ("json", "text"))

    p = sub.add_parser("accept", help="run the acceptance suite")
    p.add_argument("--only", default=None, help="comma separated criterion numbers")
    _common(p, ("json", "text"))
    return parser


def parse_jobspec(tokens) -> JobSpec:
    """Parse and validate an argv-like token list."""
    ns = build_parser().parse_args(list(tokens))
    if ns.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    job = JobSpec(ns.command, fmt=ns.fmt, seed=ns.seed, jobs=ns.jobs)
    if getattr(ns, "diagram", None):
        job.diagram = " ".join(ns.diagram)
        job.grading = grading_from_text(job.diagram)
    if hasattr(ns, "lam"):
        job.lam = tuple(parse_lambda(job.grading.spec, ns.lam))
    if hasattr(ns, "realform"):
        job.realform = ns.realform
    if hasattr(ns, "e0"):
        job.e0 = ns.e0
    for key in ("verdicts", "rep", "n", "k", "l", "x", "only"):
        if hasattr(ns, key):
            job.options[key] = getattr(ns, key)
    if job.command in ("oracle", "symbol-check", "accept") and job.fmt == "dot":
        raise UsageError(f"{job.command} has no DOT output")
    return job


# --------------------------------------------------------------------------
# Commands


def _cmd_hasse(job):
    from .emit import emit_dot, emit_json, graph_report

    graph = hasse_graph(job.grading)
    if job.fmt == "json":
        return 0, emit_json(graph_report(graph), "hasse")
    if job.fmt == "dot":
        return 0, emit_dot(graph)
    lines = [f"{job.grading}: {len(graph.nodes)} nodes, {len(graph.arrows)} arrows"]
    for a in sorted(graph.arrows, key=lambda a: (a.src, a.dst)):
        lines.append(f"  {graph.nodes[a.src].name} -> {graph.nodes[a.dst].name}  {root_name(graph.spec, a.label)}")
    return 0, "\n".join(lines) + "\n"


def _diagram(job):
    return bgg_diagram(hasse_graph(job.grading), job.lam, job.realform)


def _cmd_bgg(job):
    from .emit import diagram_report, emit_dot, emit_json

    diag = _diagram(job)
    if job.fmt == "json":
        return 0, emit_json(diagram_report(diag), "bgg")
    if job.fmt == "dot":
        return 0, emit_dot(diag)
    lines = [f"{job.grading} lambda={diag.lam} realform={diag.realform}"]
    for n in diag.graph.nodes:
        lines.append(f"  {n.name:10s} deg {n.length}  {str(diag.label(n)):28s} dim {diag.dim(n)}")
    for (s, d), c in sorted(diag.arrow_orders.items()):
        lines.append(f"  {diag.graph.nodes[s].name} -> {diag.graph.nodes[d].name}  order {c}")
    return 0, "\n".join(lines) + "\n"


def _cmd_subcomplexes(job):
    from .emit import chains_report, emit_dot, emit_json
    from .vanish import all_pair_verdicts, check_witness, find_subcomplexes, parse_e0

    diag = _diagram(job)
    e0 = parse_e0(job.grading, job.e0)
    chains = find_subcomplexes(diag, e0, jobs=job.jobs)
    verdicts = all_pair_verdicts(diag, e0) if job.options.get("verdicts") else None
    for v in verdicts or []:
        if v.witness and not check_witness(diag.grading, v.witness):
            raise ConsistencyError(f"witness for {v.source} -> {v.target} does not recompute")
    if job.fmt == "json":
        return 0, emit_json(chains_report(diag, e0, chains, verdicts), "subcomplexes")
    if job.fmt == "dot":
        return 0, emit_dot(diag, chains)
    lines = [f"{job.grading} lambda={diag.lam} E0={', '.join(e0.names) or e0.provenance}"]
    lines += [f"  note: {n}" for n in e0.notes]
    for c in chains:
        lines.append("  " + " -> ".join(c.nodes) + f"   orders {list(c.orders)}")
    for v in verdicts or []:
        lines.append(f"  {v.source} => {v.target}: {v.verdict}{'' if v.path_unique else ' (not path-unique)'}")
    return 0, "\n".join(lines) + "\n"


def _cmd_oracle(job):
    from .emit import emit_json
    from .liealg import component_homogeneity, euler_characteristic, harmonic_highest_weights, homology_dims
    from .liealg import diagram_weight

    grading = job.grading
    rep = job.options["rep"]
    dims = homology_dims(grading, rep)
    labels = [harmonic_highest_weights(grading, rep, k) for k in range(len(dims))]
    lhs, rhs = euler_characteristic(grading, rep)
    out = {"diagram": str(grading), "rep": rep, "homology_dims": dims, "euler": [lhs, rhs]}
    out["labels"] = [[str(w) for w in ls] for ls in labels]
    agree = lhs == rhs
    diag = bgg_diagram(hasse_graph(grading), diagram_weight(grading.spec, rep))
    expected = [sorted((str(diag.label(n)) for n in diag.nodes_of_degree(k)), key=str) for k in range(len(dims))]
    agree &= [sorted(ls) for ls in out["labels"]] == [sorted(ls) for ls in expected]
    per_degree = [sum(diag.dim(n) for n in diag.nodes_of_degree(k)) for k in range(len(dims))]
    agree &= per_degree == dims
    if rep == "adjoint":
        tags = component_homogeneity(grading, rep, 2)
        out["degree2"] = {
            n.name: {
                "oracle": tags.get(diag.label(n)),
                "combinatorial": curvature_kind(diag, n),
                "homogeneity": homogeneity(diag, n),
            }
            for n in diag.nodes_of_degree(2)
        }
        agree &= all(v["oracle"] == v["combinatorial"] for v in out["degree2"].values())
    out["agrees_with_diagram"] = agree
    code = 0 if agree else 1
    if job.fmt == "json":
        return code, emit_json(out, "oracle")
    lines = [f"{grading} V={rep}: dims {dims}, euler {lhs} = {rhs}, agrees with diagram: {agree}"]
    for k, ls in enumerate(out["labels"]):
        lines.append(f"  H_{k}: {', '.join(ls)}")
    for name, v in out.get("degree2", {}).items():
        lines.append(f"  {name}: {v['oracle']} (homogeneity {v['homogeneity']})")
    return code, "\n".join(lines) + "\n"


def _cmd_symbol(job):
    from .emit import emit_json
    from .symlab import SymbolX, dual_pairing_check, exactness_report, plain_sequence_report

    n, k, l = job.options["n"], job.options["k"], job.options["l"]
    if job.options.get("x"):
        X = SymbolX.parse(job.options["x"])
    else:
        rng = random.Random(job.seed)
        X = SymbolX.random(n, rng)
        while not X.is_generic():
            X = SymbolX.random(n, rng)
    reports = {
        "X": {"alpha1": list(X.alpha1), "alpha2": list(X.alpha2), "generic": X.is_generic()},
        "plain": plain_sequence_report(n, k, X, job.jobs),
        "sequence": exactness_report(n, k, l, X, job.jobs),
        "dual": dual_pairing_check(n, k, l, X, job.jobs),
    }
    consistent = reports["dual"]["dims_match"]
    if X.is_generic():
        consistent &= reports["plain"]["exact"] and reports["sequence"]["exact"] and reports["dual"]["exact"]
    code = 0 if consistent else 1
    if job.fmt == "json":
        return code, emit_json(reports, "symbol-check")
    lines = [f"n={n} k={k} l={l} X: alpha1={[str(a) for a in X.alpha1]} alpha2={[str(a) for a in X.alpha2]}"]
    for key in ("plain", "sequence", "dual"):
        r = reports[key]
        lines.append(f"  {key:8s} dims {r['dims']} homology {r['homology']} exact {r['exact']}")
    return code, "\n".join(lines) + "\n"


def _cmd_accept(job):
    from .acceptance import run_all
    from .emit import emit_json

    only = None
    if job.options.get("only"):
        try:
            only = [int(x) for x in job.options["only"].split(",")]
        except ValueError:
            raise UsageError("--only takes comma separated integers") from None
        if any(not 1 <= x <= 11 for x in only):
            raise UsageError("criteria are numbered 1 to 11")
    results = run_all(job.seed, job.jobs, only)
    code = 0 if all(r.passed for r in results) else 1
    if job.fmt == "json":
        data = [{"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results]
        return code, emit_json(data, "accept")
    return code, "\n".join(r.line() for r in results) + "\n"


_DISPATCH = {
    "hasse": _cmd_hasse,
    "bgg": _cmd_bgg,
    "subcomplexes": _cmd_subcomplexes,
    "oracle": _cmd_oracle,
    "symbol-check": _cmd_symbol,
    "accept": _cmd_accept,
}


def run(argv) -> tuple:
    """Run one command; returns (exit code, stdout text, stderr text)."""
    err = io.StringIO()
    try:
        job = parse_jobspec(argv)
        code, out = _DISPATCH[job.command](job)
        return code, out, ""
    except (ConfigurationError, DomainError, GuardError) as exc:
        err.write(f"usage error: {exc}\n")
        return 2, "", err.getvalue()
    except ConsistencyError as exc:
        err.write(f"internal consistency failure: {exc}\n")
        return 1, "", err.getvalue()
    except BGGError as exc:
        err.write(f"error: {exc}\n")
        return 1, "", err.getvalue()


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        buf = io.StringIO()
        with redirect_stdout(buf):
            try:
                build_parser().parse_args(argv)
            except SystemExit:
                pass
        sys.stdout.write(buf.getvalue())
        return 0
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
