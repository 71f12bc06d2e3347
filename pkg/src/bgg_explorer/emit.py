"""JSON and DOT renderings of graphs, diagrams and reports.

JSON documents carry ``"schema": "bgg-explorer/1"``, keys are sorted and
every rational is written as ``{"num": p, "den": q}``.  DOT output depends
only on node indices and names, so it is byte-stable for a fixed input.
"""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .bggdiag import BGGDiagram
from .hasse import HasseGraph
from .rootlat import RootVector, Weight, root_name, to_simple_root_coords

SCHEMA = "bgg-explorer/1"


def rational(x) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def to_jsonable(obj):
    """Recursive conversion to JSON-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        return rational(Fraction(obj))
    if isinstance(obj, Weight):
        return {"fundamental": [rational(c) for c in obj.coeffs], "text": str(obj)}
    if isinstance(obj, RootVector):
        return list(obj.coeffs)
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _key(k) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, RootVector):
        return ",".join(str(c) for c in k.coeffs)
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def emit_json(payload, kind: str) -> str:
    doc = {"schema": SCHEMA, "kind": kind, "data": to_jsonable(payload)}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --------------------------------------------------------------------------
# Report builders


def _weight_both(spec, mu) -> dict:
    return {
        "fundamental": [rational(c) for c in mu.coeffs],
        "simple": [rational(c) for c in to_simple_root_coords(spec, mu)],
        "text": str(mu),
    }


def graph_report(graph: HasseGraph) -> dict:
    spec = graph.spec
    nodes = [
        {
            "index": n.index,
            "name": n.name,
            "length": n.length,
            "phi": sorted(root_name(spec, b) for b in n.phi),
        }
        for n in graph.nodes
    ]
    arrows = [
        {"src": graph.nodes[a.src].name, "dst": graph.nodes[a.dst].name, "root": root_name(spec, a.label)}
        for a in sorted(graph.arrows, key=lambda a: (a.src, a.dst))
    ]
    return {
        "diagram": str(graph.grading),
        "node_count": len(graph.nodes),
        "arrow_count": len(graph.arrows),
        "length_multiset": {str(k): v for k, v in sorted(graph.length_multiset().items())},
        "nodes": nodes,
        "arrows": arrows,
    }


def diagram_report(diagram: BGGDiagram) -> dict:
    graph, spec = diagram.graph, diagram.spec
    nodes = []
    for n in graph.nodes:
        nodes.append({
            "index": n.index,
            "name": n.name,
            "degree": diagram.node_degree[n.index],
            "label": _weight_both(spec, diagram.node_labels[n.index]),
            "dim": diagram.node_dims[n.index],
            "class": diagram.class_name(diagram.class_of[n.index]),
        })
    arrows = [
        {
            "src": graph.nodes[a.src].name,
            "dst": graph.nodes[a.dst].name,
            "root": root_name(spec, a.label),
            "order": diagram.arrow_orders[(a.src, a.dst)],
        }
        for a in sorted(graph.arrows, key=lambda a: (a.src, a.dst))
    ]
    return {
        "diagram": str(diagram.grading),
        "lambda": _weight_both(spec, diagram.lam),
        "realform": diagram.realform.name,
        "orders_are_weighted": diagram.orders_are_weighted,
        "classes": [diagram.class_name(i) for i in range(len(diagram.classes))],
        "notes": list(diagram.notes),
        "nodes": nodes,
        "arrows": arrows,
    }


def verdict_report(spec, v) -> dict:
    out = {
        "source": v.source,
        "target": v.target,
        "verdict": v.verdict,
        "path_unique": v.path_unique,
        "middles": list(v.middles),
        "differences": [list(d) for d in v.differences],
    }
    if v.witness:
        w = v.witness
        out["witness"] = {
            "mu": _weight_both(spec, w["mu"]),
            "coefficients": {root_name(spec, b): c for b, c in sorted(w["coefficients"].items())},
            "difference": list(w["difference"]),
        }
    return out


def chains_report(diagram: BGGDiagram, e0, chains, verdicts=None) -> dict:
    spec = diagram.spec
    out = {
        "diagram": str(diagram.grading),
        "lambda": _weight_both(spec, diagram.lam),
        "realform": diagram.realform.name,
        "e0": {
            "components": [_weight_both(spec, c) for c in e0.components],
            "names": list(e0.names),
            "provenance": e0.provenance,
            "notes": list(e0.notes),
        },
        "chains": [{"nodes": list(c.nodes), "orders": list(c.orders)} for c in chains],
    }
    if verdicts is not None:
        out["verdicts"] = [verdict_report(spec, v) for v in verdicts]
    return out


# --------------------------------------------------------------------------
# DOT


def _q(text) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(obj, chains=()) -> str:
    """DOT digraph of a Hasse graph or BGG diagram; chain arrows get style=bold."""
    diagram = obj if isinstance(obj, BGGDiagram) else None
    graph = diagram.graph if diagram else obj
    spec = graph.spec
    marked = set()
    for ch in chains:
        names = ch.nodes if hasattr(ch, "nodes") else ch
        for a, b in zip(names, names[1:]):
            marked |= _arrows_between(graph, diagram, a, b)
    lines = [f"digraph {_q(str(graph.grading))} {{", "  rankdir=LR;", '  node [shape=box, fontname="monospace"];']
    for n in graph.nodes:
        parts = [n.name]
        if diagram is not None:
            i = n.index
            parts += [str(diagram.node_labels[i]), f"dim {diagram.node_dims[i]}", f"deg {diagram.node_degree[i]}"]
        else:
            parts.append(f"deg {n.length}")
        text = "\\n".join(p.replace("\\", "\\\\").replace('"', '\\"') for p in parts)
        lines.append(f'  n{n.index} [label="{text}"];')
    for a in sorted(graph.arrows, key=lambda a: (a.src, a.dst)):
        label = root_name(spec, a.label)
        if diagram is not None:
            label += f" ({diagram.arrow_orders[(a.src, a.dst)]})"
        attrs = [f"label={_q(label)}"]
        if (a.src, a.dst) in marked:
            attrs.append("style=bold")
        lines.append(f"  n{a.src} -> n{a.dst} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _arrows_between(graph, diagram, a, b) -> set:
    """Arrows joining two vertices, or two identification classes."""
    def members(name):
        if diagram is not None and "~" in name:
            return [graph.node(x).index for x in name.split("~")]
        return [graph.node(name).index]

    src, dst = members(a), members(b)
    return {(x.src, x.dst) for x in graph.arrows if x.src in src and x.dst in dst}
