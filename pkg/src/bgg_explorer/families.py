"""The chain families that the known subcomplex results predict, read off the
diagram shapes alone (no weights involved).

These are used as the reference against which ``find_subcomplexes`` is
checked: rows and columns of the triangular A-series diagram, and maximal
upgoing / downgoing paths of the two contact-type diagrams.
"""

from __future__ import annotations

from .hasse import HasseGraph
from .layout import FAMILY_A_CONTACT, FAMILY_A_ROWCOL, FAMILY_C_CONTACT, arrow_direction, family


def rowcol_chains(graph: HasseGraph) -> list:
    """Rows w_{j,j} -> ... -> w_{j,n} (j <= n-2) and columns w_{0,j} -> ... -> w_{j,j} (j >= 2)."""
    if family(graph.grading) != FAMILY_A_ROWCOL:
        raise ValueError("row/column families exist for A_r crossed at node 2 only")
    n = graph.spec.rank - 1
    rows = [tuple(f"w_{{{j},{t}}}" for t in range(j, n + 1)) for j in range(0, n - 1)]
    cols = [tuple(f"w_{{{t},{j}}}" for t in range(0, j + 1)) for j in range(2, n + 1)]
    return rows + cols


def monotone_chains(graph: HasseGraph, nodes=None, min_arrows: int = 2) -> list:
    """Maximal directed paths using only "up" arrows, and only "down" arrows.

    ``nodes`` optionally restricts to an induced subgraph (a set of indices).
    """
    g = graph.grading
    if family(g) not in (FAMILY_A_CONTACT, FAMILY_C_CONTACT):
        raise ValueError("up/down families exist for the contact-type gradings only")
    allowed = set(range(len(graph.nodes))) if nodes is None else set(nodes)
    out = []
    for direction in ("up", "down"):
        succ = {}
        for a in graph.arrows:
            if a.src in allowed and a.dst in allowed and arrow_direction(g, a.label) == direction:
                succ.setdefault(a.src, []).append(a.dst)
        has_pred = {d for ds in succ.values() for d in ds}
        for start in sorted(allowed):
            if start in has_pred or start not in succ:
                continue
            stack = [(start,)]
            while stack:
                path = stack.pop()
                nxt = succ.get(path[-1], [])
                if not nxt:
                    if len(path) - 1 >= min_arrows:
                        out.append(tuple(graph.nodes[i].name for i in path))
                    continue
                for d in sorted(nxt, reverse=True):
                    stack.append(path + (d,))
    return out


def predicted_chains(graph: HasseGraph) -> list:
    fam = family(graph.grading)
    if fam == FAMILY_A_ROWCOL:
        return rowcol_chains(graph)
    if fam in (FAMILY_A_CONTACT, FAMILY_C_CONTACT):
        return monotone_chains(graph)
    raise ValueError(f"no predicted family is known for {graph.grading}")


def identified_chains(diagram) -> list:
    """Up/down chains of the picture of the identified diagram, as class names.

    The picture keeps one representative per class: w_{i,j} with i >= j
    below the middle layer and w^{i,j} with i <= j above it, with arrow
    directions inherited from the complex diagram.
    """
    graph = diagram.graph
    keep = set()
    for n in graph.nodes:
        part, i, j = n.coords
        if (part == "lower" and i >= j) or (part == "upper" and i <= j):
            keep.add(n.index)
    chains = monotone_chains(graph, keep)
    by_name = {n.name: n.index for n in graph.nodes}
    return [tuple(diagram.class_name(diagram.class_of[by_name[x]]) for x in ch) for ch in chains]


# --------------------------------------------------------------------------
# Coefficient patterns of weight differences


def _simple(diagram, name):
    from .rootlat import to_simple_root_coords

    return to_simple_root_coords(diagram.spec, diagram.label(name))


def _diff(diagram, a, b) -> tuple:
    return tuple(y - x for x, y in zip(_simple(diagram, a), _simple(diagram, b)))


def e0_weight_violations(grading, e0) -> list:
    """Weights of (tensor^i g_-) (x) E0^* that break the expected sign pattern.

    Every such weight is mu - sum of p_+ roots with mu in the E0^* support, so
    it suffices to check the support and the per-root increments.  Rowcol and
    C-contact: -m1 a1 - m2 a2 + ... with 0 < m1 < m2.  A-contact: the first
    and last coefficients are negative.
    """
    from .rootlat import to_simple_root_coords
    from .vanish import e0_support

    fam = family(grading)
    spec = grading.spec
    bad = []
    for mu in sorted(e0_support(grading, e0), key=tuple):
        c = to_simple_root_coords(spec, mu)
        if fam == FAMILY_A_CONTACT:
            ok = c[0] < 0 and c[-1] < 0
        elif fam in (FAMILY_A_ROWCOL, FAMILY_C_CONTACT):
            ok = 0 < -c[0] < -c[1]
        else:
            raise ValueError(f"no coefficient pattern is known for {grading}")
        if not ok:
            bad.append(("support", mu))
    for beta in grading.delta_plus_pplus:
        b = beta.coeffs
        if fam == FAMILY_A_CONTACT:
            ok = all(x >= 0 for x in b)
        else:
            ok = 0 <= b[0] <= b[1]
        if not ok:
            bad.append(("root", beta))
    return bad


def difference_violations(diagram) -> list:
    """Pairs along the predicted families whose label difference breaks the pattern.

    Rowcol: two steps along a row have no alpha_1 part; two steps along a
    column have equal alpha_1 and alpha_2 parts.  Contact types: any two
    weights on an up or down chain differ by a combination avoiding one end
    root (A) or with a fixed relation between the first two coefficients (C).
    """
    graph = diagram.graph
    fam = family(diagram.grading)
    bad = []
    if fam == FAMILY_A_ROWCOL:
        n = diagram.spec.rank - 1
        for i in range(n - 1):
            for j in range(i, n - 1):
                d = _diff(diagram, f"w_{{{i},{j}}}", f"w_{{{i},{j + 2}}}")
                if d[0] != 0:
                    bad.append(("row", i, j, d))
        for j in range(2, n + 1):
            for i in range(j - 1):
                d = _diff(diagram, f"w_{{{i},{j}}}", f"w_{{{i + 2},{j}}}")
                if d[0] != d[1]:
                    bad.append(("column", i, j, d))
        return bad
    if fam not in (FAMILY_A_CONTACT, FAMILY_C_CONTACT):
        raise ValueError(f"no difference pattern is known for {diagram.grading}")
    for chain in monotone_chains(graph, min_arrows=1):
        up = arrow_direction(diagram.grading, graph.arrow(chain[0], chain[1]).label) == "up"
        for x in range(len(chain)):
            for y in range(x + 1, len(chain)):
                d = _diff(diagram, chain[x], chain[y])
                if fam == FAMILY_A_CONTACT:
                    ok = d[-1] == 0 if up else d[0] == 0
                else:
                    ok = d[0] == 0 if up else d[0] == d[1]
                if not ok:
                    bad.append(("up" if up else "down", chain[x], chain[y], d))
    return bad
