"""Display names and arrow directions for the three diagram families.

A node's canonical identity is its Weyl group matrix.  Names only mirror
the usual pictures:

* A_r with crossing {2}: ``w_{i,j}`` where ``i`` counts roots of Phi_w with
  alpha_1-coefficient 1 and ``j`` those with alpha_1-coefficient 0.
* A_r with crossing {1, r} and C_r with crossing {2}: positive roots of p_+
  split into "up" roots, "down" roots and the remaining "middle" roots of
  g_2.  Below the middle layer a node is ``w_{i,j}`` (i up roots and j down
  roots in Phi_w); above it, ``w^{a,b}`` with ``a = #up - i`` and
  ``b = #down - j``.
* anything else: ``L<length>.<position>``.
"""

from __future__ import annotations

from collections import defaultdict

FAMILY_A_ROWCOL = "A-rowcol"
FAMILY_A_CONTACT = "A-contact"
FAMILY_C_CONTACT = "C-contact"


def family(grading) -> str | None:
    spec, crossed = grading.spec, grading.crossing.crossed
    r = spec.rank
    if spec.series == "A" and crossed == (2,) and r >= 2:
        return FAMILY_A_ROWCOL
    if spec.series == "A" and crossed == (1, r) and r >= 3:
        return FAMILY_A_CONTACT
    if spec.series == "C" and crossed == (2,) and r >= 3:
        return FAMILY_C_CONTACT
    return None


def arrow_direction(grading, root) -> str | None:
    """Direction class of a p_+ root used as an arrow label.

    ``"01"``/``"10"`` for the row/column steps of the A-rowcol family,
    ``"up"``/``"down"``/``"middle"`` for the two contact families.
    """
    fam = family(grading)
    r = grading.spec.rank
    if fam == FAMILY_A_ROWCOL:
        return "10" if root[0] == 1 else "01"
    if fam == FAMILY_A_CONTACT:
        if root[r - 1] == 0:
            return "up"
        if root[0] == 0:
            return "down"
        return "middle"
    if fam == FAMILY_C_CONTACT:
        if root[0] == 0:
            return "up"
        if root[0] == root[1]:
            return "down"
        return "middle"
    return None


def assign_names(grading, nodes, arrows) -> None:
    fam = family(grading)
    if fam is None:
        counts = defaultdict(int)
        for n in nodes:
            n.name = f"L{n.length}.{counts[n.length]}"
            n.coords = None
            counts[n.length] += 1
        return
    if fam == FAMILY_A_ROWCOL:
        for n in nodes:
            i = sum(1 for a in n.phi if arrow_direction(grading, a) == "10")
            n.coords = ("lower", i, n.length - i)
            n.name = f"w_{{{i},{n.length - i}}}"
    else:
        total = defaultdict(int)
        for a in grading.delta_plus_pplus:
            total[arrow_direction(grading, a)] += 1
        for n in nodes:
            c = defaultdict(int)
            for a in n.phi:
                c[arrow_direction(grading, a)] += 1
            if c["middle"] == 0:
                n.coords = ("lower", c["up"], c["down"])
                n.name = f"w_{{{c['up']},{c['down']}}}"
            else:
                a_, b_ = total["up"] - c["up"], total["down"] - c["down"]
                n.coords = ("upper", a_, b_)
                n.name = f"w^{{{a_},{b_}}}"
    names = [n.name for n in nodes]
    assert len(set(names)) == len(names), "display names collide"
