"""BGG diagrams: affine action, p-dominant labels, dimensions, operator orders
and the identification of vertices under a real structure.

Labels follow the dual convention: the vertex w carries w.lambda, which is
the highest weight of the dual of the corresponding homology component
(equivalently, minus its lowest weight).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigurationError, ConsistencyError, DomainError
from .hasse import Arrow, HasseGraph, WeylElt, simple_reflection
from .parabolic import GradingInfo
from .rootlat import (
    CartanSpec,
    Weight,
    cartan_pairing,
    positive_roots,
    root_as_weight,
    root_lengths,
    to_fundamental_coords,
    to_simple_root_coords,
    weyl_vector,
)


# --------------------------------------------------------------------------
# Real structures


def _identity_conj(spec, mu):
    return Weight(tuple(mu))


def _flip_conj(spec, mu):
    return Weight(tuple(reversed(tuple(mu))))


@dataclass(frozen=True)
class RealFormTag:
    """A real form preset: a name plus an involution on weight coordinates."""

    name: str
    flip: bool = False

    def conjugate(self, spec: CartanSpec, mu) -> Weight:
        if self.flip:
            if spec.series != "A":
                raise ConfigurationError("the diagram flip only exists in series A")
            return _flip_conj(spec, mu)
        return _identity_conj(spec, mu)

    def conjugate_root(self, spec: CartanSpec, c) -> tuple:
        """Conjugation on simple-root coordinates (the flip permutes simple roots)."""
        c = tuple(c)
        return tuple(reversed(c)) if self.flip else c

    def __str__(self):
        return self.name


SPLIT = RealFormTag("split")
QUATERNIONIC = RealFormTag("quaternionic")
CR_HYPERSURFACE = RealFormTag("cr_hypersurface", flip=True)
QUATERNIONIC_CONTACT = RealFormTag("quaternionic_contact")

REALFORMS = {t.name: t for t in (SPLIT, QUATERNIONIC, CR_HYPERSURFACE, QUATERNIONIC_CONTACT)}


def realform(name) -> RealFormTag:
    if isinstance(name, RealFormTag):
        return name
    try:
        return REALFORMS[name]
    except KeyError:
        raise ConfigurationError(f"unknown real form {name!r}; choose from {sorted(REALFORMS)}") from None


def check_realform(grading: GradingInfo, tag: RealFormTag) -> list:
    """Validate a preset against the grading; returns warnings (strings)."""
    spec, crossed = grading.spec, grading.crossing.crossed
    r = spec.rank
    notes = []
    if tag.name == "split":
        return notes
    if tag.name == "quaternionic":
        if not (spec.series == "A" and crossed == (2,) and r >= 3):
            raise ConfigurationError("quaternionic preset needs an A_r diagram crossed at node 2")
        n = r - 1
        if n % 2:
            notes.append(f"quaternionic structures need n even, here n={n}; diagram computed anyway")
    elif tag.name == "cr_hypersurface":
        if not (spec.series == "A" and crossed == (1, r) and r >= 2):
            raise ConfigurationError("cr_hypersurface preset needs an A_r diagram crossed at nodes 1 and r")
    elif tag.name == "quaternionic_contact":
        if not (spec.series == "C" and crossed == (2,) and r >= 3):
            raise ConfigurationError("quaternionic_contact preset needs a C_r diagram crossed at node 2")
    return notes


# --------------------------------------------------------------------------
# Affine action, dominance, dimensions


def affine_act(w: WeylElt, lam, spec: CartanSpec | None = None) -> Weight:
    spec = spec or w.spec
    delta = weyl_vector(spec)
    return w.act(Weight(tuple(lam)) + delta) - delta


def is_p_dominant(grading: GradingInfo, mu) -> bool:
    """Integral with nonnegative coefficients at all uncrossed nodes."""
    mu = Weight(tuple(mu))
    return mu.integral and all(mu[i - 1] >= 0 for i in grading.g0_simple)


def module_dim(grading: GradingInfo, lam) -> int:
    """Weyl dimension of the irreducible g0-module with highest weight lam."""
    lam = Weight(tuple(lam))
    if not is_p_dominant(grading, lam):
        raise DomainError(f"{lam} is not p-dominant for {grading}")
    spec = grading.spec
    d0 = grading.delta0
    shifted = lam + d0
    # (mu, alpha) = sum_j mu_j d_j c_j with c the simple-root coordinates of alpha
    d = root_lengths(spec)
    top, bottom = 1, 1
    for alpha in grading.delta_plus_g0:
        c = alpha.coeffs
        top *= sum(shifted[j] * d[j] * c[j] for j in range(spec.rank) if c[j])
        bottom *= sum(d0[j] * d[j] * c[j] for j in range(spec.rank) if c[j])
    num = Fraction(top) / Fraction(bottom)
    if num.denominator != 1 or num <= 0:
        raise ConsistencyError(f"Weyl product gave {num} for {lam}")
    return int(num)


def g0_extremal(grading: GradingInfo, mu, dominant: bool = True) -> Weight:
    """The W(g0)-conjugate of mu that is g0-dominant (or g0-antidominant)."""
    spec = grading.spec
    c = to_simple_root_coords(spec, mu)
    guard = len(grading.delta_plus_g0) + 1
    while True:
        f = to_fundamental_coords(spec, c)
        bad = [i for i in grading.g0_simple if (f[i - 1] < 0 if dominant else f[i - 1] > 0)]
        if not bad:
            return f
        s = simple_reflection(spec, bad[0])
        c = tuple(sum(s[t][u] * c[u] for u in range(spec.rank)) for t in range(spec.rank))
        guard -= 1
        if guard < 0:
            raise ConsistencyError("g0 Weyl group reduction did not terminate")


def to_highest_weight(grading: GradingInfo, label) -> Weight:
    """Ordinary highest weight of the component whose dual label is ``label``."""
    return g0_extremal(grading, -Weight(tuple(label)), dominant=True)


def from_highest_weight(grading: GradingInfo, hw) -> Weight:
    """Inverse of :func:`to_highest_weight`."""
    return -g0_extremal(grading, Weight(tuple(hw)), dominant=False)


def adjoint_weight(spec: CartanSpec) -> Weight:
    """Highest root in fundamental coordinates (lambda_1 + lambda_r for A, 2 lambda_1 for C)."""
    return root_as_weight(spec, positive_roots(spec)[-1])


def parse_lambda(spec: CartanSpec, text) -> Weight:
    """Accept ``"1,0,0,0,1"``, a sequence of ints, or the words adjoint/zero."""
    if isinstance(text, Weight):
        lam = text
    elif isinstance(text, str):
        t = text.strip().lower()
        if t in ("adjoint", "adj"):
            return adjoint_weight(spec)
        if t in ("0", "zero", "trivial"):
            return Weight.zero(spec.rank)
        try:
            lam = Weight(tuple(int(x) for x in t.replace(" ", "").split(",") if x != ""))
        except ValueError:
            raise DomainError(f"cannot parse weight {text!r}") from None
    else:
        lam = Weight(tuple(text))
    if len(lam) != spec.rank:
        raise DomainError(f"weight {lam} has {len(lam)} coefficients, {spec} needs {spec.rank}")
    if not lam.integral or not lam.is_dominant():
        raise DomainError(f"weight {lam} is not dominant integral")
    return lam


# --------------------------------------------------------------------------
# Diagrams


@dataclass
class BGGDiagram:
    graph: HasseGraph
    lam: Weight
    realform: RealFormTag
    node_labels: list
    node_dims: list
    node_degree: list
    arrow_orders: dict
    classes: list
    class_of: list
    notes: list = field(default_factory=list)

    @property
    def grading(self) -> GradingInfo:
        return self.graph.grading

    @property
    def spec(self) -> CartanSpec:
        return self.graph.spec

    @property
    def orders_are_weighted(self) -> bool:
        """True on |k|-graded diagrams with k >= 2 where c need not be the analytic order."""
        return self.grading.k >= 2

    def label(self, node) -> Weight:
        return self.node_labels[self.graph.node(node).index]

    def dim(self, node) -> int:
        return self.node_dims[self.graph.node(node).index]

    def order(self, src, dst) -> int:
        s, d = self.graph.node(src).index, self.graph.node(dst).index
        try:
            return self.arrow_orders[(s, d)]
        except KeyError:
            raise DomainError("not an arrow of the diagram") from None

    def class_name(self, cls_index: int) -> str:
        return "~".join(self.graph.nodes[i].name for i in self.classes[cls_index])

    def nodes_of_degree(self, k: int) -> list:
        return [n for n in self.graph.nodes if n.length == k]


def operator_order(diagram: BGGDiagram, arrow: Arrow) -> int:
    """The positive integer c with w'.lambda = w.lambda - c alpha."""
    return diagram.arrow_orders[(arrow.src, arrow.dst)]


def _order(spec, graph, lam, labels, arrow):
    src = graph.nodes[arrow.src]
    shifted = src.elt.act(lam + weyl_vector(spec))
    c = cartan_pairing(spec, shifted, arrow.label)
    diff = to_simple_root_coords(spec, labels[arrow.src] - labels[arrow.dst])
    if c.denominator != 1 or c <= 0 or any(diff[i] != c * arrow.label[i] for i in range(spec.rank)):
        raise ConsistencyError(f"arrow {src.name} -> {graph.nodes[arrow.dst].name}: order mismatch")
    return int(c)


def bgg_diagram(graph: HasseGraph, lam, realform_tag=SPLIT) -> BGGDiagram:
    spec = graph.spec
    grading = graph.grading
    lam = parse_lambda(spec, lam)
    tag = realform(realform_tag)
    notes = check_realform(grading, tag)
    for note in notes:
        warnings.warn(note, stacklevel=2)
    if tag.flip and tag.conjugate(spec, lam) != lam:
        raise DomainError(
            f"{tag.name} identification needs a self-conjugate weight; {lam} is not"
        )

    labels = [affine_act(n.elt, lam, spec) for n in graph.nodes]
    for n, mu in zip(graph.nodes, labels):
        if not is_p_dominant(grading, mu):
            raise ConsistencyError(f"label of {n.name} is not p-dominant: {mu}")
    dims = [module_dim(grading, mu) for mu in labels]
    degree = [n.length for n in graph.nodes]
    orders = {(a.src, a.dst): _order(spec, graph, lam, labels, a) for a in graph.arrows}

    where = {mu: i for i, mu in enumerate(labels)}
    classes, class_of = [], [None] * len(labels)
    for i, mu in enumerate(labels):
        if class_of[i] is not None:
            continue
        j = where.get(tag.conjugate(spec, mu))
        if j is None:
            raise ConsistencyError(f"conjugate of the label of {graph.nodes[i].name} is not a label")
        members = (i,) if j == i else tuple(sorted((i, j)))
        for m in members:
            class_of[m] = len(classes)
        classes.append(members)
    if tag.name in ("quaternionic", "quaternionic_contact") and any(len(c) > 1 for c in classes):
        raise ConsistencyError(f"{tag.name} diagram contains two conjugate weights")
    return BGGDiagram(graph, lam, tag, labels, dims, degree, orders, classes, class_of, notes)


def curvature_kind(diagram: BGGDiagram, node) -> str:
    """``"torsion"`` or ``"curvature"`` for a degree-2 vertex of the adjoint diagram.

    The harmonic representative of w is a wedge of the root vectors of Phi_w
    tensored with a weight vector of g; its g-part has grade
    (grade of the component) - (sum of grades over Phi_w), and the component
    grade is minus the grade of the dual label.
    """
    spec = diagram.spec
    if diagram.lam != adjoint_weight(spec):
        raise DomainError("curvature kinds are defined for the adjoint diagram only")
    n = diagram.graph.node(node)
    if n.length != 2:
        raise DomainError("curvature kinds are defined for degree 2")
    g = diagram.grading
    label_grade = g.grade_of(to_simple_root_coords(spec, diagram.node_labels[n.index]))
    wedge = sum(g.grade_of(b) for b in n.phi)
    return "torsion" if -label_grade - wedge < 0 else "curvature"


def homogeneity(diagram: BGGDiagram, node) -> Fraction:
    """Grade of the component (eigenvalue of the grading element)."""
    n = diagram.graph.node(node)
    c = to_simple_root_coords(diagram.spec, diagram.node_labels[n.index])
    return -diagram.grading.grade_of(c)
