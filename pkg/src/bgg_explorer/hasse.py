"""Weyl group elements and the Hasse graph of W^p."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, GuardError
from .parabolic import GradingInfo
from .rootlat import (
    CartanSpec,
    RootVector,
    Weight,
    bilinear_form_simple,
    cartan_matrix,
    positive_roots,
    root_norm,
    to_fundamental_coords,
    to_simple_root_coords,
)

DEFAULT_NODE_CAP = 100_000


def _identity(r):
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def _matmul(a, b):
    n, m = len(a), len(b[0])
    inner = len(b)
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(m)) for i in range(n))


def _matvec(a, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


@lru_cache(maxsize=None)
def simple_reflection(spec: CartanSpec, i: int) -> tuple:
    """Matrix of s_i on simple-root coordinates (i is 1-based)."""
    a = cartan_matrix(spec)
    r = spec.rank
    m = [list(row) for row in _identity(r)]
    for j in range(r):
        m[i - 1][j] -= a[i - 1][j]
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def root_reflection(spec: CartanSpec, alpha: RootVector) -> tuple:
    """Matrix of sigma_alpha on simple-root coordinates."""
    b = bilinear_form_simple(spec)
    r = spec.rank
    norm = root_norm(spec, alpha)
    # <c, alpha^vee> = sum_j cov[j] c_j
    cov = [Fraction(2 * sum(b[j][t] * alpha[t] for t in range(r)), norm) for j in range(r)]
    assert all(x.denominator == 1 for x in cov)
    return tuple(tuple(int(i == j) - alpha[i] * int(cov[j]) for j in range(r)) for i in range(r))


@dataclass(frozen=True)
class WeylElt:
    """A Weyl group element; identity is the action matrix, not the word."""

    spec: CartanSpec
    action: tuple
    reduced_word: tuple = field(compare=False)
    inverse: tuple = field(compare=False, repr=False)

    @classmethod
    def identity(cls, spec: CartanSpec) -> "WeylElt":
        e = _identity(spec.rank)
        return cls(spec, e, (), e)

    @classmethod
    def from_word(cls, spec: CartanSpec, word) -> "WeylElt":
        """Product s_{w1} s_{w2} ... (the word need not be reduced; it is re-reduced)."""
        w = cls.identity(spec)
        for i in word:
            w = w.times_simple(i)
        return w

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    def __hash__(self):
        return hash(self.action)

    def apply_root(self, c) -> tuple:
        return _matvec(self.action, tuple(c))

    def apply_inverse_root(self, c) -> tuple:
        return _matvec(self.inverse, tuple(c))

    def act(self, mu) -> Weight:
        """Linear action on a weight given in fundamental coordinates."""
        c = to_simple_root_coords(self.spec, mu)
        return to_fundamental_coords(self.spec, _matvec(self.action, c))

    def compose(self, other: "WeylElt") -> "WeylElt":
        """self o other; the word is recomputed from the product to keep it reduced."""
        return WeylElt.from_word(self.spec, self.reduced_word + other.reduced_word)

    def times_simple(self, i: int) -> "WeylElt":
        """Right multiplication by s_i, tracking a reduced word."""
        s = simple_reflection(self.spec, i)
        action = _matmul(self.action, s)
        inverse = _matmul(s, self.inverse)
        # w s_i is longer iff w(alpha_i) > 0
        col = tuple(self.action[t][i - 1] for t in range(self.spec.rank))
        if all(x >= 0 for x in col):
            word = self.reduced_word + (i,)
        else:
            word = _drop_letter(self.spec, self.reduced_word, i)
        return WeylElt(self.spec, action, word, inverse)

    def left_reflect(self, alpha: RootVector) -> "WeylElt":
        """sigma_alpha o self (word recomputed)."""
        s = root_reflection(self.spec, alpha)
        action = _matmul(s, self.action)
        return element_from_matrix(self.spec, action)


def _drop_letter(spec, word, i):
    # Exchange condition: w s_i shorter => deleting one letter of a reduced word of w
    target = _matmul(_word_matrix(spec, word), simple_reflection(spec, i))
    for pos in range(len(word) - 1, -1, -1):
        cand = word[:pos] + word[pos + 1:]
        if _word_matrix(spec, cand) == target:
            return cand
    raise AssertionError("exchange condition failed")


def _word_matrix(spec, word):
    m = _identity(spec.rank)
    for i in word:
        m = _matmul(m, simple_reflection(spec, i))
    return m


def element_from_matrix(spec: CartanSpec, action) -> WeylElt:
    """Recover a reduced word by stripping right descents (w(alpha_i) < 0)."""
    action = tuple(tuple(row) for row in action)
    word = []
    m = action
    r = spec.rank
    guard = len(positive_roots(spec)) + 1
    while m != _identity(r):
        for i in range(1, r + 1):
            if any(m[t][i - 1] < 0 for t in range(r)):
                word.append(i)
                m = _matmul(m, simple_reflection(spec, i))
                break
        else:
            raise DomainError("matrix is not a Weyl group element")
        guard -= 1
        if guard < 0:
            raise DomainError("matrix is not a Weyl group element")
    word = tuple(reversed(word))
    inverse = _word_matrix(spec, tuple(reversed(word)))
    return WeylElt(spec, action, word, inverse)


def phi_set(w: WeylElt, spec: CartanSpec | None = None) -> frozenset:
    """Positive roots sent to negative roots by w^{-1}."""
    spec = spec or w.spec
    out = []
    for alpha in positive_roots(spec):
        img = w.apply_inverse_root(alpha.coeffs)
        if all(x <= 0 for x in img):
            out.append(alpha)
    return frozenset(out)


# --------------------------------------------------------------------------
# The graph


@dataclass
class HasseNode:
    index: int
    elt: WeylElt
    phi: frozenset
    name: str = ""
    coords: tuple | None = None

    @property
    def length(self) -> int:
        return self.elt.length


@dataclass(frozen=True)
class Arrow:
    src: int
    dst: int
    label: RootVector


@dataclass
class HasseGraph:
    grading: GradingInfo
    nodes: list
    arrows: list

    def __post_init__(self):
        self._by_name = {n.name: n.index for n in self.nodes}
        self._out = defaultdict(list)
        self._in = defaultdict(list)
        for a in self.arrows:
            self._out[a.src].append(a)
            self._in[a.dst].append(a)

    @property
    def spec(self) -> CartanSpec:
        return self.grading.spec

    def node(self, name_or_index) -> HasseNode:
        if isinstance(name_or_index, HasseNode):
            return name_or_index
        if isinstance(name_or_index, int):
            return self.nodes[name_or_index]
        try:
            return self.nodes[self._by_name[name_or_index]]
        except KeyError:
            raise DomainError(f"no node named {name_or_index!r}") from None

    def out_arrows(self, node) -> list:
        return list(self._out[self.node(node).index])

    def in_arrows(self, node) -> list:
        return list(self._in[self.node(node).index])

    def arrow(self, src, dst) -> Arrow | None:
        s, d = self.node(src).index, self.node(dst).index
        for a in self._out[s]:
            if a.dst == d:
                return a
        return None

    def layer(self, length: int) -> list:
        return [n for n in self.nodes if n.length == length]

    def length_multiset(self) -> dict:
        counts = defaultdict(int)
        for n in self.nodes:
            counts[n.length] += 1
        return dict(sorted(counts.items()))

    def middles(self, src, dst) -> list:
        """Nodes m with arrows src -> m -> dst."""
        s, d = self.node(src).index, self.node(dst).index
        return sorted(a.dst for a in self._out[s] if any(b.dst == d for b in self._out[a.dst]))

    @property
    def max_length(self) -> int:
        return max(n.length for n in self.nodes)


def hasse_graph(grading: GradingInfo, cap: int = DEFAULT_NODE_CAP) -> HasseGraph:
    """Breadth-first closure of W^p under right multiplication by simple reflections."""
    spec = grading.spec
    pplus = set(grading.delta_plus_pplus)
    ident = WeylElt.identity(spec)
    layers = [[(ident, frozenset())]]
    total = 1
    while True:
        seen = {}
        for w, phi in layers[-1]:
            for i in range(1, spec.rank + 1):
                beta = RootVector(tuple(w.action[t][i - 1] for t in range(spec.rank)))
                if beta not in pplus:
                    continue
                w2 = w.times_simple(i)
                if w2.action not in seen:
                    seen[w2.action] = (w2, phi | {beta})
        if not seen:
            break
        total += len(seen)
        if total > cap:
            raise GuardError(f"|W^p| exceeds the node cap {cap}")
        layers.append(list(seen.values()))

    nodes = []
    for layer in layers:
        layer.sort(key=lambda item: _phi_key(item[1]))
        for w, phi in layer:
            nodes.append(HasseNode(len(nodes), w, phi))
    index = {n.elt.action: n.index for n in nodes}
    arrows = []
    roots = positive_roots(spec)
    for n in nodes:
        for alpha in roots:
            w2 = _matmul(root_reflection(spec, alpha), n.elt.action)
            j = index.get(w2)
            if j is not None and nodes[j].length == n.length + 1:
                arrows.append(Arrow(n.index, j, alpha))
    # imported lazily: naming depends on the finished arrow set
    from .layout import assign_names

    assign_names(grading, nodes, arrows)
    return HasseGraph(grading, nodes, arrows)


def _phi_key(phi):
    return tuple(sorted((-a.height, tuple(-x for x in a.coeffs)) for a in phi))


def edge_labels_on_chain(graph: HasseGraph, chain) -> list:
    """Labels of the arrows along a directed path given by node names or indices."""
    nodes = [graph.node(c) for c in chain]
    labels = []
    for a, b in zip(nodes, nodes[1:]):
        arr = graph.arrow(a.index, b.index)
        if arr is None:
            raise DomainError(f"{a.name} -> {b.name} is not an arrow of the graph")
        labels.append(arr.label)
    return labels


def weyl_group_elements(spec: CartanSpec, cap: int = 50_000) -> list:
    """All of W (for sampling in tests and property checks)."""
    ident = WeylElt.identity(spec)
    seen = {ident.action: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, spec.rank + 1):
                w2 = w.times_simple(i)
                if w2.action not in seen:
                    seen[w2.action] = w2
                    nxt.append(w2)
                    if len(seen) > cap:
                        raise GuardError(f"|W| exceeds {cap}")
        frontier = nxt
    return list(seen.values())
