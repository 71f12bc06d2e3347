"""Weight-vanishing test for compositions of BGG operators.

For a composition of two operators running from the vertex with label
lambda_1 to the vertex with label lambda_2 (two steps further), the
composition can only be nonzero when lambda_2 - lambda_1 is a weight of
sum_i (tensor^i g_-) (x) E0^*, i.e. when mu - (lambda_2 - lambda_1) is a
nonnegative integer combination of Delta_+(p_+) for some weight mu of E0^*.
When no such mu exists the composition is provably zero; otherwise the
test is inconclusive and a witness is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .bggdiag import BGGDiagram, adjoint_weight, bgg_diagram, curvature_kind, homogeneity
from .errors import ConfigurationError, DomainError, GuardError
from .hasse import hasse_graph
from .parabolic import GradingInfo
from .rootlat import Weight, to_fundamental_coords, to_simple_root_coords

PROVABLY_ZERO = "provably_zero"
INCONCLUSIVE = "inconclusive"
MAX_SUPPORT = 200_000
MAX_CHAINS = 100_000


# --------------------------------------------------------------------------
# Weights of g0-irreducibles


def _int_simple(spec, mu):
    c = to_simple_root_coords(spec, mu)
    return tuple(c)


@lru_cache(maxsize=None)
def _weights_cached(grading: GradingInfo, lam: tuple) -> frozenset:
    spec = grading.spec
    g0 = grading.g0_simple
    lam_w = Weight(lam)
    if not lam_w.integral or any(lam_w[i - 1] < 0 for i in g0):
        raise DomainError(f"{lam_w} is not p-dominant for {grading}")
    g0_roots = [to_fundamental_coords(spec, a.coeffs) for a in grading.delta_plus_g0]

    def dominant(mu):
        return all(mu[i - 1] >= 0 for i in g0)

    # dominant weights below lam: every one is reached from a larger one by
    # subtracting a single positive root while staying dominant
    dom = {lam_w}
    stack = [lam_w]
    while stack:
        mu = stack.pop()
        for a in g0_roots:
            nu = mu - a
            if dominant(nu) and nu not in dom:
                dom.add(nu)
                stack.append(nu)
    # W(g0)-orbits
    out = set()
    for mu in dom:
        orbit = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for nu in frontier:
                for i in g0:
                    p = nu[i - 1]
                    if p == 0:
                        continue
                    ref = nu - p * Weight(_simple_fund(spec, i))
                    if ref not in orbit:
                        orbit.add(ref)
                        nxt.append(ref)
            frontier = nxt
            if len(out) + len(orbit) > MAX_SUPPORT:
                raise GuardError("weight support exceeds the size guard")
        out |= orbit
    return frozenset(out)


@lru_cache(maxsize=None)
def _simple_fund(spec, i):
    return tuple(to_fundamental_coords(spec, tuple(int(t == i - 1) for t in range(spec.rank))))


def weights_of_irrep(grading: GradingInfo, lam) -> set:
    """Weight support of the irreducible g0-module with highest weight lam."""
    return set(_weights_cached(grading, tuple(Weight(tuple(lam)))))


def weights_by_strings(grading: GradingInfo, lam) -> set:
    """Same support, computed independently by closing under g0 root strings."""
    spec = grading.spec
    lam = Weight(tuple(lam))
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for i in grading.g0_simple:
            a = Weight(_simple_fund(spec, i))
            p = mu[i - 1]
            # the alpha_i string through mu runs from mu + q a to mu - (p + q) a; walk it fully
            lo, hi = (0, p) if p >= 0 else (p, 0)
            for t in range(int(lo), int(hi) + 1):
                nu = mu - t * a
                if nu not in seen:
                    seen.add(nu)
                    stack.append(nu)
            if len(seen) > MAX_SUPPORT:
                raise GuardError("weight support exceeds the size guard")
    return seen


# --------------------------------------------------------------------------
# E0 selections


@dataclass(frozen=True)
class E0Spec:
    """A G0-submodule of H_2(p_+, g) given by dual labels of its components."""

    components: tuple
    provenance: str = "user"
    names: tuple = ()
    notes: tuple = ()

    def __post_init__(self):
        if not self.components:
            raise ConfigurationError("E0 needs at least one component")


def _adjoint_diagram(grading: GradingInfo) -> BGGDiagram:
    return bgg_diagram(hasse_graph(grading), adjoint_weight(grading.spec))


def e0_preset(grading: GradingInfo, name: str = "torsion-free") -> E0Spec:
    """``torsion-free``: all curvature-type components of H_2(p_+, g).

    Torsion components are dropped; the note records whether dropping them
    is an assumption (positive homogeneity) or automatic from regularity.
    """
    if name not in ("torsion-free", "torsion_free"):
        raise ConfigurationError(f"unknown E0 preset {name!r}")
    diag = _adjoint_diagram(grading)
    comps, names, notes = [], [], []
    for n in diag.nodes_of_degree(2):
        if curvature_kind(diag, n) == "curvature":
            comps.append(diag.label(n))
            names.append(n.name)
        elif homogeneity(diag, n) > 0:
            notes.append(f"assumes the torsion component {n.name} vanishes")
        else:
            notes.append(f"torsion component {n.name} vanishes by regularity")
    return E0Spec(tuple(comps), f"preset:{name}", tuple(names), tuple(notes))


def e0_from_names(grading: GradingInfo, names) -> E0Spec:
    diag = _adjoint_diagram(grading)
    comps = []
    for name in names:
        node = diag.graph.node(name)
        if node.length != 2:
            raise ConfigurationError(f"{name} is not a degree 2 vertex")
        comps.append(diag.label(node))
    return E0Spec(tuple(comps), "user", tuple(names))


def e0_from_labels(grading: GradingInfo, labels) -> E0Spec:
    diag = _adjoint_diagram(grading)
    allowed = {diag.label(n): n.name for n in diag.nodes_of_degree(2)}
    comps, names = [], []
    for lab in labels:
        lab = Weight(tuple(lab))
        if lab not in allowed:
            raise ConfigurationError(f"{lab} is not a degree 2 label of the adjoint diagram")
        comps.append(lab)
        names.append(allowed[lab])
    return E0Spec(tuple(comps), "user", tuple(names))


def parse_e0(grading: GradingInfo, text: str) -> E0Spec:
    """``preset:torsion-free``, or ``;``-separated vertex names / weights (``0,-4,3,0,1``)."""
    text = text.strip()
    if text.startswith("preset:"):
        return e0_preset(grading, text.split(":", 1)[1])
    parts = [p.strip() for p in text.split(";") if p.strip()]
    if not parts:
        raise ConfigurationError("empty E0 selection")
    if all(p.startswith("w") for p in parts):
        return e0_from_names(grading, parts)
    try:
        return e0_from_labels(grading, [tuple(int(x) for x in p.split(",")) for p in parts])
    except ValueError:
        raise ConfigurationError(f"cannot parse E0 selection {text!r}") from None


def _e0_labels(e0: E0Spec, conj=None) -> tuple:
    labels = list(e0.components)
    if conj is not None:
        labels += [conj(lab) for lab in e0.components]
    return tuple(sorted({tuple(lab) for lab in labels}))


def e0_support(grading: GradingInfo, e0: E0Spec, conj=None) -> frozenset:
    """Union of the E0^* supports (optionally with conjugate components added)."""
    out = set()
    for lab in _e0_labels(e0, conj):
        out |= _weights_cached(grading, lab)
    return frozenset(out)


# --------------------------------------------------------------------------
# Cone membership


class ConeSearch:
    """Decides membership in the monoid generated by Delta_+(p_+).

    All generators have nonnegative simple-root coordinates, so a depth
    first search that only subtracts generators while staying nonnegative
    is complete.  Some generator must cover the first nonzero coordinate of
    the target, which keeps the branching small; results are memoized per
    target.
    """

    def __init__(self, grading: GradingInfo):
        self.gens = [tuple(b.coeffs) for b in grading.delta_plus_pplus]
        self.roots = list(grading.delta_plus_pplus)
        rank = grading.spec.rank
        self._covering = [[j for j, g in enumerate(self.gens) if g[i] > 0] for i in range(rank)]
        self._memo = {}

    def find(self, target) -> dict | None:
        """Coefficients {root: c} with sum c_b b = target, or None."""
        target = tuple(int(x) for x in target)
        if any(x < 0 for x in target):
            return None
        out = {}
        t = target
        while any(t):
            j = self._step(t)
            if j is None:
                return None
            out[self.roots[j]] = out.get(self.roots[j], 0) + 1
            t = tuple(a - b for a, b in zip(t, self.gens[j]))
        return out

    def _step(self, t):
        """Index of a generator on some decomposition of t, or None."""
        if t in self._memo:
            return self._memo[t]
        # iterative DFS to avoid deep recursion on large targets
        stack = [t]
        while stack:
            cur = stack[-1]
            if cur in self._memo:
                stack.pop()
                continue
            i = next(k for k, x in enumerate(cur) if x)
            pending = False
            found = None
            for j in self._covering[i]:
                g = self.gens[j]
                nt = tuple(a - b for a, b in zip(cur, g))
                if min(nt) < 0:
                    continue
                if not any(nt):
                    found = j
                    break
                res = self._memo.get(nt, "?")
                if res == "?":
                    stack.append(nt)
                    pending = True
                    break
                if res is not None:
                    found = j
                    break
            if pending:
                continue
            self._memo[cur] = found
            stack.pop()
        return self._memo[t]


@lru_cache(maxsize=None)
def cone_search(grading: GradingInfo) -> ConeSearch:
    return ConeSearch(grading)


# --------------------------------------------------------------------------
# Verdicts


@dataclass
class VanishVerdict:
    source: str
    target: str
    verdict: str
    path_unique: bool
    middles: tuple = ()
    witness: dict | None = None
    differences: tuple = field(default=())

    @property
    def provably_zero(self) -> bool:
        return self.verdict == PROVABLY_ZERO


@lru_cache(maxsize=256)
def _support_simple(grading, labels: tuple) -> tuple:
    spec = grading.spec
    out = set()
    for lab in labels:
        for mu in _weights_cached(grading, lab):
            c = to_simple_root_coords(spec, mu)
            if all(x.denominator == 1 for x in c):
                out.add((tuple(int(x) for x in c), mu))
    return tuple(sorted(out, key=lambda item: item[0]))


def _witness_for(grading, labels, diff_simple):
    search = cone_search(grading)
    d = tuple(int(x) for x in diff_simple)
    for c, mu in _support_simple(grading, labels):
        t = tuple(a - b for a, b in zip(c, d))
        if min(t) < 0:
            continue
        coeffs = search.find(t)
        if coeffs is not None:
            return {"mu": mu, "coefficients": coeffs, "difference": diff_simple}
    return None


def check_witness(grading: GradingInfo, witness: dict) -> bool:
    """lambda_2 - lambda_1 == mu - sum c_b b, recomputed from scratch."""
    spec = grading.spec
    total = list(_int_simple(spec, witness["mu"]))
    for b, c in witness["coefficients"].items():
        for i in range(spec.rank):
            total[i] -= c * b[i]
    return tuple(total) == tuple(witness["difference"])


def _check_degrees(diagram, s, t):
    if t.length != s.length + 2:
        raise DomainError(f"{s.name} -> {t.name} does not raise the degree by 2")


def criterion(diagram: BGGDiagram, e0: E0Spec, source, target) -> VanishVerdict:
    graph = diagram.graph
    s, t = graph.node(source), graph.node(target)
    _check_degrees(diagram, s, t)
    spec = diagram.spec
    conj = (lambda w: diagram.realform.conjugate(spec, w)) if diagram.realform.flip else None
    labels = _e0_labels(e0, conj)
    diff = _int_simple(spec, diagram.label(t) - diagram.label(s))
    witness = _witness_for(diagram.grading, labels, diff)
    middles = tuple(graph.nodes[m].name for m in graph.middles(s.index, t.index))
    return VanishVerdict(
        s.name,
        t.name,
        INCONCLUSIVE if witness else PROVABLY_ZERO,
        len(middles) == 1,
        middles,
        witness,
        (diff,),
    )


# --------------------------------------------------------------------------
# Identified (real) diagrams


@dataclass
class ClassDiagram:
    """Quotient of a BGG diagram by the identification classes."""

    diagram: BGGDiagram
    names: list
    arrows: dict  # (class_src, class_dst) -> list of complex arrows
    degree: list

    def out(self, c):
        return [d for (a, d) in self.arrows if a == c]

    def middles(self, a, c) -> list:
        return sorted(b for b in self.out(a) if (b, c) in self.arrows)

    def index(self, name_or_index) -> int:
        if isinstance(name_or_index, int):
            return name_or_index
        if name_or_index in self.names:
            return self.names.index(name_or_index)
        node = self.diagram.graph.node(name_or_index)
        return self.diagram.class_of[node.index]


def class_diagram(diagram: BGGDiagram) -> ClassDiagram:
    names = [diagram.class_name(i) for i in range(len(diagram.classes))]
    arrows = {}
    for a in diagram.graph.arrows:
        key = (diagram.class_of[a.src], diagram.class_of[a.dst])
        arrows.setdefault(key, []).append(a)
    degree = [diagram.graph.nodes[c[0]].length for c in diagram.classes]
    return ClassDiagram(diagram, names, arrows, degree)


def criterion_real(diagram: BGGDiagram, e0: E0Spec, source_class, target_class) -> VanishVerdict:
    """Four-difference test on identification classes of a cr_hypersurface diagram."""
    if not diagram.realform.flip:
        raise DomainError("criterion_real needs a diagram with a nontrivial conjugation")
    cd = class_diagram(diagram)
    a, c = cd.index(source_class), cd.index(target_class)
    if cd.degree[c] != cd.degree[a] + 2:
        raise DomainError(f"{cd.names[a]} -> {cd.names[c]} does not raise the degree by 2")
    spec = diagram.spec
    conj = lambda w: diagram.realform.conjugate(spec, w)  # noqa: E731
    labels = _e0_labels(e0, conj)
    l1 = diagram.node_labels[diagram.classes[a][0]]
    l2 = diagram.node_labels[diagram.classes[c][0]]
    diffs = []
    for x2 in (l2, conj(l2)):
        for x1 in (l1, conj(l1)):
            d = _int_simple(spec, x2 - x1)
            if d not in diffs:
                diffs.append(d)
    witness = None
    for d in diffs:
        witness = _witness_for(diagram.grading, labels, d)
        if witness:
            break
    middles = tuple(cd.names[m] for m in cd.middles(a, c))
    return VanishVerdict(
        cd.names[a],
        cd.names[c],
        INCONCLUSIVE if witness else PROVABLY_ZERO,
        len(middles) == 1,
        middles,
        witness,
        tuple(diffs),
    )


def uses_identification(diagram: BGGDiagram) -> bool:
    return any(len(c) > 1 for c in diagram.classes)


# --------------------------------------------------------------------------
# Subcomplexes


@dataclass
class Chain:
    nodes: tuple  # names (class names for identified diagrams)
    orders: tuple
    verdicts: tuple = field(default=(), repr=False)

    def __len__(self):
        return len(self.nodes)


def _maximal_paths(arrows, succ, cap):
    """Maximal paths in the line graph (arrows as vertices, succ as edges) of >= 2 arrows."""
    has_pred = set()
    for a, nxt in succ.items():
        for b in nxt:
            has_pred.add(b)
    out = []
    for start in arrows:
        if start in has_pred or not succ.get(start):
            continue
        stack = [(start,)]
        while stack:
            path = stack.pop()
            nxt = succ.get(path[-1], [])
            if not nxt:
                out.append(path)
                if len(out) > cap:
                    raise GuardError("too many chains")
                continue
            for b in reversed(nxt):
                stack.append(path + (b,))
    return out


def find_subcomplexes(diagram: BGGDiagram, e0: E0Spec, cap: int = MAX_CHAINS, jobs: int = 1) -> list:
    """Maximal chains whose consecutive compositions are provably zero and path-unique."""
    if uses_identification(diagram):
        return _find_real(diagram, e0, cap)
    graph = diagram.graph
    keys = [(a.src, a.dst) for a in graph.arrows]
    pairs = []
    for a in graph.arrows:
        for b in graph.out_arrows(a.dst):
            pairs.append((a, b))
    triples = {(a.src, b.dst) for a, b in pairs}
    verdicts = _verdict_map(diagram, e0, sorted(triples), jobs)
    succ = {}
    for a, b in pairs:
        v = verdicts[(a.src, b.dst)]
        if v.provably_zero and v.path_unique:
            succ.setdefault((a.src, a.dst), []).append((b.src, b.dst))
    for k in succ:
        succ[k].sort()
    chains = []
    for path in _maximal_paths(keys, succ, cap):
        nodes = (path[0][0],) + tuple(p[1] for p in path)
        names = tuple(graph.nodes[i].name for i in nodes)
        orders = tuple(diagram.arrow_orders[p] for p in path)
        vs = tuple(verdicts[(nodes[i], nodes[i + 2])] for i in range(len(nodes) - 2))
        chains.append(Chain(names, orders, vs))
    return sorted(chains, key=lambda c: (-len(c), c.nodes))


def _verdict_map(diagram, e0, triples, jobs):
    if jobs and jobs > 1 and len(triples) > 8:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_verdict_job, [(diagram, e0, s, t) for s, t in triples]))
        return dict(zip(triples, results))
    return {(s, t): criterion(diagram, e0, s, t) for s, t in triples}


def _verdict_job(args):
    diagram, e0, s, t = args
    return criterion(diagram, e0, s, t)


def _find_real(diagram, e0, cap):
    cd = class_diagram(diagram)
    keys = sorted(cd.arrows)
    succ = {}
    verdicts = {}
    for a, b in keys:
        for c in sorted(cd.out(b)):
            if (a, c) not in verdicts:
                verdicts[(a, c)] = criterion_real(diagram, e0, a, c)
            v = verdicts[(a, c)]
            if v.provably_zero and v.path_unique:
                succ.setdefault((a, b), []).append((b, c))
    chains = []
    for path in _maximal_paths(keys, succ, cap):
        nodes = (path[0][0],) + tuple(p[1] for p in path)
        names = tuple(cd.names[i] for i in nodes)
        orders = tuple(diagram.arrow_orders[(cd.arrows[p][0].src, cd.arrows[p][0].dst)] for p in path)
        vs = tuple(verdicts[(nodes[i], nodes[i + 2])] for i in range(len(nodes) - 2))
        chains.append(Chain(names, orders, vs))
    return sorted(chains, key=lambda c: (-len(c), c.nodes))


def all_pair_verdicts(diagram: BGGDiagram, e0: E0Spec) -> list:
    """Verdicts for every pair of vertices joined by a directed 2-path."""
    if uses_identification(diagram):
        cd = class_diagram(diagram)
        pairs = sorted({(a, c) for (a, b) in cd.arrows for c in cd.out(b)})
        return [criterion_real(diagram, e0, a, c) for a, c in pairs]
    graph = diagram.graph
    pairs = sorted({(a.src, b.dst) for a in graph.arrows for b in graph.out_arrows(a.dst)})
    return [criterion(diagram, e0, s, t) for s, t in pairs]


__all__ = [
    "E0Spec",
    "VanishVerdict",
    "Chain",
    "weights_of_irrep",
    "weights_by_strings",
    "e0_preset",
    "e0_from_names",
    "e0_from_labels",
    "parse_e0",
    "criterion",
    "criterion_real",
    "find_subcomplexes",
    "all_pair_verdicts",
    "class_diagram",
    "check_witness",
]
