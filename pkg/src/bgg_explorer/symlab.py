"""Exact models of the symbol sequences on almost Grassmannian structures.

E is two-dimensional with basis e1, e2 and F is n-dimensional.  Modules are
built from three kinds of factors:

* S^m E, basis e1^a e2^(m-a) indexed by a = m, ..., 0;
* Lambda^j F*, basis f^S for sorted j-subsets S of range(n);
* S^l F, basis monomials in f_0, ..., f_{n-1} given by exponent tuples.

The trace-free part (Lambda^j F* (x) S^l F)_0 is the kernel of the contraction
into Lambda^{j-1} F* (x) S^{l-1} F.  Its invariant complement is the image of
the insertion map, and the projection is taken along that image.

Line-bundle twists such as [k] are recorded as a formal tag only; they are
one-dimensional and never change a rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .errors import ConsistencyError, DomainError, GuardError
from .linalg import LinearMapQ, rank_of_vectors

MAX_N = 4
MAX_KL = 5


def _guard(n: int, k: int, l: int) -> None:
    if n < 1 or k < 0 or l < 0:
        raise DomainError(f"need n >= 1 and k, l >= 0 (got n={n}, k={k}, l={l})")
    if n > MAX_N or k + l > MAX_KL:
        raise GuardError(f"symbol lab is limited to n <= {MAX_N} and k + l <= {MAX_KL}")


# --------------------------------------------------------------------------
# Factor bases


@lru_cache(maxsize=None)
def exterior_basis(n: int, j: int) -> tuple:
    if j < 0 or j > n:
        return ()
    return tuple(combinations(range(n), j))


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple:
    """Exponent tuples of total degree d in n variables, in reverse-lex order."""
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for first in range(d, -1, -1):
        out.extend((first,) + rest for rest in monomials(n - 1, d - first))
    return tuple(out)


def _index(seq) -> dict:
    return {x: i for i, x in enumerate(seq)}


def _wedge_one(i: int, subset: tuple):
    """f^i ^ f^S as (sign, sorted subset), or None when i is in S."""
    if i in subset:
        return None
    pos = sum(1 for s in subset if s < i)
    return (-1) ** pos, tuple(sorted(subset + (i,)))


def _wedge(a: tuple, b: tuple):
    """f^A ^ f^B as (sign, sorted subset), or None."""
    if set(a) & set(b):
        return None
    seq = list(a) + list(b)
    inversions = sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y])
    return (-1) ** inversions, tuple(sorted(seq))


def _bump(e: tuple, i: int, by: int) -> tuple:
    return e[:i] + (e[i] + by,) + e[i + 1:]


# --------------------------------------------------------------------------
# Contraction, insertion and trace-free parts


@lru_cache(maxsize=None)
def contraction(n: int, j: int, l: int) -> LinearMapQ:
    """Lambda^j F* (x) S^l F -> Lambda^{j-1} F* (x) S^{l-1} F, sum_i i_{f_i} (x) d/df_i."""
    src = [(s, e) for s in exterior_basis(n, j) for e in monomials(n, l)]
    tgt = [(s, e) for s in exterior_basis(n, j - 1) for e in monomials(n, l - 1)]
    where = _index(tgt)
    cols = []
    for s, e in src:
        col = {}
        for pos, i in enumerate(s):
            if e[i] == 0:
                continue
            key = (s[:pos] + s[pos + 1:], _bump(e, i, -1))
            col[where[key]] = col.get(where[key], 0) + (-1) ** pos * e[i]
        cols.append(col)
    return LinearMapQ.from_columns(len(tgt), cols, source=src, target=tgt)


@lru_cache(maxsize=None)
def insertion(n: int, j: int, l: int) -> LinearMapQ:
    """Lambda^{j-1} F* (x) S^{l-1} F -> Lambda^j F* (x) S^l F, sum_i f^i ^ . (x) f_i ."""
    src = [(s, e) for s in exterior_basis(n, j - 1) for e in monomials(n, l - 1)]
    tgt = [(s, e) for s in exterior_basis(n, j) for e in monomials(n, l)]
    where = _index(tgt)
    cols = []
    for s, e in src:
        col = {}
        for i in range(n):
            w = _wedge_one(i, s)
            if w is None:
                continue
            sign, t = w
            key = (t, _bump(e, i, 1))
            col[where[key]] = col.get(where[key], 0) + sign
        cols.append(col)
    return LinearMapQ.from_columns(len(tgt), cols, source=src, target=tgt)


@dataclass(frozen=True)
class TracefreePart:
    """(Lambda^j F* (x) S^l F)_0 with a kernel basis and the projection onto it."""

    n: int
    j: int
    l: int
    ambient: tuple
    basis: tuple  # sparse ambient vectors
    projection: LinearMapQ  # ambient -> kernel coordinates

    @property
    def dim(self) -> int:
        return len(self.basis)


def _invert(columns: list, size: int) -> list:
    """Inverse of the square matrix with the given sparse columns, as dense rows."""
    rows = [dict() for _ in range(size)]
    for jdx, col in enumerate(columns):
        for i, v in col.items():
            rows[i][jdx] = Fraction(v)
    aug = [{**r, size + i: Fraction(1)} for i, r in enumerate(rows)]
    red = LinearMapQ(size, 2 * size, aug).row_echelon().rref()
    if any(p >= size for p in red) or len(red) != size:
        raise ConsistencyError("kernel and insertion image do not span the ambient space")
    out = [None] * size
    for p, row in red.items():
        out[p] = {c - size: v for c, v in row.items() if c >= size}
    return out


@lru_cache(maxsize=None)
def tracefree(n: int, j: int, l: int) -> TracefreePart:
    c = contraction(n, j, l)
    ambient = tuple(c.source)
    kernel = c.nullspace()
    image = insertion(n, j, l).column_space()
    if len(kernel) + len(image) != len(ambient):
        raise ConsistencyError(
            f"contraction kernel ({len(kernel)}) and insertion image ({len(image)}) "
            f"do not add up to {len(ambient)}"
        )
    inv = _invert(kernel + image, len(ambient))
    proj = LinearMapQ(len(kernel), len(ambient), inv[: len(kernel)])
    return TracefreePart(n, j, l, ambient, tuple(kernel), proj)


def tracefree_dim(n: int, j: int, l: int) -> int:
    if j < 0 or j > n or l < 0:
        return 0
    return tracefree(n, j, l).dim


# --------------------------------------------------------------------------
# Modules


@dataclass(frozen=True)
class ModuleBasis:
    """S^e E (x) fibre, where the fibre is a trace-free kernel or Lambda^n F*.

    ``labels`` are pairs (a, t): a is the exponent of e1 and t indexes the
    fibre basis.  ``twist`` is the formal [k] tag.
    """

    kind: str
    n: int
    k: int
    l: int
    j: int
    e_degree: int
    fibre_dim: int
    twist: int = 0
    labels: tuple = field(default=(), repr=False)

    @property
    def dim(self) -> int:
        return (self.e_degree + 1) * self.fibre_dim

    def index(self, a: int, t: int) -> int:
        # e1-exponents run from e_degree down to 0
        return (self.e_degree - a) * self.fibre_dim + t


def _module(kind, n, k, l, j, e_degree, fibre_dim, twist) -> ModuleBasis:
    labels = tuple((a, t) for a in range(e_degree, -1, -1) for t in range(fibre_dim))
    return ModuleBasis(kind, n, k, l, j, e_degree, fibre_dim, twist, labels)


def build_W(n: int, k: int, l: int, j: int) -> ModuleBasis:
    """The module W^{k,l}_j inducing the j-th bundle of the left-edge subcomplex."""
    _guard(n, k, l)
    if j < 0 or j > n:
        raise DomainError(f"j must lie in 0..{n}")
    if j == n:
        return _module("top", n, k, l, j, k + n + l, 1, k)
    return _module("tracefree", n, k, l, j, j + k, tracefree(n, j, l).dim, k)


def build_V(n: int, k: int, l: int) -> ModuleBasis:
    """V^{k,l} = S^k E (x) Lambda^l F*."""
    if l < 0 or l > n or k < 0:
        raise DomainError("V^{k,l} needs k >= 0 and 0 <= l <= n")
    return _module("plain", n, k, l, l, k, comb(n, l), 0)


# --------------------------------------------------------------------------
# Symbols


@dataclass(frozen=True)
class SymbolX:
    """X = e1 (x) alpha1 + e2 (x) alpha2 in E (x) F*."""

    alpha1: tuple
    alpha2: tuple

    def __post_init__(self):
        a1 = tuple(Fraction(x) for x in self.alpha1)
        a2 = tuple(Fraction(x) for x in self.alpha2)
        if len(a1) != len(a2):
            raise DomainError("alpha1 and alpha2 must have the same length")
        object.__setattr__(self, "alpha1", a1)
        object.__setattr__(self, "alpha2", a2)

    @property
    def n(self) -> int:
        return len(self.alpha1)

    @property
    def alphas(self) -> tuple:
        return (self.alpha1, self.alpha2)

    def is_generic(self) -> bool:
        """True iff alpha1 and alpha2 are linearly independent."""
        vecs = [{i: v for i, v in enumerate(a) if v} for a in self.alphas]
        return rank_of_vectors(vecs) == 2

    @classmethod
    def zero(cls, n: int) -> "SymbolX":
        return cls((0,) * n, (0,) * n)

    @classmethod
    def standard(cls, n: int) -> "SymbolX":
        return cls(tuple(int(i == 0) for i in range(n)), tuple(int(i == 1) for i in range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random, bound: int = 3) -> "SymbolX":
        return cls(
            tuple(rng.randint(-bound, bound) for _ in range(n)),
            tuple(rng.randint(-bound, bound) for _ in range(n)),
        )

    @classmethod
    def parse(cls, text: str) -> "SymbolX":
        """``"1,0,0;0,1,0"`` gives alpha1 = (1,0,0), alpha2 = (0,1,0)."""
        try:
            a, b = text.split(";")
            return cls(tuple(Fraction(x) for x in a.split(",")), tuple(Fraction(x) for x in b.split(",")))
        except ValueError:
            raise DomainError(f"cannot parse symbol {text!r}; expected 'a1,...;b1,...'") from None


def _check_x(n, X):
    if X.n != n:
        raise DomainError(f"X lives in E (x) F* with dim F = {X.n}, expected {n}")


def plain_sigma(n: int, k: int, l: int, X: SymbolX) -> LinearMapQ:
    """V^{k,l} -> V^{k+1,l+1}, s (x) phi -> sum_a e_a s (x) alpha_a ^ phi."""
    _check_x(n, X)
    src, tgt = build_V(n, k, l), build_V(n, k + 1, l + 1)
    sb, tb = exterior_basis(n, l), _index(exterior_basis(n, l + 1))
    cols = []
    for a, t in src.labels:
        col = {}
        for which, alpha in enumerate(X.alphas):
            a2 = a + 1 if which == 0 else a
            for i, v in enumerate(alpha):
                w = _wedge_one(i, sb[t]) if v else None
                if w is None:
                    continue
                sign, u = w
                r = tgt.index(a2, tb[u])
                col[r] = col.get(r, 0) + sign * v
        cols.append(col)
    return LinearMapQ.from_columns(tgt.dim, cols)


@lru_cache(maxsize=None)
def _wedge_then_project(n: int, j: int, l: int) -> tuple:
    """For each i and each kernel basis vector t of W_j's fibre: proj(f^i ^ t)."""
    src, dst = tracefree(n, j, l), tracefree(n, j + 1, l)
    where = _index(dst.ambient)
    out = []
    for i in range(n):
        per_t = []
        for t in src.basis:
            amb = {}
            for idx, v in t.items():
                s, e = src.ambient[idx]
                w = _wedge_one(i, s)
                if w is None:
                    continue
                sign, u = w
                r = where[(u, e)]
                amb[r] = amb.get(r, 0) + sign * v
            per_t.append(dst.projection.apply(amb))
        out.append(per_t)
    return tuple(out)


def _poly_power(alpha1, alpha2, m: int, d: int) -> dict:
    """alpha1^m alpha2^(d-m) as a polynomial on F (exponent tuple -> coefficient)."""
    poly = {(0,) * len(alpha1): Fraction(1)}
    for alpha in [alpha1] * m + [alpha2] * (d - m):
        nxt = {}
        for e, c in poly.items():
            for i, v in enumerate(alpha):
                if v:
                    key = _bump(e, i, 1)
                    nxt[key] = nxt.get(key, 0) + c * v
        poly = {e: c for e, c in nxt.items() if c}
    return poly


def _apply_operator(q: tuple, poly: dict) -> dict:
    """q(d) applied to a polynomial; q is an exponent tuple of S^l F."""
    out = {}
    for e, c in poly.items():
        if any(ei < qi for ei, qi in zip(e, q)):
            continue
        f = 1
        for ei, qi in zip(e, q):
            f *= factorial(ei) // factorial(ei - qi)
        key = tuple(ei - qi for ei, qi in zip(e, q))
        out[key] = out.get(key, 0) + c * f
    return out


def _top_sigma(n: int, k: int, l: int, X: SymbolX) -> LinearMapQ:
    """W_{n-1} -> W_n: the order l+1 symbol through S^{l+1}E (x) S^{l+1}F*."""
    src, tgt = build_W(n, k, l, n - 1), build_W(n, k, l, n)
    fib = tracefree(n, n - 1, l)
    full = tuple(range(n))
    d = l + 1
    polys = [(m, comb(d, m), _poly_power(X.alpha1, X.alpha2, m, d)) for m in range(d + 1)]
    # for each fibre basis vector and each m: coefficient of f^{0..n-1}
    fibre_vals = []
    for t in fib.basis:
        vals = []
        for m, binom, poly in polys:
            acc = Fraction(0)
            for idx, v in t.items():
                s, q = fib.ambient[idx]
                lin = _apply_operator(q, poly)
                for e, c in lin.items():
                    i = e.index(1)
                    w = _wedge((i,), s)
                    if w is not None and w[1] == full:
                        acc += w[0] * c * v
            vals.append(binom * acc)
        fibre_vals.append(vals)
    cols = []
    for a, t in src.labels:
        col = {}
        for (m, _, _), val in zip(polys, fibre_vals[t]):
            if val:
                r = tgt.index(a + m, 0)
                col[r] = col.get(r, 0) + val
        cols.append(col)
    return LinearMapQ.from_columns(tgt.dim, cols)


def sigma(n: int, k: int, l: int, j: int, X: SymbolX) -> LinearMapQ:
    """The symbol sigma_X : W^{k,l}_j -> W^{k,l}_{j+1}."""
    _guard(n, k, l)
    _check_x(n, X)
    if j < 0 or j > n - 1:
        raise DomainError(f"sigma is defined for 0 <= j <= {n - 1}")
    if j == n - 1:
        return _top_sigma(n, k, l, X)
    src, tgt = build_W(n, k, l, j), build_W(n, k, l, j + 1)
    table = _wedge_then_project(n, j, l)
    cols = []
    for a, t in src.labels:
        col = {}
        for which, alpha in enumerate(X.alphas):
            a2 = a + 1 if which == 0 else a
            for i, v in enumerate(alpha):
                if not v:
                    continue
                for u, c in table[i][t].items():
                    r = tgt.index(a2, u)
                    col[r] = col.get(r, 0) + v * c
        cols.append(col)
    return LinearMapQ.from_columns(tgt.dim, cols)


# --------------------------------------------------------------------------
# Exactness reports


def _rank_job(m: LinearMapQ) -> int:
    return m.rank()


def _ranks(maps, jobs: int) -> list:
    if jobs and jobs > 1 and len(maps) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_rank_job, maps))
    return [m.rank() for m in maps]


def _report(dims: list, maps: list, X: SymbolX, jobs: int = 1) -> dict:
    ranks = _ranks(maps, jobs)
    stages = []
    for j, (m, r) in enumerate(zip(maps, ranks)):
        stages.append({"j": j, "dim_source": m.ncols, "dim_target": m.nrows, "rank": r, "nullity": m.ncols - r})
    homology = []
    for j, d in enumerate(dims):
        incoming = ranks[j - 1] if j >= 1 else 0
        kernel = d - ranks[j] if j < len(maps) else d
        homology.append(kernel - incoming)
    failing = [j for j, h in enumerate(homology) if h != 0]
    return {
        "dims": list(dims),
        "stages": stages,
        "homology": homology,
        "exact": not failing,
        "failing": failing,
        "generic_X": X.is_generic(),
        "euler": sum((-1) ** j * d for j, d in enumerate(dims)),
    }


def symbol_maps(n: int, k: int, l: int, X: SymbolX) -> list:
    return [sigma(n, k, l, j, X) for j in range(n)]


def exactness_report(n: int, k: int, l: int, X: SymbolX, jobs: int = 1) -> dict:
    """Ranks and homology of 0 -> W_0 -> W_1 -> ... -> W_n -> 0."""
    _guard(n, k, l)
    if n < 2:
        raise DomainError("the symbol sequence needs n >= 2")
    dims = [build_W(n, k, l, j).dim for j in range(n + 1)]
    rep = _report(dims, symbol_maps(n, k, l, X), X, jobs)
    rep.update({"n": n, "k": k, "l": l, "sequence": "W"})
    return rep


def plain_sequence_report(n: int, k: int, X: SymbolX, jobs: int = 1) -> dict:
    """Ranks and homology of 0 -> V^{k,0} -> V^{k+1,1} -> ... -> V^{k+n,n} -> 0."""
    _guard(n, k, 0)
    dims = [build_V(n, k + j, j).dim for j in range(n + 1)]
    maps = [plain_sigma(n, k + j, j, X) for j in range(n)]
    rep = _report(dims, maps, X, jobs)
    rep.update({"n": n, "k": k, "sequence": "V"})
    return rep


def dual_pairing_check(n: int, k: int, l: int, X: SymbolX | None = None, jobs: int = 1) -> dict:
    """The right-edge sequence as the transpose of the left-edge sequence for (l, k).

    The dimensions of the right-edge modules are read independently from the
    BGG diagram of A_{n+1} crossed at node 2, and compared with
    dim W^{l,k}_{n-j}; the transposed maps are then tested for exactness.
    """
    from .bggdiag import bgg_diagram
    from .hasse import hasse_graph
    from .parabolic import grading_from_text

    _guard(n, k, l)
    X = X or SymbolX.standard(n)
    grading = grading_from_text(f"A{n + 1} x{{2}}")
    graph = hasse_graph(grading)
    lam = [0] * (n + 1)
    lam[0] += k
    lam[-1] += l
    diagram = bgg_diagram(graph, lam)
    right_edge = [diagram.dim(f"w_{{{j},{n}}}") for j in range(n + 1)]
    left_edge = [diagram.dim(f"w_{{0,{j}}}") for j in range(n + 1)]
    model_left = [build_W(n, k, l, j).dim for j in range(n + 1)]
    model_dual = [build_W(n, l, k, n - j).dim for j in range(n + 1)]
    maps = [sigma(n, l, k, n - j - 1, X).transpose() for j in range(n)]
    rep = _report(model_dual, maps, X, jobs)
    rep.update({
        "n": n, "k": k, "l": l, "sequence": "dual",
        "diagram_right_edge": right_edge,
        "diagram_left_edge": left_edge,
        "model_left_edge": model_left,
        "dims_match": right_edge == model_dual and left_edge == model_left,
    })
    rep["ok"] = rep["dims_match"] and (rep["exact"] or not rep["generic_X"])
    return rep


# --------------------------------------------------------------------------
# Quaternionic rank condition


def _gauss_rank(rows: list) -> int:
    """Rank of a matrix over Q(i); entries are (re, im) pairs of Fractions."""
    rows = [[(Fraction(a), Fraction(b)) for a, b in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != (0, 0)), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pa, pb = rows[rank][c]
        norm = pa * pa + pb * pb
        inv = (pa / norm, -pb / norm)
        for i in range(len(rows)):
            if i == rank or rows[i][c] == (0, 0):
                continue
            fa, fb = rows[i][c]
            f = (fa * inv[0] - fb * inv[1], fa * inv[1] + fb * inv[0])
            rows[i] = [
                (x - (f[0] * y - f[1] * z), w - (f[0] * z + f[1] * y))
                for (x, w), (y, z) in zip(rows[i], rows[rank])
            ]
        rank += 1
    return rank


def quaternion_block(a, b, c, d) -> list:
    """Complex matrix of left multiplication by a+bi+cj+dk on H = C + jC.

    Writing p = u + j x with u = a+bi and x = c-di, left multiplication on
    q = z + j w reads (z, w) -> (u z - conj(x) w, x z + conj(u) w).
    """
    u = (Fraction(a), Fraction(b))
    x = (Fraction(c), -Fraction(d))
    return [[u, (-x[0], x[1])], [x, (u[0], -u[1])]]


def quaternionic_matrix(v, n: int) -> list:
    """2n x 2 complex matrix of q -> v q for v in H^n given by 4n real numbers."""
    v = list(v)
    if len(v) != 4 * n:
        raise DomainError(f"expected {4 * n} real coordinates, got {len(v)}")
    rows = []
    for i in range(n):
        rows.extend(quaternion_block(*v[4 * i:4 * i + 4]))
    return rows


def quaternionic_rank(v, n: int) -> int:
    """Complex rank of the right H-linear map H -> H^n, q -> v q."""
    if all(Fraction(x) == 0 for x in v):
        raise DomainError("the quaternionic vector must be nonzero")
    return _gauss_rank(quaternionic_matrix(v, n))
