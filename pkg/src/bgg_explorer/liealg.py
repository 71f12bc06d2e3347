"""Brute-force Lie algebra homology H_*(p_+, V) from explicit matrices.

This module is deliberately independent of the Weyl group machinery: it
builds sl(r+1) and sp(2r) as matrices, reads roots off Cartan eigenvalues,
writes down the Kostant codifferential on Lambda^k p_+ (x) V and takes exact
ranks.  It is used to validate the combinatorial BGG diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import DomainError, GuardError
from .linalg import LinearMapQ, rank_of_vectors, span_basis
from .parabolic import GradingInfo
from .rootlat import CartanSpec, RootVector, Weight, positive_roots, to_simple_root_coords

MAX_ORACLE_RANK = 8
REPRESENTATIONS = ("adjoint", "standard", "dual_standard")


# --------------------------------------------------------------------------
# Sparse matrices as {(i, j): Fraction}


def _mat_mul(a: dict, b: dict) -> dict:
    by_row = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out = {}
    for (i, k), v in a.items():
        for j, w in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return {key: v for key, v in out.items() if v}


def _mat_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, v in b.items():
        out[key] = out.get(key, 0) - v
    return {key: v for key, v in out.items() if v}


def bracket(a: dict, b: dict) -> dict:
    return _mat_sub(_mat_mul(a, b), _mat_mul(b, a))


def _unit(i, j, v=1):
    return {(i, j): Fraction(v)}


def _add(*ms):
    out = {}
    for m in ms:
        for key, v in m.items():
            out[key] = out.get(key, 0) + v
    return {key: v for key, v in out.items() if v}


def _transpose(m):
    return {(j, i): v for (i, j), v in m.items()}


# --------------------------------------------------------------------------
# The matrix algebra


@dataclass
class MatrixAlgebra:
    """g as matrices: coroots H_1..H_r first, then positive and negative root vectors."""

    spec: CartanSpec
    size: int
    basis: list
    kinds: list
    weights: list = field(repr=False)

    def __post_init__(self):
        self._root_index = {}
        for idx, (kind, root) in enumerate(self.kinds):
            if kind in ("e", "f"):
                self._root_index[(kind, root)] = idx

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return self.spec.rank

    def root_vector(self, root: RootVector, negative: bool = False) -> int:
        return self._root_index[("f" if negative else "e", RootVector(tuple(root)))]

    def coroot(self, i: int) -> int:
        return i - 1

    @cached_property
    def _lead(self):
        # each root vector owns an off-diagonal entry no other basis element touches
        lead = {}
        for idx, m in enumerate(self.basis):
            if self.kinds[idx][0] == "h":
                continue
            key = min(k for k in m if k[0] != k[1])
            lead[key] = idx
        return lead

    @cached_property
    def _cartan_solver(self):
        r = self.rank
        n = self.size
        cols = [[self.basis[i].get((t, t), Fraction(0)) for t in range(n)] for i in range(r)]
        # pick r independent diagonal positions
        chosen, rows = [], []
        for t in range(n):
            cand = rows + [[cols[i][t] for i in range(r)]]
            if rank_of_vectors([{i: v for i, v in enumerate(row) if v} for row in cand]) == len(cand):
                rows = cand
                chosen.append(t)
            if len(rows) == r:
                break
        inv = _invert([list(row) for row in rows])
        return chosen, inv

    def coords(self, m: dict) -> dict:
        """Coordinates of a matrix in the basis; raises if m is not in g."""
        out = {}
        rest = dict(m)
        for key, v in m.items():
            if key[0] == key[1]:
                continue
            idx = self._lead.get(key)
            if idx is None:
                continue
            c = v / self.basis[idx][key]
            out[idx] = c
        chosen, inv = self._cartan_solver
        rhs = [m.get((t, t), Fraction(0)) for t in chosen]
        for i in range(self.rank):
            c = sum(inv[i][j] * rhs[j] for j in range(self.rank))
            if c:
                out[i] = c
        recon = _add(*({k: c * v for k, v in self.basis[idx].items()} for idx, c in out.items()))
        if _mat_sub(recon, rest):
            raise DomainError("matrix does not lie in the algebra")
        return out

    def bracket_coords(self, i: int, j: int) -> dict:
        return self._bracket_table(i, j)

    def _bracket_table(self, i, j):
        key = (i, j)
        cache = self.__dict__.setdefault("_btab", {})
        if key not in cache:
            cache[key] = self.coords(bracket(self.basis[i], self.basis[j]))
        return cache[key]


def _invert(a):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [row[n:] for row in m]


def _classify(spec, size, cartan, candidates):
    """Attach roots to candidate positive root vectors via Cartan eigenvalues."""
    roots = set(positive_roots(spec))
    found = {}
    for m in candidates:
        fund = []
        for h in cartan:
            br = bracket(h, m)
            # [h, m] = c m: read c from any entry of m
            key = next(iter(m))
            c = br.get(key, Fraction(0)) / m[key]
            if br != {k: c * v for k, v in m.items() if c * v}:
                raise AssertionError("candidate is not a Cartan eigenvector")
            fund.append(c)
        simple = to_simple_root_coords(spec, fund)
        root = RootVector(tuple(int(x) for x in simple))
        if root not in roots:
            raise AssertionError(f"eigenvalues {fund} are not a positive root")
        found[root] = m
    if set(found) != roots:
        raise AssertionError("root vectors do not reproduce the positive roots")
    return found


@lru_cache(maxsize=None)
def build_algebra(spec: CartanSpec) -> MatrixAlgebra:
    if spec.rank > MAX_ORACLE_RANK:
        raise GuardError(f"matrix models are limited to rank {MAX_ORACLE_RANK}")
    r = spec.rank
    if spec.series == "A":
        size = r + 1
        cartan = [_add(_unit(i - 1, i - 1), _unit(i, i, -1)) for i in range(1, r + 1)]
        cands = [_unit(i, j) for i in range(size) for j in range(i + 1, size)]
    else:
        size = 2 * r

        def diag(h):
            out = {}
            for t, v in enumerate(h):
                if v:
                    out[(t, t)] = Fraction(v)
                    out[(r + t, r + t)] = Fraction(-v)
            return out

        cartan = []
        for i in range(1, r):
            h = [0] * r
            h[i - 1], h[i] = 1, -1
            cartan.append(diag(h))
        h = [0] * r
        h[r - 1] = 1
        cartan.append(diag(h))
        cands = []
        for i in range(r):
            for j in range(i + 1, r):
                cands.append(_add(_unit(i, j), _unit(r + j, r + i, -1)))
                cands.append(_add(_unit(i, r + j), _unit(j, r + i)))
            cands.append(_unit(i, r + i))
    pos = _classify(spec, size, cartan, cands)
    roots = positive_roots(spec)
    basis = list(cartan)
    kinds = [("h", i) for i in range(1, r + 1)]
    weights = [(0,) * r for _ in range(r)]
    for a in roots:
        basis.append(pos[a])
        kinds.append(("e", a))
        weights.append(tuple(a))
    for a in roots:
        basis.append(_transpose(pos[a]))
        kinds.append(("f", a))
        weights.append(tuple(-x for x in a))
    alg = MatrixAlgebra(spec, size, basis, kinds, weights)
    if alg.dim != spec.dim:
        raise AssertionError("wrong algebra dimension")
    return alg


def check_algebra_membership(alg: MatrixAlgebra) -> bool:
    """Trace-free (A) or X^T J + J X = 0 (C) for every basis element."""
    n = alg.size
    for m in alg.basis:
        if alg.spec.series == "A":
            if sum(m.get((t, t), 0) for t in range(n)):
                return False
        else:
            r = n // 2
            j = _add(*(_unit(t, r + t) for t in range(r)), *(_unit(r + t, t, -1) for t in range(r)))
            if _add(_mat_mul(_transpose(m), j), _mat_mul(j, m)):
                return False
    return True


def check_jacobi(alg: MatrixAlgebra) -> bool:
    """Jacobi identity on all basis triples, in structure constants."""
    d = alg.dim

    def br(x: dict, j: int) -> dict:
        out = {}
        for i, c in x.items():
            for k, v in alg.bracket_coords(i, j).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    for a in range(d):
        for b in range(a + 1, d):
            ab = alg.bracket_coords(a, b)
            for c in range(b + 1, d):
                total = _vec_add(br(ab, c), br(alg.bracket_coords(b, c), a), br(alg.bracket_coords(c, a), b))
                if total:
                    return False
    return True


def _vec_add(*vs):
    out = {}
    for v in vs:
        for k, x in v.items():
            out[k] = out.get(k, 0) + x
    return {k: x for k, x in out.items() if x}


# --------------------------------------------------------------------------
# Representations


@dataclass
class Representation:
    """A finite-dimensional g-module given by the action of basis elements."""

    name: str
    alg: MatrixAlgebra
    dim: int
    weights: list  # fundamental coordinates of each basis vector

    def act(self, x: int, v: int) -> dict:
        """Basis element x of g applied to basis vector v."""
        cache = self.__dict__.setdefault("_acts", {})
        key = (x, v)
        if key not in cache:
            cache[key] = self._act(x, v)
        return cache[key]

    def _act(self, x, v):
        m = self.alg.basis[x]
        if self.name == "adjoint":
            return self.alg.bracket_coords(x, v)
        if self.name == "standard":
            return {i: c for (i, j), c in m.items() if j == v}
        return {j: -c for (i, j), c in m.items() if i == v}


@lru_cache(maxsize=None)
def representation(spec: CartanSpec, name: str) -> Representation:
    if name not in REPRESENTATIONS:
        raise DomainError(f"unknown representation {name!r}; choose from {REPRESENTATIONS}")
    alg = build_algebra(spec)
    r = spec.rank
    if name == "adjoint":
        weights = []
        for w in alg.weights:
            weights.append(_fund_of_root(spec, w))
        return Representation(name, alg, alg.dim, weights)
    sign = 1 if name == "standard" else -1
    weights = []
    for t in range(alg.size):
        weights.append(tuple(sign * alg.basis[alg.coroot(i)].get((t, t), 0) for i in range(1, r + 1)))
    return Representation(name, alg, alg.size, [tuple(int(x) for x in w) for w in weights])


def diagram_weight(spec: CartanSpec, name: str):
    """The weight whose BGG diagram describes H_*(p_+, V) in the dual-label convention.

    The diagram of lambda lists the duals of the homology components of
    V_lambda, so the standard module of sl(r+1) is matched by lambda_r and its
    dual by lambda_1; for sp both are lambda_1.
    """
    from .bggdiag import adjoint_weight
    from .rootlat import Weight

    if name == "adjoint":
        return adjoint_weight(spec)
    if name not in REPRESENTATIONS:
        raise DomainError(f"unknown representation {name!r}")
    if spec.series == "C" or name == "dual_standard":
        return Weight.fundamental(spec.rank, 1)
    return Weight.fundamental(spec.rank, spec.rank)


def _fund_of_root(spec, c):
    from .rootlat import cartan_matrix

    a = cartan_matrix(spec)
    r = spec.rank
    return tuple(sum(a[i][j] * c[j] for j in range(r)) for i in range(r))


# --------------------------------------------------------------------------
# Chain spaces and the codifferential


def _sign_sort(seq):
    """Sort a tuple of distinct ints, returning (sign, sorted) or (0, None) on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(seq)


class KostantComplex:
    """Lambda^* p_+ (x) V split into Cartan weight blocks."""

    def __init__(self, grading: GradingInfo, rep_name: str = "adjoint"):
        self.grading = grading
        self.spec = grading.spec
        self.rep = representation(self.spec, rep_name)
        self.alg = self.rep.alg
        self.pplus_roots = list(grading.delta_plus_pplus)
        self.pplus = [self.alg.root_vector(b) for b in self.pplus_roots]
        self._pos = {x: i for i, x in enumerate(self.pplus)}
        self.pweights = [_fund_of_root(self.spec, b) for b in self.pplus_roots]
        self.m = len(self.pplus)
        self._blocks = {}

    # -- chain bases ------------------------------------------------------

    def chain_weight(self, wedge, v) -> tuple:
        w = list(self.rep.weights[v])
        for i in wedge:
            for t, x in enumerate(self.pweights[i]):
                w[t] += x
        return tuple(w)

    def blocks(self, k: int) -> dict:
        """weight -> ordered list of chain basis elements (wedge, v) in degree k."""
        if k not in self._blocks:
            out = {}
            if 0 <= k <= self.m:
                for wedge in combinations(range(self.m), k):
                    for v in range(self.rep.dim):
                        out.setdefault(self.chain_weight(wedge, v), []).append((wedge, v))
            self._blocks[k] = out
        return self._blocks[k]

    def chain_dim(self, k: int) -> int:
        return sum(len(b) for b in self.blocks(k).values())

    def _index(self, k, weight):
        key = ("idx", k, weight)
        if key not in self._blocks:
            self._blocks[key] = {c: i for i, c in enumerate(self.blocks(k).get(weight, []))}
        return self._blocks[key]

    # -- the differential -------------------------------------------------

    def apply(self, wedge, v) -> dict:
        """Codifferential of one basis chain, as {(wedge, v): coefficient}."""
        out = {}
        k = len(wedge)
        for i in range(k):
            rest = wedge[:i] + wedge[i + 1:]
            sign = 1 if (i + 1) % 2 == 0 else -1
            for u, c in self.rep.act(self.pplus[wedge[i]], v).items():
                key = (rest, u)
                out[key] = out.get(key, 0) + sign * c
        for i in range(k):
            for j in range(i + 1, k):
                sign = 1 if (i + j) % 2 == 0 else -1
                rest = wedge[:i] + wedge[i + 1:j] + wedge[j + 1:]
                br = self.alg.bracket_coords(self.pplus[wedge[i]], self.pplus[wedge[j]])
                for z, c in br.items():
                    pos = self._pos.get(z)
                    if pos is None:
                        raise AssertionError("p_+ is not closed under the bracket")
                    s, srt = _sign_sort((pos,) + rest)
                    if s:
                        key = (srt, v)
                        out[key] = out.get(key, 0) + sign * s * c
        return {key: c for key, c in out.items() if c}

    def block_map(self, k: int, weight) -> LinearMapQ:
        """The codifferential Lambda^k -> Lambda^{k-1} restricted to one weight."""
        key = ("map", k, weight)
        if key not in self._blocks:
            src = self.blocks(k).get(weight, [])
            tgt = self.blocks(k - 1).get(weight, []) if k >= 1 else []
            tidx = self._index(k - 1, weight) if k >= 1 else {}
            cols = []
            for wedge, v in src:
                col = {}
                if k >= 1:
                    for chain, c in self.apply(wedge, v).items():
                        col[tidx[chain]] = c
                cols.append(col)
            self._blocks[key] = LinearMapQ.from_columns(len(tgt), cols, source=src, target=tgt)
        return self._blocks[key]

    def codifferential(self, k: int) -> LinearMapQ:
        """Full matrix of the codifferential in degree k (block diagonal by weight)."""
        src_blocks = self.blocks(k)
        tgt_blocks = self.blocks(k - 1) if k >= 1 else {}
        src = [c for w in sorted(src_blocks) for c in src_blocks[w]]
        tgt = [c for w in sorted(tgt_blocks) for c in tgt_blocks[w]]
        sidx = {c: i for i, c in enumerate(src)}
        tidx = {c: i for i, c in enumerate(tgt)}
        cols = [dict() for _ in src]
        if k >= 1:
            for c in src:
                for chain, val in self.apply(*c).items():
                    cols[sidx[c]][tidx[chain]] = val
        return LinearMapQ.from_columns(len(tgt), cols, source=src, target=tgt)

    def block_rank(self, k: int, weight) -> int:
        if k < 1 or k > self.m:
            return 0
        return self.block_map(k, weight).rank()

    # -- homology ---------------------------------------------------------

    def homology_block_dim(self, k: int, weight) -> int:
        n = len(self.blocks(k).get(weight, []))
        return n - self.block_rank(k, weight) - self.block_rank(k + 1, weight)

    def homology_dims(self) -> list:
        return [sum(self.homology_block_dim(k, w) for w in self.blocks(k)) for k in range(self.m + 1)]

    def _g0_dominant(self, weight) -> bool:
        return all(weight[i - 1] >= 0 for i in self.grading.g0_simple)

    def _raise(self, k: int, weight, vec: dict, x: int) -> dict:
        """Action of the g0 element x (a basis index) on a chain vector of the block."""
        src = self.blocks(k)[weight]
        out = {}
        for idx, c in vec.items():
            wedge, v = src[idx]
            for u, a in self.rep.act(x, v).items():
                key = (wedge, u)
                out[key] = out.get(key, 0) + c * a
            for pos in range(len(wedge)):
                for z, a in self.alg.bracket_coords(x, self.pplus[wedge[pos]]).items():
                    zp = self._pos[z]
                    s, srt = _sign_sort(wedge[:pos] + (zp,) + wedge[pos + 1:])
                    if s:
                        key = (srt, v)
                        out[key] = out.get(key, 0) + s * c * a
        return {key: c for key, c in out.items() if c}

    def highest_weight_data(self, k: int, weight) -> dict:
        """Multiplicity of g0-highest weight vectors of H_k at a g0-dominant weight.

        Returns ``{"mult", "kernel", "image", "singular"}`` where ``singular``
        spans the chains whose class is killed by all g0 raising operators.
        """
        src = self.blocks(k).get(weight, [])
        n = len(src)
        if n == 0:
            return {"mult": 0, "kernel": [], "image": [], "singular": []}
        kernel = self.block_map(k, weight).nullspace() if k >= 1 else [{i: Fraction(1)} for i in range(n)]
        image = self.block_map(k + 1, weight).column_space() if k + 1 <= self.m else []
        if len(kernel) == len(image):
            return {"mult": 0, "kernel": kernel, "image": image, "singular": list(image)}
        # unknowns: coefficients c on the kernel basis, plus d_i on each target image basis
        cols_total = len(kernel)
        blocks = []
        for i in self.grading.g0_simple:
            simple = tuple(int(t == i - 1) for t in range(self.spec.rank))
            x = self.alg.root_vector(simple)
            tw = tuple(w + d for w, d in zip(weight, _fund_of_root(self.spec, simple)))
            tgt = self.blocks(k).get(tw, [])
            if not tgt:
                continue
            tidx = self._index(k, tw)
            timage = self.block_map(k + 1, tw).column_space() if k + 1 <= self.m else []
            images = []
            for vec in kernel:
                raised = self._raise(k, weight, vec, x)
                images.append({tidx[ch]: c for ch, c in raised.items()})
            blocks.append((len(tgt), images, timage))
        rows_needed = sum(b[0] for b in blocks)
        extra = sum(len(b[2]) for b in blocks)
        rows = [dict() for _ in range(rows_needed)]
        offset_r, offset_c = 0, cols_total
        for size, images, timage in blocks:
            for j, img in enumerate(images):
                for r_, c in img.items():
                    rows[offset_r + r_][j] = c
            for j, vec in enumerate(timage):
                for r_, c in vec.items():
                    rows[offset_r + r_][offset_c + j] = -c
            offset_r += size
            offset_c += len(timage)
        system = LinearMapQ(rows_needed, cols_total + extra, rows)
        sols = system.nullspace() if rows_needed else [{j: Fraction(1)} for j in range(cols_total)]
        singular = []
        for s in sols:
            vec = {}
            for j, c in s.items():
                if j < cols_total:
                    for idx, a in kernel[j].items():
                        vec[idx] = vec.get(idx, 0) + c * a
            vec = {i: c for i, c in vec.items() if c}
            if vec:
                singular.append(vec)
        singular = span_basis(singular + list(image))
        mult = len(singular) - len(image)
        return {"mult": mult, "kernel": kernel, "image": image, "singular": singular}

    def harmonic_highest_weights(self, k: int) -> list:
        """Sorted list of (g0-highest weight, multiplicity) for the components of H_k."""
        out = []
        for weight in sorted(self.blocks(k)):
            if not self._g0_dominant(weight):
                continue
            mult = self.highest_weight_data(k, weight)["mult"]
            if mult:
                out.append((Weight(weight), mult))
        return out

    def component_homogeneity(self, k: int = 2) -> dict:
        """Torsion/curvature tag of each H_k component, keyed by its highest weight.

        A component is torsion when some highest weight representative has
        its g-part entirely in negative grade.
        """
        if self.rep.name != "adjoint":
            raise DomainError("torsion and curvature only make sense for the adjoint representation")
        g = self.grading
        out = {}
        for weight in sorted(self.blocks(k)):
            if not self._g0_dominant(weight):
                continue
            data = self.highest_weight_data(k, weight)
            if not data["mult"]:
                continue
            src = self.blocks(k)[weight]
            negative = []
            for idx, (wedge, v) in enumerate(src):
                if g.grade_of(self.alg.weights[v]) < 0:
                    negative.append({idx: Fraction(1)})
            both = rank_of_vectors(data["singular"] + negative)
            # dim(S cap (N + I)) = dim S + dim(N + I) - dim(S + N)
            inter = len(data["singular"]) + rank_of_vectors(data["image"] + negative) - both
            n_tors = inter - len(data["image"])
            if n_tors == data["mult"]:
                tag = "torsion"
            elif n_tors == 0:
                tag = "curvature"
            else:
                tag = "mixed"
            out[Weight(weight)] = tag
        return out


# --------------------------------------------------------------------------
# Functional interface


@lru_cache(maxsize=None)
def kostant_complex(grading: GradingInfo, rep_name: str = "adjoint") -> KostantComplex:
    return KostantComplex(grading, rep_name)


def codifferential(grading: GradingInfo, rep_name: str, k: int) -> LinearMapQ:
    cx = kostant_complex(grading, rep_name)
    if not 0 <= k <= cx.m:
        raise DomainError(f"degree {k} outside 0..{cx.m}")
    return cx.codifferential(k)


def homology_dims(grading: GradingInfo, rep_name: str = "adjoint") -> list:
    return kostant_complex(grading, rep_name).homology_dims()


def harmonic_highest_weights(grading: GradingInfo, rep_name: str, k: int) -> list:
    """Dual labels (one entry per component, with multiplicity) of H_k."""
    from .bggdiag import from_highest_weight

    out = []
    for hw, mult in kostant_complex(grading, rep_name).harmonic_highest_weights(k):
        out.extend([from_highest_weight(grading, hw)] * mult)
    return sorted(out, key=lambda w: tuple(w))


def component_homogeneity(grading: GradingInfo, rep_name: str = "adjoint", k: int = 2) -> dict:
    """Dual label -> "torsion" / "curvature" for the components of H_k."""
    from .bggdiag import from_highest_weight

    tags = kostant_complex(grading, rep_name).component_homogeneity(k)
    return {from_highest_weight(grading, hw): tag for hw, tag in tags.items()}


def euler_characteristic(grading: GradingInfo, rep_name: str = "adjoint") -> tuple:
    """(sum (-1)^k dim H_k, sum (-1)^k dim C_k)."""
    cx = kostant_complex(grading, rep_name)
    dims = cx.homology_dims()
    lhs = sum((-1) ** k * d for k, d in enumerate(dims))
    rhs = sum((-1) ** k * cx.chain_dim(k) for k in range(cx.m + 1))
    return lhs, rhs
