"""Exact root systems and weight lattices for the series A_r and C_r.

Conventions
-----------
* Simple roots are numbered 1..rank along the Dynkin diagram.  For C_r the
  long simple root is the last one, ``alpha_r = 2 eps_r``.
* ``cartan_matrix(spec)[i][j] = <alpha_j, alpha_i^vee>``: row ``i`` holds the
  pairings with the coroot of ``alpha_i``.  Column ``j`` is therefore the
  expansion of ``alpha_j`` in fundamental weights.
* Weights are stored in fundamental-weight coordinates, roots in simple-root
  coordinates.  Everything is integer or :class:`fractions.Fraction`.
* ``positive_roots`` is sorted graded-lexicographically: by height, then by
  the coefficient tuple in descending order (so ``alpha_1`` precedes
  ``alpha_2`` and ``alpha_1 + alpha_2`` precedes ``alpha_2 + alpha_3``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConfigurationError, DomainError

SERIES = ("A", "C")
MAX_RANK = 12


@dataclass(frozen=True)
class CartanSpec:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise ConfigurationError(f"unsupported series {self.series!r}; expected one of {SERIES}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ConfigurationError(f"rank must be a positive integer, got {self.rank!r}")
        if self.series == "C" and self.rank < 2:
            raise ConfigurationError("series C needs rank >= 2")
        if self.rank > MAX_RANK:
            raise ConfigurationError(f"rank {self.rank} exceeds the supported maximum {MAX_RANK}")

    def __str__(self):
        return f"{self.series}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "CartanSpec":
        m = re.fullmatch(r"\s*([A-Za-z])_?(\d+)\s*", text)
        if not m:
            raise ConfigurationError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def dim(self) -> int:
        """Dimension of the simple Lie algebra."""
        r = self.rank
        return r * (r + 2) if self.series == "A" else r * (2 * r + 1)


@dataclass(frozen=True, order=True)
class RootVector:
    """Integer vector over the simple roots."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, _coeffs(other))))

    def __sub__(self, other):
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, _coeffs(other))))

    def __neg__(self):
        return RootVector(tuple(-a for a in self.coeffs))

    def __mul__(self, k):
        return RootVector(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        return _linear_combination(self.coeffs, "α")


@dataclass(frozen=True)
class Weight:
    """Exact-rational vector over the fundamental weights."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The fundamental weight lambda_i (1-based)."""
        if not 1 <= i <= rank:
            raise DomainError(f"no fundamental weight lambda_{i} in rank {rank}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(rank)))

    @property
    def integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def int_coeffs(self) -> tuple:
        if not self.integral:
            raise DomainError(f"weight {self} is not integral")
        return tuple(int(c) for c in self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coeffs, _coeffs(other))))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coeffs, _coeffs(other))))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coeffs))

    def __mul__(self, k):
        return Weight(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        return _linear_combination(self.coeffs, "λ")


def _coeffs(x):
    return x.coeffs if isinstance(x, (Weight, RootVector)) else tuple(x)


def _linear_combination(coeffs, symbol):
    terms = []
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        mag = abs(c)
        body = f"{symbol}{i}" if mag == 1 else f"{mag}{symbol}{i}"
        terms.append(("-" if c < 0 else "+") + body)
    if not terms:
        return "0"
    out = "".join(terms)
    return out[1:] if out.startswith("+") else out


# --------------------------------------------------------------------------
# Constants per series


@lru_cache(maxsize=None)
def cartan_matrix(spec: CartanSpec) -> tuple:
    r = spec.rank
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
        if i + 1 < r:
            a[i][i + 1] = -1
            a[i + 1][i] = -1
    if spec.series == "C":
        # <alpha_r, alpha_{r-1}^vee> = -2: the long root seen from the short coroot.
        a[r - 2][r - 1] = -2
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def root_lengths(spec: CartanSpec) -> tuple:
    """Half squared lengths d_i of the simple roots (short roots have d = 1)."""
    d = [1] * spec.rank
    if spec.series == "C":
        d[-1] = 2
    return tuple(d)


@lru_cache(maxsize=None)
def inverse_cartan_matrix(spec: CartanSpec) -> tuple:
    a = cartan_matrix(spec)
    r = spec.rank
    m = [[Fraction(a[i][j]) for j in range(r)] + [Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(r):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(tuple(row[r:]) for row in m)


def bilinear_form_simple(spec: CartanSpec) -> tuple:
    """Gram matrix (alpha_i, alpha_j) of the invariant form, short roots of length^2 2."""
    a = cartan_matrix(spec)
    d = root_lengths(spec)
    return tuple(tuple(d[i] * a[i][j] for j in range(spec.rank)) for i in range(spec.rank))


# --------------------------------------------------------------------------
# Coordinate changes


def to_simple_root_coords(spec: CartanSpec, mu) -> tuple:
    """Coefficients c with mu = sum c_i alpha_i (exact rationals)."""
    f = _coeffs(mu)
    inv = inverse_cartan_matrix(spec)
    r = spec.rank
    return tuple(sum((inv[j][i] * f[i] for i in range(r)), Fraction(0)) for j in range(r))


def to_fundamental_coords(spec: CartanSpec, c) -> Weight:
    """The weight sum c_j alpha_j expressed over fundamental weights."""
    c = _coeffs(c)
    a = cartan_matrix(spec)
    r = spec.rank
    return Weight(tuple(sum(a[i][j] * Fraction(c[j]) for j in range(r)) for i in range(r)))


def root_as_weight(spec: CartanSpec, alpha: RootVector) -> Weight:
    return to_fundamental_coords(spec, alpha.coeffs)


def inner_product(spec: CartanSpec, mu, nu) -> Fraction:
    """Invariant form on weights; arguments in fundamental coordinates."""
    # (lambda_i, alpha_j) = d_j delta_ij, so (mu, nu) = sum_j mu_j d_j c_j(nu).
    c = to_simple_root_coords(spec, nu)
    d = root_lengths(spec)
    return sum((Fraction(m) * d[j] * c[j] for j, m in enumerate(_coeffs(mu))), Fraction(0))


def root_norm(spec: CartanSpec, alpha) -> int:
    b = bilinear_form_simple(spec)
    c = _coeffs(alpha)
    r = spec.rank
    return sum(c[i] * b[i][j] * c[j] for i in range(r) for j in range(r))


def coroot_pairing_simple(spec: CartanSpec, c, alpha) -> Fraction:
    """<x, alpha^vee> for x given in simple-root coordinates."""
    b = bilinear_form_simple(spec)
    a = _coeffs(alpha)
    r = spec.rank
    num = sum(Fraction(c[i]) * b[i][j] * a[j] for i in range(r) for j in range(r))
    return 2 * num / root_norm(spec, a)


# --------------------------------------------------------------------------
# Roots


@lru_cache(maxsize=None)
def positive_roots(spec: CartanSpec) -> tuple:
    """All positive roots, each exactly once, in graded-lexicographic order."""
    r = spec.rank
    a = cartan_matrix(spec)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # p = length of the alpha_i string below beta, q = p - <beta, alpha_i^vee>
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        p += 1
                    else:
                        break
                q = p - sum(a[i][j] * beta[j] for j in range(r))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    roots = sorted(found, key=lambda c: (sum(c), tuple(-x for x in c)))
    expected = r * (r + 1) // 2 if spec.series == "A" else r * r
    assert len(roots) == expected, (spec, len(roots))
    return tuple(RootVector(c) for c in roots)


def simple_root(spec: CartanSpec, i: int) -> RootVector:
    if not 1 <= i <= spec.rank:
        raise DomainError(f"no simple root alpha_{i} in {spec}")
    return RootVector(tuple(int(j == i - 1) for j in range(spec.rank)))


def is_root(spec: CartanSpec, alpha) -> bool:
    c = RootVector(_coeffs(alpha))
    roots = _root_set(spec)
    return c in roots or -c in roots


@lru_cache(maxsize=None)
def _root_set(spec):
    return frozenset(positive_roots(spec))


def cartan_pairing(spec: CartanSpec, mu, alpha) -> Fraction:
    """<mu, alpha^vee> for a weight mu (fundamental coords) and a root alpha."""
    if not is_root(spec, alpha):
        raise DomainError(f"{alpha} is not a root of {spec}")
    a = _coeffs(alpha)
    d = root_lengths(spec)
    num = sum((Fraction(m) * d[j] * a[j] for j, m in enumerate(_coeffs(mu))), Fraction(0))
    return 2 * num / root_norm(spec, a)


@lru_cache(maxsize=None)
def weyl_vector(spec: CartanSpec) -> Weight:
    return Weight((1,) * spec.rank)


def half_sum(spec: CartanSpec, roots: Iterable[RootVector]) -> Weight:
    total = [0] * spec.rank
    for beta in roots:
        for i, c in enumerate(beta):
            total[i] += c
    return to_fundamental_coords(spec, [Fraction(t, 2) for t in total])


# --------------------------------------------------------------------------
# Names in the beta / gamma notation used for the diagrams


def root_name(spec: CartanSpec, alpha) -> str:
    """Name a positive root as ``β^{i,j}`` (contiguous 0/1 support) or ``γ^{i,j}`` (C series)."""
    c = _coeffs(alpha)
    if not is_root(spec, c) or any(x < 0 for x in c):
        raise DomainError(f"{alpha} is not a positive root of {spec}")
    support = [i + 1 for i, x in enumerate(c) if x]
    if max(c) == 1:
        return f"β^{{{support[0]},{support[-1]}}}"
    # gamma^{i,j} = beta^{i,k-1} + beta^{j,k}: i = first index, j = first coefficient 2
    i = support[0]
    j = next(t + 1 for t, x in enumerate(c) if x == 2)
    return f"γ^{{{i},{j}}}"


_NAME_RE = re.compile(r"\s*(β|γ|b|g|beta|gamma)\^?\{?\s*(\d+)\s*,\s*(\d+)\s*\}?\s*")


def root_from_name(spec: CartanSpec, name: str) -> RootVector:
    """Inverse of :func:`root_name`; accepts ``beta^{2,3}`` style ASCII too."""
    m = _NAME_RE.fullmatch(name)
    if not m:
        raise DomainError(f"cannot parse root name {name!r}")
    kind, i, j = m.group(1), int(m.group(2)), int(m.group(3))
    r = spec.rank
    if kind in ("β", "b", "beta"):
        if not 1 <= i <= j <= r:
            raise DomainError(f"β^{{{i},{j}}} out of range for {spec}")
        c = [int(i <= t + 1 <= j) for t in range(r)]
    else:
        if spec.series != "C":
            raise DomainError("γ roots only exist in series C")
        k = r
        if not (1 <= i <= k - 1 and 1 <= j <= k):
            raise DomainError(f"γ^{{{i},{j}}} out of range for {spec}")
        c = [int(i <= t + 1 <= k - 1) + int(j <= t + 1 <= k) for t in range(r)]
    if not is_root(spec, c):
        raise DomainError(f"{name} is not a root of {spec}")
    return RootVector(c)


def weight_from_simple(spec: CartanSpec, c: Sequence) -> Weight:
    return to_fundamental_coords(spec, c)
