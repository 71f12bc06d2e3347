"""Gradings of g from crossed Dynkin diagrams."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ConfigurationError
from .rootlat import CartanSpec, half_sum, positive_roots


@dataclass(frozen=True)
class Crossing:
    crossed: tuple

    def __post_init__(self):
        nodes = tuple(sorted(set(int(i) for i in self.crossed)))
        if not nodes:
            raise ConfigurationError("a crossing needs at least one crossed node")
        object.__setattr__(self, "crossed", nodes)

    def validate(self, spec: CartanSpec):
        bad = [i for i in self.crossed if not 1 <= i <= spec.rank]
        if bad:
            raise ConfigurationError(f"crossed nodes {bad} out of range 1..{spec.rank} for {spec}")

    def __contains__(self, i):
        return i in self.crossed

    def __str__(self):
        return "x{" + ",".join(str(i) for i in self.crossed) + "}"


_DIAGRAM_RE = re.compile(r"\s*([A-Za-z])_?(\d+)\s*x\s*\{\s*([\d\s,]+)\}\s*")


def parse_diagram(text: str) -> tuple:
    """Parse ``"A5 x{2}"`` into ``(CartanSpec, Crossing)``."""
    m = _DIAGRAM_RE.fullmatch(text)
    if not m:
        raise ConfigurationError(f"cannot parse diagram {text!r}; expected e.g. 'A5 x{{2}}'")
    spec = CartanSpec(m.group(1).upper(), int(m.group(2)))
    try:
        nodes = [int(t) for t in m.group(3).replace(" ", "").split(",") if t]
    except ValueError:
        raise ConfigurationError(f"malformed crossing in {text!r}") from None
    crossing = Crossing(tuple(nodes))
    crossing.validate(spec)
    return spec, crossing


@dataclass(frozen=True)
class GradingInfo:
    spec: CartanSpec
    crossing: Crossing
    k: int
    height: dict = field(compare=False, repr=False)
    delta_plus_g0: tuple = field(repr=False)
    delta_plus_pplus: tuple = field(repr=False)
    dims: dict = field(compare=False, repr=False)

    def __hash__(self):
        return hash((self.spec, self.crossing))

    def __eq__(self, other):
        return isinstance(other, GradingInfo) and (self.spec, self.crossing) == (other.spec, other.crossing)

    def __str__(self):
        return f"{self.spec} {self.crossing}"

    @property
    def g0_simple(self) -> tuple:
        """1-based indices of the uncrossed simple roots."""
        return tuple(i for i in range(1, self.spec.rank + 1) if i not in self.crossing)

    def grade_of(self, alpha) -> int:
        """Sum of the coefficients at crossed nodes (works for any root-lattice vector)."""
        return sum(alpha[i - 1] for i in self.crossing.crossed)

    @cached_property
    def delta0(self):
        """Half-sum of the positive roots of g_0."""
        return half_sum(self.spec, self.delta_plus_g0)

    @property
    def dim_pplus(self) -> int:
        return len(self.delta_plus_pplus)


def grade(spec: CartanSpec, crossing: Crossing) -> GradingInfo:
    crossing.validate(spec)
    roots = positive_roots(spec)
    height = {alpha: sum(alpha[i - 1] for i in crossing.crossed) for alpha in roots}
    g0 = tuple(a for a in roots if height[a] == 0)
    pplus = tuple(a for a in roots if height[a] > 0)
    k = max(height.values())
    dims = {0: spec.rank + 2 * len(g0)}
    for i in range(1, k + 1):
        n = sum(1 for a in pplus if height[a] == i)
        dims[i] = dims[-i] = n
    assert sum(dims.values()) == spec.dim
    return GradingInfo(spec, crossing, k, height, g0, pplus, dims)


def grading_from_text(text: str) -> GradingInfo:
    return grade(*parse_diagram(text))
