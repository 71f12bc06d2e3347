"""Exact BGG diagram combinatorics for |k|-graded sl and sp, with a weight
criterion for subcomplexes, a brute-force homology oracle and a symbol lab."""

from .bggdiag import BGGDiagram, adjoint_weight, bgg_diagram, module_dim
from .errors import BGGError, ConfigurationError, ConsistencyError, DomainError, GuardError
from .hasse import HasseGraph, hasse_graph
from .parabolic import GradingInfo, grading_from_text
from .rootlat import CartanSpec, RootVector, Weight, positive_roots
from .vanish import criterion, e0_from_names, e0_preset, find_subcomplexes

__version__ = "0.1.0"

__all__ = [
    "BGGDiagram",
    "BGGError",
    "CartanSpec",
    "ConfigurationError",
    "ConsistencyError",
    "DomainError",
    "GradingInfo",
    "GuardError",
    "HasseGraph",
    "RootVector",
    "Weight",
    "adjoint_weight",
    "bgg_diagram",
    "criterion",
    "e0_from_names",
    "e0_preset",
    "find_subcomplexes",
    "grading_from_text",
    "hasse_graph",
    "module_dim",
    "positive_roots",
]
