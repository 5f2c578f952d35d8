"""Representation zeta functions of iterated permutational wreath products."""

from .catalog import builtin, load_group
from .chardeg import DegreePattern, degree_pattern
from .dirichlet import DirichletPoly, RationalDirichletPoly
from .errors import WreathZetaError
from .limit import LimitZeta, finite_level_zeta, limit_zeta
from .permgroup import Permutation, PermGroup, close_generators
from .wreath import build_context, functional_equation, specialize, wreath_zeta

__version__ = "0.1.0"

__all__ = [
    "DegreePattern", "DirichletPoly", "LimitZeta", "PermGroup", "Permutation",
    "RationalDirichletPoly", "WreathZetaError", "build_context", "builtin",
    "close_generators", "degree_pattern", "finite_level_zeta", "functional_equation",
    "limit_zeta", "load_group", "specialize", "wreath_zeta",
]
