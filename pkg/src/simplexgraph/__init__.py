"""Enumeration and verification of the graph of 2-dimensional q-ary simplex codes."""

from .appendix import AppendixParseError, AppendixTable, load_appendix, parse_appendix
from .field import FieldError, FieldTable, build_field, gf
from .graph import SimplexGraph, Stratification, build_graph, diameter, stratify
from .projective import GeometryError, Hyperplane, LineCode, ProjectiveSpace, ProjPoint
from .simplex import SUPPORTED_Q, SimplexUniverse, build_universe, is_simplex_vector, universe
from .symmetry import GroupOnLines, MonomialMap, full_projective_group, orbits, stabilizer_of_line
from .verifier import CheckResult, Report, RunConfig, run_suites

__version__ = "0.1.0"

__all__ = [
    "AppendixParseError",
    "AppendixTable",
    "CheckResult",
    "FieldError",
    "FieldTable",
    "GeometryError",
    "GroupOnLines",
    "Hyperplane",
    "LineCode",
    "MonomialMap",
    "ProjPoint",
    "ProjectiveSpace",
    "Report",
    "RunConfig",
    "SUPPORTED_Q",
    "SimplexGraph",
    "SimplexUniverse",
    "Stratification",
    "build_field",
    "build_graph",
    "build_universe",
    "diameter",
    "full_projective_group",
    "gf",
    "is_simplex_vector",
    "load_appendix",
    "orbits",
    "parse_appendix",
    "run_suites",
    "stabilizer_of_line",
    "stratify",
    "universe",
]
