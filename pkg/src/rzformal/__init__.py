"""Equivariant formality of reflection actions on moment-angle complexes.

Decides, for a simplicial complex K and a subgroup A of the coordinate
2-torus (Z/2)^m, whether the A-action on the real moment-angle complex
of K is equivariantly formal over F2, equivalently whether the group
cohomology of the corresponding coabelian reflection subgroup is free
over its polynomial part. Several independent criteria are implemented
and cross-checked; see the README for the CLI and census harness.
"""

from .cohomology import BettiTable, reduced_betti, restriction_is_trivial
from .census import CensusRecord, run_census, verify_census
from .f2 import BACKEND, F2Matrix, Subgroup
from .formality import (
    FixedPointModelError,
    FormalityReport,
    betti_sum_oracle,
    decide,
    evaluate_all,
    flag_criterion,
    general_criterion,
    reports_agree,
    torus_oracle,
)
from .group_report import GroupReport, PoincareSeries, coabelian_report, poincare_series
from .moment_angle import (
    CubicalComplex,
    SpaceBettiTable,
    build_cubical,
    cubical_betti,
    fixed_betti_via_link,
    fixed_subcomplex,
    hochster_complex_betti,
    hochster_real_betti,
)
from .simplicial import Graph, SimplicialComplex

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BettiTable",
    "CensusRecord",
    "CubicalComplex",
    "F2Matrix",
    "FixedPointModelError",
    "FormalityReport",
    "Graph",
    "GroupReport",
    "PoincareSeries",
    "SimplicialComplex",
    "SpaceBettiTable",
    "Subgroup",
    "betti_sum_oracle",
    "build_cubical",
    "coabelian_report",
    "cubical_betti",
    "decide",
    "evaluate_all",
    "fixed_betti_via_link",
    "fixed_subcomplex",
    "flag_criterion",
    "general_criterion",
    "hochster_complex_betti",
    "hochster_real_betti",
    "poincare_series",
    "reduced_betti",
    "reports_agree",
    "restriction_is_trivial",
    "run_census",
    "torus_oracle",
    "verify_census",
]
