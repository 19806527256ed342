"""Exact toolkit for discriminantal arrangements.

Builds intersection lattices of the arrangements B(n, k) over exact
rational arithmetic, studies their support metric inside the hypercube
(partial-cube and median-graph verification, dependency posets,
geodesics, interval cubes), and measures random-support overlap laws
both exactly and by seeded Monte Carlo.  See the `disc` command line
tool for the orchestrated workflows.
"""

__version__ = "0.1.0"

from .circuits import (
    all_circuits,
    colex_rank,
    colex_unrank,
    johnson_adjacent,
    johnson_distance,
    johnson_neighbors,
    johnson_stats,
)
from .cubemetric import (
    dependency_poset,
    distance,
    free_mode,
    geodesics,
    geometric_mode,
    median,
    run_claims,
    verify_distance_theorem,
    verify_interval_cube,
    verify_median_graph,
    verify_partial_cube,
)
from .errors import DiscarrError, GenericityError, ScaleGuardError
from .exactgeom import (
    ArrangementSpec,
    RationalMatrix,
    discriminantal_normal,
    generate_generic_normals,
    in_span,
    rank,
)
from .lattice import Lattice, build_lattice, closure
from .randover import (
    ExperimentConfig,
    OverlapLaw,
    concentration_check,
    hypergeom_pmf,
    prob_disjoint,
    sample_overlaps,
    threshold_sweep,
    tv_distance,
)

__all__ = [
    "__version__",
    "DiscarrError",
    "GenericityError",
    "ScaleGuardError",
    "ArrangementSpec",
    "RationalMatrix",
    "generate_generic_normals",
    "discriminantal_normal",
    "rank",
    "in_span",
    "all_circuits",
    "colex_rank",
    "colex_unrank",
    "johnson_adjacent",
    "johnson_distance",
    "johnson_neighbors",
    "johnson_stats",
    "Lattice",
    "build_lattice",
    "closure",
    "free_mode",
    "geometric_mode",
    "distance",
    "median",
    "dependency_poset",
    "geodesics",
    "run_claims",
    "verify_distance_theorem",
    "verify_partial_cube",
    "verify_median_graph",
    "verify_interval_cube",
    "OverlapLaw",
    "ExperimentConfig",
    "hypergeom_pmf",
    "prob_disjoint",
    "tv_distance",
    "sample_overlaps",
    "threshold_sweep",
    "concentration_check",
]
