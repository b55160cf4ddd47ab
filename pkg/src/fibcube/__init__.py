"""Disjoint hypercube packings of Fibonacci cubes.

Exact sequences (packing numbers and uncovered-vertex counts), their
per-residue closed-form polynomials, and an exact branch-and-bound packing
solver that independently verifies both on explicitly constructed cubes.
"""

from .core import (
    MAX_DIMENSION,
    CapacityError,
    FibCube,
    Vertex,
    adjacent,
    build_cube,
    fib,
    vertex_bits,
)
from .packing import (
    PackingResult,
    SolverConfig,
    matching_max,
    max_packing,
    verify_packing,
)
from .polynomials import (
    DegreeBoundViolation,
    RationalPoly,
    derive_poly,
    eval_poly,
    table1,
)
from .sequences import (
    ASYMPTOTICS,
    AsymptoticConstants,
    InternalConsistencyError,
    SequenceTable,
    check_identity,
    coverage_ratio,
    fib_asymptotic_estimate,
    packing_from_uncovered,
    packing_sequence,
    uncovered_sequence,
)
from .subcubes import (
    SubcubePattern,
    cross_check_induced,
    enumerate_patterns,
    is_valid_pattern,
    pattern_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIMENSION",
    "CapacityError",
    "FibCube",
    "Vertex",
    "adjacent",
    "build_cube",
    "fib",
    "vertex_bits",
    "PackingResult",
    "SolverConfig",
    "matching_max",
    "max_packing",
    "verify_packing",
    "DegreeBoundViolation",
    "RationalPoly",
    "derive_poly",
    "eval_poly",
    "table1",
    "ASYMPTOTICS",
    "AsymptoticConstants",
    "InternalConsistencyError",
    "SequenceTable",
    "check_identity",
    "coverage_ratio",
    "fib_asymptotic_estimate",
    "packing_from_uncovered",
    "packing_sequence",
    "uncovered_sequence",
    "SubcubePattern",
    "cross_check_induced",
    "enumerate_patterns",
    "is_valid_pattern",
    "pattern_vertices",
    "__version__",
]
