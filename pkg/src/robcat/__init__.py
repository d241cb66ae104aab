"""Valid drawings of Robinson dissimilarity spaces in caterpillars."""
from .core import (
    DissimilaritySpace,
    ElementOrder,
    FiniteMetric,
    ParseError,
    SpaceError,
    find_compatible_order,
    format_space,
    is_identity_compatible,
    is_strict,
    parse_space,
    permute,
)
from .feasibility import (
    Certificate,
    GordanOutcome,
    RationalMatrix,
    build_constraints,
    draw_in_caterpillar,
    eliminate_redundant,
    inverse_B_transposed,
    matrix_Y,
    midpoint_condition,
    partition_BN,
    single_nonredundant_condition,
    solve_gordan,
    solve_lps,
    verify_outcome,
)
from .strictify import center_matrix, left_center, pair_ranking, right_center, strict_mapping
from .treegeom import (
    Caterpillar,
    caterpillar_distance,
    caterpillar_from_metric,
    caterpillar_metric,
    four_point_holds,
    gromov_product,
    sfpc_holds,
    verify_valid_drawing,
)

from .milp import MilpConfig, export_milp

__version__ = "0.1.0"

__all__ = [
    "build_constraints",
    "Caterpillar",
    "caterpillar_distance",
    "caterpillar_from_metric",
    "caterpillar_metric",
    "center_matrix",
    "Certificate",
    "DissimilaritySpace",
    "draw_in_caterpillar",
    "ElementOrder",
    "eliminate_redundant",
    "export_milp",
    "find_compatible_order",
    "FiniteMetric",
    "format_space",
    "four_point_holds",
    "GordanOutcome",
    "gromov_product",
    "inverse_B_transposed",
    "is_identity_compatible",
    "is_strict",
    "left_center",
    "matrix_Y",
    "midpoint_condition",
    "MilpConfig",
    "pair_ranking",
    "parse_space",
    "ParseError",
    "partition_BN",
    "permute",
    "RationalMatrix",
    "right_center",
    "sfpc_holds",
    "single_nonredundant_condition",
    "solve_gordan",
    "solve_lps",
    "SpaceError",
    "strict_mapping",
    "verify_outcome",
    "verify_valid_drawing",
]
