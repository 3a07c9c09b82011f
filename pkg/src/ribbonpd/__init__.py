"""Orientable ribbon graphs, partial duality, and the partial-dual genus polynomial."""

from .chord import (
    ChordDiagram,
    InterlacementGraph,
    canonical_form,
    components_all_odd_complete,
    enumerate_diagrams,
    from_one_vertex,
    interlacement,
    is_join_prime,
    parse_word,
    to_ribbon_graph,
)
from .core import (
    DisconnectedGraphError,
    GraphStats,
    InvalidGraphError,
    RibbonGraph,
    boundary_component_count,
    boundary_components,
    bouquet_bn,
    connected_components,
    dipole_opposite,
    is_isomorphic,
    join,
    stats,
    tree_path,
    tree_star,
    validate,
)
from .gpoly import (
    GenusPolynomial,
    gamma,
    is_log_concave,
    is_monomial,
    poly_eq,
    poly_mul,
)
from .pdual import (
    MergeSplit,
    check_merge_split,
    check_up_conditions,
    edge_faces,
    edge_type,
    partial_dual,
    partial_dual_reference,
    spanning_boundary_count,
)
from .verify import (
    BnCheck,
    DichotomyCheck,
    VerificationReport,
    scan_log_concavity,
    verify_bn,
    verify_gmt,
    verify_join_prime_dichotomy,
)

__version__ = "0.1.0"

__all__ = [
    "BnCheck",
    "ChordDiagram",
    "DichotomyCheck",
    "DisconnectedGraphError",
    "GenusPolynomial",
    "GraphStats",
    "InterlacementGraph",
    "InvalidGraphError",
    "MergeSplit",
    "RibbonGraph",
    "VerificationReport",
    "boundary_component_count",
    "boundary_components",
    "bouquet_bn",
    "canonical_form",
    "check_merge_split",
    "check_up_conditions",
    "components_all_odd_complete",
    "connected_components",
    "dipole_opposite",
    "edge_faces",
    "edge_type",
    "enumerate_diagrams",
    "from_one_vertex",
    "gamma",
    "interlacement",
    "is_isomorphic",
    "is_join_prime",
    "is_log_concave",
    "is_monomial",
    "join",
    "parse_word",
    "partial_dual",
    "partial_dual_reference",
    "poly_eq",
    "poly_mul",
    "scan_log_concavity",
    "spanning_boundary_count",
    "stats",
    "to_ribbon_graph",
    "tree_path",
    "tree_star",
    "validate",
    "verify_bn",
    "verify_gmt",
    "verify_join_prime_dichotomy",
]
