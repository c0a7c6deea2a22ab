"""Exact combinatorics of k-alliances and alliance-free sets in graphs
and their Cartesian products.

All types are immutable after construction; every operation is a pure
function of its inputs, so the whole surface is safe for concurrent use.
"""

from .alliances import (
    AllianceKind,
    CanonicalRangeWarning,
    canonical_k_range,
    is_alliance,
    is_defensive_alliance,
    is_offensive_alliance,
    is_powerful_alliance,
)
from .audit import (
    THEOREM_IDS,
    AuditConfig,
    AuditReport,
    StrictGapInstance,
    audit,
    audit_all,
    find_strict_gap_instance,
)
from .freesets import (
    DEFAULT_FREE_SET_BITS,
    MinimalAllianceFamily,
    enumerate_minimal_alliances,
    free_set_monotone_witness,
    is_cover_set,
    is_free_set,
)
from .graph import (
    DEFAULT_EXACT_LIMIT,
    CapacityError,
    EdgeListParseError,
    FactorInvariants,
    Graph,
    SetDegreeView,
    VertexSet,
    boundary_set,
    cartesian_product,
    complete_graph,
    cycle_graph,
    degree_view,
    factor_box,
    family,
    fiber,
    format_edge_list,
    grid_graph,
    independence_number,
    induced_edge_count,
    parse_edge_list,
    path_graph,
    product_coords,
    product_vertex,
    projections,
    random_graph,
    random_tree,
    read_edge_list,
    star_graph,
    vizing_alpha_bound,
    wheel_graph,
    write_edge_list,
)
from .phi import (
    DEFAULT_ORACLE_LIMIT,
    PhiResult,
    phi,
    phi_bruteforce,
    phi_powerful_lower,
    phi_value,
)
from .products import (
    CONSTRUCTIONS,
    ProductWitness,
    box_plus_diagonal_witness,
    box_witness,
    build_witness,
    column_iff_regular,
    column_witness,
    factor_recovery_daf,
    union_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AllianceKind",
    "AuditConfig",
    "AuditReport",
    "CanonicalRangeWarning",
    "CapacityError",
    "CONSTRUCTIONS",
    "DEFAULT_EXACT_LIMIT",
    "DEFAULT_FREE_SET_BITS",
    "DEFAULT_ORACLE_LIMIT",
    "EdgeListParseError",
    "FactorInvariants",
    "Graph",
    "MinimalAllianceFamily",
    "PhiResult",
    "ProductWitness",
    "SetDegreeView",
    "StrictGapInstance",
    "THEOREM_IDS",
    "VertexSet",
    "audit",
    "audit_all",
    "boundary_set",
    "box_plus_diagonal_witness",
    "box_witness",
    "build_witness",
    "canonical_k_range",
    "cartesian_product",
    "column_iff_regular",
    "column_witness",
    "complete_graph",
    "cycle_graph",
    "degree_view",
    "enumerate_minimal_alliances",
    "factor_box",
    "factor_recovery_daf",
    "family",
    "fiber",
    "find_strict_gap_instance",
    "format_edge_list",
    "free_set_monotone_witness",
    "grid_graph",
    "independence_number",
    "induced_edge_count",
    "is_alliance",
    "is_cover_set",
    "is_defensive_alliance",
    "is_free_set",
    "is_offensive_alliance",
    "is_powerful_alliance",
    "parse_edge_list",
    "path_graph",
    "phi",
    "phi_bruteforce",
    "phi_powerful_lower",
    "phi_value",
    "product_coords",
    "product_vertex",
    "projections",
    "random_graph",
    "random_tree",
    "read_edge_list",
    "star_graph",
    "union_witness",
    "vizing_alpha_bound",
    "wheel_graph",
    "write_edge_list",
]
