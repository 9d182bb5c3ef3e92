"""Exact toolkit for cyclic set graphs: disjointness graphs of k-subsets,
their 2-separated and well-spread subgraphs, circular complete graphs, and
the machinery to compute and certify their chromatic invariants with
rational arithmetic.
"""

from .cyclic import (
    Arc,
    CriticalParams,
    CyclicSubset,
    ReductionStep,
    ReductionTrace,
    canonical_well_spread,
    critical_params,
    euclid_reduce,
    is_r_separated,
    is_well_spread,
    is_well_spread_dual,
    rotate,
)
from .errors import (
    InvalidParams,
    NotAnEdge,
    NotCoprime,
    NotCycleEdge,
    NotWellSpread,
    ResourceCap,
    WellspreadError,
)
from .graphs import (
    FamilyParams,
    LabeledGraph,
    MapKind,
    VertexMap,
    build_circular,
    build_interlacing,
    build_kneser,
    build_q,
    build_schrijver,
    delete_edge,
    delete_vertex,
    is_cycle_edge,
    is_interlacing_edge,
    natural_representation,
    validate_map,
)
from .independence import (
    enumerate_maximal_independent_sets,
    independence_number,
    max_independent_sets,
    max_weight_independent_set,
    maximum_independent_set,
)
from .coloring import chromatic_number, find_proper_coloring, greedy_coloring, is_t_colorable
from .fractional import (
    FractionalColoring,
    covering_lp_over_pool,
    fractional_chromatic_number,
    verify_fractional_coloring,
)
from .homomorphism import (
    circular_candidates,
    circular_chromatic_number,
    find_homomorphism,
    find_isomorphism,
)
from .certificates import (
    NeighborEntry,
    RightNeighborTable,
    circular_isomorphism,
    edge_deleted_coloring,
    edge_deleted_retraction,
    find_subgraph_qab,
    right_j_neighbors,
    scaling_isomorphism,
    star_positions,
    vertex_deleted_coloring,
    vertex_deleted_retraction,
)
from .criticality import (
    BoundaryEntry,
    BoundaryReport,
    CriticalityReport,
    Invariant,
    SweepSummary,
    circular_edge_corollary,
    edge_criticality,
    evaluate_invariant,
    q_equals_schrijver_sweep,
    vertex_criticality,
)
from .serialize import (
    SCHEMA_VERSION,
    boundary_from_document,
    boundary_to_document,
    build_family,
    coloring_from_document,
    coloring_to_document,
    dumps,
    fraction_from_str,
    fraction_to_str,
    graph_from_document,
    graph_to_document,
    graph_to_dot,
    map_from_document,
    map_to_document,
    report_from_document,
    report_to_document,
    trace_from_document,
    trace_to_document,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BoundaryEntry",
    "BoundaryReport",
    "CriticalParams",
    "CriticalityReport",
    "CyclicSubset",
    "FamilyParams",
    "FractionalColoring",
    "Invariant",
    "InvalidParams",
    "LabeledGraph",
    "MapKind",
    "NeighborEntry",
    "NotAnEdge",
    "NotCoprime",
    "NotCycleEdge",
    "NotWellSpread",
    "ReductionStep",
    "ReductionTrace",
    "ResourceCap",
    "RightNeighborTable",
    "SCHEMA_VERSION",
    "SweepSummary",
    "VertexMap",
    "WellspreadError",
    "boundary_from_document",
    "boundary_to_document",
    "build_circular",
    "build_family",
    "build_interlacing",
    "build_kneser",
    "build_q",
    "build_schrijver",
    "canonical_well_spread",
    "chromatic_number",
    "circular_candidates",
    "circular_chromatic_number",
    "circular_edge_corollary",
    "circular_isomorphism",
    "coloring_from_document",
    "coloring_to_document",
    "covering_lp_over_pool",
    "critical_params",
    "delete_edge",
    "delete_vertex",
    "dumps",
    "edge_criticality",
    "edge_deleted_coloring",
    "edge_deleted_retraction",
    "enumerate_maximal_independent_sets",
    "euclid_reduce",
    "evaluate_invariant",
    "find_homomorphism",
    "find_isomorphism",
    "find_proper_coloring",
    "find_subgraph_qab",
    "fraction_from_str",
    "fraction_to_str",
    "fractional_chromatic_number",
    "graph_from_document",
    "graph_to_document",
    "graph_to_dot",
    "greedy_coloring",
    "independence_number",
    "is_cycle_edge",
    "is_interlacing_edge",
    "is_r_separated",
    "is_t_colorable",
    "is_well_spread",
    "is_well_spread_dual",
    "map_from_document",
    "map_to_document",
    "max_independent_sets",
    "max_weight_independent_set",
    "maximum_independent_set",
    "natural_representation",
    "q_equals_schrijver_sweep",
    "report_from_document",
    "report_to_document",
    "right_j_neighbors",
    "rotate",
    "scaling_isomorphism",
    "star_positions",
    "trace_from_document",
    "trace_to_document",
    "validate_map",
    "verify_fractional_coloring",
    "vertex_criticality",
    "vertex_deleted_coloring",
    "vertex_deleted_retraction",
]
