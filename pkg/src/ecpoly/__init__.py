"""Exact computation toolkit for connected edge cover polynomials.

The oracle enumerates edge subsets and is deliberately naive; closed
forms, the deletion recurrence, catalogs, and recorded claims are all
checked against it rather than trusted.
"""

from .claims import (
    AGREE,
    DISAGREE,
    NOT_APPLICABLE,
    Claim,
    ClaimResult,
    SUITES,
    VerificationReport,
    all_claim_ids,
    suite_claims,
    verify_claims,
)
from .equivalence import EquivalenceScan, equivalence_classes
from .errors import (
    BadParameters,
    DuplicateEdge,
    EcpolyError,
    EdgeOutOfRange,
    IntegerOverflow,
    LoopEdge,
    MalformedGraph6,
    MalformedPolynomialJson,
    RecursionDepthExceeded,
    SizeCapExceeded,
    UnknownClaim,
    UnsupportedSize,
    VertexOutOfRange,
    ZeroPolynomial,
)
from .families import (
    FamilySpec,
    circular_ladder_graph,
    complete_bipartite_graph,
    complete_graph,
    corona_k1,
    cycle_graph,
    enumerate_connected_graphs,
    enumerate_connected_regular,
    friendship_graph,
    make_family,
    parse_family_text,
    path_graph,
    petersen_graph,
)
from .formulas import (
    PolyStats,
    formula_complete,
    formula_corona_complete,
    formula_cycle,
    formula_cycle_step,
    formula_eval,
    formula_friendship,
    formula_path,
    formula_path_step,
    poly_stats,
)
from .graphs import (
    EdgeSubset,
    Graph,
    build_graph,
    canonical_graph,
    canonicalize,
    covered_and_connected,
    delete_edge,
    delete_vertex,
    is_connected,
    is_isomorphic,
    parse_graph6,
    relabel_graph,
    write_graph6,
)
from .oracle import (
    DEFAULT_CONFIG,
    DEFAULT_MAX_EDGES,
    OracleConfig,
    connected_edge_cover_polynomial,
    edge_cover_polynomial,
    spanning_tree_count,
)
from .polynomials import ONE, X, ZERO, IntPolynomial, times_x_plus_one
from .recurrence import (
    EdgeScanEntry,
    RecurrenceTrace,
    expand_edge,
    lowest_min_degree_edge,
    recurrence_ec,
    recurrence_scan,
)

__version__ = "0.1.0"

__all__ = [
    "AGREE",
    "DISAGREE",
    "NOT_APPLICABLE",
    "Claim",
    "ClaimResult",
    "SUITES",
    "VerificationReport",
    "all_claim_ids",
    "suite_claims",
    "verify_claims",
    "EquivalenceScan",
    "equivalence_classes",
    "BadParameters",
    "DuplicateEdge",
    "EcpolyError",
    "EdgeOutOfRange",
    "IntegerOverflow",
    "LoopEdge",
    "MalformedGraph6",
    "MalformedPolynomialJson",
    "RecursionDepthExceeded",
    "SizeCapExceeded",
    "UnknownClaim",
    "UnsupportedSize",
    "VertexOutOfRange",
    "ZeroPolynomial",
    "FamilySpec",
    "circular_ladder_graph",
    "complete_bipartite_graph",
    "complete_graph",
    "corona_k1",
    "cycle_graph",
    "enumerate_connected_graphs",
    "enumerate_connected_regular",
    "friendship_graph",
    "make_family",
    "parse_family_text",
    "path_graph",
    "petersen_graph",
    "PolyStats",
    "formula_complete",
    "formula_corona_complete",
    "formula_cycle",
    "formula_cycle_step",
    "formula_eval",
    "formula_friendship",
    "formula_path",
    "formula_path_step",
    "poly_stats",
    "EdgeSubset",
    "Graph",
    "build_graph",
    "canonical_graph",
    "canonicalize",
    "covered_and_connected",
    "delete_edge",
    "delete_vertex",
    "is_connected",
    "is_isomorphic",
    "parse_graph6",
    "relabel_graph",
    "write_graph6",
    "DEFAULT_CONFIG",
    "DEFAULT_MAX_EDGES",
    "OracleConfig",
    "connected_edge_cover_polynomial",
    "edge_cover_polynomial",
    "spanning_tree_count",
    "ONE",
    "X",
    "ZERO",
    "IntPolynomial",
    "times_x_plus_one",
    "EdgeScanEntry",
    "RecurrenceTrace",
    "expand_edge",
    "lowest_min_degree_edge",
    "recurrence_ec",
    "recurrence_scan",
    "__version__",
]
