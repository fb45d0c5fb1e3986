"""Fully dynamic b-Suitor: half-approximate maximum weight b-matching under edge updates."""

__version__ = "0.1.0"

from .dynamic import (
    DynamicMatcher,
    EdgeOp,
    UpdatePath,
    UpdateStats,
    apply_batch_insert,
    apply_batch_mixed,
    apply_batch_remove,
    apply_insert,
    apply_remove,
    find_affected,
    format_batch,
    parse_batch,
)
from .errors import (
    GraphError,
    DuplicateEdgeError,
    SelfLoopError,
    NonPositiveWeightError,
    MissingEdgeError,
    NodeRangeError,
    ParseError,
    MixedOwnerError,
    QueueError,
    AlreadyPresentError,
    NotPresentError,
    WouldNotImproveError,
    BatchConflictError,
    TooLargeError,
    NotEnoughCandidatesError,
)
from .estimator import BSuitorMatcher, DynamicBSuitor
from .generators import gen_b_function, gen_gnp, gen_rmat, sample_insert_batch, sample_remove_batch
from .graph import DynamicGraph, Edge, Proposal, compare_proposals, proposal_key, read_edge_list, write_edge_list
from .oracle import check_half_approx, check_static_equivalence, exact_mwbm, greedy_bmatching
from .static import find_partner, run_static
from .suitor import BFunction, MatchingState

__all__ = [
    "__version__",
    "DynamicMatcher",
    "EdgeOp",
    "UpdatePath",
    "UpdateStats",
    "apply_batch_insert",
    "apply_batch_mixed",
    "apply_batch_remove",
    "apply_insert",
    "apply_remove",
    "find_affected",
    "format_batch",
    "parse_batch",
    "GraphError",
    "DuplicateEdgeError",
    "SelfLoopError",
    "NonPositiveWeightError",
    "MissingEdgeError",
    "NodeRangeError",
    "ParseError",
    "MixedOwnerError",
    "QueueError",
    "AlreadyPresentError",
    "NotPresentError",
    "WouldNotImproveError",
    "BatchConflictError",
    "TooLargeError",
    "NotEnoughCandidatesError",
    "BSuitorMatcher",
    "DynamicBSuitor",
    "gen_b_function",
    "gen_gnp",
    "gen_rmat",
    "sample_insert_batch",
    "sample_remove_batch",
    "DynamicGraph",
    "Edge",
    "Proposal",
    "compare_proposals",
    "proposal_key",
    "read_edge_list",
    "write_edge_list",
    "check_half_approx",
    "check_static_equivalence",
    "exact_mwbm",
    "greedy_bmatching",
    "find_partner",
    "run_static",
    "BFunction",
    "MatchingState",
]
