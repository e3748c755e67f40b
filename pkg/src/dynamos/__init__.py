"""Dynamic monopolies in directed graphs.

A dynamic monopoly (dynamo) is a seed set whose iterated threshold
activation reaches the whole graph.  The package provides the activation
engine, a polynomial-time solver that finds strict-majority dynamos of size
at most floor(n/2), exact rational size bounds, hardness-reduction gadgets
and extremal families, and an exact brute-force oracle for cross-checking.
"""

from . import errors
from ._backend import HAS_COMPILED, backend_name
from .activation import ActivationTrace, activate, is_dynamo
from .decomposition import Condensation, condensation, is_strongly_connected
from .graphs import (
    DirectedGraph,
    Thresholds,
    UndirectedGraph,
    build_graph,
    build_undirected,
    edge_count_between,
    has_two_cycle,
    induced_subgraph,
    simple_majority,
    strict_majority,
)
from .oracle import DEFAULT_LIMIT, forced_vertices, min_dynamo
from .ordering import (
    Ordering,
    dynamo_from_ordering,
    expected_permutation_size,
    in_balance,
    in_balances,
    permutation_dynamo,
    transmit_after,
    transmit_before,
)
from .solver import BoundsReport, bounds_report, density_lower_bound, strict_majority_dynamo
from .strong_solver import (
    BalancedState,
    PivotOrdering,
    classify,
    construct_pivot_ordering,
    half_dynamo_strong,
    improve,
)

__version__ = "0.1.0"

__all__ = [
    "ActivationTrace",
    "BalancedState",
    "BoundsReport",
    "Condensation",
    "DEFAULT_LIMIT",
    "DirectedGraph",
    "HAS_COMPILED",
    "Ordering",
    "PivotOrdering",
    "Thresholds",
    "UndirectedGraph",
    "activate",
    "backend_name",
    "bounds_report",
    "build_graph",
    "build_undirected",
    "classify",
    "condensation",
    "construct_pivot_ordering",
    "density_lower_bound",
    "dynamo_from_ordering",
    "edge_count_between",
    "errors",
    "expected_permutation_size",
    "forced_vertices",
    "half_dynamo_strong",
    "has_two_cycle",
    "improve",
    "in_balance",
    "in_balances",
    "induced_subgraph",
    "is_dynamo",
    "is_strongly_connected",
    "min_dynamo",
    "permutation_dynamo",
    "simple_majority",
    "strict_majority",
    "strict_majority_dynamo",
    "transmit_after",
    "transmit_before",
]
