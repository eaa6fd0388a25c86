"""Exact feedback vertex set by greedy max-degree branching."""

from .audit import AuditLog, verify_audit
from .base import cycle_rank, solve_degree_two
from .branching import SearchStats, minimum_fvs, select_pivot, solve
from .graph import (
    Graph,
    GraphError,
    UndoJournal,
    build_graph,
    check_degree_sum_identity,
    component_count,
    find_cycle,
    is_forest,
)
from .oracle import brute_force_min_fvs, gen_planted, gen_random_graph
from .reductions import ExtendedInstance, ReductionOutcome, Status, reduce_to_fixpoint

__all__ = [
    "AuditLog",
    "ExtendedInstance",
    "Graph",
    "GraphError",
    "ReductionOutcome",
    "SearchStats",
    "Status",
    "UndoJournal",
    "brute_force_min_fvs",
    "build_graph",
    "check_degree_sum_identity",
    "component_count",
    "cycle_rank",
    "find_cycle",
    "gen_planted",
    "gen_random_graph",
    "is_forest",
    "minimum_fvs",
    "reduce_to_fixpoint",
    "select_pivot",
    "solve",
    "solve_degree_two",
    "verify_audit",
]
