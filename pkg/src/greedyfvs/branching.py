"""Greedy max-degree branching for feedback vertex set.

Each search node reduces its instance, then either finishes (empty graph or
all undecided vertices of degree two) or branches on the undecided vertex of
largest degree: first delete it, and only if that fails make it undeletable.

With cutoffs enabled a path is abandoned once it would move more than
``3 * k`` vertices into F by branching, which bounds the depth by ``4k + 1``.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable
from dataclasses import dataclass

from .audit import AuditLog
from .base import cycle_rank, solve_degree_two
from .graph import Graph, induces_forest
from .reductions import ExtendedInstance, Status, reduce_to_fixpoint


@dataclass
class SearchStats:
    nodes_visited: int = 0
    max_path_length: int = 0
    cutoff_hits: int = 0
    f_prime_on_success: int | None = None


def select_pivot(inst: ExtendedInstance) -> int:
    """Undecided vertex of maximum degree, smallest label on ties."""
    f_set = inst.f_set
    best = None
    best_deg = -1
    for v, nb in inst.graph.adj.items():
        if v in f_set:
            continue
        d = len(nb)
        if d > best_deg or (d == best_deg and v < best):
            best, best_deg = v, d
    if best is None:
        raise ValueError("no undecided vertex left to branch on")
    return best


class _Search:
    def __init__(self, inst: ExtendedInstance, cutoffs: bool, stats: SearchStats, audit: AuditLog | None):
        self.inst = inst
        self.k0 = inst.budget
        self.cutoffs = cutoffs
        self.stats = stats
        self.audit = audit
        if audit is not None:
            inst.listener = self._on_delete

    def _on_delete(self, v: int, reason: str) -> None:
        # degree-two leaves are accounted for by replay once they succeed
        if reason != "base":
            self.audit.record_deletion(self.inst.graph, v, reason)

    def _check_degrees(self, parent_degrees: dict[int, int] | None) -> None:
        g = self.inst.graph
        if parent_degrees is None:
            return
        for v in g:
            if v not in parent_degrees or g.degree(v) > parent_degrees[v]:
                self.audit.invariant_violations.append(
                    f"degree of {v} increased along a path ({parent_degrees.get(v)} -> {g.degree(v)})"
                )

    def node(self, depth: int, f_prime: int, parent_degrees: dict[int, int] | None = None) -> list[int] | None:
        inst, g, stats, audit = self.inst, self.inst.graph, self.stats, self.audit
        stats.nodes_visited += 1
        stats.max_path_length = max(stats.max_path_length, depth)
        if audit is not None:
            self._check_degrees(parent_degrees)

        outcome = reduce_to_fixpoint(inst)
        forced = outcome.forced_deletions
        if outcome.status is Status.BUDGET_EXHAUSTED:
            return None
        if outcome.status is Status.SOLVED_EMPTY:
            stats.f_prime_on_success = f_prime
            return forced

        v = select_pivot(inst)
        if g.degree(v) == 2:
            # the loop below deletes exactly cycle_rank vertices
            if cycle_rank(g) > inst.budget:
                return None
            entry = g.copy() if audit is not None else None
            removed = solve_degree_two(inst)
            if audit is not None:
                audit.replay_base(entry, removed)
            stats.f_prime_on_success = f_prime
            return forced + removed

        degrees = None
        if audit is not None:
            low = [u for u in g if g.degree(u) < 2]
            if low:
                self.audit.invariant_violations.append(f"vertices of degree < 2 at a branch point: {low}")
            degrees = g.degrees()

        mark = inst.mark()
        audit_mark = audit.mark() if audit is not None else None

        inst.delete(v, "branch")
        inst.budget -= 1
        sub = self.node(depth + 1, f_prime, degrees)
        if sub is not None:
            return forced + [v] + sub
        inst.rollback(mark)
        if audit is not None:
            audit.rollback(audit_mark)

        if self.cutoffs and f_prime + 1 > 3 * self.k0:
            stats.cutoff_hits += 1
            return None
        inst.f_set.add(v)
        if audit is not None:
            audit.record_f_move(v, g.degree(v))
            if not inst.f_is_forest():
                audit.invariant_violations.append(f"moving {v} into F created a cycle inside F")
        sub = self.node(depth + 1, f_prime + 1, degrees)
        if sub is not None:
            return forced + sub
        inst.rollback(mark)
        if audit is not None:
            audit.rollback(audit_mark)
        return None


def solve(
    graph: Graph,
    k: int,
    forbidden: Iterable[int] = (),
    cutoffs: bool = True,
    stats: SearchStats | None = None,
    audit: AuditLog | None = None,
) -> frozenset[int] | None:
    """Find a feedback vertex set of size <= k avoiding ``forbidden``, or None.

    ``graph`` is not modified. ``forbidden`` must induce a forest. Pass a
    :class:`SearchStats` and/or :class:`AuditLog` to collect instrumentation.
    """
    forbidden = set(forbidden)
    if not forbidden <= set(graph):
        raise ValueError(f"forbidden vertices not in graph: {sorted(forbidden - set(graph))}")
    if not induces_forest(graph, forbidden):
        raise ValueError("forbidden vertices must induce a forest")
    stats = SearchStats() if stats is None else stats
    inst = ExtendedInstance(graph.copy(), k, forbidden)
    if not cutoffs:
        # uncapped paths can be as long as the vertex count
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * graph.n + 1000))
    found = _Search(inst, cutoffs, stats, audit).node(0, 0)
    if audit is not None:
        audit.found = found is not None
        if found is None:
            audit.rollback((0, 0, 0))
    return None if found is None else frozenset(found)


def minimum_fvs(graph: Graph, forbidden: Iterable[int] = (), cutoffs: bool = True) -> frozenset[int]:
    """Smallest feedback vertex set, by trying budgets 0, 1, 2, ... in turn."""
    forbidden = set(forbidden)
    for k in range(graph.n + 1):
        found = solve(graph, k, forbidden, cutoffs)
        if found is not None:
            return found
    raise AssertionError("deleting every allowed vertex must leave a forest")
