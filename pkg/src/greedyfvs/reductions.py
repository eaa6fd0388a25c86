"""Degree-one stripping and forced deletions on an extended instance."""

from __future__ import annotations

import enum
import heapq
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .graph import Graph, GraphError, components, induces_forest

# Listener signature: (vertex, reason) called just before the vertex is deleted.
# Reasons: "strip", "forced", "branch", "base".
DeleteListener = Callable[[int, str], None]


class ExtendedInstance:
    """A graph, a deletion budget and a set of undeletable vertices.

    All deletions go through :meth:`delete` so that :meth:`rollback` can
    restore the graph, the budget and the undeletable set together.
    """

    def __init__(self, graph: Graph, budget: int, f_set: Iterable[int] = ()):
        self.graph = graph
        self.budget = budget
        self.f_set: set[int] = set(f_set)
        missing = self.f_set - set(graph)
        if missing:
            raise GraphError(f"undeletable vertices not in graph: {sorted(missing)}")
        self.listener: DeleteListener | None = None

    def undecided(self) -> list[int]:
        return [v for v in self.graph if v not in self.f_set]

    def delete(self, v: int, reason: str = "strip") -> None:
        if self.listener is not None:
            self.listener(v, reason)
        self.graph.delete_vertex(v)
        self.f_set.discard(v)

    def mark(self) -> tuple[int, int, frozenset[int]]:
        return len(self.graph.journal), self.budget, frozenset(self.f_set)

    def rollback(self, mark: tuple[int, int, frozenset[int]]) -> None:
        size, budget, f_set = mark
        self.graph.restore_to(size)
        self.budget = budget
        self.f_set = set(f_set)

    def f_is_forest(self) -> bool:
        return induces_forest(self.graph, self.f_set)


class Status(enum.Enum):
    REDUCED = "reduced"
    SOLVED_EMPTY = "solved-empty"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass
class ReductionOutcome:
    status: Status
    forced_deletions: list[int] = field(default_factory=list)
    stripped: list[int] = field(default_factory=list)


def strip_low_degree(inst: ExtendedInstance) -> list[int]:
    """Delete vertices of degree <= 1, smallest label first, until none remain."""
    adj = inst.graph.adj
    heap = [v for v, nb in adj.items() if len(nb) <= 1]
    heapq.heapify(heap)
    removed = []
    while heap:
        v = heapq.heappop(heap)
        if v not in adj:
            continue
        nbrs = list(adj[v])
        inst.delete(v, "strip")
        removed.append(v)
        for u in nbrs:
            if len(adj[u]) == 1:
                heapq.heappush(heap, u)
    return removed


def find_forced_vertex(inst: ExtendedInstance) -> int | None:
    """Smallest undecided vertex with two neighbors in one tree of G[F]."""
    if not inst.f_set:
        return None
    g = inst.graph
    adj, f_set = g.adj, inst.f_set
    tree_of = components(g, f_set)
    candidates = sorted({u for f in f_set for u in adj[f] if u not in f_set})
    for v in candidates:
        seen = set()
        for u in adj[v]:
            t = tree_of.get(u)
            if t is None:
                continue
            if t in seen:
                return v
            seen.add(t)
    return None


def reduce_to_fixpoint(inst: ExtendedInstance) -> ReductionOutcome:
    """Apply stripping and forced deletions until neither applies.

    Forced deletions are charged to the budget; the call stops as soon as the
    budget goes negative.
    """
    out = ReductionOutcome(Status.REDUCED)
    if inst.budget < 0:
        out.status = Status.BUDGET_EXHAUSTED
        return out
    while True:
        out.stripped.extend(strip_low_degree(inst))
        if inst.graph.n == 0:
            out.status = Status.SOLVED_EMPTY
            return out
        v = find_forced_vertex(inst)
        if v is None:
            return out
        inst.delete(v, "forced")
        inst.budget -= 1
        out.forced_deletions.append(v)
        if inst.budget < 0:
            out.status = Status.BUDGET_EXHAUSTED
            return out
