"""Bookkeeping of degree decrements along the successful search path.

Every vertex put into the solution opens an interval; each time a vertex
that was moved into F by branching loses a unit of degree while still above
two, that decrement is charged to the interval that is open at that moment.
The recorded numbers let :func:`verify_audit` re-check the inequalities that
bound the depth of the search tree on a live run.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field

from .graph import Graph


@dataclass
class AuditEntry:
    vertex: int
    d_star: int
    step: str
    deltas: Counter = field(default_factory=Counter)


@dataclass
class AuditLog:
    entries: list[AuditEntry] = field(default_factory=list)
    # vertex moved into F by branching -> its degree at that moment
    f_prime: dict[int, int] = field(default_factory=dict)
    invariant_violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    unverifiable: set[int] = field(default_factory=set)
    found: bool = False
    _delta_log: list[tuple[int, int]] = field(default_factory=list, repr=False)

    def solution(self) -> list[int]:
        return [e.vertex for e in self.entries]

    def mark(self) -> tuple[int, int, int]:
        return len(self.entries), len(self._delta_log), len(self.f_prime)

    def rollback(self, mark: tuple[int, int, int]) -> None:
        n_entries, n_deltas, n_f = mark
        while len(self._delta_log) > n_deltas:
            i, u = self._delta_log.pop()
            if i < n_entries:
                self.entries[i].deltas[u] -= 1
                if not self.entries[i].deltas[u]:
                    del self.entries[i].deltas[u]
        del self.entries[n_entries:]
        for u in list(self.f_prime)[n_f:]:
            del self.f_prime[u]

    def record_f_move(self, u: int, degree: int) -> None:
        self.f_prime[u] = degree

    def record_deletion(self, g: Graph, v: int, reason: str) -> None:
        """Call just before ``v`` is deleted from ``g``."""
        if reason != "strip":
            self.entries.append(AuditEntry(v, g.degree(v), reason))
        for u in g.neighbors(v):
            if u in self.f_prime and g.degree(u) >= 3:
                if not self.entries:
                    self.notes.append(f"decrement of {u} before any solution vertex")
                    self.unverifiable.add(u)
                    continue
                i = len(self.entries) - 1
                self.entries[i].deltas[u] += 1
                self._delta_log.append((i, u))

    def replay_base(self, g: Graph, removed: list[int]) -> None:
        """Account for a degree-two leaf on a copy of its entry graph.

        The leaf deletes its vertices without stripping in between; the replay
        strips after every deletion so decrements land in the interval of the
        deletion that caused them, then dissolves the final forest.
        """
        scratch = g.copy()
        for x in removed:
            self.record_deletion(scratch, x, "base")
            scratch.delete_vertex(x)
            heap = [v for v in scratch if scratch.degree(v) <= 1]
            heapq.heapify(heap)
            while heap:
                w = heapq.heappop(heap)
                if w not in scratch:
                    continue
                nbrs = list(scratch.neighbors(w))
                self.record_deletion(scratch, w, "strip")
                scratch.delete_vertex(w)
                for u in nbrs:
                    if scratch.degree(u) == 1:
                        heapq.heappush(heap, u)
        if scratch.n:
            left = [u for u in self.f_prime if u in scratch]
            self.notes.append(f"degree-two leaf left {scratch.n} vertices undissolved")
            self.unverifiable.update(left)


def verify_audit(audit: AuditLog) -> list[str]:
    """List every violated analysis bound on the recorded successful path.

    Checks, per solution vertex x: total charged decrements <= d*(x); a
    charge to u implies d*(u) >= d*(x). Per branching-F vertex u: total
    charges == d*(u) - 2. Globally: |F'| <= 3 |solution|, plus any invariant
    breaches noted during the search. An empty list means all hold.
    """
    problems = list(audit.invariant_violations)
    if not audit.found:
        return problems
    totals: Counter = Counter()
    for i, e in enumerate(audit.entries, 1):
        charged = sum(e.deltas.values())
        if charged > e.d_star:
            problems.append(
                f"decrement budget: interval {i} (vertex {e.vertex}) charged {charged} > d*={e.d_star}"
            )
        for u, d in e.deltas.items():
            if d > 0 and audit.f_prime.get(u, 0) < e.d_star:
                problems.append(
                    f"degree order: vertex {u} (d*={audit.f_prime.get(u)}) charged by "
                    f"interval {i} (vertex {e.vertex}, d*={e.d_star})"
                )
            totals[u] += d
    for u, d_star in audit.f_prime.items():
        if u in audit.unverifiable:
            continue
        if totals[u] != d_star - 2:
            problems.append(
                f"decrement identity: vertex {u} charged {totals[u]} != d*-2={d_star - 2}"
            )
    if len(audit.f_prime) > 3 * len(audit.entries):
        problems.append(
            f"F-prime bound: |F'|={len(audit.f_prime)} > 3*|solution|={3 * len(audit.entries)}"
        )
    return problems
