"""Exact solution when every undecided vertex has degree two."""

from __future__ import annotations

from .graph import Graph, component_count, find_cycle
from .reductions import ExtendedInstance


def cycle_rank(g: Graph) -> int:
    """m - n + c: the number of independent cycles of ``g``."""
    return g.m - g.n + component_count(g)


def solve_degree_two(inst: ExtendedInstance) -> list[int]:
    """Break every cycle by deleting one undecided vertex from it.

    Each cycle loses its smallest undecided vertex. Since every deleted vertex
    has degree two and sits on a cycle, each deletion lowers the cycle rank by
    exactly one, so the result has size ``cycle_rank`` measured at entry and is
    optimal. The budget is not consulted.
    """
    g = inst.graph
    for v in inst.undecided():
        if g.degree(v) > 2:
            raise ValueError(f"undecided vertex {v} has degree {g.degree(v)} > 2")
    removed = []
    while (cycle := find_cycle(g)) is not None:
        free = [v for v in cycle if v not in inst.f_set]
        if not free:
            raise ValueError(f"cycle {cycle} lies entirely inside the undeletable set")
        x = min(free)
        inst.delete(x, "base")
        removed.append(x)
    return removed
