import random

import pytest

from greedyfvs.graph import build_graph, induces_forest
from greedyfvs.oracle import brute_force_min_fvs
from greedyfvs.reductions import (
    ExtendedInstance,
    Status,
    find_forced_vertex,
    reduce_to_fixpoint,
    strip_low_degree,
)
from helpers import cycle_graph, on_some_cycle, path_graph, random_forest_subset, random_small_graph


def instance(g, k=0, f=()):
    return ExtendedInstance(g, k, f)


class TestStrip:
    def test_path_dissolves(self):
        inst = instance(path_graph(5))
        assert strip_low_degree(inst) == [1, 2, 3, 4, 5]
        assert inst.graph.n == 0

    def test_triangle_with_pendant(self):
        g = build_graph(4, [(1, 2), (2, 3), (3, 1), (3, 4)])
        inst = instance(g)
        assert strip_low_degree(inst) == [4]
        assert sorted(inst.graph) == [1, 2, 3]

    def test_c4_untouched(self):
        inst = instance(cycle_graph(4))
        assert strip_low_degree(inst) == []
        assert inst.graph.m == 4

    def test_stripped_f_vertices_leave_f(self):
        g = build_graph(4, [(1, 2), (2, 3), (3, 1), (3, 4)])
        inst = instance(g, 0, {4, 1})
        strip_low_degree(inst)
        assert inst.f_set == {1}

    def test_budget_unchanged(self):
        inst = instance(path_graph(3), 2)
        strip_low_degree(inst)
        assert inst.budget == 2


class TestForced:
    def test_no_f(self):
        assert find_forced_vertex(instance(cycle_graph(3))) is None

    def test_triangle_two_in_f(self):
        assert find_forced_vertex(instance(cycle_graph(3), 0, {1, 2})) == 3

    def test_c4_opposite_f_vertices(self):
        # a-b-c-d-a with F = {a, c}: G[F] has two single-vertex trees
        assert find_forced_vertex(instance(cycle_graph(4), 0, {1, 3})) is None

    def test_smallest_label_wins(self):
        # F-tree 1-2; both 3 and 4 see 1 and 2
        g = build_graph(4, [(1, 2), (3, 1), (3, 2), (4, 1), (4, 2)])
        assert find_forced_vertex(instance(g, 0, {1, 2})) == 3

    def test_path_inside_f_tree(self):
        # F-tree 1-2-3; vertex 4 touches both ends of it
        g = build_graph(4, [(1, 2), (2, 3), (4, 1), (4, 3)])
        assert find_forced_vertex(instance(g, 0, {1, 2, 3})) == 4


class TestReduceToFixpoint:
    def test_forest_solved(self):
        out = reduce_to_fixpoint(instance(path_graph(6), 0))
        assert out.status is Status.SOLVED_EMPTY and out.forced_deletions == []

    def test_triangle_forced(self):
        inst = instance(cycle_graph(3), 1, {1, 2})
        out = reduce_to_fixpoint(inst)
        assert out.status is Status.SOLVED_EMPTY
        assert out.forced_deletions == [3]
        assert inst.budget == 0

    def test_triangle_forced_over_budget(self):
        inst = instance(cycle_graph(3), 0, {1, 2})
        out = reduce_to_fixpoint(inst)
        assert out.status is Status.BUDGET_EXHAUSTED
        assert inst.budget == -1

    def test_negative_budget_at_entry(self):
        assert reduce_to_fixpoint(instance(path_graph(2), -1)).status is Status.BUDGET_EXHAUSTED

    def test_empty_graph(self):
        assert reduce_to_fixpoint(instance(build_graph(0, []), 0)).status is Status.SOLVED_EMPTY

    def test_reduced_cycle(self):
        inst = instance(cycle_graph(5), 1)
        out = reduce_to_fixpoint(inst)
        assert out.status is Status.REDUCED and inst.graph.n == 5


def _oracle_size(g, f):
    best = brute_force_min_fvs(g, f)
    return None if best is None else len(best)


@pytest.mark.parametrize("seed", range(150))
def test_reduction_preserves_answers(seed):
    rng = random.Random(seed)
    g = random_small_graph(seed, max_n=12)
    f = random_forest_subset(g, rng, nonempty=rng.random() < 0.7)
    k = rng.randint(0, g.n)
    before = _oracle_size(g, f)
    inst = instance(g.copy(), k, f)
    on_cycle_when_stripped = []
    inst.listener = lambda v, reason: reason == "strip" and on_cycle_when_stripped.append(
        on_some_cycle(inst.graph, v)
    )
    out = reduce_to_fixpoint(inst)
    yes_before = before is not None and before <= k

    assert inst.budget == k - len(out.forced_deletions)
    assert induces_forest(inst.graph, inst.f_set) and inst.f_set <= set(inst.graph)
    assert not set(out.forced_deletions) & f
    assert len(on_cycle_when_stripped) == len(out.stripped) and not any(on_cycle_when_stripped)

    if out.status is Status.BUDGET_EXHAUSTED:
        assert not yes_before
        return
    after = _oracle_size(inst.graph, inst.f_set)
    yes_after = after is not None and after <= inst.budget
    assert yes_before == yes_after
    if out.status is Status.SOLVED_EMPTY:
        assert yes_before
    else:
        g2 = inst.graph
        assert g2.n > 0 and min(g2.degree(v) for v in g2) >= 2
        assert find_forced_vertex(inst) is None


def test_rollback_restores_everything():
    g = cycle_graph(3)
    inst = instance(g, 1, {1, 2})
    mark = inst.mark()
    reduce_to_fixpoint(inst)
    assert inst.graph.n == 0 and inst.budget == 0
    inst.rollback(mark)
    assert inst.graph == cycle_graph(3) and inst.f_set == {1, 2} and inst.budget == 1
