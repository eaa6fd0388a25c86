"""Brute-force ground truth and seeded instance generators."""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Iterable
from typing import NamedTuple

from .graph import Graph, build_graph

ORACLE_LIMIT = 25


def _acyclic_without(edges: list[tuple[int, int]], removed: set[int]) -> bool:
    # union-find over the surviving edges; a repeated root means a cycle
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent.get(x, x)
        return root

    for u, v in edges:
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def brute_force_min_fvs(g: Graph, forbidden: Iterable[int] = ()) -> frozenset[int] | None:
    """Smallest S avoiding ``forbidden`` with g - S a forest, or None.

    Subsets are tried by increasing size, lexicographically within a size, so
    the first hit is minimum and the lexicographically first among minima.
    """
    if g.n > ORACLE_LIMIT:
        raise ValueError(f"brute force limited to {ORACLE_LIMIT} vertices, got {g.n}")
    forbidden = set(forbidden)
    edges = g.edges()
    allowed = [v for v in g.vertices() if v not in forbidden]
    for size in range(len(allowed) + 1):
        for subset in itertools.combinations(allowed, size):
            if _acyclic_without(edges, set(subset)):
                return frozenset(subset)
    return None


def _pair(index: int) -> tuple[int, int]:
    # inverse of the colexicographic rank of pairs (u, v), 1 <= u < v
    v = (1 + math.isqrt(8 * index + 1)) // 2
    u = index - v * (v - 1) // 2
    return u + 1, v + 1


def gen_random_graph(n: int, m: int, seed: int) -> Graph:
    """Graph on 1..n with m distinct edges drawn uniformly from all pairs."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"cannot place {m} edges on {n} vertices (max {total})")
    rng = random.Random(seed)
    picks = rng.sample(range(total), m)
    return build_graph(n, sorted(_pair(i) for i in picks))


def random_tree_edges(labels: list[int], rng: random.Random) -> list[tuple[int, int]]:
    """Random recursive tree: each label attaches to a uniformly chosen earlier one."""
    return [(labels[rng.randrange(i)], labels[i]) for i in range(1, len(labels))]


def gen_random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return build_graph(n, random_tree_edges(labels, rng))


class PlantedInstance(NamedTuple):
    graph: Graph
    k: int
    planted: frozenset[int]


def gen_planted(n: int, k: int, seed: int, max_attach: int = 5) -> PlantedInstance:
    """A random tree on n - k vertices plus k vertices wired into it.

    Each extra vertex gets between 3 and ``max_attach`` distinct tree
    neighbors, so the extra vertices form a feedback vertex set of size k.
    Labels are shuffled so the planted set is not simply the top labels.
    """
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
    if k and n - k < 3:
        raise ValueError(f"planted vertices need at least 3 tree vertices, got {n - k}")
    rng = random.Random(seed)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    tree, planted = labels[: n - k], labels[n - k :]
    edges = random_tree_edges(tree, rng)
    for p in planted:
        width = rng.randint(3, min(max_attach, len(tree)))
        edges.extend((p, t) for t in rng.sample(tree, width))
    return PlantedInstance(build_graph(n, edges), k, frozenset(planted))
