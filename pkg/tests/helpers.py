"""Graph builders and independent checks shared by the tests."""

import itertools
import random

from greedyfvs.graph import Graph, build_graph, induces_forest
from greedyfvs.oracle import gen_random_graph

# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE = {}


def cycle_graph(n):
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n):
    return build_graph(n, list(itertools.combinations(range(1, n + 1), 2)))


def star_graph(leaves):
    return build_graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def wheel_graph(rim):
    # hub is vertex 1, rim vertices 2..rim+1
    edges = [(1, i) for i in range(2, rim + 2)]
    edges += [(i, i + 1) for i in range(2, rim + 1)] + [(rim + 1, 2)]
    return build_graph(rim + 1, edges)


def petersen_graph():
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return build_graph(10, outer + spokes + inner)


def theta_graph(a, b, c):
    """Vertices 1 and 2 joined by three internally disjoint paths with a, b, c interior vertices."""
    edges = []
    nxt = 3
    for length in (a, b, c):
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 2))
    return build_graph(nxt - 1, edges)


def disjoint_union(*graphs):
    g = Graph()
    offset = 0
    for h in graphs:
        for v in h.vertices():
            g.add_vertex(v + offset)
        for u, v in h.edges():
            g.add_edge(u + offset, v + offset)
        offset += max(h.vertices(), default=0)
    return g


def random_small_graph(seed, max_n=12, max_m=30):
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(0, min(max_m, n * (n - 1) // 2))
    return gen_random_graph(n, m, seed)


def random_forest_subset(g, rng, nonempty=True):
    """Random vertex set inducing a forest, grown greedily in random order."""
    order = g.vertices()
    rng.shuffle(order)
    target = rng.randint(1 if nonempty else 0, max(1, len(order) // 2))
    chosen = []
    for v in order:
        if len(chosen) >= target:
            break
        if induces_forest(g, chosen + [v]):
            chosen.append(v)
    return set(chosen)


def remove_all(g, vertices):
    h = g.copy()
    for v in vertices:
        h.delete_vertex(v)
    return h


def on_some_cycle(g, v):
    """Independent check: v is on a cycle iff two of its neighbors stay connected without v."""
    nbrs = list(g.neighbors(v))
    for i, a in enumerate(nbrs):
        seen = {v, a}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if any(b in seen for b in nbrs[i + 1 :]):
            return True
    return False


def degree_two_instance(seed, max_n=14):
    """A reduced extended instance whose undecided vertices all have degree two.

    F is a few small random trees; undecided vertices are interiors of chains
    between F vertices plus a few free cycles. The raw construction is passed
    through reduce_to_fixpoint and retried until it comes out reduced.
    """
    from greedyfvs.reductions import ExtendedInstance, Status, reduce_to_fixpoint

    rng = random.Random(seed)
    while True:
        edges, f_vertices = [], []
        nxt = 1
        for _ in range(rng.randint(0, 3)):
            size = rng.randint(1, 4)
            tree = list(range(nxt, nxt + size))
            nxt += size
            edges += [(tree[rng.randrange(i)], tree[i]) for i in range(1, size)]
            f_vertices += tree
        for _ in range(rng.randint(1, 5) if f_vertices else 0):
            a, b = rng.choice(f_vertices), rng.choice(f_vertices)
            length = rng.randint(2 if a == b else 1, 3)
            chain = list(range(nxt, nxt + length))
            nxt += length
            walk = [a] + chain + [b]
            edges += list(zip(walk, walk[1:]))
        for _ in range(rng.randint(0, 2)):
            length = rng.randint(3, 5)
            ring = list(range(nxt, nxt + length))
            nxt += length
            edges += list(zip(ring, ring[1:] + ring[:1]))
        n = nxt - 1
        if n > max_n or n == 0:
            continue
        inst = ExtendedInstance(build_graph(n, edges), n, f_vertices)
        out = reduce_to_fixpoint(inst)
        undecided = inst.undecided()
        if out.status is Status.REDUCED and undecided:
            assert max(inst.graph.degree(v) for v in undecided) == 2
            return inst


def decoy_graph(seed, max_n=16):
    """Disjoint short cycles plus hub vertices touching one vertex of each.

    The hubs have the largest degree but are never worth deleting, so the
    search keeps moving them into F; good for exercising the audit.
    """
    rng = random.Random(seed)
    while True:
        edges, gadgets = [], []
        nxt = 1
        for _ in range(rng.randint(3, 5)):
            vs = list(range(nxt, nxt + rng.randint(3, 4)))
            nxt += len(vs)
            edges += list(zip(vs, vs[1:] + vs[:1]))
            gadgets.append(vs)
        for i in range(rng.randint(1, 2)):
            hub = nxt
            nxt += 1
            edges += [(hub, vs[i]) for vs in gadgets]
        for _ in range(rng.randint(0, 2)):
            u, v = rng.sample(range(1, nxt), 2)
            if (u, v) not in edges and (v, u) not in edges:
                edges.append((u, v))
        if nxt - 1 <= max_n:
            return build_graph(nxt - 1, edges)
