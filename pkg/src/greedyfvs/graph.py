"""Mutable simple undirected graph with reversible vertex deletion.

Vertices are positive integer labels and keep their labels for the whole
lifetime of the graph, so solutions can be reported in input terms.
Deletions go through an undo journal; restoring pops records in LIFO order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


class GraphError(ValueError):
    """Raised on malformed graphs and on misuse of the graph API."""


class UndoJournal:
    """Stack of deletion records ``(vertex, neighbors at deletion time)``."""

    def __init__(self) -> None:
        self._records: list[tuple[int, tuple[int, ...]]] = []

    def __len__(self) -> int:
        return len(self._records)

    def push(self, v: int, neighbors: tuple[int, ...]) -> None:
        self._records.append((v, neighbors))

    def pop(self) -> tuple[int, tuple[int, ...]]:
        if not self._records:
            raise GraphError("undo journal is empty")
        return self._records.pop()

    def vertices(self) -> list[int]:
        return [v for v, _ in self._records]


class Graph:
    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self._adj: dict[int, set[int]] = {}
        self._m = 0
        self.journal = UndoJournal()
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # construction

    def add_vertex(self, v: int) -> None:
        if v in self._adj:
            raise GraphError(f"duplicate vertex {v}")
        self._adj[v] = set()

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop ({u},{v})")
        if u not in self._adj or v not in self._adj:
            raise GraphError(f"edge ({u},{v}) has an unknown endpoint")
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge ({u},{v})")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    # queries

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._adj)

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> set[int]:
        # live view; callers must not mutate it
        return self._adj[v]

    @property
    def adj(self) -> dict[int, set[int]]:
        """Live adjacency mapping for hot loops; treat as read-only."""
        return self._adj

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nb in self._adj.items() for v in nb if u < v)

    def degrees(self) -> dict[int, int]:
        return {v: len(nb) for v, nb in self._adj.items()}

    def copy(self) -> Graph:
        """Independent copy of the live graph; the journal is not copied."""
        g = Graph()
        g._adj = {v: set(nb) for v, nb in self._adj.items()}
        g._m = self._m
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # reversible mutation

    def delete_vertex(self, v: int, journal: UndoJournal | None = None) -> None:
        if v not in self._adj:
            raise GraphError(f"vertex {v} is not live")
        journal = self.journal if journal is None else journal
        nb = self._adj.pop(v)
        for u in nb:
            self._adj[u].discard(v)
        self._m -= len(nb)
        journal.push(v, tuple(nb))

    def restore_last(self, journal: UndoJournal | None = None) -> int:
        """Re-insert the most recently deleted vertex and return it."""
        journal = self.journal if journal is None else journal
        v, nb = journal.pop()
        self._adj[v] = set(nb)
        for u in nb:
            self._adj[u].add(v)
        self._m += len(nb)
        return v

    def restore_to(self, mark: int, journal: UndoJournal | None = None) -> None:
        """Undo deletions until the journal is back to length ``mark``."""
        journal = self.journal if journal is None else journal
        while len(journal) > mark:
            self.restore_last(journal)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices ``1..n`` with the given edges.

    Raises GraphError naming the offending pair for self-loops, duplicate
    edges (in either orientation) and out-of-range endpoints.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    g = Graph(range(1, n + 1))
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"endpoint out of range 1..{n} in ({u},{v})")
        g.add_edge(u, v)
    return g


def components(g: Graph, within: Iterable[int] | None = None) -> dict[int, int]:
    """Map each vertex to the smallest label of its component.

    With ``within``, components of the induced subgraph on those vertices.
    """
    adj = g.adj
    allowed = set(adj) if within is None else set(within)
    label: dict[int, int] = {}
    for s in sorted(allowed):
        if s in label:
            continue
        label[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in allowed and y not in label:
                    label[y] = s
                    stack.append(y)
    return label


def component_count(g: Graph) -> int:
    return len(set(components(g).values()))


def find_cycle(g: Graph) -> list[int] | None:
    """Return some cycle of ``g`` as a vertex list, or None for a forest.

    Depth-first search from the smallest live vertex, neighbors visited in
    ascending order, so the result depends only on the graph state.
    """
    parent: dict[int, int | None] = {}
    for root in g.vertices():
        if root in parent:
            continue
        parent[root] = None
        stack = [(root, iter(sorted(g.neighbors(root))))]
        while stack:
            x, it = stack[-1]
            for y in it:
                if y == parent[x]:
                    continue
                if y in parent:
                    # back edge to an ancestor on the DFS stack
                    cycle = [x]
                    w = x
                    while w != y:
                        w = parent[w]
                        cycle.append(w)
                    return cycle
                parent[y] = x
                stack.append((y, iter(sorted(g.neighbors(y)))))
                break
            else:
                stack.pop()
    return None


def is_forest(g: Graph) -> bool:
    return find_cycle(g) is None


def induces_forest(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``vertices`` is acyclic."""
    vs = set(vertices)
    edges = sum(1 for v in vs for u in g.neighbors(v) if u in vs) // 2
    return edges == len(vs) - len(set(components(g, vs).values()))


def is_cycle(g: Graph, walk: list[int]) -> bool:
    """Check that ``walk`` is a simple closed walk of length >= 3 in ``g``."""
    if len(walk) < 3 or len(set(walk)) != len(walk):
        return False
    return all(walk[i - 1] in g.neighbors(walk[i]) for i in range(len(walk)))


def check_degree_sum_identity(g: Graph) -> bool:
    """For a tree, check that the excess degree of branch vertices equals leaves - 2."""
    if g.n < 2 or g.m != g.n - 1 or component_count(g) != 1:
        raise GraphError("degree-sum identity needs a tree with at least 2 vertices")
    excess = sum(g.degree(v) - 2 for v in g if g.degree(v) >= 3)
    leaves = sum(1 for v in g if g.degree(v) == 1)
    return excess == leaves - 2
