"""Immutable undirected graphs with dense vertex ids.

Vertices are always 0..n-1. All operations that change the vertex set
re-densify ids deterministically and report the relabeling, so downstream
output is reproducible bit for bit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor set of ``v``."""

    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(frozenset(s) for s in nbrs))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def n(self) -> int:
        return len(self.adj)

    def vertices(self) -> range:
        return range(len(self.adj))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in self.vertices() for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def is_complete(self) -> bool:
        n = self.n
        return self.edge_count() == n * (n - 1) // 2

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        """A copy with the given edges added (ids unchanged)."""
        return Graph.from_edges(self.n, list(self.edges()) + list(extra))


@dataclass(frozen=True)
class MergeMap:
    """Records how contracted vertices map back to an earlier id space.

    ``groups[x]`` is the set of earlier ids folded into current id ``x``.
    The groups partition the earlier vertex set.
    """

    groups: tuple[frozenset[int], ...]

    @classmethod
    def identity(cls, n: int) -> "MergeMap":
        return cls(tuple(frozenset((v,)) for v in range(n)))

    def expand(self, ids: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for x in ids:
            out |= self.groups[x]
        return frozenset(out)

    def compose(self, earlier: "MergeMap") -> "MergeMap":
        """Map through ``earlier``: self's groups are over earlier's ids."""
        return MergeMap(tuple(earlier.expand(g) for g in self.groups))


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, MergeMap]:
    """Contract edge (u, v), merging v's neighborhood into u's.

    The merged vertex takes the slot of min(u, v); remaining ids are
    re-densified in ascending order of the surviving original ids. Parallel
    edges collapse. Returns the new graph and the id map back to ``g``.
    """
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if v not in g.adj[u]:
        raise ValueError(f"({u}, {v}) is not an edge")
    lo, hi = (u, v) if u < v else (v, u)
    keep = [x for x in g.vertices() if x != hi]
    new_id = {old: i for i, old in enumerate(keep)}
    merged = new_id[lo]

    nbrs: list[set[int]] = [set() for _ in keep]
    for a, b in g.edges():
        a2 = merged if a in (lo, hi) else new_id[a]
        b2 = merged if b in (lo, hi) else new_id[b]
        if a2 == b2:
            continue
        nbrs[a2].add(b2)
        nbrs[b2].add(a2)
    graph = Graph(tuple(frozenset(s) for s in nbrs))
    groups = tuple(
        frozenset((lo, hi)) if i == merged else frozenset((keep[i],))
        for i in range(len(keep))
    )
    return graph, MergeMap(groups)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``s``, densely relabeled.

    Returns (subgraph, id_map) where id_map[new] = old; new ids follow the
    ascending order of the old ids.
    """
    keep = sorted(set(s))
    for x in keep:
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} out of range")
    new_id = {old: i for i, old in enumerate(keep)}
    nbrs = [frozenset(new_id[w] for w in g.adj[old] if w in new_id) for old in keep]
    return Graph(tuple(nbrs)), tuple(keep)


def is_connected_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is non-empty and induces a connected subgraph."""
    members = set(s)
    if not members:
        raise ValueError("empty vertex set")
    start = next(iter(members))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in members and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(members)


def components_within(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by ``s``.

    Sorted by smallest member, so the result is deterministic.
    """
    members = set(s)
    out: list[frozenset[int]] = []
    while members:
        start = min(members)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y in members and y not in seen:
                    seen.add(y)
                    queue.append(y)
        out.append(frozenset(seen))
        members -= seen
    return sorted(out, key=min)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return is_connected_set(g, g.vertices())


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with positive integer vertex weights."""

    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise ValueError("weight vector length must equal vertex count")
        if any(w < 1 for w in self.weights):
            raise ValueError("vertex weights must be positive integers")

    @classmethod
    def unit(cls, graph: Graph) -> "WeightedGraph":
        return cls(graph, (1,) * graph.n)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def w_max(self) -> int:
        return max(self.weights)

    def total_weight(self) -> int:
        return sum(self.weights)

    def weight_of(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)

    def is_unit(self) -> bool:
        return all(w == 1 for w in self.weights)


def iter_nonedges(g: Graph) -> Iterator[Edge]:
    """Non-adjacent vertex pairs (u, v) with u < v, in lexicographic order."""
    for u in g.vertices():
        for v in range(u + 1, g.n):
            if v not in g.adj[u]:
                yield (u, v)
