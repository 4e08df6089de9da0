"""Simple undirected graphs on vertices 1..n and induced-subgraph search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise DomainError(f"bad edge ({u}, {v}) for a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced on ``keep``; vertex ``keep[i]`` becomes ``i + 1``."""
        index = {v: i + 1 for i, v in enumerate(keep)}
        if len(index) != len(keep):
            raise DomainError("repeated vertex in induced subgraph selection")
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(keep), edges)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in self.vertices if u != v])


def find_induced_subgraph(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """An injective map ``phi`` (as a tuple over h's vertices) with
    ``phi(u) ~ phi(v)`` in ``g`` exactly when ``u ~ v`` in ``h``.

    Plain backtracking in the VF2 spirit: vertices of ``h`` are placed in
    order of decreasing degree, candidates filtered by degree.
    """
    if h.n > g.n:
        return None
    gadj, hadj = g.neighbors(), h.neighbors()
    order = sorted(h.vertices, key=lambda v: -len(hadj[v]))
    phi: dict[int, int] = {}
    used: set[int] = set()

    def place(t: int) -> bool:
        if t == len(order):
            return True
        u = order[t]
        for x in g.vertices:
            if x in used or len(gadj[x]) < len(hadj[u]):
                continue
            if all((phi[w] in gadj[x]) == (w in hadj[u]) for w in phi):
                phi[u] = x
                used.add(x)
                if place(t + 1):
                    return True
                del phi[u]
                used.discard(x)
        return False

    if not place(0):
        return None
    return tuple(phi[v] for v in h.vertices)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and len(g.edges) == len(h.edges) and find_induced_subgraph(g, h) is not None
