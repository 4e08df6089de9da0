"""Orientations: shortcut detection and a brute-force semi-transitivity oracle.

An orientation is semi-transitive when it is acyclic and every directed
path v0 -> ... -> vm (m >= 2) whose endpoints carry the arc v0 -> vm is
transitively closed.  Both functions here search for a violating path by
walking only *transitive* prefixes: the first vertex that fails to
receive an arc from some earlier path vertex exposes a shortcut, as long
as the path can still be finished at vm.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, GuardError
from .graphs import Graph

MAX_ORIENT_EDGES = int(os.environ.get("ICIRCULAR_MAX_ORIENT_EDGES", "40"))


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        seen = set()
        for u, v in self.arcs:
            e = (min(u, v), max(u, v))
            if e not in self.graph.edges:
                raise DomainError(f"arc {u}->{v} is not an edge")
            if e in seen:
                raise DomainError(f"edge {e} oriented twice")
            seen.add(e)
        if len(seen) != len(self.graph.edges):
            raise DomainError("some edges are left unoriented")

    @classmethod
    def from_order(cls, g: Graph, order) -> "Orientation":
        """Orient every edge from the earlier to the later vertex of ``order``."""
        pos = {v: i for i, v in enumerate(order)}
        return cls(g, frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges))


@dataclass(frozen=True)
class ShortcutWitness:
    """Either a directed cycle, or a path v0..vm with arc v0->vm and a pair
    (vi, vj), i < j, lacking the arc vi -> vj."""

    path: tuple[int, ...] = ()
    missing: Optional[tuple[int, int]] = None
    cycle: Optional[tuple[int, ...]] = None

    def check(self, o: Orientation) -> bool:
        """Confirm the witness directly against the orientation."""
        arcs = o.arcs
        if self.cycle is not None:
            c = self.cycle
            return len(c) >= 2 and all((c[i], c[(i + 1) % len(c)]) in arcs for i in range(len(c)))
        p = self.path
        if len(p) < 3 or len(set(p)) != len(p) or self.missing is None:
            return False
        if not all((p[i], p[i + 1]) in arcs for i in range(len(p) - 1)):
            return False
        if (p[0], p[-1]) not in arcs:
            return False
        a, b = self.missing
        return a in p and b in p and p.index(a) < p.index(b) and (a, b) not in arcs


def _out_lists(o: Orientation) -> dict[int, list[int]]:
    out = {v: [] for v in o.graph.vertices}
    for u, v in sorted(o.arcs):
        out[u].append(v)
    return out


def _find_cycle(out: dict[int, list[int]]) -> Optional[tuple[int, ...]]:
    color = {v: 0 for v in out}
    stack: list[int] = []

    def dfs(u: int) -> Optional[tuple[int, ...]]:
        color[u] = 1
        stack.append(u)
        for w in out[u]:
            if color[w] == 1:
                return tuple(stack[stack.index(w):])
            if color[w] == 0:
                got = dfs(w)
                if got:
                    return got
        stack.pop()
        color[u] = 2
        return None

    for v in out:
        if color[v] == 0:
            got = dfs(v)
            if got:
                return got
    return None


def _shortcut_into(target: int, preds: dict[int, list[int]], succ: dict[int, list[int]],
                   has_arc) -> Optional[tuple[tuple[int, ...], tuple[int, int]]]:
    """Look for a shortcut whose shortcutting arc ends at ``target``.

    ``preds``/``succ`` describe the acyclic orientation; ``has_arc(u, v)``
    tests for the arc u -> v.  Returns (path, missing pair) or None.
    """
    # Vertices that can reach target.
    reach = {target}
    frontier = [target]
    while frontier:
        v = frontier.pop()
        for u in preds[v]:
            if u not in reach:
                reach.add(u)
                frontier.append(u)

    def finish(y: int) -> list[int]:
        # Any directed path y -> ... -> target inside ``reach``.
        path = [y]
        while path[-1] != target:
            path.append(next(w for w in succ[path[-1]] if w in reach))
        return path

    def walk(prefix: list[int]):
        last = prefix[-1]
        for y in succ[last]:
            if y not in reach:
                continue
            for v in prefix[:-1]:
                if not has_arc(v, y):
                    return tuple(prefix + finish(y)), (v, y)
            if y != target:
                got = walk(prefix + [y])
                if got:
                    return got
        return None

    for v0 in preds[target]:
        got = walk([v0])
        if got:
            return got
    return None


def verify_orientation(o: Orientation) -> Optional[ShortcutWitness]:
    """None when ``o`` is semi-transitive, else a checkable witness."""
    out = _out_lists(o)
    cyc = _find_cycle(out)
    if cyc is not None:
        return ShortcutWitness(cycle=cyc)
    preds = {v: [] for v in o.graph.vertices}
    for u, v in sorted(o.arcs):
        preds[v].append(u)
    arcs = o.arcs
    for target in o.graph.vertices:
        got = _shortcut_into(target, preds, out, lambda a, b: (a, b) in arcs)
        if got:
            return ShortcutWitness(path=got[0], missing=got[1])
    return None


def brute_force_semi_transitive(g: Graph, max_edges: Optional[int] = None) -> Optional[Orientation]:
    """First semi-transitive orientation of ``g``, or None if there is none.

    Every acyclic orientation is visited exactly once, through its
    lexicographically least topological order: vertices are appended one
    at a time as the new sink, and a vertex may be skipped over only if a
    neighbour placed later in the gap blocks it.  After each placement the
    new sink is checked for shortcuts ending at it, which prunes the rest
    of that branch.
    """
    limit = MAX_ORIENT_EDGES if max_edges is None else max_edges
    if len(g.edges) > limit:
        raise GuardError(f"{len(g.edges)} edges exceeds the orientation guard of {limit}")
    adj = g.neighbors()
    n = g.n
    pos: dict[int, int] = {}
    order: list[int] = []
    preds: dict[int, list[int]] = {v: [] for v in g.vertices}
    succ: dict[int, list[int]] = {v: [] for v in g.vertices}

    def has_arc(a: int, b: int) -> bool:
        return b in adj[a] and pos[a] < pos[b]

    def place(pending: frozenset[int]) -> bool:
        if len(order) == n:
            return True
        for x in g.vertices:
            if x in pos or x in pending:
                continue
            back = [u for u in adj[x] if u in pos]
            pos[x] = len(order)
            order.append(x)
            preds[x] = back
            for u in back:
                succ[u].append(x)
            if _shortcut_into(x, preds, succ, has_arc) is None:
                nxt = frozenset(w for w in pending if w not in adj[x]) | frozenset(
                    w for w in g.vertices if w < x and w not in pos and w not in adj[x]
                )
                if place(nxt):
                    return True
            for u in back:
                succ[u].pop()
            preds[x] = []
            order.pop()
            del pos[x]
        return False

    if not place(frozenset()):
        return None
    return Orientation.from_order(g, order)
