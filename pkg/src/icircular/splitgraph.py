"""Split graphs, their adjacency matrices, and semi-transitivity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence

from .binmat import BinaryMatrix, contains_configuration
from .c1p import CircularOrder, guard_columns, permute_rows, is_run, is_arc_mask
from .errors import DomainError
from .families import FamilyId, Member, build, forb_icircular_members
from .graphs import Graph, find_induced_subgraph
from .icirc import has_i_circular

# The SG image of this member is not minimal (it induces SG(M_I*(3))),
# so it is left out of GForb.
EXCLUDED_FROM_GFORB = FamilyId("MaskedMII", 4, "0100")
EXCLUDED_REPLACEMENT = FamilyId("MIstar", 3)


@dataclass(frozen=True)
class SplitGraph:
    graph: Graph
    clique: tuple[int, ...]
    independent: tuple[int, ...]

    def __post_init__(self):
        c, i = set(self.clique), set(self.independent)
        if c & i or c | i != set(self.graph.vertices):
            raise DomainError("clique and independent set must partition the vertices")
        g = self.graph
        for a in self.clique:
            for b in self.clique:
                if a < b and not g.adjacent(a, b):
                    raise DomainError(f"clique vertices {a} and {b} are not adjacent")
        for a in self.independent:
            for b in self.independent:
                if a < b and g.adjacent(a, b):
                    raise DomainError(f"independent vertices {a} and {b} are adjacent")


def _normalize(g: Graph, clique: set[int], indep: set[int]) -> SplitGraph:
    adj = g.neighbors()
    moved = True
    while moved:
        moved = False
        for v in sorted(indep):
            if clique <= adj[v]:
                indep.discard(v)
                clique.add(v)
                moved = True
                break
    return SplitGraph(g, tuple(sorted(clique)), tuple(sorted(indep)))


def split_partition(g: Graph) -> Optional[SplitGraph]:
    """Recognize a split graph from its degree sequence (Hammer and Simeone).

    With degrees sorted d_1 >= ... >= d_n and m the largest i with
    d_i >= i - 1, the graph is split iff the top-m degree sum equals
    m(m - 1) plus the sum of the remaining degrees; the top m vertices then
    form a clique.  Independent vertices seeing the whole clique are moved
    into it afterwards.
    """
    if g.n == 0:
        return SplitGraph(g, (), ())
    adj = g.neighbors()
    ranked = sorted(g.vertices, key=lambda v: (-len(adj[v]), v))
    deg = [len(adj[v]) for v in ranked]
    m = max(i for i in range(1, g.n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    return _normalize(g, set(ranked[:m]), set(ranked[m:]))


def adjacency_matrix(sg: SplitGraph) -> BinaryMatrix:
    """Rows are the independent vertices, columns the clique vertices, both
    ascending.  An empty independent set gives a matrix with no rows."""
    adj = sg.graph.neighbors()
    rows = tuple(
        sum(1 << j for j, c in enumerate(sg.clique) if c in adj[v]) for v in sg.independent
    )
    return BinaryMatrix(rows, len(sg.clique))


def sg_from_matrix(m: BinaryMatrix) -> SplitGraph:
    """Rows become vertices 1..k (independent), columns k+1..k+l (clique).

    An all-ones row yields a vertex adjacent to the whole clique; such a
    vertex is kept in the independent set here, so that the labelling of
    the graph follows the matrix exactly.
    """
    k, n = m.shape
    edges = [(k + a, k + b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    edges += [(i, k + j) for i in range(1, k + 1) for j in range(1, n + 1) if m.entry(i, j)]
    g = Graph.from_edges(k + n, edges)
    return SplitGraph(g, tuple(range(k + 1, k + n + 1)), tuple(range(1, k + 1)))


@dataclass(frozen=True)
class SemiTransCertificate:
    verdict: bool
    order: Optional[CircularOrder] = None  # over columns of A(G)
    member: Optional[FamilyId] = None
    vertex_map: Optional[tuple[int, ...]] = None  # SG(member) vertex -> G vertex

    def to_json(self) -> dict:
        out: dict = {"property": "semi-transitive", "verdict": self.verdict}
        if self.order is not None:
            out["order"] = list(self.order)
        if self.member is not None:
            out["gforbMember"] = self.member.label()
            out["certificate"] = self.member.to_json()
            out["vertexMap"] = list(self.vertex_map)
        return out


def is_semi_transitive_split(sg: SplitGraph) -> SemiTransCertificate:
    """Decide semi-transitivity through the I-circular property of A(G).

    A negative answer names a member F of the I-circular forbidden set and
    the vertices of G inducing a copy of SG(F), read off the configuration
    witness of F inside A(G).
    """
    if not sg.independent or not sg.clique:
        return SemiTransCertificate(True, order=tuple(range(1, len(sg.clique) + 1)))
    a = adjacency_matrix(sg)
    order = has_i_circular(a)
    if order is not None:
        return SemiTransCertificate(True, order=order)
    for member in forb_icircular_members(a.nrows, a.ncols):
        w = contains_configuration(a, member.matrix)
        if w is None:
            continue
        vmap = tuple(sg.independent[r - 1] for r in w.row_map)
        vmap += tuple(sg.clique[c - 1] for c in w.col_map)
        fid = member.family
        if fid == EXCLUDED_FROM_GFORB:
            inner = _excluded_to_gforb()
            vmap = tuple(vmap[x - 1] for x in inner)
            fid = EXCLUDED_REPLACEMENT
        return SemiTransCertificate(False, member=fid, vertex_map=vmap)
    raise AssertionError(f"A(G) is not I-circular yet contains no forbidden member:\n{a}")


@lru_cache(maxsize=None)
def _excluded_to_gforb() -> tuple[int, ...]:
    outer = sg_from_matrix(build(EXCLUDED_FROM_GFORB)).graph
    inner = sg_from_matrix(build(EXCLUDED_REPLACEMENT)).graph
    found = find_induced_subgraph(outer, inner)
    assert found is not None
    return found


def gforb_members(max_vertices: int) -> list[tuple[Member, SplitGraph]]:
    out = []
    for member in forb_icircular_members(max_vertices, max_vertices):
        if member.family == EXCLUDED_FROM_GFORB:
            continue
        if sum(member.matrix.shape) <= max_vertices:
            out.append((member, sg_from_matrix(member.matrix)))
    return out


def gen_gforb(max_vertices: int) -> list[SplitGraph]:
    """SG images of the I-circular forbidden members with at most
    ``max_vertices`` vertices; SG(0101 * M_I*(4)) plays the role of M_VII."""
    if max_vertices < 7:
        raise DomainError("maxVertices must be at least 7")
    return [sg for _, sg in gforb_members(max_vertices)]


def kp_condition(m: BinaryMatrix, order: Sequence[int]) -> bool:
    """Under the column arrangement ``order``: whenever a row reads
    1^a 0^b 1^c (a, b, c >= 1), no other row is all ones on positions
    a..a+b+1."""
    rows = permute_rows(m, order)
    n = m.ncols
    for i, r in enumerate(rows):
        if not (r & 1 and r >> (n - 1) & 1) or is_run(r):
            continue
        gap = m.full_mask ^ r
        if not is_run(gap):
            continue
        a = (gap & -gap).bit_length() - 1  # ones in the prefix
        b = gap.bit_count()
        window = ((1 << (b + 2)) - 1) << (a - 1)
        if any(s & window == window for j, s in enumerate(rows) if j != i):
            return False
    return True


def has_kp_order(m: BinaryMatrix) -> Optional[tuple[int, ...]]:
    """First column arrangement (lexicographically) under which every row is
    a circular interval and the Kitaev-Pyatkin condition holds."""
    guard_columns(m)
    full = m.full_mask
    for order in permutations(range(1, m.ncols + 1)):
        if all(is_arc_mask(x, full) for x in permute_rows(m, order)) and kp_condition(m, order):
            return order
    return None
