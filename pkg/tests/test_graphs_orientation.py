import random
from itertools import combinations, product

import pytest

from icircular.errors import DomainError, GuardError
from icircular.families import gen_MVI
from icircular.graphs import Graph, find_induced_subgraph, is_isomorphic
from icircular.orientation import Orientation, ShortcutWitness, brute_force_semi_transitive, verify_orientation
from icircular.splitgraph import sg_from_matrix


def cycle_graph(n):
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def wheel(n):
    return Graph.from_edges(n + 1, [(i, i % n + 1) for i in range(1, n + 1)] + [(i, n + 1) for i in range(1, n + 1)])


def naive_semi_transitive(arcs, n):
    """Enumerate every simple directed path; no pruning."""
    out = {v: [b for a, b in arcs if a == v] for v in range(1, n + 1)}

    def paths(p):
        yield p
        for w in out[p[-1]]:
            if w not in p:
                yield from paths(p + [w])

    for v in range(1, n + 1):
        for p in paths([v]):
            if (p[-1], p[0]) in arcs and len(p) >= 2:
                return False  # directed cycle
            if len(p) >= 3 and (p[0], p[-1]) in arcs:
                if any((p[i], p[j]) not in arcs for i, j in combinations(range(len(p)), 2)):
                    return False
    return True


def naive_exists(g):
    edges = sorted(g.edges)
    for flips in product((0, 1), repeat=len(edges)):
        arcs = frozenset((v, u) if f else (u, v) for (u, v), f in zip(edges, flips))
        if naive_semi_transitive(arcs, g.n):
            return True
    return False


def test_graph_basics():
    g = Graph.from_edges(4, [(2, 1), (2, 3), (3, 4)])
    assert g.edges == frozenset({(1, 2), (2, 3), (3, 4)})
    assert g.degree(2) == 2 and g.adjacent(2, 1)
    h = g.induced((2, 3, 4))
    assert h.n == 3 and h.edges == frozenset({(1, 2), (2, 3)})
    assert g.delete_vertex(1).edges == frozenset({(1, 2), (2, 3)})
    assert Graph.complete(4).edges == frozenset(combinations(range(1, 5), 2))
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 4)])


def test_induced_subgraph_and_isomorphism():
    c5 = cycle_graph(5)
    p4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    phi = find_induced_subgraph(c5, p4)
    assert phi is not None and c5.induced(phi) == p4
    assert find_induced_subgraph(c5, cycle_graph(4)) is None
    assert is_isomorphic(cycle_graph(5), Graph.from_edges(5, [(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]))
    assert not is_isomorphic(cycle_graph(4), p4)


def test_verify_orientation_examples():
    k5 = Graph.complete(5)
    assert verify_orientation(Orientation.from_order(k5, (1, 2, 3, 4, 5))) is None
    tri = Orientation(Graph.complete(3), frozenset({(1, 2), (2, 3), (3, 1)}))
    w = verify_orientation(tri)
    assert w.cycle is not None and w.check(tri)
    g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    o = Orientation(g, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}))
    w = verify_orientation(o)
    assert w.path == (1, 2, 3, 4) and w.missing in {(1, 3), (2, 4)} and w.check(o)
    assert not ShortcutWitness(path=(1, 2, 3, 4), missing=(1, 2)).check(o)


def test_orientation_validation():
    g = Graph.from_edges(3, [(1, 2), (2, 3)])
    with pytest.raises(DomainError):
        Orientation(g, frozenset({(1, 2)}))
    with pytest.raises(DomainError):
        Orientation(g, frozenset({(1, 2), (2, 1), (2, 3)}))
    with pytest.raises(DomainError):
        Orientation(g, frozenset({(1, 2), (1, 3)}))


def test_brute_force_examples():
    o = brute_force_semi_transitive(cycle_graph(4))
    assert o is not None and verify_orientation(o) is None
    assert brute_force_semi_transitive(sg_from_matrix(gen_MVI()).graph) is None
    for n in range(1, 8):
        assert brute_force_semi_transitive(Graph.complete(n)) is not None
    assert brute_force_semi_transitive(wheel(4)) is not None
    assert brute_force_semi_transitive(wheel(5)) is None
    assert brute_force_semi_transitive(wheel(7)) is None


def test_guard():
    with pytest.raises(GuardError):
        brute_force_semi_transitive(Graph.complete(10), max_edges=44)
    assert brute_force_semi_transitive(Graph.complete(10), max_edges=45) is not None


def test_agrees_with_naive_enumeration():
    rng = random.Random(29)
    for _ in range(150):
        n = rng.randint(1, 7)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5][:11]
        g = Graph.from_edges(n, edges)
        o = brute_force_semi_transitive(g)
        assert (o is not None) == naive_exists(g)
        if o is not None:
            assert verify_orientation(o) is None
            assert naive_semi_transitive(o.arcs, n)


def test_witness_checks_on_random_orientations():
    rng = random.Random(31)
    for _ in range(400):
        n = rng.randint(3, 7)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.6]
        g = Graph.from_edges(n, edges)
        arcs = frozenset((v, u) if rng.random() < 0.5 else (u, v) for u, v in edges)
        o = Orientation(g, arcs)
        w = verify_orientation(o)
        assert (w is None) == naive_semi_transitive(arcs, n)
        if w is not None:
            assert w.check(o)
