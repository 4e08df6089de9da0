from itertools import combinations, permutations, product

import pytest
from hypothesis import given, strategies as st

from icircular.errors import DomainError
from icircular.graphs import Graph
from icircular.wordrep import alternates, as_word, find_representing_word, graph_from_word, word_represents

K3 = Graph.complete(3)
EDGE = Graph.complete(2)


def test_as_word():
    assert as_word("abc") == (1, 2, 3)
    assert as_word("1 2 1") == (1, 2, 1)
    assert as_word([2, 1]) == (2, 1)
    with pytest.raises(DomainError):
        as_word("")
    with pytest.raises(DomainError):
        as_word("abd", 3)


def test_alternates_examples():
    assert alternates("abab", 1, 2)
    assert not alternates("aabb", 1, 2)
    assert alternates("abcabc", 1, 3)
    with pytest.raises(DomainError):
        alternates("abab", 1, 3)
    with pytest.raises(DomainError):
        alternates("abab", 1, 1)


def test_graph_from_word_examples():
    assert graph_from_word("abcabc", 3) == K3
    assert graph_from_word("aabbcc", 3).edges == frozenset()
    assert graph_from_word("ababc", 3).edges == frozenset({(1, 2)})
    with pytest.raises(DomainError):
        graph_from_word("abab", 3)


def test_word_represents_examples():
    assert word_represents("abab", EDGE)
    assert not word_represents("aabb", EDGE)
    assert word_represents("abcabc", K3)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), min_size=1, max_size=12))))
def test_reversal_invariance(case):
    n, w = case
    w = list(range(1, n + 1)) + w  # every vertex occurs
    assert graph_from_word(w, n) == graph_from_word(w[::-1], n)


@pytest.mark.parametrize("n", range(1, 6))
def test_permutation_words_are_complete(n):
    for p in permutations(range(1, n + 1)):
        assert graph_from_word(p, n) == Graph.complete(n)


def test_bounded_search_covers_small_graphs():
    for n in range(1, 5):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in product((0, 1), repeat=len(pairs)):
            g = Graph.from_edges(n, [e for e, x in zip(pairs, mask) if x])
            w = find_representing_word(g, max_length=12)
            assert w is not None and len(w) <= 12
            assert word_represents(w, g)
