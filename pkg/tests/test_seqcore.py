from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from icircular.errors import DomainError
from icircular.seqcore import (
    apply_index_map,
    as_seq,
    canonical_bracelet,
    complement,
    enumerate_bracelets,
    mod_index,
    occurs_circularly,
    reverse,
    shift,
)

binary = st.lists(st.integers(0, 1), min_size=1, max_size=10).map(tuple)
quaternary = st.lists(st.integers(0, 3), min_size=1, max_size=10).map(tuple)


def burnside_bracelets(n: int) -> int:
    """Count binary bracelets of length n through the dihedral action."""
    phi = lambda d: sum(1 for x in range(1, d + 1) if gcd(x, d) == 1)  # noqa: E731
    necklaces = sum(phi(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0) // n
    if n % 2:
        return (necklaces + 2 ** ((n + 1) // 2)) // 2
    return (2 * necklaces + 3 * 2 ** (n // 2)) // 4


@pytest.mark.parametrize("a,want", [("013102", "131020"), ("000", "000"), ("0101", "1010")])
def test_shift_examples(a, want):
    assert shift(a) == as_seq(want)


def test_shift_empty_rejected():
    with pytest.raises(DomainError):
        shift("")


@pytest.mark.parametrize("a,want", [("0100", "1011"), ("", ""), ("111", "000")])
def test_complement_examples(a, want):
    assert complement(a) == as_seq(want)


@pytest.mark.parametrize("a,want", [("1010", "0101"), ("1000", "0001"), ("110100", "001011")])
def test_canonical_bracelet_examples(a, want):
    assert canonical_bracelet(a) == as_seq(want)


def test_bracelets_small():
    assert enumerate_bracelets(3) == [(0, 0, 0), (1, 1, 1)]
    assert [("".join(map(str, b))) for b in enumerate_bracelets(4)] == [
        "0000", "0001", "0011", "0101", "0111", "1111",
    ]
    assert len(enumerate_bracelets(6)) == 13


@pytest.mark.parametrize("k", range(4, 13))
def test_bracelet_count_matches_burnside(k):
    assert len(enumerate_bracelets(k)) == burnside_bracelets(k)


def test_bracelets_need_k_at_least_3():
    with pytest.raises(DomainError):
        enumerate_bracelets(2)


def test_occurs_circularly_examples():
    assert occurs_circularly("0101", "101", 2)
    assert occurs_circularly("0101", "1010", 2)
    assert occurs_circularly("1100", "001", 3)
    assert not occurs_circularly("0101", "11", 1)
    assert not occurs_circularly("01", "010", 1)  # longer pattern is simply false


def test_apply_index_map_examples():
    assert apply_index_map("0100", (3, 1)) == (0, 0)
    assert apply_index_map("013102", range(1, 7)) == as_seq("013102")
    with pytest.raises(DomainError):
        apply_index_map("0100", (5,))
    with pytest.raises(DomainError):
        apply_index_map("0100", (1, 1))


def test_mod_index_never_zero():
    assert [mod_index(i, 4) for i in range(-1, 9)] == [3, 4, 1, 2, 3, 4, 1, 2, 3, 4]


@given(quaternary)
def test_full_rotation_is_identity(a):
    b = a
    for _ in a:
        b = shift(b)
    assert b == a


def test_bracelet_invariance_exhaustive():
    for k in range(1, 11):
        for a in product((0, 1), repeat=k):
            c = canonical_bracelet(a)
            assert canonical_bracelet(shift(a)) == c
            assert canonical_bracelet(reverse(a)) == c
            assert canonical_bracelet(c) == c


@given(binary, st.data())
def test_complement_commutes_with_index_maps(a, data):
    rho = data.draw(st.permutations(range(1, len(a) + 1)))
    size = data.draw(st.integers(0, len(a)))
    rho = tuple(rho[:size])
    assert complement(complement(a)) == a
    assert complement(apply_index_map(a, rho)) == apply_index_map(complement(a), rho)
