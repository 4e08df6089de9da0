import random
from itertools import product

from hypothesis import given, settings, strategies as st

from icircular.binmat import BinaryMatrix, mask_complement, same_configuration, submatrix
from icircular.c1p import find_forb_certificate
from icircular.families import gen_forb_icircular, gen_MI, gen_MII, gen_MIV, gen_MVI, gen_R
from icircular.icirc import (
    brute_force_i_circular,
    find_iforb_certificate,
    has_i_circular,
    is_i_circular_order,
    is_minimal_forbidden_icircular,
    lambda_closure,
)

M = BinaryMatrix.from_strings


def random_matrix(rng, r, c):
    return BinaryMatrix(tuple(rng.getrandbits(c) for _ in range(r)), c)


def test_lambda_examples():
    res = lambda_closure(gen_MIV())
    assert res.matrix == gen_MIV() and res.added == ()
    res = lambda_closure(gen_MVI())
    assert [p for p, _ in res.added] == [(1, 2), (1, 3), (2, 3)]
    assert res.matrix.to_strings()[3:] == ["0101", "1001", "0011"]
    res = lambda_closure(M(["1111", "0000", "1100", "0111"]))
    assert [p for p, _ in res.added] == [(3, 4)]


def test_lambda_keeps_duplicates():
    res = lambda_closure(M(["110", "011", "011"]))
    assert res.matrix.to_strings() == ["110", "011", "011", "010", "010"]


def test_has_i_circular_examples():
    assert has_i_circular(BinaryMatrix((0, 0), 4)) is not None
    assert has_i_circular(gen_MI(3)) == (1, 2, 3)
    assert has_i_circular(gen_MVI()) is None
    assert brute_force_i_circular(mask_complement("0100", gen_MII(4))) is None
    m = M(["1011", "1110"])
    assert (has_i_circular(m) is None) == (brute_force_i_circular(m) is None)
    for row in range(16):
        assert brute_force_i_circular(BinaryMatrix((row,), 4)) is not None


def test_certificate_examples():
    cert = find_iforb_certificate(gen_MVI())
    assert cert.family.label() == "MVI" and cert.witness.row_map == (1, 2, 3)
    r = gen_R("200")
    assert same_configuration(submatrix(r, (3, 4, 1, 2), (3, 2, 4, 1)), mask_complement("0100", gen_MII(4)))
    for x in range(4):
        r = gen_R((2, 0, 0, x))
        cert = find_iforb_certificate(r)
        assert cert is not None
        assert submatrix(r, cert.witness.row_map, cert.witness.col_map) == cert.forbidden
    assert find_iforb_certificate(gen_MI(4)) is None


def test_minimality():
    for f in gen_forb_icircular(5, 6):
        assert is_minimal_forbidden_icircular(f)
        assert find_forb_certificate(lambda_closure(f).matrix) is not None
    assert not is_minimal_forbidden_icircular(BinaryMatrix(gen_MVI().rows + gen_MVI().rows[:1], 4))
    assert not is_minimal_forbidden_icircular(gen_MI(4))


def test_exhaustive_3x4():
    for bits in product(range(16), repeat=3):
        m = BinaryMatrix(bits, 4)
        order = has_i_circular(m)
        assert (order is None) == (brute_force_i_circular(m) is None)
        assert (order is None) == (find_iforb_certificate(m) is not None)
        if order is not None:
            assert is_i_circular_order(m, order)


def test_random_5x6():
    rng = random.Random(23)
    for _ in range(800):
        m = random_matrix(rng, 5, 6)
        order = has_i_circular(m)
        assert (order is None) == (brute_force_i_circular(m) is None)
        assert (order is None) == (find_iforb_certificate(m) is not None)


@settings(max_examples=150)
@given(st.integers(1, 5), st.integers(2, 6), st.data())
def test_permutation_invariance(r, c, data):
    rows = data.draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    m = BinaryMatrix(tuple(rows), c)
    rho = data.draw(st.permutations(range(1, r + 1)))
    sigma = data.draw(st.permutations(range(1, c + 1)))
    assert (has_i_circular(m) is None) == (has_i_circular(submatrix(m, rho, sigma)) is None)
