import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codeideal import GF, LengthMismatch, LinearCode, RankDeficient, TooLarge, standard_form
from codeideal.code import rref

from conftest import random_code


def test_f7_code_standard_and_parity(c7):
    assert c7.systematic
    assert c7.M.tolist() == [[4], [1]]
    H = c7.H
    assert H.shape == (1, 3)
    # a scalar multiple of (1, 2, 5)
    assert any(((s * np.array([1, 2, 5])) % 7 == H[0]).all() for s in range(1, 7))
    assert not c7.field.matmul(c7.G, H.T).any()
    assert (1 * 1 + 0 * 2 + 4 * 5) % 7 == 0


def test_row_swap_standard_form():
    F = GF(3)
    G_std, perm = standard_form(F, [[0, 1], [1, 0]])
    assert G_std.tolist() == [[1, 0], [0, 1]]
    assert perm == (0, 1)


def test_identity_and_full_code():
    F = GF(5)
    code = LinearCode(F, np.eye(3, dtype=int))
    assert code.G_std.tolist() == np.eye(3, dtype=int).tolist()
    assert code.H.shape == (0, 3)
    assert code.syndrome((1, 2, 3)) == ()


def test_non_systematic_permutation():
    F = GF(3)
    code = LinearCode(F, [[1, 1, 0, 2], [2, 2, 1, 0]])
    assert not code.systematic
    assert code.col_perm[:2] == (0, 2)
    assert not F.matmul(code.G, code.H.T).any()


def test_rank_deficient():
    with pytest.raises(RankDeficient):
        LinearCode(GF(3), [[1, 2, 0], [2, 1, 0]])


def test_ternary_6_3(c63):
    words = c63.enumerate_codewords()
    assert len(words) == 27
    assert len({tuple(w) for w in words}) == 27
    assert not c63.field.matmul(c63.G, c63.H.T).any()


def test_725_distance(c725):
    assert c725.min_distance() == (5, 2)
    assert c725.min_distance_via_parity() == 5


def test_caps():
    code = LinearCode(GF(3), np.eye(4, dtype=int), cap=10)
    with pytest.raises(TooLarge):
        code.enumerate_codewords()


def test_word_checks(c7):
    with pytest.raises(LengthMismatch):
        c7.syndrome((1, 2))
    with pytest.raises(LengthMismatch):
        c7.encode((1,))


def test_extension_field_code(c9):
    assert c9.q == 9 and c9.k == 2
    words = c9.enumerate_codewords()
    assert len(words) == 81
    for w in words:
        assert c9.contains(w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 5]), st.integers(2, 6))
def test_random_code_invariants(seed, p, n):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, n + 1))
    code = random_code(rng, p, n, k)
    F = code.field
    R, piv = rref(F, code.G)
    assert len(piv) == k
    assert not F.matmul(code.G, code.H.T).any()
    words = code.enumerate_codewords()
    assert len({tuple(w) for w in words}) == p**k
    assert all(code.contains(w) for w in words)
    assert code.d == code.min_distance_via_parity()
    # scaling identity on syndromes
    w = tuple(int(x) for x in rng.integers(0, p, size=n))
    for a in range(1, p):
        aw = F.scale_word(a, w)
        assert code.syndrome(aw) == F.scale_word(a, code.syndrome(w))
