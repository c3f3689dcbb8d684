from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codeideal import (
    GF,
    Crossing,
    DegenerateCode,
    LinearCode,
    MonomialOrder,
    NotPrimeField,
    buchberger,
    code_ideal_generators,
    code_ideal_lex_gb,
    code_ideal_via_elimination,
    code_ideal_via_toric_elimination,
    code_toric_gb,
    cross_down,
    cross_up,
    generalized_ideal_generators,
    generalized_lex_gb,
    generalized_lex_gb_prime,
    lift_parity,
    phi,
    phi_s,
    restrict_generalized,
    standard_monomials,
    toric_mod_matrix,
)
from codeideal.code import weight
from codeideal.monomial import code_names, generalized_names

from conftest import random_code

F5 = GF(5, alpha=2)


def test_crossing_examples():
    up = cross_up(F5, (1, 0, 3))
    names = generalized_names(3, 5)
    assert [names[i] for i, a in enumerate(up) if a] == ["x1_4", "x3_3"]
    assert cross_down(F5, (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0)) == (1, 0, 3)
    assert cross_up(F5, (0, 0)) == (0,) * 8
    assert cross_down(F5, (0,) * 8) == (0, 0)
    F3 = GF(3)
    assert cross_up(F3, (2, 1)) == (1, 0, 0, 1)


def test_down_up_identity_exhaustive():
    F = GF(3, 2, poly=(2, 1, 1))
    cx = Crossing(F, 2)
    for w in product(range(9), repeat=2):
        assert cx.down(cx.up(w)) == w
    rng = np.random.default_rng(0)
    cx5 = Crossing(F5, 4)
    for _ in range(1000):
        w = tuple(int(x) for x in rng.integers(0, 5, size=4))
        assert cx5.down(cx5.up(w)) == w


def test_cross_down_is_additive():
    rng = np.random.default_rng(2)
    cx = Crossing(F5, 3)
    for _ in range(200):
        u = tuple(int(x) for x in rng.integers(0, 4, size=12))
        v = tuple(int(x) for x in rng.integers(0, 4, size=12))
        s = tuple(a + c for a, c in zip(u, v))
        assert cx.down(s) == F5.add_words(cx.down(u), cx.down(v))


def test_phi_values():
    F = GF(3, 2, poly=(2, 1, 1))
    assert phi(F, F.exp[1]) == (0,) * 6 + (1, 2)
    assert phi(F, F.exp[8]) == (0,) * 6 + (0, 1)
    assert phi(F, 0) == (0,) * 8
    # phi(alpha^u) = e_u for the last r exponents
    for u in (7, 8):
        assert phi(F, F.exp[u]) == tuple(int(j == u) for j in range(1, 9))
    # F_p linearity
    for a in range(9):
        for c in range(9):
            lhs = phi(F, F.value_add(a, c))
            rhs = tuple((x + y) % 3 for x, y in zip(phi(F, a), phi(F, c)))
            assert lhs == rhs
    assert phi_s(F, (F.exp[1], 0)) == phi(F, F.exp[1]) + (0,) * 8


def test_code_ideal_generators(c7, c725):
    gens = code_ideal_generators(c7)
    assert len(gens.rows) == 2 and len(gens.relations) == 3
    assert all(r.lead[i] == 7 for i, r in enumerate(gens.relations))
    assert code_ideal_lex_gb(c725).strings()[:2] == ["x1 - x3^2*x4*x5^2*x6^2*x7^2", "x2 - x3*x4*x5^2*x7"]
    assert set(code_ideal_lex_gb(c725).strings()[2:]) == {f"x{i}^3 - 1" for i in range(3, 8)}
    with pytest.raises(NotPrimeField):
        code_ideal_generators(LinearCode(GF(2, 2, poly=(1, 1, 1)), [[1, 2]]))


def test_full_code_ideal():
    code = LinearCode(GF(3), [[1]])
    gens = code_ideal_generators(code).generators
    assert len(gens) == 2
    gb = buchberger(gens, MonomialOrder.lex(1))
    assert gb.strings() == ["x1 - 1"]
    assert code_ideal_lex_gb(code) == gb
    with pytest.raises(DegenerateCode):
        code_toric_gb(code)


def test_f7_lex_gb(c7):
    assert set(code_ideal_lex_gb(c7).strings()) == {"x1 - x3^3", "x2 - x3^6", "x3^7 - 1"}


def test_generalized_generators(c63):
    gens = generalized_ideal_generators(c63)
    assert len(gens.I_G) == 6
    assert len(gens.I_q) == 6 * 3
    assert all(max(b.lead) <= 1 and max(b.tail) <= 1 for b in gens.I_G)
    names = generalized_names(6, 3)
    strs = {g.format(names) for g in gens.I_q}
    for i in range(1, 7):
        assert {f"x{i}_1^2 - x{i}_2", f"x{i}_1*x{i}_2 - 1", f"x{i}_1 - x{i}_2^2"} <= strs


def test_generalized_tiny_code():
    code = LinearCode(GF(3), [[1]])
    gens = generalized_ideal_generators(code)
    names = generalized_names(1, 3)
    assert {g.format(names) for g in gens.I_G} == {"x1_1 - 1", "x1_2 - 1"}
    assert len(gens.I_q) == 3


def test_binary_generalized_equals_code_ideal():
    rng = np.random.default_rng(8)
    code = random_code(rng, 2, 5, 2)
    gen = generalized_lex_gb(code)
    assert [(b.lead, b.tail) for b in gen] == [(b.lead, b.tail) for b in code_ideal_lex_gb(code)]
    drl = MonomialOrder.degrevlex(5)
    assert buchberger(generalized_ideal_generators(code).generators, drl) == \
        buchberger(code_ideal_generators(code).generators, drl)


def test_prime_closed_form_equals_general(c63, c725):
    for code in (c63, c725):
        assert generalized_lex_gb_prime(code) == generalized_lex_gb(code)


def test_toric_mod_matrix():
    assert toric_mod_matrix([[1, 2, 5]], 7).tolist() == [[1, 2, 5, 7]]
    assert toric_mod_matrix(np.eye(2, dtype=int), 3).tolist() == [[1, 0, 3, 0], [0, 1, 0, 3]]
    with pytest.raises(ValueError):
        toric_mod_matrix([[-1, 2]], 3)


def test_toric_bridge(c7, c63):
    A = toric_mod_matrix(lift_parity(c63), 3)
    assert A.shape == (3, 9)
    assert (A[:, 6:] == 3 * np.eye(3, dtype=int)).all()
    for code in (c7, c63):
        lex = code_ideal_lex_gb(code)
        assert code_ideal_via_elimination(code) == lex
        assert code_ideal_via_toric_elimination(code) == lex


def test_restrictions(c63):
    lex = code_ideal_lex_gb(c63)
    for i in (1, 2):
        assert restrict_generalized(c63, i) == lex
        assert restrict_generalized(c63, i, method="fglm") == lex


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([3, 5]))
def test_random_codes_closed_forms(seed, p):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    k = int(rng.integers(1, n))
    code = random_code(rng, p, n, k)
    lex = code_ideal_lex_gb(code)
    assert buchberger(code_ideal_generators(code).generators, lex.order) == lex
    assert code_ideal_via_elimination(code) == buchberger(lex.elements, MonomialOrder.lex(n))
    assert len(standard_monomials(lex)) == p ** (n - k)
    gen = generalized_lex_gb(code)
    assert len(gen) == n * (p - 1)
    assert len(standard_monomials(gen)) == p ** (n - k)


def test_generalized_membership_of_codeword_differences(c63):
    gb = generalized_lex_gb(c63)
    cx = Crossing(c63.field, 6)
    rng = np.random.default_rng(4)
    hits = 0
    for _ in range(400):
        a = tuple(int(x) for x in rng.integers(0, 3, size=12))
        c = c63.encode([int(x) for x in rng.integers(0, 3, size=3)])
        # b chosen so that down(a - b) is the codeword c
        target = c63.field.sub_words(cx.down(a), c)
        bvec = cx.up(target)
        assert gb.contains((a, bvec))
        hits += 1
        other = tuple(int(x) for x in rng.integers(0, 3, size=12))
        diff = c63.field.sub_words(cx.down(a), cx.down(other))
        assert gb.contains((a, other)) == c63.contains(diff)
    assert hits == 400


@given(st.sampled_from([(3, 1, ()), (5, 1, ()), (3, 2, (2, 1, 1)), (2, 2, (1, 1, 1))]),
       st.lists(st.integers(0, 8), min_size=1, max_size=6))
def test_crossing_down_up_identity(spec, raw):
    p, r, poly = spec
    F = GF(p, r, poly=poly) if r > 1 else GF(p)
    word = tuple(x % F.q for x in raw)
    cx = Crossing(F, len(word))
    up = cx.up(word)
    assert cx.down(up) == word
    # one variable per nonzero coordinate, each with exponent 1
    assert sum(up) == weight(word)
