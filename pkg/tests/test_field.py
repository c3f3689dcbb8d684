import numpy as np
import pytest
from hypothesis import given, strategies as st

from codeideal import GF, DivisionByZero, NotIrreducible, NotPrime, NotPrimitive
from codeideal.field import smallest_primitive_root


SMALL_FIELDS = [(2, 1, ()), (3, 1, ()), (5, 1, ()), (7, 1, ()), (2, 2, (1, 1, 1)),
                (3, 2, (2, 1, 1)), (2, 3, (1, 1, 0, 1)), (5, 2, (2, 1, 1))]


def test_f5_alpha_two_powers():
    F = GF(5, alpha=2)
    assert F.exp[1:] == (2, 4, 3, 1)


def test_f9_powers():
    F = GF(3, 2, poly=(2, 1, 1))
    # value form: c0 + 3*c1 for c0 + c1*alpha
    assert F.coeffs(F.exp[2]) == (1, 2)
    assert F.exp[4] == 2
    assert F.exp[8] == 1
    # alpha, 2a+1, 2a+2, 2, 2a, a+2, a+1, 1 as (constant, linear) pairs
    expected = [(0, 1), (1, 2), (2, 2), (2, 0), (0, 2), (2, 1), (1, 1), (1, 0)]
    assert [F.coeffs(F.exp[j]) for j in range(1, 9)] == expected


def test_f3_alpha_plus_alpha():
    F = GF(3)
    a = 1  # idx form of alpha
    assert F.alpha == 2
    assert F.add(a, a) == 2  # alpha^2 = 1


def test_f7_inverse_of_three():
    F = GF(7)
    assert F.value_inv(3) == 5
    assert F.to_value(F.inv(F.to_idx(3))) == 5


def test_neg_zero_and_inv_zero():
    F = GF(7)
    assert F.neg(0) == 0
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.value_inv(0)


def test_default_alpha_is_smallest_primitive_root():
    assert GF(7).alpha == 3 == smallest_primitive_root(7)
    assert GF(3).alpha == 2


def test_rejects_bad_specs():
    with pytest.raises(NotPrime):
        GF(4)
    with pytest.raises(NotIrreducible):
        GF(3, 2, poly=(0, 1, 1))  # x^2 + x = x(x + 1)
    with pytest.raises(NotPrimitive):
        GF(7, alpha=2)  # 2 has order 3 mod 7
    with pytest.raises(NotPrimitive):
        GF(3, 2, poly=(1, 0, 1))  # x^2 + 1 is irreducible but x has order 4


@pytest.mark.parametrize("p,r,poly", SMALL_FIELDS)
def test_tables_against_polynomial_arithmetic(p, r, poly):
    F = GF(p, r, poly=poly)
    q = p**r

    def polymul(a, b):
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(F.coeffs(a)):
            for j, y in enumerate(F.coeffs(b)):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus
        for d in range(len(prod) - 1, r - 1, -1) if r > 1 else []:
            c = prod[d]
            if c:
                for s in range(r + 1):
                    prod[d - r + s] = (prod[d - r + s] - c * poly[s]) % p
        return F.from_coeffs(prod[:r])

    for a in range(q):
        for b in range(q):
            expect_add = F.from_coeffs([(x + y) % p for x, y in zip(F.coeffs(a), F.coeffs(b))])
            assert F.value_add(a, b) == expect_add
            assert F.value_mul(a, b) == polymul(a, b)


@pytest.mark.parametrize("p,r,poly", SMALL_FIELDS)
def test_log_exp_roundtrip_and_order(p, r, poly):
    F = GF(p, r, poly=poly)
    q = F.q
    assert sorted(F.exp[1:]) == list(range(1, q))
    for v in range(q):
        assert F.to_value(F.to_idx(v)) == v
    for a in range(1, q):
        assert F.power(a, q - 1) == q - 1
        assert F.mul(a, F.inv(a)) == q - 1
    # idx-form addition table is commutative with the zero element as identity
    T = np.array(F.add_table)
    assert (T == T.T).all()
    assert list(T[0]) == list(range(q))


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_f9_field_axioms(a, b, c):
    F = GF(3, 2, poly=(2, 1, 1))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a


def test_matmul_matches_elementwise_fold():
    F = GF(3, 2, poly=(2, 1, 1))
    rng = np.random.default_rng(1)
    A = rng.integers(0, 9, size=(3, 4))
    B = rng.integers(0, 9, size=(4, 2))
    got = F.matmul(A, B)
    for i in range(3):
        for j in range(2):
            acc = 0
            for s in range(4):
                acc = F.value_add(acc, F.value_mul(int(A[i, s]), int(B[s, j])))
            assert got[i, j] == acc
