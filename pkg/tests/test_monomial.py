from itertools import product

import pytest
from hypothesis import given, strategies as st

from codeideal import Binomial, LengthMismatch, MonomialOrder, NotDivisible, ParseError
from codeideal.monomial import (
    add,
    divides,
    format_monomial,
    generalized_names,
    lcm,
    parse_binomial,
    parse_monomial,
    sub,
)

N = 4
vec = st.lists(st.integers(0, 6), min_size=N, max_size=N).map(tuple)
ranking = st.permutations(range(N)).map(tuple)


def orders(rank):
    return [
        MonomialOrder.lex(N, rank),
        MonomialOrder.degrevlex(N, rank),
        MonomialOrder.block(("degrevlex", rank[:2]), ("lex", rank[2:])),
        MonomialOrder.block(("lex", rank[:1]), ("degrevlex", rank[1:])),
    ]


def test_vector_helpers():
    assert lcm((2, 0), (1, 3)) == (2, 3)
    assert divides((1, 0, 1), (2, 0, 1))
    assert not divides((0, 1), (1, 0))
    assert sub((2, 3), (1, 3)) == (1, 0)
    assert add((1, 2), (3, 4)) == (4, 6)
    with pytest.raises(NotDivisible):
        sub((1, 0), (0, 1))
    with pytest.raises(LengthMismatch):
        lcm((1,), (1, 2))


def test_lex_and_degrevlex_examples():
    lex = MonomialOrder.lex(3)
    assert lex.compare((1, 0, 0), (0, 5, 5)) == 1
    drl = MonomialOrder.degrevlex(3)
    assert drl.compare((1, 1, 0), (1, 0, 1)) == 1
    assert drl.compare((0, 0, 3), (1, 1, 0)) == 1  # degree first
    assert drl.compare((1, 1, 1), (0, 0, 3)) == 1  # smaller power of x3 wins
    with pytest.raises(LengthMismatch):
        drl.compare((1, 0), (1, 0, 0))


def _textbook_degrevlex(u, v):
    """Degree first, then the last nonzero entry of u - v is negative."""
    if sum(u) != sum(v):
        return 1 if sum(u) > sum(v) else -1
    diff = [a - b for a, b in zip(u, v)]
    for d in reversed(diff):
        if d:
            return 1 if d < 0 else -1
    return 0


def test_degrevlex_matches_textbook_comparator():
    drl = MonomialOrder.degrevlex(3)
    mons = [u for u in product(range(3), repeat=3) if sum(u) <= 4]
    for u in mons:
        for v in mons:
            assert drl.compare(u, v) == _textbook_degrevlex(u, v)


@given(vec, vec, vec, ranking)
def test_order_axioms(u, v, w, rank):
    for order in orders(rank):
        c = order.compare(u, v)
        assert c == -order.compare(v, u)
        assert order.compare(add(u, w), add(v, w)) == c
        assert order.compare(u, (0,) * N) >= 0
        assert order.compare(u, u) == 0
        if c == 0:
            assert u == v


@given(vec, vec)
def test_block_elimination_property(u, v):
    order = MonomialOrder.block(("degrevlex", (0, 1)), ("lex", (2, 3)))
    big = (u[0] + 1, u[1], u[2], u[3])
    small = (0, 0, v[2], v[3])
    assert order.compare(big, small) == 1


def test_elimination_split():
    order = MonomialOrder.block(("degrevlex", (3, 4)), ("lex", (0, 1, 2)))
    induced, kept = order.elimination_split([3, 4])
    assert kept == [0, 1, 2]
    assert induced == MonomialOrder.lex(3)
    lex = MonomialOrder.lex(4)
    assert lex.elimination_split([0, 1])[0] == MonomialOrder.lex(2)
    assert lex.elimination_split([2]) is None
    assert MonomialOrder.degrevlex(3).elimination_split([0]) is None
    assert MonomialOrder.degrevlex(3).elimination_split([]) == (MonomialOrder.degrevlex(3), [0, 1, 2])


def test_describe_roundtrip():
    for order in [MonomialOrder.lex(3), MonomialOrder.degrevlex(4, (2, 0, 1, 3)),
                  MonomialOrder.block(("degrevlex", (3,)), ("lex", (0, 1, 2)))]:
        assert MonomialOrder.from_description(order.describe(), order.nvars) == order
    with pytest.raises(ParseError):
        MonomialOrder.from_description("grlex", 3)


def test_binomial_canonical_orientation():
    lex = MonomialOrder.lex(3)
    b = Binomial.make((0, 0, 3), (1, 0, 0), lex)
    assert b.lead == (1, 0, 0) and b.tail == (0, 0, 3)
    assert Binomial.make((1, 1, 0), (1, 1, 0), lex) is None


def test_text_syntax():
    names = ("x1", "x2", "x3", "x4", "x5", "x6")
    u = parse_monomial("x1^2*x6^2", names)
    assert u == (2, 0, 0, 0, 0, 2)
    assert format_monomial(u, names) == "x1^2*x6^2"
    assert format_monomial((0,) * 6, names) == "1"
    assert parse_monomial("1", names) == (0,) * 6
    gnames = generalized_names(3, 5)
    assert parse_monomial("x1_4*x3_3", gnames) == (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0)
    b = parse_binomial("x3^7 - 1", names[:3], MonomialOrder.lex(3))
    assert b.lead == (0, 0, 7)
    with pytest.raises(ParseError):
        parse_monomial("x9", names)
    with pytest.raises(ParseError):
        parse_binomial("x1 + x2", names, MonomialOrder.lex(6))
