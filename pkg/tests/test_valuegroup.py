from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from crossorder.valuegroup import ValueGroup, coarsen, compare, in_m_squared

Z1, Z2, Q = ValueGroup.lex(1), ValueGroup.lex(2), ValueGroup.dense_q()


def test_identities():
    assert Z2.zero().payload == (0, 0)
    assert Z2.min_positive().payload == (0, 1)
    assert Z1.min_positive() == Z1.value(1)
    assert Q.zero() == Q.value(0)
    with pytest.raises(ValueError):
        Q.min_positive()


def test_lex_order_is_leftmost_first():
    assert Z2.value((1, -5)) > Z2.value((0, 100))
    assert compare(Z2.value((0, 1)), Z2.value((0, 1))) == 0
    assert compare(Z2.value((0, 1)), Z2.value((1, 0))) == -1


def test_group_mismatch_raises():
    with pytest.raises(ValueError):
        Z1.value(1) < Z2.value((0, 1))


def test_parse_values():
    assert Q.value("3/6") == Q.value(Fraction(1, 2))
    with pytest.raises(ValueError):
        Z2.value(1)
    with pytest.raises(ValueError):
        Z1.value(True)


def test_json_round_trip():
    for g in (Z1, Z2, Q):
        assert ValueGroup.from_json(g.to_json()) == g
    assert Q.value("-2/4").to_json() == "-1/2"
    assert Z2.value((1, -1)).to_json() == [1, -1]


def test_m_squared_bruteforce_lex2():
    two = 2 * Z2.min_positive()
    for a, b in product(range(-3, 4), repeat=2):
        v = Z2.value((a, b))
        if v < Z2.zero():
            with pytest.raises(ValueError):
                in_m_squared(v)
            continue
        expected = not (v.is_zero() or v == Z2.min_positive() or Z2.zero() < v < two)
        assert in_m_squared(v) == expected
        assert (v < two) == (not in_m_squared(v))


def test_m_squared_examples():
    assert not in_m_squared(Z1.value(1))
    assert in_m_squared(Z1.value(2))
    assert in_m_squared(Z2.value((1, 0)))
    assert not in_m_squared(Z2.value((0, 1)))
    assert in_m_squared(Q.value("1/1000"))
    assert not in_m_squared(Q.value(0))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@given(st.lists(rationals, min_size=3, max_size=3))
def test_dense_group_laws(xs):
    a, b, c = (Q.value(x) for x in xs)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == Q.zero()
    if a <= b:
        assert a + c <= b + c


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=3))
def test_lex_group_laws(xs):
    a, b, c = (Z2.value(x) for x in xs)
    assert (a + b) + c == a + (b + c)
    if a <= b:
        assert a + c <= b + c
    assert (a < b) + (a == b) + (a > b) == 1


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
       st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)))
def test_coarsen_is_order_preserving_homomorphism(x, y):
    g = ValueGroup.lex(3)
    for keep in (1, 2):
        target, proj = coarsen(g, keep)
        a, b = g.value(x), g.value(y)
        assert proj(a + b) == proj(a) + proj(b)
        if a <= b:
            assert proj(a) <= proj(b)
        assert proj(a).group == target


def test_coarsen_kernel_and_errors():
    target, proj = coarsen(Z2, 1)
    assert proj(Z2.value((0, 7))).is_zero()
    assert proj(Z2.value((2, -7))) == target.value(2)
    with pytest.raises(ValueError):
        coarsen(Q, 1)
    with pytest.raises(ValueError):
        coarsen(Z2, 2)
