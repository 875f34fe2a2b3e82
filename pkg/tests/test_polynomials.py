import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from crossorder import polynomials as P
from crossorder.splitting import PrimeSplitting, factor_mod_p

from conftest import klein_galois

ints = st.lists(st.integers(-9, 9), min_size=1, max_size=5)


@given(ints, st.lists(st.integers(-9, 9), min_size=2, max_size=4).filter(lambda b: b[-1] != 0))
def test_qdivmod_identity(a, b):
    a, b = P.qpoly(a), P.qpoly(b)
    q, r = P.qdivmod(a, b)
    assert P.qadd(P.qmul(q, b), r) == a
    assert len(r) < len(b)


@given(ints, ints)
def test_resultant_is_sylvester_determinant(a, b):
    a, b = P.trim(list(a)), P.trim(list(b))
    if len(a) < 2 or len(b) < 2:
        return
    assert P.resultant_int(a, b) == P.det_int(P.sylvester(a, b))
    assert P.det_int(P.sylvester(a, b)) == P.det_fraction(P.sylvester(a, b))


def test_resultant_examples():
    assert P.resultant_int([1, 0, 1], [0, 2]) == 4
    assert P.resultant_int([-1, 1], [-1, 0, 1]) == 0


def test_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    rng = random.Random(0)
    for _ in range(20):
        a = [rng.randint(-5, 5) for _ in range(4)] + [1]
        b = [rng.randint(-5, 5) for _ in range(3)] + [1]
        pa = sum(c * x ** i for i, c in enumerate(a))
        pb = sum(c * x ** i for i, c in enumerate(b))
        assert P.resultant_int(a, b) == sympy.resultant(pa, pb, x)
    for p in (5, 7, 11, 13, 23):
        m = [1, 0, -10, 0, 1]
        ours = sorted(tuple(g) for g in factor_mod_p(m, p))
        _, facs = sympy.Poly(sum(c * x ** i for i, c in enumerate(m)), x, modulus=p).factor_list()
        theirs = sorted(tuple(int(c) % p for c in reversed(f.all_coeffs())) for f, _ in facs)
        assert ours == theirs


def test_vp():
    assert P.vp(250, 5) == 3
    assert P.vp(Fraction(3, 25), 5) == -2
    assert P.vp(-7, 7) == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=2, max_size=4), st.lists(st.integers(0, 6), min_size=2, max_size=4))
def test_mxgcd_bezout(a, b):
    p = 7
    a, b = P.mreduce(a, p), P.mreduce(b, p)
    if not a or not b:
        return
    g, s, t = P.mxgcd(a, b, p)
    assert P.madd(P.mmul(s, a, p), P.mmul(t, b, p), p) == g


def test_concurrent_valuations_agree():
    g = klein_galois()
    elems = [g.field.element([3, 1, 4, 1]) * g.field.element([2, 0, 1]) ** k for k in range(1, 30)]
    serial = PrimeSplitting(g, 23, precision=5)
    expected = [[serial.valuation_int(M, a) for M in range(4)] for a in elems]
    shared = PrimeSplitting(g, 23, precision=5)
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(lambda a: [shared.valuation_int(M, a) for M in range(4)], elems))
    assert got == expected
