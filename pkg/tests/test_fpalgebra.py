from itertools import product

import pytest

from crossorder.fpalgebra import FpAlgebra, in_span, nullspace, rank, span_basis
from crossorder.randomtables import catalogue


def matrix_algebra(p, n=2, upper=False):
    units = [(i, j) for i in range(n) for j in range(n) if not upper or i <= j]
    pos = {u: k for k, u in enumerate(units)}
    N = len(units)
    consts = [[[0] * N for _ in range(N)] for _ in range(N)]
    for (a, b), (c, d) in product(units, repeat=2):
        if b == c:
            consts[pos[(a, b)]][pos[(c, d)]][pos[(a, d)]] = 1
    one = [1 if i == j else 0 for (i, j) in units]
    return FpAlgebra(p, consts, one)


def truncated_poly(p, modulus):
    # F_p[x]/(modulus), modulus monic little-endian
    k = len(modulus) - 1
    consts = []
    for i in range(k):
        row = []
        for j in range(k):
            v = [0] * (2 * k)
            v[i + j] = 1
            for d in range(2 * k - 1, k - 1, -1):
                c = v[d]
                if c:
                    for t, m in enumerate(modulus):
                        v[d - k + t] -= c * m
            row.append([x % p for x in v[:k]])
        consts.append(row)
    return FpAlgebra(p, consts, [1] + [0] * (k - 1))


def group_algebra(p, G):
    n = G.order
    consts = [[[int(G.mul(a, b) == c) for c in range(n)] for b in range(n)] for a in range(n)]
    return FpAlgebra(p, consts, [int(g == G.identity) for g in range(n)])


def is_nilpotent(alg, x):
    y = x
    for _ in range(alg.dim + 1):
        if not any(y):
            return True
        y = alg.mul(y, x)
    return not any(y)


def brute_radical_dim(alg):
    # J = {x : a*x nilpotent for every a}
    p, N = alg.p, alg.dim
    elems = [list(v) for v in product(range(p), repeat=N)]
    J = [x for x in elems if all(is_nilpotent(alg, alg.mul(a, x)) for a in elems)]
    dim = 0
    while p ** dim < len(J):
        dim += 1
    assert p ** dim == len(J)
    return dim


CASES = [
    ("M2(F2)", lambda: matrix_algebra(2)),
    ("M2(F3)", lambda: matrix_algebra(3)),
    ("T2(F2)", lambda: matrix_algebra(2, upper=True)),
    ("T2(F3)", lambda: matrix_algebra(3, upper=True)),
    ("F2[x]/x^3", lambda: truncated_poly(2, [0, 0, 0, 1])),
    ("F2[x]/(x^2+1)", lambda: truncated_poly(2, [1, 0, 1])),
    ("F3[x]/(x^2+1)", lambda: truncated_poly(3, [1, 0, 1])),
    ("F3[x]/(x^2-1)", lambda: truncated_poly(3, [-1, 0, 1])),
    ("F2[C2xC2]", lambda: group_algebra(2, catalogue()["C2xC2"])),
    ("F3[C3]", lambda: group_algebra(3, catalogue()["C3"])),
    ("F2[C4]", lambda: group_algebra(2, catalogue()["C4"])),
    ("F2[S3]", lambda: group_algebra(2, catalogue()["S3"])),
    ("F3[C2]", lambda: group_algebra(3, catalogue()["C2"])),
]


@pytest.mark.parametrize("name, make", CASES, ids=[c[0] for c in CASES])
def test_radical_matches_bruteforce(name, make):
    alg = make()
    assert alg.associativity_failures(limit=1) == []
    assert alg.is_identity(alg.one)
    assert len(alg.radical()) == brute_radical_dim(alg)


def trace_form_kernel_dim(alg):
    rows = []
    N, p = alg.dim, alg.p
    for j in range(N):
        ej = alg.basis_vector(j)
        row = []
        for i in range(N):
            m = alg.left_matrix(alg.mul(alg.basis_vector(i), ej))
            row.append(sum(m[k][k] for k in range(N)) % p)
        rows.append(row)
    return len(nullspace(rows, N, p))


@pytest.mark.parametrize("p", [5, 7, 11])
@pytest.mark.parametrize("gname", ["C2", "C3", "C2xC2"])
def test_radical_matches_trace_form_for_large_p(p, gname):
    # large p: semisimple group algebras and truncated polynomial rings
    for alg in (group_algebra(p, catalogue()[gname]), truncated_poly(p, [0, 0, 1]), matrix_algebra(p, upper=True)):
        if p > alg.dim:
            assert len(alg.radical()) == trace_form_kernel_dim(alg)


def test_centers():
    assert len(matrix_algebra(3).center()) == 1
    assert len(matrix_algebra(2, upper=True).center()) == 1
    assert len(group_algebra(2, catalogue()["S3"]).center()) == 3
    assert len(group_algebra(5, catalogue()["C2xC2"]).center()) == 4


def test_central_simple():
    assert matrix_algebra(2).is_central_simple()
    assert not matrix_algebra(2, upper=True).is_central_simple()
    assert truncated_poly(3, [1, 0, 1]).radical() == []
    assert not truncated_poly(3, [1, 0, 1]).is_central_simple()


def test_linear_algebra_helpers():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(rows, 7) == 2
    ns = nullspace(rows, 3, 7)
    assert len(ns) == 1
    assert all(sum(a * b for a, b in zip(r, ns[0])) % 7 == 0 for r in rows)
    basis = span_basis(rows, 7)
    assert in_span(basis, [3, 7, 10], 7)
    assert not in_span(basis, [0, 0, 1], 7)
