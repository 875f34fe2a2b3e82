"""Finite-dimensional associative algebras over F_p given by structure constants.

The radical uses the trace-of-p-powers method, valid in every
characteristic: with A acting on itself by left multiplication (dimension
N) and l = floor(log_p N), set I_{-1} = A and

    I_i = { a in I_{i-1} : g_i(ab) = 0 for all b in A },
    g_i(x) = Tr(X^(p^i)) / p^i mod p,

where X is any integer lift of the matrix of x.  Each g_i is linear on
I_{i-1} and I_l is the radical.  For p > N this is the trace-form kernel.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence


# ---------------------------------------------------------------- linear algebra mod p

def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    a = [[x % p for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % p for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == len(a):
            break
    return a[:row], pivots


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : rows * x = 0} over F_p."""
    red, pivots = rref(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for r, pc in zip(red, pivots):
            x[pc] = (-r[fc]) % p
        basis.append(x)
    return basis


def span_basis(vectors, p: int) -> list[list[int]]:
    return rref(vectors, p)[0] if vectors else []


def in_span(basis, v, p: int) -> bool:
    return rank(list(basis) + [v], p) == rank(basis, p) if basis else not any(x % p for x in v)


def _matmul(a, b, N):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(a[i], bt[j])) % N for j in range(n)] for i in range(n)]


def _matpow_trace(m, e: int, N: int) -> int:
    n = len(m)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = [[x % N for x in row] for row in m]
    while e:
        if e & 1:
            result = _matmul(result, base, N)
        e >>= 1
        if e:
            base = _matmul(base, base, N)
    return sum(result[i][i] for i in range(n)) % N


# ---------------------------------------------------------------- algebras

class FpAlgebra:
    """``consts[i][j]`` is the coordinate vector of e_i * e_j."""

    def __init__(self, p: int, consts: Sequence[Sequence[Sequence[int]]], one: Sequence[int] | None = None):
        self.p = p
        self.dim = len(consts)
        self.consts = [[[x % p for x in v] for v in row] for row in consts]
        self.one = list(one) if one is not None else None

    def mul(self, u: Sequence[int], v: Sequence[int]) -> list[int]:
        p, N = self.p, self.dim
        out = [0] * N
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                c = x * y
                for k, z in enumerate(self.consts[i][j]):
                    if z:
                        out[k] += c * z
        return [x % p for x in out]

    def basis_vector(self, i: int) -> list[int]:
        v = [0] * self.dim
        v[i] = 1
        return v

    def left_matrix(self, u: Sequence[int]) -> list[list[int]]:
        """Matrix of x -> u*x (column j is u*e_j)."""
        cols = [self.mul(u, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def associativity_failures(self, limit: int | None = None) -> list[tuple[int, int, int]]:
        out = []
        for i, j, k in product(range(self.dim), repeat=3):
            e = self.basis_vector
            if self.mul(self.mul(e(i), e(j)), e(k)) != self.mul(e(i), self.mul(e(j), e(k))):
                out.append((i, j, k))
                if limit and len(out) >= limit:
                    break
        return out

    def is_identity(self, u) -> bool:
        return all(self.mul(u, self.basis_vector(j)) == self.basis_vector(j)
                   and self.mul(self.basis_vector(j), u) == self.basis_vector(j) for j in range(self.dim))

    def center(self) -> list[list[int]]:
        """Basis of the center."""
        N, p = self.dim, self.p
        rows = []
        for j in range(N):
            for k in range(N):
                rows.append([(self.consts[t][j][k] - self.consts[j][t][k]) % p for t in range(N)])
        return nullspace(rows, N, p)

    def _g(self, x: Sequence[int], i: int) -> int:
        p = self.p
        pe = p ** i
        tr = _matpow_trace(self.left_matrix(x), pe, pe * p)
        if tr % pe:
            raise ArithmeticError("trace of p-power not divisible as the radical theory requires")
        return (tr // pe) % p

    def radical(self) -> list[list[int]]:
        """Basis (reduced echelon rows) of the Jacobson radical."""
        N, p = self.dim, self.p
        levels = 0
        while p ** (levels + 1) <= N:
            levels += 1
        current = [self.basis_vector(j) for j in range(N)]
        for i in range(levels + 1):
            if not current:
                break
            rows = []
            for j in range(N):
                ej = self.basis_vector(j)
                rows.append([self._g(self.mul(a, ej), i) for a in current])
            coeffs = nullspace(rows, len(current), p)
            current = span_basis(
                [[sum(c * a[t] for c, a in zip(cv, current)) % p for t in range(N)] for cv in coeffs], p
            )
        self._check_radical(current)
        return current

    def _check_radical(self, basis) -> None:
        # defensive: a two-sided ideal made of nilpotent elements
        for a in basis:
            for j in range(self.dim):
                ej = self.basis_vector(j)
                if not in_span(basis, self.mul(a, ej), self.p) or not in_span(basis, self.mul(ej, a), self.p):
                    raise ArithmeticError("computed radical is not an ideal")
            x = a
            for _ in range(self.dim):
                x = self.mul(x, a)
            if any(x):
                raise ArithmeticError("computed radical contains a non-nilpotent element")

    def is_central_simple(self) -> bool:
        return not self.radical() and len(self.center()) == 1
