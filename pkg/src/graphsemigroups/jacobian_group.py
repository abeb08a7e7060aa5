"""Jacobian of a graph and the Abel-Jacobi map."""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import (
    DivisorClass,
    count_effective,
    degree,
    effective_divisors,
    is_effective,
    point,
    sub,
)
from .errors import BadDegree, EnumerationCapExceeded, InputError, NotEffective
from .graph import build_laplacian, require_connected

DEFAULT_CAP = 2_000_000


def smith_normal_form(M):
    """Smith normal form of an integer matrix with unimodular transforms.

    Returns ``(S, U, V)`` with ``U @ M @ V == S``, ``S`` diagonal with
    nonnegative entries each dividing the next.  Exact Python-int arithmetic.
    """
    A = [list(row) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row[dst] += c * row[src]
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return _finish(A, U, V)
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return _finish(A, U, V)


def _finish(A, U, V):
    return (
        tuple(tuple(r) for r in A),
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in V),
    )


def matmul(X, Y):
    return tuple(
        tuple(sum(X[i][k] * Y[k][j] for k in range(len(Y))) for j in range(len(Y[0])))
        for i in range(len(X))
    )


def reduced_laplacian(g, q):
    L = build_laplacian(g)
    keep = [v for v in range(g.n) if v != q]
    return tuple(tuple(L[i][j] for j in keep) for i in keep)


@dataclass(frozen=True)
class JacobianStructure:
    invariant_factors: tuple
    order: int
    base_vertex: int
    snf: tuple
    left: tuple
    right: tuple

    def to_json(self):
        return {
            "factors": list(self.invariant_factors),
            "order": self.order,
            "base_vertex": self.base_vertex,
        }


def jacobian(g, q=0):
    """Invariant factors of Jac(G) from the SNF of the reduced Laplacian."""
    require_connected(g)
    L = reduced_laplacian(g, q)
    S, U, V = smith_normal_form(L)
    diag = [S[i][i] for i in range(len(S))]
    order = 1
    for d in diag:
        order *= d
    factors = tuple(d for d in diag if d > 1)
    return JacobianStructure(factors, order, q, S, U, V)


def abel_jacobi(g, P, k, D, base=0):
    """Class of ``D - kP`` for an effective degree-``k`` divisor ``D``."""
    if len(D) != g.n:
        raise InputError("divisor length mismatch")
    if not is_effective(D):
        raise NotEffective(f"{D} is not effective")
    if degree(D) != k:
        raise BadDegree(f"divisor has degree {degree(D)}, expected {k}")
    return DivisorClass.of(g, sub(D, point(g.n, P, k)), base)


def abel_jacobi_injective(g, P, k, cap=DEFAULT_CAP):
    """Whether ``D -> [D - kP]`` is injective on effective degree-``k`` divisors."""
    require_connected(g)
    if k < 1:
        raise InputError("k must be a positive integer")
    needed = count_effective(g.n, k)
    if needed > cap:
        raise EnumerationCapExceeded(f"Div_+^{k}", needed, cap)
    seen = set()
    for D in effective_divisors(g.n, k):
        cls = abel_jacobi(g, P, k, D)
        if cls in seen:
            return False
        seen.add(cls)
    return True
