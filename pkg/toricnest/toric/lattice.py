"""
Integer kernels by unimodular row reduction.

Reducing [M | I] with determinant-one row operations keeps the right block
unimodular, so the rows whose left block vanishes form a Z-basis of the left
kernel lattice of M, not just a rational basis of it.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np


def exgcd(a: int, b: int) -> np.ndarray:
    """
    A 2x2 integer matrix U with det U = 1 and U @ [a, b] = [gcd(a, b), 0].

    The gcd is returned nonnegative. When `a` divides `b`, U[0, 1] is 0.
    """
    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign

    # Euclid on the column [b, a], tracking row operations in the right block
    U = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while U[1, 0] != 0:
        q = U[0, 0] // U[1, 0]
        U[0] -= q * U[1]
        U = U[::-1].copy()

    g = U[0, 0]
    U = U[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    if g != 0:
        U[1] = [-b_sign * b // g, a_sign * a // g]
    else:
        U = np.eye(2, dtype=object)
    return U


def integer_kernel(matrix: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """
    Z-basis of {u : u @ matrix = 0} for an integer matrix with one row per
    member (rows are exponent vectors).

    Returns one tuple of length len(matrix) per basis vector, size reduced.
    """
    rows = len(matrix)
    if rows == 0:
        return []
    cols = len(matrix[0])
    work = np.concatenate(
        [np.array(matrix, dtype=object).reshape(rows, cols), np.eye(rows, dtype=object)], axis=1
    )

    pivot = 0
    for c in range(cols):
        if pivot == rows:
            break
        for r in range(pivot + 1, rows):
            if work[r, c] == 0:
                continue
            U = exgcd(work[pivot, c], work[r, c])
            work[[pivot, r]] = U @ work[[pivot, r]]
        if work[pivot, c] != 0:
            pivot += 1

    kernel = [tuple(int(x) for x in work[r, cols:]) for r in range(pivot, rows)]
    for r in range(pivot, rows):
        assert all(x == 0 for x in work[r, :cols]), "row reduction left a nonzero kernel row"
    return size_reduce(kernel)


def _l1(v: Sequence[int]) -> int:
    return sum(abs(x) for x in v)


def size_reduce(basis: list[tuple[int, ...]], *, max_rounds: int = 50) -> list[tuple[int, ...]]:
    """
    Shorten basis vectors by adding or subtracting other basis vectors while
    the L1 norm drops. Unimodular, so the spanned lattice is unchanged.
    """
    vectors = [list(v) for v in basis]
    for _ in range(max_rounds):
        changed = False
        for i, v in enumerate(vectors):
            for j, w in enumerate(vectors):
                if i == j:
                    continue
                for sign in (1, -1):
                    candidate = [a - sign * b for a, b in zip(v, w, strict=True)]
                    if _l1(candidate) < _l1(v):
                        v[:] = candidate
                        changed = True
        if not changed:
            break
    return sorted((tuple(v) for v in vectors), key=lambda v: (_l1(v), v))
