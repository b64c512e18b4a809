"""Matrices and row vectors over a ring.

Matrices are tuples of tuples of ring elements; rows/vectors are tuples.
Determinants use Laplace expansion (ranks here never exceed ~6, so the
n! term count is harmless and no division is ever required), and linear
solving uses Gaussian elimination, which needs a field.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .errors import NotInvertibleError

Matrix = Tuple[Tuple, ...]
Row = Tuple


def freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(ring, n: int) -> Matrix:
    return tuple(
        tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n)
    )


def zeros(ring, n: int, m: int = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(ring.zero for _ in range(m)) for _ in range(n))


def mat_add(ring, a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(ring.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_sub(ring, a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(ring.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_mul(ring, a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero
            for l in range(k):
                acc = ring.add(acc, ring.mul(a[i][l], b[l][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scale(ring, c, a: Matrix) -> Matrix:
    return tuple(tuple(ring.mul(c, x) for x in row) for row in a)


def mat_derive(ring, a: Matrix) -> Matrix:
    return tuple(tuple(ring.derive(x) for x in row) for row in a)


def mat_eq(ring, a: Matrix, b: Matrix) -> bool:
    return all(
        ring.eq(x, y) for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def row_add(ring, a: Row, b: Row) -> Row:
    return tuple(ring.add(x, y) for x, y in zip(a, b))


def row_sub(ring, a: Row, b: Row) -> Row:
    return tuple(ring.sub(x, y) for x, y in zip(a, b))


def row_scale(ring, c, a: Row) -> Row:
    return tuple(ring.mul(c, x) for x in a)


def row_derive(ring, a: Row) -> Row:
    return tuple(ring.derive(x) for x in a)


def row_mat_mul(ring, v: Row, a: Matrix) -> Row:
    out = []
    for j in range(len(a[0])):
        acc = ring.zero
        for i in range(len(v)):
            acc = ring.add(acc, ring.mul(v[i], a[i][j]))
        out.append(acc)
    return tuple(out)


def det(ring, a: Matrix):
    """Determinant by cofactor expansion along the first column."""
    n = len(a)
    if n == 1:
        return a[0][0]
    acc = ring.zero
    for i in range(n):
        if ring.is_zero(a[i][0]):
            continue
        minor = tuple(a[k][1:] for k in range(n) if k != i)
        cof = ring.mul(a[i][0], det(ring, minor))
        acc = ring.add(acc, cof) if i % 2 == 0 else ring.sub(acc, cof)
    return acc


def solve_left(ring, a: Matrix, b: Row) -> Row:
    """Solve x * a = b over a field (a square and invertible)."""
    n = len(a)
    # transpose: a^T y = b^T with y = x^T
    aug = [[a[j][i] for j in range(n)] + [b[i]] for i in range(n)]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if not ring.is_zero(aug[r][col])), None
        )
        if pivot is None:
            raise NotInvertibleError("singular matrix in linear solve")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ring.inv(aug[col][col])
        aug[col] = [ring.mul(inv, x) for x in aug[col]]
        for r in range(n):
            if r != col and not ring.is_zero(aug[r][col]):
                factor = aug[r][col]
                aug[r] = [
                    ring.sub(x, ring.mul(factor, y))
                    for x, y in zip(aug[r], aug[col])
                ]
    return tuple(aug[i][n] for i in range(n))
