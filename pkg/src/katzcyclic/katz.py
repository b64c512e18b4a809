"""The explicit cyclic vector construction.

The candidate vector c(e, X) = sum_j (X^j / j!) sum_k (-1)^k C(j,k)
nabla^k(e_{j-k}) has the property that the rows of the base-change
matrix H(X) = sum_s H_s(X) G_s give the coordinates of its iterated
derivatives nabla^i(c) in the basis e.  The universal matrices H_s(X)
have monomial entries alpha(s;i,j) X^(s+j-i)/(s+j-i)! with integer
alpha, and det H(X) =: P(X) satisfies P(0) = 1 and deg P <= n(n-1), so
specializing X := t - a at n(n-1)+1 distinct constants a must hit a
nonzero determinant over a field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg, polys, xpoly
from .diffmod import (
    DifferentialModule,
    apply_nabla,
    check_factorial_invertible,
    factorial_unit,
    is_basis,
    iterated_matrices,
)
from .errors import (
    InternalConsistencyError,
    NotInvertibleError,
    PreconditionError,
    UnsupportedOperationError,
)
from .fields import QQ
from .linalg import Matrix, Row
from .xpoly import XPoly, XPolyRing

QXPoly = Tuple[Fraction, ...]  # element of Q[X], dense


def _check_indices(s: int, i: int, j: int, n: int) -> None:
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        raise PreconditionError(f"indices i={i}, j={j} out of range for n={n}")
    if not (0 <= s <= 2 * n - 2):
        raise PreconditionError(f"s={s} out of range [0, {2 * n - 2}]")


def epsilon(s: int, i: int, j: int, n: int) -> int:
    """Support indicator of the universal base-change entries."""
    _check_indices(s, i, j, n)
    if not (0 <= s <= n - 1 + i):
        return 0
    if not (max(0, i - s) <= j <= min(n - 1, n - 1 + i - s)):
        return 0
    return 1


def alpha(s: int, i: int, j: int, n: int) -> int:
    """Integer coefficient of the universal base-change entry (s; i, j)."""
    if epsilon(s, i, j, n) == 0:
        return 0
    lo = max(0, s + j - (n - 1))
    hi = min(i, s)
    total = 0
    for k in range(lo, hi + 1):
        # (-1)^(s+k) == (-1)^(s-k)
        sign = -1 if (s + k) % 2 else 1
        total += sign * math.comb(s - k + j, j) * math.comb(i, k)
    return total


def h_entry(s: int, i: int, j: int, n: int) -> QXPoly:
    """The Q[X] entry alpha(s;i,j) * X^(s+j-i) / (s+j-i)!."""
    a = alpha(s, i, j, n)
    if a == 0:
        return ()
    m = s + j - i
    coeff = Fraction(a, math.factorial(m))
    return tuple([Fraction(0)] * m + [coeff])


def h_matrix(s: int, n: int) -> Tuple[Tuple[QXPoly, ...], ...]:
    """The n x n universal matrix H_s(X) over Q[X]."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if not (0 <= s <= 2 * n - 2):
        raise PreconditionError(f"s={s} out of range [0, {2 * n - 2}]")
    return tuple(
        tuple(h_entry(s, i, j, n) for j in range(n)) for i in range(n)
    )


def qx_to_str(f: QXPoly) -> str:
    """Canonical printer for Q[X] entries (used for golden tables)."""
    return polys.to_str(QQ, f, "X")


def embed_qx(ring, f: QXPoly) -> XPoly:
    """Lift a Q[X] polynomial into ring[X] via the constant embedding."""
    return xpoly.normalize(ring, [ring.from_fraction(c) for c in f])


def h_matrix_in(ring, s: int, n: int) -> Matrix:
    """H_s(X) with entries lifted into ring[X]."""
    return tuple(
        tuple(embed_qx(ring, h_entry(s, i, j, n)) for j in range(n))
        for i in range(n)
    )


def h_matrix_at(ring, s: int, n: int, value) -> Matrix:
    """H_s evaluated at a ring element (e.g. X := t or X := -t)."""
    return tuple(
        tuple(
            xpoly.eval_at(ring, embed_qx(ring, h_entry(s, i, j, n)), value)
            for j in range(n)
        )
        for i in range(n)
    )


@dataclass(frozen=True)
class KatzVector:
    """The candidate c(e, X): X-coefficient rows, lowest degree first."""

    n: int
    coeffs: Tuple[Row, ...]  # length n; coeffs[j] = X^j coefficient, a row
    specialized_at: Optional[object] = None
    specialized: Optional[Row] = None


def katz_vector(m: DifferentialModule) -> KatzVector:
    """Build c(e, X) = sum_j (X^j/j!) sum_k (-1)^k C(j,k) nabla^k(e_{j-k})."""
    check_factorial_invertible(m.ring, m.n)
    ring = m.ring
    gs = iterated_matrices(m, m.n - 1)
    coeffs: List[Row] = []
    for j in range(m.n):
        acc = tuple(ring.zero for _ in range(m.n))
        for k in range(j + 1):
            term = gs[k][j - k]  # row j-k of G_k = coords of nabla^k(e_{j-k})
            c = Fraction((-1) ** k * math.comb(j, k), math.factorial(j))
            acc = linalg.row_add(
                ring, acc, linalg.row_scale(ring, ring.from_fraction(c), term)
            )
        coeffs.append(acc)
    return KatzVector(n=m.n, coeffs=tuple(coeffs))


def specialize_vector(m: DifferentialModule, v: KatzVector, a) -> Row:
    """Coordinates of c(e, t - a) for a constant a."""
    ring = m.ring
    if not ring.is_constant(a):
        raise PreconditionError("specialization point must be a constant")
    point = ring.sub(ring.t, a)
    acc = tuple(ring.zero for _ in range(m.n))
    power = ring.one
    for j in range(m.n):
        acc = linalg.row_add(ring, acc, linalg.row_scale(ring, power, v.coeffs[j]))
        power = ring.mul(power, point)
    return acc


def derivative_coefficients(m: DifferentialModule, c0: Sequence[Row], i: int, j: int) -> Row:
    """X^j coefficient of nabla^i applied to the X-polynomial vector c0.

    c_{i,j} = sum_k k! C(j+k, j) C(i, k) nabla^(i-k)(c_{0,j+k}).
    """
    if i < 0 or j < 0:
        raise PreconditionError("indices must be >= 0")
    ring = m.ring
    acc = tuple(ring.zero for _ in range(m.n))
    for k in range(i + 1):
        if j + k >= len(c0):
            continue
        coeff = math.factorial(k) * math.comb(j + k, j) * math.comb(i, k)
        term = apply_nabla(m, c0[j + k], i - k)
        acc = linalg.row_add(
            ring, acc, linalg.row_scale(ring, ring.from_int(coeff), term)
        )
    return acc


def invert_coefficients(m: DifferentialModule, zero_components: Sequence[Row]) -> Tuple[Row, ...]:
    """Recover the X-coefficients of a degree <= n-1 vector from the
    constant terms of its first n derivatives.

    c_{0,j} = (1/j!) sum_k (-1)^(j-k) C(j,k) nabla^(j-k)(c_{k,0}).
    """
    check_factorial_invertible(m.ring, len(zero_components))
    ring = m.ring
    out: List[Row] = []
    for j in range(len(zero_components)):
        acc = tuple(ring.zero for _ in range(m.n))
        for k in range(j + 1):
            c = Fraction((-1) ** (j - k) * math.comb(j, k), math.factorial(j))
            term = apply_nabla(m, zero_components[k], j - k)
            acc = linalg.row_add(
                ring, acc, linalg.row_scale(ring, ring.from_fraction(c), term)
            )
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class BaseChangeDecomposition:
    """The family H_0 .. H_{2n-2}, the assembled H(X), and P(X) = det H(X)."""

    n: int
    h_tables: Tuple[Tuple[Tuple[QXPoly, ...], ...], ...]
    h_assembled: Matrix  # entries in ring[X]
    det_poly: XPoly  # P(X) over the ring
    coefficients: Tuple  # r_0, ..., r_{n(n-1)} as ring elements


def assemble_h(m: DifferentialModule):
    """The matrix H(X) = sum_s H_s(X) G_s over ring[X], plus the tables H_s."""
    check_factorial_invertible(m.ring, m.n)
    ring = m.ring
    n = m.n
    xring = XPolyRing(ring)
    gs = iterated_matrices(m, 2 * n - 2)
    h_assembled = linalg.zeros(xring, n)
    tables = []
    for s in range(2 * n - 1):
        hs = h_matrix(s, n)
        tables.append(hs)
        hs_ring = tuple(
            tuple(embed_qx(ring, hs[i][j]) for j in range(n)) for i in range(n)
        )
        gs_lifted = tuple(
            tuple(xpoly.const(ring, x) for x in row) for row in gs[s]
        )
        h_assembled = linalg.mat_add(
            xring, h_assembled, linalg.mat_mul(xring, hs_ring, gs_lifted)
        )
    return h_assembled, tuple(tables)


def base_change(m: DifferentialModule) -> BaseChangeDecomposition:
    """Assemble H(X) = sum_s H_s(X) G_s and its determinant P(X)."""
    ring = m.ring
    n = m.n
    xring = XPolyRing(ring)
    h_assembled, tables = assemble_h(m)
    det_poly = linalg.det(xring, h_assembled)
    max_deg = n * (n - 1)
    coeffs = tuple(
        det_poly[k] if k < len(det_poly) else ring.zero for k in range(max_deg + 1)
    )
    if xpoly.degree(det_poly) > max_deg:
        raise InternalConsistencyError(
            f"deg P = {xpoly.degree(det_poly)} exceeds n(n-1) = {max_deg}"
        )
    if not ring.eq(coeffs[0], ring.one):
        raise InternalConsistencyError("P(0) != 1")
    return BaseChangeDecomposition(
        n=n,
        h_tables=tables,
        h_assembled=h_assembled,
        det_poly=det_poly,
        coefficients=coeffs,
    )


def vandermonde_det(constants: Sequence, ring=None):
    """prod_{i<j} (a_j - a_i); rational inputs by default, ring elements
    when a ring is supplied."""
    if ring is None:
        out = Fraction(1)
        for i in range(len(constants)):
            for j in range(i + 1, len(constants)):
                out *= Fraction(constants[j]) - Fraction(constants[i])
        return out
    out = ring.one
    for i in range(len(constants)):
        for j in range(i + 1, len(constants)):
            out = ring.mul(out, ring.sub(constants[j], constants[i]))
    return out


@dataclass(frozen=True)
class CyclicSearchResult:
    candidate_index: int
    a: object  # the constant, as a ring element
    vector: Row
    determinant: object  # P(t - a), nonzero


def find_cyclic(
    m: DifferentialModule, candidates: Optional[Sequence] = None
) -> CyclicSearchResult:
    """Search the n(n-1)+1 specializations of the candidate vector for one
    with nonzero determinant; guaranteed to succeed over a char-0 field."""
    ring = m.ring
    n = m.n
    needed = n * (n - 1) + 1
    if candidates is None:
        if not (ring.is_field and ring.characteristic == 0):
            raise UnsupportedOperationError(
                "default constants need a characteristic-0 field; supply candidates"
            )
        candidates = [ring.from_int(i) for i in range(needed)]
    else:
        candidates = list(candidates)
        if len(candidates) < needed:
            raise PreconditionError(
                f"need at least {needed} distinct constants, got {len(candidates)}"
            )
    for i in range(len(candidates)):
        if not ring.is_constant(candidates[i]):
            raise PreconditionError("candidates must be constants (d(a) = 0)")
        for j in range(i + 1, len(candidates)):
            if ring.eq(candidates[i], candidates[j]):
                raise PreconditionError("candidate constants must be distinct")

    kv = katz_vector(m)
    for idx, a in enumerate(candidates):
        v0 = specialize_vector(m, kv, a)
        family = [v0]
        for _ in range(n - 1):
            family.append(apply_nabla(m, family[-1], 1))
        det, ok = is_basis(m, family)
        if ok:
            return CyclicSearchResult(
                candidate_index=idx, a=a, vector=v0, determinant=det
            )
    raise InternalConsistencyError(
        "no candidate produced a nonzero determinant; impossible over a field "
        "with n(n-1)+1 distinct constants"
    )


def companion_form(m: DifferentialModule, c: Row) -> Tuple:
    """Coefficients b_0..b_{n-1} with nabla^n(c) = sum_k b_k nabla^k(c),
    i.e. the scalar equation y^(n) = sum b_k y^(k) in the cyclic basis."""
    if not m.ring.is_field:
        raise UnsupportedOperationError("companion form needs a field coefficient ring")
    n = m.n
    family = [tuple(c)]
    for _ in range(n):
        family.append(apply_nabla(m, family[-1], 1))
    basis_rows = linalg.freeze(family[:n])
    det, ok = is_basis(m, family[:n])
    if not ok:
        raise NotInvertibleError("the derivative family of c is not a basis")
    try:
        return linalg.solve_left(m.ring, basis_rows, family[n])
    except NotInvertibleError:  # pragma: no cover - excluded by the det check
        raise
