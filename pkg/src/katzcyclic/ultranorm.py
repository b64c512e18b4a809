"""Matrix norms over Banach rings and norm-smallness cyclicity certificates.

Two matrix norms are used: the sup-norm max |a_ij| and the rho-sup-norm
max |a_ij| rho^(j-i), instantiated at rho = |t|^(-1) and rho = |d|.  A
connection whose matrix is small enough in one of these norms is
certified cyclic: the base-change matrix H(t) is then invertible by a
Neumann series, because each H_0(-t) H_s(t) G_s has norm < 1.

All inequalities are strict and decided exactly on NormValue exponents;
an equality boundary is reported as "not certified" with a flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from . import linalg
from .diffmod import DifferentialModule, check_factorial_invertible, iterated_matrices
from .errors import PreconditionError, UnsupportedOperationError
from .katz import h_matrix_at, katz_vector, specialize_vector
from .linalg import Matrix, Row
from .normvalue import NormValue


@dataclass(frozen=True)
class MatrixNormKind:
    """sup-norm (rho = 1) or rho-sup-norm for a positive rho = p^k."""

    name: str
    rho: NormValue

    @staticmethod
    def sup(p: int) -> "MatrixNormKind":
        return MatrixNormKind("sup", NormValue.one(p))

    @staticmethod
    def rho_t_inverse(ring) -> "MatrixNormKind":
        return MatrixNormKind("rho-t", ring.norm(ring.t).inverse())

    @staticmethod
    def rho_d(ring) -> "MatrixNormKind":
        return MatrixNormKind("rho-d", ring.derivation_norm())

    def __post_init__(self):
        if self.rho.is_zero:
            raise PreconditionError("rho must be positive")


def matrix_norm(ring, a: Matrix, kind: Optional[MatrixNormKind] = None) -> NormValue:
    """max over entries of |a_ij| * rho^(j-i); sup-norm when kind is None."""
    if not ring.is_banach:
        raise UnsupportedOperationError("matrix norms need a Banach ring")
    rho = kind.rho if kind is not None else NormValue.one(ring.prime)
    best = NormValue.zero(ring.prime)
    for i, row in enumerate(a):
        for j, entry in enumerate(row):
            v = ring.norm(entry) * rho ** (j - i)
            if v > best:
                best = v
    return best


def lemma_2_2_bound(g1_norm: NormValue, d_norm: NormValue, s: int) -> NormValue:
    """Upper bound |G_1| * max(|G_1|, |d|)^(s-1) for |G_s|."""
    if s < 1:
        raise PreconditionError("s must be >= 1")
    return g1_norm * max(g1_norm, d_norm) ** (s - 1)


@dataclass(frozen=True)
class HNormBounds:
    """Closed-form upper bounds for the norms of H_0(+-t) and H_s(t)."""

    sup_h0: NormValue
    rho_t_h0: NormValue
    rho_t_hs: Tuple[NormValue, ...]  # index s = 0 .. 2n-2
    rho_d_h0: NormValue
    rho_d_hs: Tuple[NormValue, ...]


def h_norm_bounds(
    n: int,
    t_pow_norms: Tuple[NormValue, ...],
    d_norm: NormValue,
    factorial_norms: Tuple[NormValue, ...],
) -> HNormBounds:
    """Bounds from |alpha| <= 1 plus monotonicity of i -> rho^i/|(s+i)!|.

    ``t_pow_norms[i]`` must be |t^i| for i = 0..2n-2 and
    ``factorial_norms[i]`` must be |i!| for i = 0..n-1.
    """
    t_norm = t_pow_norms[1] if n > 1 else t_pow_norms[0]
    fact_last = factorial_norms[n - 1]
    sup_h0 = max(t_pow_norms[i] / factorial_norms[i] for i in range(n))
    rho_t_h0 = fact_last.inverse()
    rho_t_hs = tuple(
        (t_pow_norms[s] / fact_last) if s >= 1 else rho_t_h0
        for s in range(2 * n - 1)
    )
    dt = d_norm * t_norm
    rho_d_h0 = dt ** (n - 1) / fact_last
    rho_d_hs = tuple(
        (t_pow_norms[s] * dt ** (n - 1 - s) / fact_last) if s >= 1 else rho_d_h0
        for s in range(2 * n - 1)
    )
    return HNormBounds(
        sup_h0=sup_h0,
        rho_t_h0=rho_t_h0,
        rho_t_hs=rho_t_hs,
        rho_d_h0=rho_d_h0,
        rho_d_hs=rho_d_hs,
    )


def ring_norm_data(ring, n: int):
    """(|t^i| for i=0..2n-2, |d|, |i!| for i=0..n-1), all exact."""
    t_pows = []
    acc = ring.one
    for _ in range(2 * n - 1):
        t_pows.append(ring.norm(acc))
        acc = ring.mul(acc, ring.t)
    d_norm = ring.derivation_norm()
    fact = tuple(
        NormValue.of_int(math.factorial(i), ring.prime) for i in range(n)
    )
    return tuple(t_pows), d_norm, fact


@dataclass(frozen=True)
class CyclicityCertificate:
    """Self-checking record of a cyclicity criterion evaluation."""

    criterion: str  # prop2.3 | prop2.5 | prop2.8 | lemma2.1 | field-determinant
    certified: bool
    norms: Dict[str, NormValue]
    per_s: Tuple[NormValue, ...] = ()
    boundary: bool = False
    witness: Optional[Row] = None

    def recheck(self) -> bool:
        """Re-derive the verdict from the stored exact values."""
        if self.criterion in ("prop2.3", "prop2.5", "prop2.8"):
            return self.norms["G1"] < self.norms["bound"]
        if self.criterion == "lemma2.1":
            one = NormValue.one(self.norms["d"].p)
            return all(v < one for v in self.per_s)
        return self.certified

    def to_json(self, ring=None) -> dict:
        doc = {
            "criterion": self.criterion,
            "norms": {k: str(v) for k, v in self.norms.items()},
            "verdict": "certified" if self.certified else "not_certified",
            "witness": (
                [ring.to_str(c) for c in self.witness]
                if (self.witness is not None and ring is not None)
                else None
            ),
        }
        if self.per_s:
            doc["per_s_norms"] = [str(v) for v in self.per_s]
        if self.boundary:
            doc["boundary"] = True
        return doc


def _base_norms(m: DifferentialModule) -> Dict[str, NormValue]:
    ring = m.ring
    return {
        "t": ring.norm(ring.t),
        "d": ring.derivation_norm(),
        "factorial": NormValue.of_int(math.factorial(m.n - 1), ring.prime),
    }


def _witness(m: DifferentialModule) -> Row:
    kv = katz_vector(m)
    return specialize_vector(m, kv, m.ring.from_int(0))


def _smallness_certificate(
    m: DifferentialModule, criterion: str, g1_norm: NormValue, bound: NormValue
) -> CyclicityCertificate:
    certified = g1_norm < bound
    boundary = (not certified) and g1_norm == bound
    return CyclicityCertificate(
        criterion=criterion,
        certified=certified,
        norms={**_base_norms(m), "G1": g1_norm, "bound": bound},
        boundary=boundary,
        witness=_witness(m) if certified else None,
    )


def _require_banach(m: DifferentialModule) -> None:
    if not m.ring.is_banach:
        raise UnsupportedOperationError("certification needs a Banach ring")
    check_factorial_invertible(m.ring, m.n)


def check_prop_2_3(m: DifferentialModule) -> CyclicityCertificate:
    """Sup-norm smallness: |G1| < |H0(t)|^(-2) * min(1, 1/|d|^(2n-3))."""
    _require_banach(m)
    ring = m.ring
    n = m.n
    one = NormValue.one(ring.prime)
    t_pows, d_norm, fact = ring_norm_data(ring, n)
    h0_inv = min(fact[i] / t_pows[i] for i in range(n))  # |H0(t)|^(-1)
    bound = h0_inv ** 2 * min(one, d_norm ** -(2 * n - 3))
    g1_norm = matrix_norm(ring, m.g1)
    return _smallness_certificate(m, "prop2.3", g1_norm, bound)


def _rho_bound(m: DifferentialModule) -> NormValue:
    """|(n-1)!|^2 |d| / (|d||t|)^(2n-2), shared by both rho criteria."""
    ring = m.ring
    n = m.n
    d_norm = ring.derivation_norm()
    t_norm = ring.norm(ring.t)
    fact = NormValue.of_int(math.factorial(n - 1), ring.prime)
    return fact ** 2 * d_norm / (d_norm * t_norm) ** (2 * n - 2)


def check_prop_2_5(m: DifferentialModule) -> CyclicityCertificate:
    """rho = |t|^(-1) smallness: |G1|^(rho) < |(n-1)!|^2 |d| / (|d||t|)^(2n-2)."""
    _require_banach(m)
    kind = MatrixNormKind.rho_t_inverse(m.ring)
    g1_norm = matrix_norm(m.ring, m.g1, kind)
    return _smallness_certificate(m, "prop2.5", g1_norm, _rho_bound(m))


def check_prop_2_8(m: DifferentialModule) -> CyclicityCertificate:
    """rho = |d| smallness: |G1|^(rho) < |(n-1)!|^2 |d| / (|d||t|)^(2n-2)."""
    _require_banach(m)
    kind = MatrixNormKind.rho_d(m.ring)
    g1_norm = matrix_norm(m.ring, m.g1, kind)
    return _smallness_certificate(m, "prop2.8", g1_norm, _rho_bound(m))


def certify_lemma_2_1(
    m: DifferentialModule, kind: Optional[MatrixNormKind] = None
) -> CyclicityCertificate:
    """The sharpest check: ||H0(-t) H_s(t) G_s|| < 1 for s = 1..2n-2.

    When it holds, H(t) is invertible (Neumann series) and the candidate
    vector specialized at X := t is cyclic.  The prop-2.x checks are
    sufficient conditions for this one.
    """
    _require_banach(m)
    ring = m.ring
    n = m.n
    one = NormValue.one(ring.prime)
    gs = iterated_matrices(m, 2 * n - 2)
    h0_neg = h_matrix_at(ring, 0, n, ring.neg(ring.t))
    per_s = []
    for s in range(1, 2 * n - 1):
        hs = h_matrix_at(ring, s, n, ring.t)
        prod = linalg.mat_mul(ring, linalg.mat_mul(ring, h0_neg, hs), gs[s])
        per_s.append(matrix_norm(ring, prod, kind))
    certified = all(v < one for v in per_s)
    boundary = (not certified) and all(v <= one for v in per_s)
    g1_norm = matrix_norm(ring, m.g1, kind)
    return CyclicityCertificate(
        criterion="lemma2.1",
        certified=certified,
        norms={**_base_norms(m), "G1": g1_norm},
        per_s=tuple(per_s),
        boundary=boundary,
        witness=_witness(m) if certified else None,
    )


def invertibility_witness_norm(
    m: DifferentialModule, kind: Optional[MatrixNormKind] = None
) -> NormValue:
    """||H0(-t) H(t) - Id||; < 1 makes H(t) explicitly invertible."""
    _require_banach(m)
    ring = m.ring
    n = m.n
    gs = iterated_matrices(m, 2 * n - 2)
    h_t = linalg.zeros(ring, n)
    for s in range(2 * n - 1):
        hs = h_matrix_at(ring, s, n, ring.t)
        h_t = linalg.mat_add(ring, h_t, linalg.mat_mul(ring, hs, gs[s]))
    h0_neg = h_matrix_at(ring, 0, n, ring.neg(ring.t))
    delta = linalg.mat_sub(
        ring, linalg.mat_mul(ring, h0_neg, h_t), linalg.identity(ring, n)
    )
    return matrix_norm(ring, delta, kind)
