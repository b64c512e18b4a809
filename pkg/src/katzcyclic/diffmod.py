"""Differential modules given by a connection matrix.

Conventions: a module of rank n over a ring B is presented by the n x n
matrix G1 whose row i holds the coordinates of nabla(e_i) in the basis
e.  Coordinates act on the right, so for a row vector f one has
nabla(f) = d(f) + f * G1, and the iterated matrices satisfy
G_{s+1} = d(G_s) + G_s * G1 with G_0 = Id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import FactorialNotInvertibleError, NotInvertibleError, PreconditionError
from .linalg import Matrix, Row
from .rings import Ring, ScaledDerivationRing, ring_from_json


@dataclass(frozen=True)
class DifferentialModule:
    """Rank-n differential module with connection matrix G1 (row convention)."""

    ring: Ring
    n: int
    g1: Matrix
    # The counterexample harness needs modules in characteristic p <= n-1,
    # where (n-1)! is not invertible and the Katz construction is off-limits.
    allow_small_factorial: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("rank must be >= 1")
        if len(self.g1) != self.n or any(len(r) != self.n for r in self.g1):
            raise PreconditionError(f"connection matrix must be {self.n}x{self.n}")
        if not self.allow_small_factorial:
            check_factorial_invertible(self.ring, self.n)

    @property
    def basis_label(self) -> str:
        return "e"


def check_factorial_invertible(ring: Ring, n: int) -> None:
    """(n-1)! must be a unit for the Katz construction to make sense."""
    p = ring.characteristic
    if p and p <= n - 1:
        raise FactorialNotInvertibleError(
            f"({n}-1)! is not invertible in characteristic {p}"
        )


def factorial_unit(ring: Ring, k: int):
    """k! as a ring element, guaranteed invertible, with its inverse."""
    f = ring.from_int(math.factorial(k))
    if not ring.is_invertible(f):
        raise FactorialNotInvertibleError(f"{k}! is not invertible in this ring")
    return f, ring.inv(f)


def module_from_json(doc: dict) -> DifferentialModule:
    """Read {"ring": ..., "n": ..., "G1": [[entry strings]]}."""
    ring = ring_from_json(doc["ring"])
    n = doc["n"]
    g1 = linalg.freeze(
        [[ring.parse(entry) for entry in row] for row in doc["G1"]]
    )
    return DifferentialModule(ring=ring, n=n, g1=g1)


def module_to_json(m: DifferentialModule) -> dict:
    return {
        "ring": m.ring.descriptor(),
        "n": m.n,
        "G1": [[m.ring.to_str(x) for x in row] for row in m.g1],
    }


def iterated_matrices(m: DifferentialModule, s_max: int) -> List[Matrix]:
    """[G_0, ..., G_{s_max}] with G_0 = Id and G_{s+1} = d(G_s) + G_s G_1."""
    if s_max < 0:
        raise PreconditionError("s_max must be >= 0")
    ring = m.ring
    out = [linalg.identity(ring, m.n)]
    for _ in range(s_max):
        g = out[-1]
        out.append(
            linalg.mat_add(ring, linalg.mat_derive(ring, g), linalg.mat_mul(ring, g, m.g1))
        )
    return out


def apply_nabla(m: DifferentialModule, v: Row, k: int = 1) -> Row:
    """Coordinates of nabla^k applied to the vector with coordinate row v."""
    if k < 0:
        raise PreconditionError("k must be >= 0")
    ring = m.ring
    v = tuple(v)
    for _ in range(k):
        v = linalg.row_add(
            ring, linalg.row_derive(ring, v), linalg.row_mat_mul(ring, v, m.g1)
        )
    return v


def rescale_derivation(m: DifferentialModule, f) -> DifferentialModule:
    """The module (M, f*nabla) over (B, f*d), for an invertible f."""
    if not m.ring.is_invertible(f):
        raise NotInvertibleError("rescaling element must be invertible")
    ring = m.ring
    if isinstance(ring, ScaledDerivationRing) and ring.base.eq(
        ring.base.mul(ring.factor, f), ring.base.one
    ):
        # f = old factor inverse: undo the wrapper instead of stacking two
        new_ring: Ring = ring.base
        f_in_base = f
        g1 = linalg.mat_scale(new_ring, f_in_base, m.g1)
        return DifferentialModule(
            ring=new_ring, n=m.n, g1=g1, allow_small_factorial=m.allow_small_factorial
        )
    new_ring = ScaledDerivationRing(ring, f)
    g1 = linalg.mat_scale(new_ring, f, m.g1)
    return DifferentialModule(
        ring=new_ring, n=m.n, g1=g1, allow_small_factorial=m.allow_small_factorial
    )


def is_basis(m: DifferentialModule, vectors: Sequence[Row]):
    """Determinant of the coordinate matrix and whether it certifies a basis.

    Over a field the answer is exact (det != 0).  Over a non-field ring
    this only reports unit determinants; invertibility of a
    non-unit-but-Neumann-invertible determinant is the business of the
    norm certificates in :mod:`katzcyclic.ultranorm`.
    """
    if len(vectors) != m.n:
        raise PreconditionError(f"expected exactly {m.n} vectors, got {len(vectors)}")
    mat = linalg.freeze(vectors)
    d = linalg.det(m.ring, mat)
    if m.ring.is_field:
        return d, not m.ring.is_zero(d)
    return d, m.ring.is_invertible(d)


@dataclass(frozen=True)
class CharPReport:
    """Witness report for the characteristic-p non-existence phenomenon."""

    p: int
    e: int
    q: int
    n: int
    monomial_degrees_checked: int
    sampled_vectors: Tuple[Tuple[str, ...], ...]
    zero_power_index: int
    all_determinants_zero: bool
    message: str

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "q": self.q,
            "n": self.n,
            "monomial_degrees_checked": self.monomial_degrees_checked,
            "sampled_vectors": [list(v) for v in self.sampled_vectors],
            "zero_power_index": self.zero_power_index,
            "all_determinants_zero": self.all_determinants_zero,
            "message": self.message,
        }


def charp_counterexample(p: int, e: int, n: int, max_degree: int = 12) -> CharPReport:
    """Exhibit that F_q[x]^n with the trivial connection has no cyclic vector.

    Requires n > q = p^e.  Checks d^q = 0 on all monomials up to
    ``max_degree`` (d^q kills x^m because the falling factorial
    m(m-1)...(m-q+1) contains q consecutive integers, hence a multiple
    of p), then verifies on sampled vectors v that nabla^q(v) = 0, so
    the family {v, nabla v, ..., nabla^{n-1} v} contains the zero vector
    and its determinant vanishes identically.
    """
    from .rings import FiniteFieldPolyRing

    q = p ** e
    if n <= q:
        raise PreconditionError(f"need n > q = {q}, got n = {n}")
    ring = FiniteFieldPolyRing(p, e)
    m = DifferentialModule(
        ring=ring,
        n=n,
        g1=linalg.zeros(ring, n),
        allow_small_factorial=True,
    )

    # d^q annihilates every monomial in the sampled degree range
    for deg in range(max_degree + 1):
        mono = tuple([ring.field.zero] * deg + [ring.field.one])
        a = mono
        for _ in range(q):
            a = ring.derive(a)
        if not ring.is_zero(a):
            raise PreconditionError(f"d^{q}(x^{deg}) != 0; not a counterexample")

    # deterministic vector sample: shifted monomial vectors and a mixed one
    samples: List[Row] = []
    for shift in range(3):
        samples.append(
            tuple(
                ring.parse(f"x^{(i + shift) % (max_degree + 1)} + {i + 1}")
                for i in range(n)
            )
        )
    samples.append(tuple(ring.parse(f"x^{q} + x^{i}") for i in range(n)))

    all_zero = True
    for v in samples:
        w = apply_nabla(m, v, q)
        if any(not ring.is_zero(c) for c in w):
            all_zero = False
        family = [apply_nabla(m, v, k) for k in range(n)]
        d, ok = is_basis(m, family)
        if not ring.is_zero(d) or ok:
            all_zero = False

    return CharPReport(
        p=p,
        e=e,
        q=q,
        n=n,
        monomial_degrees_checked=max_degree,
        sampled_vectors=tuple(tuple(ring.to_str(c) for c in v) for v in samples),
        zero_power_index=q,
        all_determinants_zero=all_zero,
        message=(
            f"d^{q} = 0 on F_{q}[x], so nabla^{q} = 0 and every candidate family "
            f"of {n} derivatives contains the zero vector: "
            "no cyclic vector possible for these witnesses"
        ),
    )
