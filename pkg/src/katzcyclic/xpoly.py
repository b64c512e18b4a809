"""Polynomials in a formal variable X over an arbitrary ring.

X is the auxiliary variable of the Katz construction: the base
derivation is extended by d(X) = 1, so the derivative of sum c_j X^j is
sum d(c_j) X^j + sum j c_j X^(j-1).  Keeping X distinct from the ring's
own variable makes this bookkeeping explicit; substitution X := t - a
(``specialize``) is the only bridge back into the ring.

An XPoly is a tuple of ring elements, lowest X-degree first, no
trailing zeros.
"""

from __future__ import annotations

from typing import Tuple

from .errors import PreconditionError

XPoly = Tuple


def normalize(ring, coeffs) -> XPoly:
    coeffs = list(coeffs)
    while coeffs and ring.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def const(ring, c) -> XPoly:
    return normalize(ring, [c])


def x_var(ring) -> XPoly:
    return (ring.zero, ring.one)


def degree(f: XPoly) -> int:
    return len(f) - 1


def is_zero(f: XPoly) -> bool:
    return len(f) == 0


def add(ring, f: XPoly, g: XPoly) -> XPoly:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else ring.zero
        b = g[i] if i < len(g) else ring.zero
        out.append(ring.add(a, b))
    return normalize(ring, out)


def neg(ring, f: XPoly) -> XPoly:
    return tuple(ring.neg(c) for c in f)


def sub(ring, f: XPoly, g: XPoly) -> XPoly:
    return add(ring, f, neg(ring, g))


def mul(ring, f: XPoly, g: XPoly) -> XPoly:
    if not f or not g:
        return ()
    out = [ring.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if ring.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = ring.add(out[i + j], ring.mul(a, b))
    return normalize(ring, out)


def scale(ring, c, f: XPoly) -> XPoly:
    return normalize(ring, [ring.mul(c, a) for a in f])


def derive(ring, f: XPoly) -> XPoly:
    """Derivative for the extended derivation with d(X) = 1."""
    out = [ring.derive(c) for c in f]
    for i in range(1, len(f)):
        out[i - 1] = ring.add(out[i - 1], ring.mul(ring.from_int(i), f[i]))
    return normalize(ring, out)


def eq(ring, f: XPoly, g: XPoly) -> bool:
    return len(f) == len(g) and all(ring.eq(a, b) for a, b in zip(f, g))


def eval_at(ring, f: XPoly, value):
    """Horner evaluation of f at a ring element."""
    acc = ring.zero
    for c in reversed(f):
        acc = ring.add(ring.mul(acc, value), c)
    return acc


def specialize(ring, f: XPoly, a):
    """Substitute X := t - a, with a a constant (d(a) = 0).

    The substituted element still has derivative 1 under d, so
    specialization commutes with the connection.
    """
    if not ring.is_constant(a):
        raise PreconditionError("specialization point must be a constant")
    return eval_at(ring, f, ring.sub(ring.t, a))


class XPolyRing:
    """Ring-protocol adapter for ring[X], so matrices of X-polynomials can
    reuse the generic linear algebra helpers."""

    is_field = False
    is_banach = False

    def __init__(self, base):
        self.base = base
        self.kind = f"xpoly:{base.kind}"
        self.variable = "X"
        self.characteristic = base.characteristic
        self.zero: XPoly = ()
        self.one: XPoly = (base.one,)

    def add(self, f, g):
        return add(self.base, f, g)

    def sub(self, f, g):
        return sub(self.base, f, g)

    def neg(self, f):
        return neg(self.base, f)

    def mul(self, f, g):
        return mul(self.base, f, g)

    def is_zero(self, f) -> bool:
        return is_zero(f)

    def eq(self, f, g) -> bool:
        return eq(self.base, f, g)

    def from_int(self, n: int):
        return const(self.base, self.base.from_int(n))

    def from_fraction(self, q):
        return const(self.base, self.base.from_fraction(q))

    def derive(self, f):
        return derive(self.base, f)
