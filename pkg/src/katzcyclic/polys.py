"""Dense univariate polynomial arithmetic over a coefficient field.

Polynomials are tuples of field elements, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  Every function
takes the field protocol object as first argument.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .errors import NotInvertibleError

Poly = Tuple


def normalize(K, coeffs: Sequence) -> Poly:
    coeffs = list(coeffs)
    while coeffs and K.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def const(K, c) -> Poly:
    return normalize(K, [c])


def variable(K) -> Poly:
    return (K.zero, K.one)


def degree(f: Poly) -> int:
    """Degree, with deg 0 = -1."""
    return len(f) - 1


def is_zero(f: Poly) -> bool:
    return len(f) == 0


def add(K, f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else K.zero
        b = g[i] if i < len(g) else K.zero
        out.append(K.add(a, b))
    return normalize(K, out)


def neg(K, f: Poly) -> Poly:
    return tuple(K.neg(c) for c in f)


def sub(K, f: Poly, g: Poly) -> Poly:
    return add(K, f, neg(K, g))


def mul(K, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return normalize(K, out)


def scale(K, c, f: Poly) -> Poly:
    return normalize(K, [K.mul(c, a) for a in f])


def pow_(K, f: Poly, k: int) -> Poly:
    out = const(K, K.one)
    for _ in range(k):
        out = mul(K, out, f)
    return out


def divmod_(K, f: Poly, g: Poly):
    """Euclidean division; g must be nonzero."""
    if not g:
        raise NotInvertibleError("polynomial division by zero")
    q = [K.zero] * max(0, len(f) - len(g) + 1)
    r = list(f)
    inv_lead = K.inv(g[-1])
    while len(r) >= len(g) and r:
        c = K.mul(r[-1], inv_lead)
        shift = len(r) - len(g)
        q[shift] = c
        for i, gc in enumerate(g):
            r[shift + i] = K.sub(r[shift + i], K.mul(c, gc))
        while r and K.is_zero(r[-1]):
            r.pop()
    return normalize(K, q), normalize(K, r)


def gcd(K, f: Poly, g: Poly) -> Poly:
    """Monic gcd."""
    while g:
        _, rem = divmod_(K, f, g)
        f, g = g, rem
    if not f:
        return ()
    return monic(K, f)


def monic(K, f: Poly) -> Poly:
    if not f:
        return ()
    return scale(K, K.inv(f[-1]), f)


def derive(K, f: Poly) -> Poly:
    out = [K.mul(K.from_int(i), f[i]) for i in range(1, len(f))]
    return normalize(K, out)


def eq(K, f: Poly, g: Poly) -> bool:
    return len(f) == len(g) and all(K.eq(a, b) for a, b in zip(f, g))


def to_str(K, f: Poly, var: str) -> str:
    """Canonical printer: descending degree, explicit signs, no spaces
    around '*' or '^'.  Inverse of the expression grammar."""
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if K.is_zero(c):
            continue
        s = K.to_str(c)
        negative = s.startswith("-")
        if negative:
            s = s[1:]
        if i == 0:
            term = s
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            term = xpow if s == "1" else f"{s}*{xpow}"
        if not parts:
            parts.append(("-" if negative else "") + term)
        else:
            parts.append((" - " if negative else " + ") + term)
    return "".join(parts)
