"""Base coefficient fields: the rationals and finite fields F_{p^e}.

Both expose the same small protocol (zero, one, add, sub, mul, neg,
inv, div, is_zero, eq, from_int, characteristic, to_str) so that the
dense polynomial helpers in :mod:`katzcyclic.polys` stay generic.

Rational elements are :class:`fractions.Fraction`; finite-field
elements are tuples of e ints in [0, p), coordinates with respect to
the power basis of a fixed irreducible modulus.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from .errors import NotInvertibleError


class RationalField:
    """The field Q backed by fractions.Fraction."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise NotInvertibleError("0 is not invertible")
        return 1 / a

    @staticmethod
    def div(a, b):
        if b == 0:
            raise NotInvertibleError("division by zero")
        return a / b

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    @staticmethod
    def eq(a, b) -> bool:
        return a == b

    @staticmethod
    def from_int(n: int):
        return Fraction(n)

    @staticmethod
    def from_fraction(q: Fraction):
        return q

    @staticmethod
    def to_str(a) -> str:
        return str(a)


QQ = RationalField()

GFElem = Tuple[int, ...]


def _gfp_polymul(a, b, p):
    """Product of two dense int-coefficient polynomials mod p."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _gfp_polymod(a, m, p):
    """a mod m over F_p, m monic."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return tuple(c % p for c in a)


def _gfp_powmod(base, exp, m, p):
    result = (1,)
    base = _gfp_polymod(base, m, p)
    while exp:
        if exp & 1:
            result = _gfp_polymod(_gfp_polymul(result, base, p), m, p)
        base = _gfp_polymod(_gfp_polymul(base, base, p), m, p)
        exp >>= 1
    return result


def _gfp_gcd(a, b, p):
    a, b = tuple(a), tuple(b)
    while b:
        # reduce a mod b after making b monic
        lead_inv = pow(b[-1], p - 2, p)
        b_monic = tuple((c * lead_inv) % p for c in b)
        a, b = b, _gfp_polymod(a, b_monic, p)
    return a


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _find_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Smallest monic irreducible of degree e over F_p (lexicographic search)."""
    x = (0, 1)
    for code in range(p ** e):
        coeffs = []
        c = code
        for _ in range(e):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        # f irreducible iff x^(p^e) == x mod f and gcd(x^(p^(e/l)) - x, f) = 1
        xq = _gfp_powmod(x, p ** e, f, p)
        if xq != x:
            continue
        ok = True
        for ell in _prime_factors(e):
            xr = _gfp_powmod(x, p ** (e // ell), f, p)
            diff = list(xr) + [0] * max(0, 2 - len(xr))
            diff[1] = (diff[1] - 1) % p
            while diff and diff[-1] == 0:
                diff.pop()
            g = _gfp_gcd(f, tuple(diff), p)
            if len(g) != 1:
                ok = False
                break
        if ok:
            return f
    raise ValueError(f"no irreducible of degree {e} over F_{p}")  # unreachable


class FiniteField:
    """F_q with q = p^e, elements as coefficient tuples of length e."""

    def __init__(self, p: int, e: int = 1):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError("e must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e
        self.characteristic = p
        self.modulus = _find_irreducible(p, e) if e > 1 else None
        self.zero: GFElem = (0,) * e
        self.one: GFElem = (1,) + (0,) * (e - 1)

    def add(self, a: GFElem, b: GFElem) -> GFElem:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: GFElem, b: GFElem) -> GFElem:
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a: GFElem) -> GFElem:
        return tuple((-x) % self.p for x in a)

    def mul(self, a: GFElem, b: GFElem) -> GFElem:
        if self.e == 1:
            return ((a[0] * b[0]) % self.p,)
        prod = _gfp_polymul(a, b, self.p)
        red = _gfp_polymod(prod, self.modulus, self.p)
        return tuple(red) + (0,) * (self.e - len(red))

    def inv(self, a: GFElem) -> GFElem:
        if self.is_zero(a):
            raise NotInvertibleError("0 is not invertible")
        # a^(q-2) = a^(-1) in F_q
        result = self.one
        base = a
        exp = self.q - 2
        while exp:
            if exp & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exp >>= 1
        return result

    def div(self, a: GFElem, b: GFElem) -> GFElem:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: GFElem) -> bool:
        return all(x == 0 for x in a)

    def eq(self, a: GFElem, b: GFElem) -> bool:
        return a == b

    def from_int(self, n: int) -> GFElem:
        return (n % self.p,) + (0,) * (self.e - 1)

    def from_fraction(self, q: Fraction) -> GFElem:
        den = q.denominator % self.p
        if den == 0:
            raise NotInvertibleError(f"denominator {q.denominator} vanishes in F_{self.q}")
        return self.div(self.from_int(q.numerator), self.from_int(q.denominator))

    def to_str(self, a: GFElem) -> str:
        if self.e == 1:
            return str(a[0])
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                terms.append(f"{head}g" if i == 1 else f"{head}g^{i}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.e})"
