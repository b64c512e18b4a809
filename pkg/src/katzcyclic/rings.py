"""Exact coefficient rings with a derivation and (optionally) an ultrametric norm.

Three concrete kinds are provided:

* ``rational_function`` -- the field Q(x) with d = d/dx,
* ``gauss_padic``       -- dense polynomials Q[t] with d = d/dt, normed by
  the p-adic Gauss norm with |t| = p^(-r) (a Tate-algebra model; every
  operation in this package stays polynomial, so no completion or
  truncation is ever needed),
* ``finite_field_poly`` -- F_q[x] with d = d/dx, q = p^e (characteristic p,
  no norm).

Every ring carries a distinguished element ``t`` with d(t) = 1 and exposes
arithmetic through methods; elements themselves are plain immutable data
(coefficient tuples, or numerator/denominator pairs).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import polys
from .errors import NotInvertibleError, UnsupportedOperationError
from .fields import QQ, FiniteField
from .normvalue import NormValue


class Ring:
    """Common interface; see concrete subclasses."""

    kind: str
    variable: str
    characteristic: int
    is_banach: bool = False
    is_field: bool = False
    prime: Optional[int] = None

    # -- arithmetic -----------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def pow(self, a, k: int):
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        raise NotImplementedError

    def is_invertible(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_constant(self, a) -> bool:
        return self.is_zero(self.derive(a))

    # -- derivation -----------------------------------------------------
    def derive(self, a):
        raise NotImplementedError

    def antiderivative(self, a):
        """An element F with d(F) = a, or None if none exists in the ring."""
        return None

    # -- norm -----------------------------------------------------------
    def norm(self, a) -> NormValue:
        raise UnsupportedOperationError(f"ring kind '{self.kind}' carries no norm")

    def derivation_norm(self) -> NormValue:
        raise UnsupportedOperationError(f"ring kind '{self.kind}' carries no norm")

    # -- presentation ---------------------------------------------------
    def to_str(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        from .parser import parse_element

        return parse_element(text, self)

    def descriptor(self) -> dict:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.descriptor()}>"


@dataclass(frozen=True)
class RatFunc:
    """Reduced fraction of Q[x] polynomials; denominator monic."""

    num: Tuple[Fraction, ...]
    den: Tuple[Fraction, ...]


class RationalFunctionField(Ring):
    """Q(x) with d = d/dx; the distinguished element t is x itself."""

    kind = "rational_function"
    characteristic = 0
    is_field = True

    def __init__(self, variable: str = "x"):
        self.variable = variable
        self.zero = RatFunc((), (Fraction(1),))
        self.one = RatFunc((Fraction(1),), (Fraction(1),))
        self.t = RatFunc((Fraction(0), Fraction(1)), (Fraction(1),))
        self.var_element = self.t

    def _make(self, num, den) -> RatFunc:
        if polys.is_zero(den):
            raise ZeroDivisionError("zero denominator")
        if polys.is_zero(num):
            return self.zero
        g = polys.gcd(QQ, num, den)
        if polys.degree(g) > 0:
            num, _ = polys.divmod_(QQ, num, g)
            den, _ = polys.divmod_(QQ, den, g)
        lead = den[-1]
        if lead != 1:
            num = polys.scale(QQ, 1 / lead, num)
            den = polys.scale(QQ, 1 / lead, den)
        return RatFunc(num, den)

    def add(self, a: RatFunc, b: RatFunc) -> RatFunc:
        num = polys.add(
            QQ, polys.mul(QQ, a.num, b.den), polys.mul(QQ, b.num, a.den)
        )
        return self._make(num, polys.mul(QQ, a.den, b.den))

    def neg(self, a: RatFunc) -> RatFunc:
        return RatFunc(polys.neg(QQ, a.num), a.den)

    def mul(self, a: RatFunc, b: RatFunc) -> RatFunc:
        return self._make(polys.mul(QQ, a.num, b.num), polys.mul(QQ, a.den, b.den))

    def is_zero(self, a: RatFunc) -> bool:
        return polys.is_zero(a.num)

    def eq(self, a: RatFunc, b: RatFunc) -> bool:
        return a.num == b.num and a.den == b.den

    def from_int(self, n: int) -> RatFunc:
        return self.from_fraction(Fraction(n))

    def from_fraction(self, q: Fraction) -> RatFunc:
        if q == 0:
            return self.zero
        return RatFunc((q,), (Fraction(1),))

    def is_invertible(self, a: RatFunc) -> bool:
        return not self.is_zero(a)

    def inv(self, a: RatFunc) -> RatFunc:
        if self.is_zero(a):
            raise NotInvertibleError("0 is not invertible in Q(x)")
        return self._make(a.den, a.num)

    def derive(self, a: RatFunc) -> RatFunc:
        num = polys.sub(
            QQ,
            polys.mul(QQ, polys.derive(QQ, a.num), a.den),
            polys.mul(QQ, a.num, polys.derive(QQ, a.den)),
        )
        return self._make(num, polys.mul(QQ, a.den, a.den))

    def antiderivative(self, a: RatFunc):
        if polys.degree(a.den) > 0:
            return None  # no rational antiderivative in general
        c = a.den[0]
        coeffs = [Fraction(0)] + [a.num[i] / c / (i + 1) for i in range(len(a.num))]
        return RatFunc(polys.normalize(QQ, coeffs), (Fraction(1),))

    def is_constant(self, a: RatFunc) -> bool:
        return polys.degree(a.num) <= 0 and polys.degree(a.den) == 0

    def to_str(self, a: RatFunc) -> str:
        num = polys.to_str(QQ, a.num, self.variable)
        if polys.degree(a.den) <= 0 and (not a.den or a.den[0] == 1):
            return num
        den = polys.to_str(QQ, a.den, self.variable)
        return f"({num})/({den})"

    def descriptor(self) -> dict:
        return {"kind": self.kind, "variable": self.variable}


class GaussPolynomialRing(Ring):
    """Q[t] with the p-adic Gauss norm |sum a_i t^i| = max |a_i|_p p^(-r i).

    Models a Tate algebra of radius p^(-r); the norm is multiplicative.
    Units are the nonzero rational constants.
    """

    kind = "gauss_padic"
    characteristic = 0
    is_banach = True

    def __init__(self, p: int, radius_exp: int = 0, variable: str = "t"):
        if radius_exp < 0:
            raise ValueError("radius exponent must be >= 0")
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"p = {p} is not prime")
        self.prime = p
        self.radius_exp = radius_exp
        self.variable = variable
        self.zero = ()
        self.one = (Fraction(1),)
        self.t = (Fraction(0), Fraction(1))
        self.var_element = self.t

    def add(self, a, b):
        return polys.add(QQ, a, b)

    def neg(self, a):
        return polys.neg(QQ, a)

    def mul(self, a, b):
        return polys.mul(QQ, a, b)

    def is_zero(self, a) -> bool:
        return polys.is_zero(a)

    def eq(self, a, b) -> bool:
        return a == b

    def from_int(self, n: int):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, q: Fraction):
        return () if q == 0 else (q,)

    def is_invertible(self, a) -> bool:
        return polys.degree(a) == 0

    def inv(self, a):
        if not self.is_invertible(a):
            raise NotInvertibleError("only nonzero constants are units in Q[t]")
        return (1 / a[0],)

    def derive(self, a):
        return polys.derive(QQ, a)

    def antiderivative(self, a):
        coeffs = [Fraction(0)] + [a[i] / (i + 1) for i in range(len(a))]
        return polys.normalize(QQ, coeffs)

    def norm(self, a) -> NormValue:
        best = NormValue.zero(self.prime)
        for i, c in enumerate(a):
            v = NormValue.of_fraction(c, self.prime) * NormValue(
                self.prime, -self.radius_exp * i
            )
            if v > best:
                best = v
        return best

    def derivation_norm(self) -> NormValue:
        # |d(t^i)| / |t^i| = |i|_p * p^r, maximal at i = 1.
        return NormValue(self.prime, self.radius_exp)

    def t_norm(self) -> NormValue:
        return NormValue(self.prime, -self.radius_exp)

    def to_str(self, a) -> str:
        return polys.to_str(QQ, a, self.variable)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "variable": self.variable,
            "p": self.prime,
            "radius_exp": self.radius_exp,
        }


class FiniteFieldPolyRing(Ring):
    """F_q[x] with d = d/dx, q = p^e.  Characteristic p; no norm."""

    kind = "finite_field_poly"

    def __init__(self, p: int, e: int = 1, variable: str = "x"):
        self.field = FiniteField(p, e)
        self.prime = p
        self.q_exp = e
        self.characteristic = p
        self.variable = variable
        self.zero = ()
        self.one = (self.field.one,)
        self.t = (self.field.zero, self.field.one)
        self.var_element = self.t

    def add(self, a, b):
        return polys.add(self.field, a, b)

    def neg(self, a):
        return polys.neg(self.field, a)

    def mul(self, a, b):
        return polys.mul(self.field, a, b)

    def is_zero(self, a) -> bool:
        return polys.is_zero(a)

    def eq(self, a, b) -> bool:
        return a == b

    def from_int(self, n: int):
        c = self.field.from_int(n)
        return () if self.field.is_zero(c) else (c,)

    def from_fraction(self, q: Fraction):
        c = self.field.from_fraction(q)
        return () if self.field.is_zero(c) else (c,)

    def is_invertible(self, a) -> bool:
        return polys.degree(a) == 0

    def inv(self, a):
        if not self.is_invertible(a):
            raise NotInvertibleError("only nonzero constants are units in F_q[x]")
        return (self.field.inv(a[0]),)

    def derive(self, a):
        return polys.derive(self.field, a)

    def antiderivative(self, a):
        coeffs = [self.field.zero]
        for i in range(len(a)):
            if (i + 1) % self.prime == 0:
                if not self.field.is_zero(a[i]):
                    return None  # x^i has no antiderivative when p | i+1
                coeffs.append(self.field.zero)
            else:
                coeffs.append(self.field.div(a[i], self.field.from_int(i + 1)))
        return polys.normalize(self.field, coeffs)

    def to_str(self, a) -> str:
        return polys.to_str(self.field, a, self.variable)

    def descriptor(self) -> dict:
        return {
            "kind": self.kind,
            "variable": self.variable,
            "p": self.prime,
            "q_exp": self.q_exp,
        }


class ScaledDerivationRing(Ring):
    """Same underlying ring as ``base`` but with derivation f * d.

    Used for derivation rescaling: a unit f turns (B, d) into (B, f*d).
    The distinguished element is re-solved from f*d(t') = 1 when an
    antiderivative of 1/f exists; otherwise accessing ``t`` raises.
    """

    def __init__(self, base: Ring, f):
        if not base.is_invertible(f):
            raise NotInvertibleError("scaling element must be invertible")
        self.base = base
        self.factor = f
        self.kind = f"scaled:{base.kind}"
        self.variable = base.variable
        self.characteristic = base.characteristic
        self.is_banach = base.is_banach
        self.is_field = base.is_field
        self.prime = base.prime
        self.zero = base.zero
        self.one = base.one
        self.var_element = base.var_element
        self._t = base.antiderivative(base.inv(f))

    @property
    def t(self):
        if self._t is None:
            raise UnsupportedOperationError(
                "no element with rescaled derivative 1 exists in this ring"
            )
        return self._t

    def add(self, a, b):
        return self.base.add(a, b)

    def neg(self, a):
        return self.base.neg(a)

    def mul(self, a, b):
        return self.base.mul(a, b)

    def is_zero(self, a):
        return self.base.is_zero(a)

    def eq(self, a, b):
        return self.base.eq(a, b)

    def from_int(self, n):
        return self.base.from_int(n)

    def from_fraction(self, q):
        return self.base.from_fraction(q)

    def is_invertible(self, a):
        return self.base.is_invertible(a)

    def inv(self, a):
        return self.base.inv(a)

    def derive(self, a):
        return self.base.mul(self.factor, self.base.derive(a))

    def norm(self, a) -> NormValue:
        return self.base.norm(a)

    def derivation_norm(self) -> NormValue:
        # |f d| = |f| |d| for the multiplicative Gauss norm with f a unit
        return self.base.norm(self.factor) * self.base.derivation_norm()

    def t_norm(self) -> NormValue:
        return self.norm(self.t)

    def to_str(self, a) -> str:
        return self.base.to_str(a)

    def descriptor(self) -> dict:
        d = dict(self.base.descriptor())
        d["scaled_by"] = self.base.to_str(self.factor)
        return d


def ring_from_json(desc: dict) -> Ring:
    """Build a ring from its JSON descriptor fragment."""
    kind = desc.get("kind")
    if kind == "rational_function":
        return RationalFunctionField(desc.get("variable", "x"))
    if kind == "gauss_padic":
        return GaussPolynomialRing(
            p=desc["p"],
            radius_exp=desc.get("radius_exp", 0),
            variable=desc.get("variable", "t"),
        )
    if kind == "finite_field_poly":
        return FiniteFieldPolyRing(
            p=desc["p"], e=desc.get("q_exp", 1), variable=desc.get("variable", "x")
        )
    raise ValueError(f"unknown ring kind: {kind!r}")
