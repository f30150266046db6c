"""Exact scalars: rationals, polynomials in the deformation parameter,
and the field of rational functions they generate.

Three layers, all immutable and exact:

* ``Rational``: arbitrary-precision rationals (stdlib ``fractions.Fraction``,
  which already keeps a positive denominator and a reduced fraction).
* ``LambdaPoly``: dense univariate polynomials in the deformation parameter
  over the rationals, lowest degree first, no trailing zeros.
* ``FieldElem``: a quotient of two ``LambdaPoly`` values kept in canonical
  form (fully reduced, monic denominator), so equality is plain structural
  comparison.  Alternatively an element can be *instantiated*: the parameter
  is pinned to a specific rational, the element collapses to a single
  rational, and arithmetic gets much cheaper.  The two modes never mix;
  combining them raises :class:`ModeMismatch`.

The parameter prints as ``l`` in the canonical text form, for example
``(-1/2)*l^1 + 1/2``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BothZero, DivisionByZero, ModeMismatch, PoleAtLambda

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction; floats are rejected to keep everything exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("expected an int or Fraction, got %r" % (value,))


def rational_str(q: Fraction) -> str:
    """Canonical text form: ``p`` for integers, else ``p/q``."""
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class LambdaPoly:
    """Polynomial in the deformation parameter; treat instances as immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, value):
        return cls((as_rational(value),))

    @property
    def degree(self) -> int:
        # zero polynomial has degree -1 by convention
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LambdaPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rational(other)
            if not q:
                return P_ZERO
            return LambdaPoly(tuple(c * q for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return P_ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = P_ONE
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, point: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def monic(self):
        if self.is_zero or self.leading == 1:
            return self
        return self * (1 / self.leading)

    def div_rem(self, other):
        """Quotient and remainder over the rationals."""
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dq = len(rem) - len(d)
        if dq < 0:
            return P_ZERO, self
        quot = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / other.leading
        for i in range(dq, -1, -1):
            c = rem[i + len(d) - 1] * inv_lead
            if c:
                quot[i] = c
                for j, dc in enumerate(d):
                    rem[i + j] -= c * dc
        return LambdaPoly(quot), LambdaPoly(rem)

    def exact_div(self, other):
        q, r = self.div_rem(other)
        if not r.is_zero:
            raise ValueError("polynomial division left a remainder")
        return q

    def __eq__(self, other):
        return isinstance(other, LambdaPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return "LambdaPoly(%s)" % (poly_str(self),)


P_ZERO = LambdaPoly()
P_ONE = LambdaPoly.const(1)
P_LAM = LambdaPoly((0, 1))


def poly_str(p: LambdaPoly) -> str:
    """Terms in descending degree, ``(c)*l^k`` shape, bare rational constant."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if k == 0:
            parts.append(rational_str(c))
        else:
            parts.append("(%s)*l^%d" % (rational_str(c), k))
    return " + ".join(parts)


def _int_primitive(cs):
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    if g == 0:
        return []
    return [c // g for c in cs]


def _poly_to_int(p: LambdaPoly):
    den = math.lcm(*(c.denominator for c in p.coeffs))
    return _int_primitive([int(c * den) for c in p.coeffs])


def _int_prem(f, g):
    """Pseudo-remainder of f by g over the integers (content is irrelevant)."""
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg:
        lf = f[-1]
        shift = len(f) - 1 - dg
        f = [lg * c for c in f]
        for i, c in enumerate(g):
            f[shift + i] -= lf * c
        f.pop()
        while f and f[-1] == 0:
            f.pop()
        if not f:
            break
    return f


def poly_gcd(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    """Monic greatest common divisor over the rationals.

    Uses primitive pseudo-remainder sequences on integer coefficient lists,
    which keeps coefficient growth tame at the degrees this package meets.
    """
    if p.is_zero and q.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return P_ONE
    a, b = _poly_to_int(p), _poly_to_int(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _int_primitive(_int_prem(a, b))
    lead = a[-1]
    return LambdaPoly([Fraction(c, lead) for c in a])


def _reduce(num: LambdaPoly, den: LambdaPoly):
    """Canonical form of num/den: reduced, monic denominator."""
    if num.is_zero:
        return P_ZERO, P_ONE
    if not den.is_one:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.leading
        if lc != 1:
            inv = 1 / lc
            num = num * inv
            den = den * inv
    return num, den


class FieldElem:
    """Element of the rational-function field, or a pinned-parameter rational.

    ``lam is None`` marks the symbolic mode (``num``/``den`` are canonical
    polynomials); otherwise ``lam`` is the pinned rational value of the
    parameter and ``value`` holds the collapsed rational.
    """

    __slots__ = ("lam", "num", "den", "value")

    def __init__(self, *, lam, num=None, den=None, value=None):
        # internal: use from_rational / from_polys, which canonicalize
        self.lam = lam
        self.num = num
        self.den = den
        self.value = value

    @classmethod
    def from_rational(cls, value, lam=None):
        value = as_rational(value)
        if lam is None:
            return cls(lam=None, num=LambdaPoly.const(value), den=P_ONE)
        return cls(lam=as_rational(lam), value=value)

    @classmethod
    def from_polys(cls, num: LambdaPoly, den: LambdaPoly = P_ONE):
        if den.is_zero:
            raise DivisionByZero("zero denominator polynomial")
        num, den = _reduce(num, den)
        return cls(lam=None, num=num, den=den)

    @property
    def is_symbolic(self) -> bool:
        return self.lam is None

    @property
    def is_zero(self) -> bool:
        if self.lam is None:
            return self.num.is_zero
        return not self.value

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.lam != self.lam:
                raise ModeMismatch(
                    "cannot combine mode %r with mode %r" % (self.lam, other.lam))
            return other
        return FieldElem.from_rational(other, self.lam)

    def __add__(self, other):
        other = self._coerce(other)
        if self.lam is not None:
            return FieldElem(lam=self.lam, value=self.value + other.value)
        an, ad, bn, bd = self.num, self.den, other.num, other.den
        if ad.is_one and bd.is_one:
            return FieldElem(lam=None, num=an + bn, den=P_ONE)
        if ad == bd:
            num = an + bn
            if num.is_zero:
                return FieldElem(lam=None, num=P_ZERO, den=P_ONE)
            g = poly_gcd(num, ad)
            if g.degree > 0:
                return FieldElem(lam=None, num=num.exact_div(g), den=ad.exact_div(g))
            return FieldElem(lam=None, num=num, den=ad)
        if ad.is_one or bd.is_one:
            g = P_ONE
        else:
            g = poly_gcd(ad, bd)
        if g.degree > 0:
            ad2 = ad.exact_div(g)
            bd2 = bd.exact_div(g)
            num = an * bd2 + bn * ad2
            if num.is_zero:
                return FieldElem(lam=None, num=P_ZERO, den=P_ONE)
            den = ad * bd2
            g2 = poly_gcd(num, g)
            if g2.degree > 0:
                num = num.exact_div(g2)
                den = den.exact_div(g2)
            return FieldElem(lam=None, num=num, den=den)
        # coprime denominators: the sum is already reduced
        num = an * bd + bn * ad
        if num.is_zero:
            return FieldElem(lam=None, num=P_ZERO, den=P_ONE)
        return FieldElem(lam=None, num=num, den=ad * bd)

    __radd__ = __add__

    def __neg__(self):
        if self.lam is not None:
            return FieldElem(lam=self.lam, value=-self.value)
        return FieldElem(lam=None, num=-self.num, den=self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if self.lam is not None:
            return FieldElem(lam=self.lam, value=self.value * other.value)
        an, ad, bn, bd = self.num, self.den, other.num, other.den
        if an.is_zero or bn.is_zero:
            return FieldElem(lam=None, num=P_ZERO, den=P_ONE)
        if ad.is_one and bd.is_one:
            return FieldElem(lam=None, num=an * bn, den=P_ONE)
        # cross-reduce so the product is born canonical
        if not bd.is_one:
            g1 = poly_gcd(an, bd)
            if g1.degree > 0:
                an = an.exact_div(g1)
                bd = bd.exact_div(g1)
        if not ad.is_one:
            g2 = poly_gcd(bn, ad)
            if g2.degree > 0:
                bn = bn.exact_div(g2)
                ad = ad.exact_div(g2)
        return FieldElem(lam=None, num=an * bn, den=ad * bd)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        if self.lam is not None:
            return FieldElem(lam=self.lam, value=1 / self.value)
        lc = self.num.leading
        if lc == 1:
            return FieldElem(lam=None, num=self.den, den=self.num)
        inv = 1 / lc
        return FieldElem(lam=None, num=self.den * inv, den=self.num * inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise DivisionByZero("division by zero field element")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = FieldElem.from_rational(1, self.lam)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def instantiate(self, lam0) -> Fraction:
        """Evaluation homomorphism at a rational parameter value."""
        lam0 = as_rational(lam0)
        if self.lam is not None:
            if lam0 != self.lam:
                raise ModeMismatch("element is pinned to a different parameter value")
            return self.value
        dv = self.den.evaluate(lam0)
        if not dv:
            raise PoleAtLambda("denominator vanishes at %s" % rational_str(lam0))
        return self.num.evaluate(lam0) / dv

    def at_lambda(self, lam0) -> "FieldElem":
        """Same evaluation, but wrapped as an instantiated-mode element."""
        lam0 = as_rational(lam0)
        return FieldElem.from_rational(self.instantiate(lam0), lam0)

    def as_fraction(self) -> Fraction:
        """Unwrap a constant; raises for genuinely symbolic values."""
        if self.lam is not None:
            return self.value
        if self.den.is_one and self.num.degree <= 0:
            return self.num.coeffs[0] if self.num.coeffs else Fraction(0)
        raise ValueError("element is not a rational constant: %s" % (self,))

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            if self.lam != other.lam:
                return False
            if self.lam is not None:
                return self.value == other.value
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            q = as_rational(other)
            if self.lam is not None:
                return self.value == q
            return self.den.is_one and self.num == LambdaPoly.const(q)
        return NotImplemented

    def __hash__(self):
        if self.lam is not None:
            return hash(self.value)
        if self.den.is_one and self.num.degree <= 0:
            return hash(self.num.coeffs[0] if self.num.coeffs else Fraction(0))
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self):
        if self.lam is not None:
            return rational_str(self.value)
        if self.den.is_one:
            return poly_str(self.num)
        return "(%s) / (%s)" % (poly_str(self.num), poly_str(self.den))

    def __repr__(self):
        return "FieldElem(%s)" % (self,)


def const(value, lam=None) -> FieldElem:
    return FieldElem.from_rational(value, lam)


def zero(lam=None) -> FieldElem:
    return FieldElem.from_rational(0, lam)


def one(lam=None) -> FieldElem:
    return FieldElem.from_rational(1, lam)


def lam_elem(lam=None) -> FieldElem:
    """The deformation parameter itself, in the requested mode."""
    if lam is None:
        return FieldElem(lam=None, num=P_LAM, den=P_ONE)
    lam = as_rational(lam)
    return FieldElem.from_rational(lam, lam)


def as_elem(value, lam=None) -> FieldElem:
    """Coerce ints and Fractions into the given mode; elements pass through."""
    if isinstance(value, FieldElem):
        return value
    return FieldElem.from_rational(value, lam)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arith(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    """One-shot arithmetic entry point; op is one of add, sub, mul, div."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError("unknown op %r" % (op,)) from None
    return fn(a, b)


def instantiate(e: FieldElem, lam0) -> Fraction:
    return e.instantiate(lam0)
