"""Univariate polynomials over Q and proper rational functions.

``Poly`` wraps a FLINT ``fmpq_poly``; ``Poly.c`` exposes the ascending
coefficients as a tuple of ``Fraction`` with no trailing zeros (the zero
polynomial is the empty tuple and has degree ``-inf``).  ``ProperRat`` is a
reduced quotient ``num/den`` with ``deg num <= deg den`` and a monic
denominator.
"""

from fractions import Fraction
import math

import flint

from .errors import DivisionByZeroError, NotDivisibleError

NEG_INF = -math.inf


def _q(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if isinstance(c, flint.fmpq):
        return c
    raise TypeError(f"not a rational coefficient: {c!r}")


def _fr(x):
    return Fraction(int(x.p), int(x.q))


class Poly:
    __slots__ = ("f", "_c")

    def __init__(self, coeffs=()):
        self.f = flint.fmpq_poly([_q(x) for x in coeffs])
        self._c = None

    @classmethod
    def _wrap(cls, f):
        p = object.__new__(cls)
        p.f = f
        p._c = None
        return p

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def z(cls, k=1):
        return cls._wrap(flint.fmpq_poly([0] * k + [1]))

    @property
    def c(self):
        if self._c is None:
            self._c = tuple(_fr(x) for x in self.f.coeffs())
        return self._c

    @property
    def deg(self):
        d = self.f.degree()
        return d if d >= 0 else NEG_INF

    @property
    def lc(self):
        if self.f.is_zero():
            return Fraction(0)
        return _fr(self.f.leading_coefficient())

    def is_zero(self):
        return self.f.is_zero()

    def is_const(self):
        return self.f.degree() <= 0

    def __bool__(self):
        return not self.f.is_zero()

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.f == other.f
        if isinstance(other, (int, Fraction)):
            return self.f == flint.fmpq_poly([_q(other)])
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.c))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        from .parse import format_poly

        return format_poly(self)

    @staticmethod
    def _coerce(x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        return None

    def __add__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self.f + o.f)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap(-self.f)

    def __sub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(self.f - o.f)

    def __rsub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return Poly._wrap(o.f - self.f)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly._wrap(self.f * other.f)
        if isinstance(other, (int, Fraction)):
            return Poly._wrap(self.f * _q(other))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        return Poly._wrap(self.f ** k)

    def __divmod__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        if o.f.is_zero():
            raise DivisionByZeroError("polynomial division by zero")
        q, r = divmod(self.f, o.f)
        return Poly._wrap(q), Poly._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise NotDivisibleError(f"{other} does not divide {self}")
        return q

    def monic(self):
        if self.f.is_zero():
            return self
        lc = self.f.leading_coefficient()
        if lc == 1:
            return self
        return Poly._wrap(self.f / lc)

    def __call__(self, x):
        acc = 0
        for coef in reversed(self.c):
            acc = acc * x + coef
        return acc

    def shift(self, k):
        """Multiply by z**k (k >= 0)."""
        if self.f.is_zero():
            return self
        return Poly._wrap(self.f.left_shift(k))

    def reversal(self, d=None):
        """z**d * p(1/z); ``d`` defaults to the degree."""
        if self.f.is_zero():
            return self
        n = self.f.degree()
        if d is None:
            d = n
        if d < n:
            raise ValueError("reversal degree below polynomial degree")
        coeffs = list(self.f.coeffs()) + [0] * (d - n)
        return Poly._wrap(flint.fmpq_poly(coeffs[::-1]))

    def trailing_zeros(self):
        """Multiplicity of z as a factor (0 for a nonzero constant term)."""
        if self.f.is_zero():
            raise ValueError("zero polynomial has infinite multiplicity at 0")
        for i, x in enumerate(self.f.coeffs()):
            if x != 0:
                return i


def poly_gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    if a.f.is_zero() and b.f.is_zero():
        return a
    return Poly._wrap(a.f.gcd(b.f))


def poly_gcdex(a, b):
    """Return (g, x, y) with x*a + y*b = g, g monic (or zero)."""
    if a.f.is_zero() and b.f.is_zero():
        return Poly(), Poly(), Poly()
    if b.f.is_zero():
        lc = a.f.leading_coefficient()
        return a.monic(), Poly._wrap(flint.fmpq_poly([1 / lc])), Poly()
    if a.f.is_zero():
        lc = b.f.leading_coefficient()
        return b.monic(), Poly(), Poly._wrap(flint.fmpq_poly([1 / lc]))
    g, x, y = a.f.xgcd(b.f)
    return Poly._wrap(g), Poly._wrap(x), Poly._wrap(y)


class ProperRat:
    """A proper rational function num/den, reduced, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._coerce(num) if not isinstance(num, Poly) else num
        if den is None:
            den = Poly.const(1)
        else:
            den = Poly._coerce(den) if not isinstance(den, Poly) else den
        if num is None or den is None:
            raise TypeError("ProperRat needs polynomial numerator and denominator")
        if not den.f:
            raise DivisionByZeroError("zero denominator")
        if not num.f:
            self.num, self.den = Poly(), Poly.const(1)
            return
        if num.deg > den.deg:
            raise ValueError(f"({num})/({den}) is not proper")
        g = poly_gcd(num, den)
        if g.deg > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def inv_z(cls, k=1):
        """(1/z)**k."""
        return cls._raw(Poly.const(1), Poly.z(k))

    def is_zero(self):
        return not self.num.f

    def __bool__(self):
        return bool(self.num.f)

    @property
    def valuation(self):
        """Order at infinity, deg den - deg num (>= 0 for nonzero)."""
        if not self.num.f:
            return math.inf
        return self.den.deg - self.num.deg

    def __eq__(self, other):
        if isinstance(other, ProperRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.deg == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash(("ProperRat", self.num.c, self.den.c))

    def __repr__(self):
        return f"ProperRat({self})"

    def __str__(self):
        from .parse import format_ratfunc

        return format_ratfunc(self.num, self.den)

    @staticmethod
    def _coerce(x):
        if isinstance(x, ProperRat):
            return x
        if isinstance(x, (int, Fraction)):
            return ProperRat._raw(Poly.const(x), Poly.const(1))
        return None

    def __add__(self, other):
        o = ProperRat._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num.f:
            return self
        if not self.num.f:
            return o
        d1, d2 = self.den, o.den
        g = poly_gcd(d1, d2)
        if g.deg <= 0:
            num, den = self.num * d2 + o.num * d1, d1 * d2
        else:
            e1, e2 = d1.exact_div(g), d2.exact_div(g)
            num, den = self.num * e2 + o.num * e1, d1 * e2
        if not num.f:
            return ProperRat._raw(num, Poly.const(1))
        if g.deg <= 0:
            return ProperRat._raw(num, den)
        h = poly_gcd(num, g)
        if h.deg > 0:
            num, den = num.exact_div(h), den.exact_div(h)
        return ProperRat._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return ProperRat._raw(-self.num, self.den)

    def __sub__(self, other):
        o = ProperRat._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = ProperRat._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = ProperRat._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num.f or not o.num.f:
            return ProperRat._raw(Poly(), Poly.const(1))
        # cross-cancel before multiplying keeps degrees small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = self.num, o.den
        if g1.deg > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = o.num, self.den
        if g2.deg > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        lc = den.lc
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        return ProperRat._raw(num, den)

    __rmul__ = __mul__

    def quotient(self, other):
        """self/other as a pair of polynomials (num, den); other nonzero."""
        if not other.num.f:
            raise DivisionByZeroError("division by zero in Rpr")
        return self.num * other.den, self.den * other.num
