"""The shipped rings Z, Q[z], Rpr and their fields of fractions.

Canonical associates: nonnegative integers, monic polynomials, and pure
powers ``(1/z)**k`` in Rpr.  ``Frac`` values are always reduced with a
canonical denominator, so structural equality is field equality.
"""

from fractions import Fraction

from . import rings
from .errors import DivisionByZeroError, NotDivisibleError, RingMismatchError
from .poly import Poly, ProperRat, poly_gcd, poly_gcdex
from .rings import ExtGcd, Ring


class IntegerRing(Ring):
    name = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def contains(self, a):
        return type(a) is int

    def coerce(self, a):
        if type(a) is int:
            return a
        if isinstance(a, Fraction) and a.denominator == 1:
            return int(a)
        raise RingMismatchError(f"{a!r} is not an integer")

    def is_unit(self, a):
        return a == 1 or a == -1

    def unit_of(self, a):
        return -1 if a < 0 else 1

    def canonical(self, a):
        return abs(a)

    def unit_inverse(self, u):
        return u

    def gcd_ext(self, a, b):
        self.check(a, b)
        x0, x1, y0, y1 = 1, 0, 0, 1
        r0, r1 = a, b
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        if r0 < 0:
            r0, x0, y0 = -r0, -x0, -y0
        if r0 == 0:
            x0 = y0 = 0
        return ExtGcd(r0, x0, y0)

    def divide_exact(self, a, b):
        self.check(a, b)
        if b == 0:
            raise DivisionByZeroError("integer division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{b} does not divide {a}")
        return q

    def divides(self, b, a):
        if b == 0:
            return a == 0
        return a % b == 0

    def size(self, a):
        return abs(a)

    def ratfunc(self, a):
        return Poly.const(a), Poly.const(1)

    def embed(self, num, den):
        if not (num.is_const() and den.is_const()):
            raise RingMismatchError("variable z is not allowed in ring Z")
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        q = num.lc / den.lc
        return Frac(q.numerator, q.denominator, ring=self)


class PolynomialRing(Ring):
    name = "Qz"

    def zero(self):
        return Poly()

    def one(self):
        return Poly.const(1)

    def contains(self, a):
        return type(a) is Poly

    def coerce(self, a):
        if type(a) is Poly:
            return a
        if isinstance(a, (int, Fraction)):
            return Poly.const(a)
        raise RingMismatchError(f"{a!r} is not a polynomial")

    def is_one(self, a):
        return a.c == (1,)

    def is_unit(self, a):
        return a.deg == 0

    def unit_of(self, a):
        return Poly.const(a.lc) if a.c else Poly.const(1)

    def canonical(self, a):
        return a.monic()

    def unit_inverse(self, u):
        return Poly.const(1 / u.lc)

    def gcd_ext(self, a, b):
        self.check(a, b)
        return ExtGcd(*poly_gcdex(a, b))

    def gcd(self, a, b):
        self.check(a, b)
        return poly_gcd(a, b)

    def divide_exact(self, a, b):
        self.check(a, b)
        return a.exact_div(b)

    def divides(self, b, a):
        if b.is_zero():
            return a.is_zero()
        return (a % b).is_zero()

    def size(self, a):
        return a.deg

    def ratfunc(self, a):
        return a, Poly.const(1)

    def embed(self, num, den):
        return Frac(num, den, ring=self)


def _inv_z(k):
    return ProperRat.inv_z(k)


class ProperRing(Ring):
    """Proper rational functions over Q; a DVR with prime 1/z."""

    name = "Rpr"

    def zero(self):
        return ProperRat(0)

    def one(self):
        return ProperRat(1)

    def contains(self, a):
        return type(a) is ProperRat

    def coerce(self, a):
        if type(a) is ProperRat:
            return a
        if isinstance(a, (int, Fraction)):
            return ProperRat(a)
        raise RingMismatchError(f"{a!r} is not a proper rational function")

    def is_one(self, a):
        return a.num.c == (1,) and a.den.c == (1,)

    def is_unit(self, a):
        return bool(a.num.c) and a.num.deg == a.den.deg

    def unit_of(self, a):
        if not a.num.c:
            return self.one()
        k = a.den.deg - a.num.deg
        return ProperRat(a.num.shift(k), a.den)

    def canonical(self, a):
        if not a.num.c:
            return a
        return _inv_z(a.den.deg - a.num.deg)

    def unit_inverse(self, u):
        return ProperRat(u.den, u.num)

    def gcd_ext(self, a, b):
        self.check(a, b)
        za, zb = a.is_zero(), b.is_zero()
        if za and zb:
            return ExtGcd(self.zero(), self.zero(), self.zero())
        if not za and (zb or a.valuation <= b.valuation):
            g = self.canonical(a)
            return ExtGcd(g, self.unit_inverse(self.unit_of(a)), self.zero())
        g = self.canonical(b)
        return ExtGcd(g, self.zero(), self.unit_inverse(self.unit_of(b)))

    def gcd(self, a, b):
        self.check(a, b)
        if a.is_zero():
            return self.canonical(b)
        if b.is_zero():
            return self.canonical(a)
        return _inv_z(min(a.valuation, b.valuation))

    def divide_exact(self, a, b):
        self.check(a, b)
        if b.is_zero():
            raise DivisionByZeroError("division by zero in Rpr")
        if a.is_zero():
            return a
        if a.valuation < b.valuation:
            raise NotDivisibleError(f"{b} does not divide {a} in Rpr")
        return ProperRat(*a.quotient(b))

    def divides(self, b, a):
        if b.is_zero():
            return a.is_zero()
        return a.is_zero() or a.valuation >= b.valuation

    def size(self, a):
        return a.valuation

    def ratfunc(self, a):
        return a.num, a.den

    def embed(self, num, den):
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        if num.is_zero():
            return Frac(self.zero(), self.one(), ring=self)
        k = num.deg - den.deg
        if k <= 0:
            return Frac(ProperRat(num, den), self.one(), ring=self)
        return Frac(ProperRat(num, den.shift(k)), _inv_z(k), ring=self)


ZZ = IntegerRing()
QZ = PolynomialRing()
RPR = ProperRing()

rings.register(int, ZZ)
rings.register(Poly, QZ)
rings.register(ProperRat, RPR)

RINGS = {"Z": ZZ, "Qz": QZ, "Rpr": RPR}


def ring_by_name(name):
    try:
        return RINGS[name]
    except KeyError:
        raise RingMismatchError(f"unknown ring {name!r}; expected one of {sorted(RINGS)}") from None


class Frac:
    """Reduced fraction num/den over one of the shipped rings."""

    __slots__ = ("num", "den", "ring")

    def __init__(self, num, den=None, ring=None):
        if ring is None:
            ring = rings.ring_of(num)
        num = ring.coerce(num)
        den = ring.one() if den is None else ring.coerce(den)
        if ring.is_zero(den):
            raise DivisionByZeroError("zero denominator")
        if ring.is_zero(num):
            num, den = ring.zero(), ring.one()
        elif not ring.is_one(den):
            g = ring.gcd(num, den)
            if not ring.is_one(g):
                num, den = ring.divide_exact(num, g), ring.divide_exact(den, g)
            u = ring.unit_of(den)
            if not ring.is_one(u):
                num = num * ring.unit_inverse(u)
                den = ring.canonical(den)
        self.num, self.den, self.ring = num, den, ring

    @classmethod
    def _raw(cls, num, den, ring):
        f = object.__new__(cls)
        f.num, f.den, f.ring = num, den, ring
        return f

    def _coerce(self, other):
        if isinstance(other, Frac):
            if other.ring is not self.ring:
                raise RingMismatchError(f"fractions over {self.ring} and {other.ring}")
            return other
        if isinstance(other, int) or self.ring.contains(other):
            return Frac._raw(self.ring.coerce(other), self.ring.one(), self.ring)
        return None

    def is_zero(self):
        return self.ring.is_zero(self.num)

    def __bool__(self):
        return not self.ring.is_zero(self.num)

    def in_ring(self):
        return self.ring.is_one(self.den)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except RingMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("Frac", self.ring.name, self.num, self.den))

    def __repr__(self):
        return f"Frac({self})"

    def __str__(self):
        from .parse import format_value

        return format_value(self)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        R = self.ring
        if R.is_one(self.den) and R.is_one(o.den):
            return Frac._raw(self.num + o.num, self.den, R)
        if self.den == o.den:
            return Frac(self.num + o.num, self.den, ring=R)
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den, ring=R)

    __radd__ = __add__

    def __neg__(self):
        return Frac._raw(-self.num, self.den, self.ring)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        R = self.ring
        if R.is_zero(self.num) or R.is_zero(o.num):
            return Frac._raw(R.zero(), R.one(), R)
        if R.is_one(self.den) and R.is_one(o.den):
            return Frac._raw(self.num * o.num, self.den, R)
        return Frac(self.num * o.num, self.den * o.den, ring=R)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZeroError("inverse of zero fraction")
        return Frac(self.den, self.num, ring=self.ring)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def ratfunc(self):
        """The value as a pair of polynomials (num, den)."""
        n1, d1 = self.ring.ratfunc(self.num)
        n2, d2 = self.ring.ratfunc(self.den)
        num, den = n1 * d2, d1 * n2
        g = poly_gcd(num, den)
        if g.deg > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        return num * (1 / lc), den * (1 / lc)


class FractionField:
    def __init__(self, ring):
        self.ring = ring
        self.name = f"Frac({ring.name})"

    def zero(self):
        return Frac._raw(self.ring.zero(), self.ring.one(), self.ring)

    def one(self):
        return Frac._raw(self.ring.one(), self.ring.one(), self.ring)

    def contains(self, a):
        return isinstance(a, Frac) and a.ring is self.ring

    def is_zero(self, a):
        return a.is_zero()

    def coerce(self, a):
        if isinstance(a, Frac):
            if a.ring is not self.ring:
                raise RingMismatchError(f"fraction over {a.ring} given to {self.name}")
            return a
        return Frac._raw(self.ring.coerce(a), self.ring.one(), self.ring)

    def from_ratfunc(self, num, den):
        return self.ring.embed(num, den)

    def __repr__(self):
        return self.name


def frac_reduce(num, den):
    """Build the reduced fraction num/den (den != 0)."""
    ring = rings.common_ring(num, den)
    return Frac(num, den, ring=ring)


def order_at_infinity(f):
    """deg(den) - deg(num) of a nonzero rational function."""
    if isinstance(f, Frac):
        num, den = f.ratfunc()
    elif isinstance(f, Poly):
        num, den = f, Poly.const(1)
    elif isinstance(f, ProperRat):
        num, den = f.num, f.den
    else:
        raise RingMismatchError(f"{f!r} is not a rational function")
    if num.is_zero():
        raise DivisionByZeroError("order at infinity of zero is undefined")
    return den.deg - num.deg


def lcd(M):
    """Least common denominator of a matrix's entries (1 for ring matrices)."""
    dom = M.dom
    if isinstance(dom, FractionField):
        return dom.ring.lcm_all(x.den for x in M.entries())
    return dom.one()
