"""Abstract Bezout/elementary-divisor-domain interface.

A ``Ring`` instance supplies arithmetic helpers for a family of Python value
types (``int`` for Z, ``Poly`` for Q[z], ``ProperRat`` for the proper rational
functions).  Elements carry their ring through their type, so the
module-level helpers below dispatch with :func:`ring_of`.

Every shipped ring is Euclidean or a discrete valuation ring, so an extended
gcd always exists; Smith elimination relies on that.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import RingMismatchError

_REGISTRY = {}


def register(tp, ring):
    _REGISTRY[tp] = ring


def ring_of(a):
    try:
        return _REGISTRY[type(a)]
    except KeyError:
        raise RingMismatchError(f"{a!r} is not an element of a known ring") from None


def common_ring(*elems):
    rings = {id(ring_of(e)): ring_of(e) for e in elems}
    if len(rings) != 1:
        names = sorted(r.name for r in rings.values())
        raise RingMismatchError(f"operands live in different rings: {names}")
    return next(iter(rings.values()))


@dataclass(frozen=True)
class ExtGcd:
    g: object
    x: object
    y: object


class Ring:
    name = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def contains(self, a):
        raise NotImplementedError

    def coerce(self, a):
        """Embed Python ints (and ring members) into the ring."""
        raise NotImplementedError

    def is_zero(self, a):
        return not a

    def is_one(self, a):
        return a == self.one()

    def is_unit(self, a):
        raise NotImplementedError

    def unit_of(self, a):
        raise NotImplementedError

    def canonical(self, a):
        raise NotImplementedError

    def unit_inverse(self, u):
        raise NotImplementedError

    def gcd_ext(self, a, b):
        raise NotImplementedError

    def divide_exact(self, a, b):
        raise NotImplementedError

    def divides(self, b, a):
        """True iff b | a."""
        raise NotImplementedError

    def size(self, a):
        """Pivot-selection measure; smaller means closer to a unit."""
        raise NotImplementedError

    # ratfunc bridge: every shipped ring sits inside Q(z)
    def ratfunc(self, a):
        raise NotImplementedError

    def embed(self, num, den):
        raise NotImplementedError

    def check(self, *elems):
        for e in elems:
            if not self.contains(e):
                raise RingMismatchError(f"{e!r} is not in {self.name}")

    def gcd(self, a, b):
        return self.gcd_ext(a, b).g

    def lcm(self, a, b):
        self.check(a, b)
        if self.is_zero(a) or self.is_zero(b):
            return self.zero()
        g = self.gcd(a, b)
        return self.canonical(self.divide_exact(a, g) * b)

    def associates(self, a, b):
        self.check(a, b)
        return self.canonical(a) == self.canonical(b)

    def gcd_all(self, items):
        g = self.zero()
        for x in items:
            g = self.gcd(g, x)
            if self.is_one(g):
                break
        return g

    def lcm_all(self, items):
        l = self.one()
        for x in items:
            l = self.lcm(l, x)
        return l

    def prod(self, items):
        out = self.one()
        for x in items:
            out = out * x
        return out

    @cached_property
    def field(self):
        from .concrete import FractionField

        return FractionField(self)

    def __repr__(self):
        return self.name


def gcd_ext(a, b):
    return common_ring(a, b).gcd_ext(a, b)


def gcd(a, b):
    return common_ring(a, b).gcd(a, b)


def lcm(a, b):
    return common_ring(a, b).lcm(a, b)


def divide_exact(a, b):
    return common_ring(a, b).divide_exact(a, b)


def divides(b, a):
    return common_ring(a, b).divides(b, a)


def canonical(a):
    return ring_of(a).canonical(a)


def unit_of(a):
    return ring_of(a).unit_of(a)


def is_unit(a):
    return ring_of(a).is_unit(a)


def associates(a, b):
    return common_ring(a, b).associates(a, b)
