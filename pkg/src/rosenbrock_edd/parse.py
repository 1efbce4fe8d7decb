"""Entry expressions, value formatting and JSON matrix documents.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'z' | '(' expr ')'

Every expression is evaluated exactly to a rational function num/den in
Q(z) and then embedded in the requested ring (or its field of fractions).
Formatting produces strings in this same grammar, so values round-trip.
"""

from fractions import Fraction

from .concrete import Frac, FractionField, ring_by_name
from .errors import DivisionByZeroError, ParseError, RingMismatchError
from .matrices import Matrix, is_field
from .poly import Poly, ProperRat, poly_gcd


def _offset(text, i):
    return len(text[:i].encode("utf-8"))


class _Parser:
    def __init__(self, text, allow_z=True):
        self.text = text
        self.i = 0
        self.allow_z = allow_z

    def error(self, msg, i=None):
        i = self.i if i is None else i
        return ParseError(msg, _offset(self.text, i), self.text)

    def skip(self):
        t = self.text
        while self.i < len(t) and t[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def parse(self):
        if not self.peek():
            raise self.error("empty expression")
        v = self.expr()
        if self.peek():
            raise self.error(f"unexpected character {self.peek()!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.i]
            self.i += 1
            w = self.term()
            v = _add(v, w) if op == "+" else _add(v, _neg(w))
        return v

    def term(self):
        v = self.unary()
        while self.peek() in ("*", "/"):
            op = self.text[self.i]
            at = self.i
            self.i += 1
            w = self.unary()
            if op == "*":
                v = _mul(v, w)
            else:
                if w[0].is_zero():
                    raise DivisionByZeroError(f"division by zero at offset {_offset(self.text, at)}")
                v = _mul(v, (w[1], w[0]))
        return v

    def unary(self):
        c = self.peek()
        if c == "-":
            self.i += 1
            return _neg(self.unary())
        if c == "+":
            self.i += 1
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == "^":
            self.i += 1
            self.skip()
            start = self.i
            k = self.integer()
            if k is None:
                raise self.error("exponent must be a nonnegative integer literal", start)
            v = (v[0] ** k, v[1] ** k)
        return v

    def integer(self):
        t, j = self.text, self.i
        while j < len(t) and t[j].isdigit():
            j += 1
        if j == self.i:
            return None
        k = int(t[self.i:j])
        self.i = j
        return k

    def atom(self):
        c = self.peek()
        if c == "(":
            self.i += 1
            v = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.i += 1
            return v
        if c == "z":
            if not self.allow_z:
                raise RingMismatchError(
                    f"variable z is not allowed in ring Z at offset {_offset(self.text, self.i)}")
            self.i += 1
            return Poly.z(), Poly.const(1)
        if c.isdigit():
            return Poly.const(self.integer()), Poly.const(1)
        if not c:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected character {c!r}")


def _add(a, b):
    if a[1] == b[1]:
        return a[0] + b[0], a[1]
    return a[0] * b[1] + b[0] * a[1], a[1] * b[1]


def _neg(a):
    return -a[0], a[1]


def _mul(a, b):
    return a[0] * b[0], a[1] * b[1]


def parse_ratfunc(text, allow_z=True):
    """Parse to a reduced pair (num, den) of polynomials, den monic."""
    num, den = _Parser(text, allow_z).parse()
    g = poly_gcd(num, den)
    if g.deg > 0:
        num, den = num.exact_div(g), den.exact_div(g)
    lc = den.lc
    return num * (1 / lc), den * (1 / lc)


def parse_entry(text, ring):
    """Parse ``text`` into ``ring``; values outside the ring come back as Frac."""
    if isinstance(ring, str):
        ring = ring_by_name(ring)
    if isinstance(ring, FractionField):
        ring = ring.ring
    num, den = parse_ratfunc(text, allow_z=ring.name != "Z")
    f = ring.embed(num, den)
    return f.num if f.in_ring() else f


def parse_frac(text, ring):
    """Like :func:`parse_entry` but always returns a field element."""
    if isinstance(ring, str):
        ring = ring_by_name(ring)
    v = parse_entry(text, ring)
    return ring.field.coerce(v)


# -- formatting -------------------------------------------------------------

def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p):
    if not p.c:
        return "0"
    out = ""
    for k in range(len(p.c) - 1, -1, -1):
        c = p.c[k]
        if c == 0:
            continue
        a = abs(c)
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = "z" if k == 1 else f"z^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        if not out:
            out = f"-{body}" if c < 0 else body
        else:
            out += f" - {body}" if c < 0 else f" + {body}"
    return out


def _wrap(s):
    return f"({s})" if " " in s else s


def format_ratfunc(num, den):
    if den == 1:
        return format_poly(num)
    n, d = format_poly(num), format_poly(den)
    # den is monic, so as a single term it is a bare power of z
    return f"{_wrap(n)}/{_wrap(d)}"


def format_value(v):
    """Format a ring element or Frac as a reparseable string."""
    if isinstance(v, Frac):
        if v.in_ring():
            return format_value(v.num)
        return format_ratfunc(*v.ratfunc())
    if isinstance(v, bool):
        raise TypeError("booleans are not ring elements")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return _fmt_coeff(v)
    if isinstance(v, Poly):
        return format_poly(v)
    if isinstance(v, ProperRat):
        return format_ratfunc(v.num, v.den)
    raise TypeError(f"cannot format {v!r}")


# -- JSON matrix documents ---------------------------------------------------

def matrix_from_doc(doc):
    """Build a Matrix from ``{ring, rows, cols, entries}``.

    The result lives in the ring when every entry does, otherwise in its
    field of fractions.
    """
    if not isinstance(doc, dict):
        raise ParseError("matrix document must be a JSON object")
    for key in ("ring", "rows", "cols", "entries"):
        if key not in doc:
            raise ParseError(f"matrix document is missing {key!r}")
    try:
        ring = ring_by_name(doc["ring"])
    except RingMismatchError as e:
        raise ParseError(str(e)) from None
    p, m, entries = doc["rows"], doc["cols"], doc["entries"]
    if type(p) is not int or type(m) is not int or p < 0 or m < 0:
        raise ParseError("rows and cols must be nonnegative integers")
    if not isinstance(entries, list) or len(entries) != p * m:
        raise ParseError(f"expected {p * m} entries, got "
                         f"{len(entries) if isinstance(entries, list) else 'non-list'}")
    vals = []
    for k, e in enumerate(entries):
        if isinstance(e, int) and not isinstance(e, bool):
            e = str(e)
        if not isinstance(e, str):
            raise ParseError(f"entry {k} is not a string")
        try:
            vals.append(parse_entry(e, ring))
        except ParseError as err:
            raise ParseError(f"entry {k} ({e!r}): {err}") from None
    field = any(isinstance(v, Frac) for v in vals)
    dom = ring.field if field else ring
    rows = [vals[i * m:(i + 1) * m] for i in range(p)]
    return Matrix(dom, rows, p, m)


def matrix_to_doc(M):
    ring = M.dom.ring if is_field(M.dom) else M.dom
    return {"ring": ring.name, "rows": M.nrows, "cols": M.ncols,
            "entries": [format_value(x) for x in M.entries()]}
