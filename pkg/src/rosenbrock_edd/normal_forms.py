"""Smith and Smith-McMillan forms, determinantal divisors, partial multiplicities."""

from dataclasses import dataclass
from typing import Optional

from .concrete import RPR, Frac, lcd
from .errors import DomainError, GuardExceededError, RingMismatchError
from .matrices import Matrix, base_ring, det, is_field, minors

ORACLE_GUARD = 6


@dataclass(frozen=True)
class SmithDecomp:
    U: Matrix
    V: Matrix
    S: Matrix
    inv_factors: tuple
    rank: int
    det_divisors: tuple
    U_inv: Optional[Matrix] = None
    V_inv: Optional[Matrix] = None


@dataclass(frozen=True)
class SMDecomp:
    U: Matrix
    V: Matrix
    eps: tuple
    psi: tuple
    rank: int
    phi: object
    shape: tuple
    U_inv: Optional[Matrix] = None
    V_inv: Optional[Matrix] = None

    @property
    def ring(self):
        return base_ring(self.U.dom)

    @property
    def fractions(self):
        R = self.ring
        return tuple(Frac(e, p, ring=R) for e, p in zip(self.eps, self.psi))

    @property
    def form(self):
        """diag(eps_i/psi_i) (+) 0 as a field matrix."""
        return Matrix.diag(self.ring.field, self.fractions, *self.shape)

    @property
    def g(self):
        R = self.ring
        return sum(1 for p in self.psi if not R.is_unit(p))


@dataclass(frozen=True)
class PartialMults:
    prime: object
    mults: tuple

    def elementary_divisors(self):
        return tuple(_power(self.prime, t) for t in self.mults)


def _power(x, t):
    out = x
    for _ in range(t - 1):
        out = out * x
    return out


# -- Smith elimination --------------------------------------------------------

def _row_combo(rows, i, j, a, b, c, d):
    """rows[i], rows[j] <- a*rows[i] + b*rows[j], c*rows[i] + d*rows[j]."""
    ri, rj = rows[i], rows[j]
    rows[i] = [a * x + b * y for x, y in zip(ri, rj)]
    rows[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _col_combo(rows, i, j, a, b, c, d):
    """col i <- a*col i + b*col j, col j <- c*col i + d*col j."""
    for r in rows:
        x, y = r[i], r[j]
        r[i] = a * x + b * y
        r[j] = c * x + d * y


def _row_sub(rows, i, t, q):
    rows[i] = [x - q * y for x, y in zip(rows[i], rows[t])]


def _col_sub(rows, j, t, q):
    for r in rows:
        if r[t]:
            r[j] = r[j] - q * r[t]


def smith(A, inverses=False):
    """Smith form with accumulated unimodular U, V such that U A V = S.

    With ``inverses=True`` the inverses of U and V are tracked alongside by
    applying the inverse of every elementary step; this is far cheaper than
    inverting U and V afterwards.
    """
    if is_field(A.dom):
        A = A.to_ring()
    R = A.dom
    p, m = A.nrows, A.ncols
    S = [list(r) for r in A.rows]
    U = Matrix.identity(R, p).rows
    VT = Matrix.identity(R, m).rows  # transpose of V, so column ops become row ops
    Ui = Matrix.identity(R, p).rows if inverses else None
    Vi = Matrix.identity(R, m).rows if inverses else None
    zero, one = R.zero(), R.one()

    def rows_op(t, i, a, b, c, d):
        # S <- M S with M = [[a, b], [c, d]] on rows (t, i), det M = 1
        _row_combo(S, t, i, a, b, c, d)
        _row_combo(U, t, i, a, b, c, d)
        if inverses:
            _col_combo(Ui, t, i, d, -c, -b, a)

    def cols_op(t, j, a, b, c, d):
        # col t <- a col t + b col j, col j <- c col t + d col j, det 1
        _col_combo(S, t, j, a, b, c, d)
        _row_combo(VT, t, j, a, b, c, d)
        if inverses:
            _row_combo(Vi, t, j, d, -c, -b, a)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]
        if inverses:
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        VT[i], VT[j] = VT[j], VT[i]
        if inverses:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    r = 0
    for t in range(min(p, m)):
        best = None
        for i in range(t, p):
            for j in range(t, m):
                x = S[i][j]
                if x:
                    sz = R.size(x)
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        if best is None:
            break
        _, i0, j0 = best
        if i0 != t:
            swap_rows(t, i0)
        if j0 != t:
            swap_cols(t, j0)
        while True:
            for i in range(t + 1, p):
                b = S[i][t]
                if not b:
                    continue
                a = S[t][t]
                if R.divides(a, b):
                    q = R.divide_exact(b, a)
                    _row_sub(S, i, t, q)
                    _row_sub(U, i, t, q)
                    if inverses:
                        for row in Ui:
                            if row[i]:
                                row[t] = row[t] + q * row[i]
                else:
                    e = R.gcd_ext(a, b)
                    rows_op(t, i, e.x, e.y, -R.divide_exact(b, e.g), R.divide_exact(a, e.g))
            for j in range(t + 1, m):
                b = S[t][j]
                if not b:
                    continue
                a = S[t][t]
                if R.divides(a, b):
                    q = R.divide_exact(b, a)
                    _col_sub(S, j, t, q)
                    _row_sub(VT, j, t, q)
                    if inverses:
                        Vi[t] = [x + q * y for x, y in zip(Vi[t], Vi[j])]
                else:
                    e = R.gcd_ext(a, b)
                    cols_op(t, j, e.x, e.y, -R.divide_exact(b, e.g), R.divide_exact(a, e.g))
            # a gcd step on columns can refill column t below the pivot
            if all(not S[i][t] for i in range(t + 1, p)):
                break
        r += 1

    # divisibility repair: diag(a, b) -> diag(g, ab/g)
    for i in range(r):
        for j in range(i + 1, r):
            a, b = S[i][i], S[j][j]
            if R.divides(a, b):
                continue
            e = R.gcd_ext(a, b)
            bg, ag = R.divide_exact(b, e.g), R.divide_exact(a, e.g)
            _row_combo(U, i, j, e.x, e.y, -bg, ag)
            _row_combo(VT, i, j, one, one, -e.y * bg, e.x * ag)
            if inverses:
                _col_combo(Ui, i, j, ag, bg, -e.y, e.x)
                _row_combo(Vi, i, j, e.x * ag, e.y * bg, -one, one)
            S[i][i] = e.g
            S[j][j] = R.divide_exact(a * b, e.g)

    for i in range(r):
        u = R.unit_of(S[i][i])
        if not R.is_one(u):
            w = R.unit_inverse(u)
            S[i][i] = R.canonical(S[i][i])
            U[i] = [w * x for x in U[i]]
            if inverses:
                for row in Ui:
                    row[i] = row[i] * u

    Um = Matrix._raw(R, U, p, p)
    Vm = Matrix._raw(R, VT, m, m).T
    Sm = Matrix._raw(R, [[S[i][j] if i == j else zero for j in range(m)] for i in range(p)], p, m)
    inv = tuple(S[i][i] for i in range(r))
    dets = []
    acc = one
    for a in inv:
        acc = R.canonical(acc * a)
        dets.append(acc)
    Uim = Matrix._raw(R, Ui, p, p) if inverses else None
    Vim = Matrix._raw(R, Vi, m, m) if inverses else None
    return SmithDecomp(Um, Vm, Sm, inv, r, tuple(dets), Uim, Vim)


def invariant_factors(A):
    return smith(A).inv_factors


# -- minor-gcd oracle ----------------------------------------------------------

def _check_guard(A):
    if min(A.nrows, A.ncols) > ORACLE_GUARD:
        raise GuardExceededError(
            f"minor enumeration refused for min dimension {min(A.nrows, A.ncols)} > {ORACLE_GUARD}")


def determinantal_divisors(A):
    """delta_1, ..., delta_r: gcds of the k x k minors, up to the rank."""
    if is_field(A.dom):
        A = A.to_ring()
    _check_guard(A)
    R = A.dom
    out = []
    for k in range(1, min(A.nrows, A.ncols) + 1):
        g = R.zero()
        for mnr in minors(A, k):
            g = R.gcd(g, mnr)
            if R.is_one(g):
                break
        if R.is_zero(g):
            break
        out.append(R.canonical(g))
    return tuple(out)


def smith_oracle(A):
    """Invariant factors alpha_k = delta_k / delta_{k-1} from minor gcds."""
    if is_field(A.dom):
        A = A.to_ring()
    R = A.dom
    dd = determinantal_divisors(A)
    out = []
    prev = R.one()
    for d in dd:
        out.append(R.canonical(R.divide_exact(d, prev)))
        prev = d
    return tuple(out)


# -- Smith-McMillan ------------------------------------------------------------

def smith_mcmillan(G, inverses=False):
    """Smith-McMillan form of a ring or field matrix, with U G V = diag(eps/psi)."""
    R = base_ring(G.dom)
    phi = R.canonical(lcd(G))
    N = G.scale(phi).to_ring() if is_field(G.dom) else G
    sd = smith(N, inverses=inverses)
    eps, psi = [], []
    for a in sd.inv_factors:
        g = R.gcd(a, phi)
        eps.append(R.canonical(R.divide_exact(a, g)))
        psi.append(R.canonical(R.divide_exact(phi, g)))
    return SMDecomp(sd.U, sd.V, tuple(eps), tuple(psi), sd.rank, phi, G.shape, sd.U_inv, sd.V_inv)


# -- partial multiplicities ----------------------------------------------------

def multiplicity(a, prime, R):
    t = 0
    while R.divides(prime, a):
        a = R.divide_exact(a, prime)
        t += 1
    return t


def partial_multiplicities(factors, prime):
    """Exponents of ``prime`` in each invariant factor that it divides."""
    factors = list(factors)
    from .rings import ring_of

    R = ring_of(prime)
    for f in factors:
        R.check(f)
    if R.is_zero(prime) or R.is_unit(prime):
        raise DomainError("prime must be a nonzero non-unit")
    if R is RPR and prime.valuation != 1:
        raise RingMismatchError("the only prime of Rpr is 1/z (up to units)")
    mults = []
    for f in factors:
        if R.is_zero(f):
            raise DomainError("invariant factors must be nonzero")
        t = multiplicity(f, prime, R)
        if t:
            mults.append(t)
    return PartialMults(prime, tuple(mults))


def elementary_divisors(A, prime):
    return partial_multiplicities(invariant_factors(A), prime).elementary_divisors()


def is_smith_chain(factors, R):
    return all(R.divides(a, b) for a, b in zip(factors, factors[1:]))


def unit_det(M):
    return base_ring(M.dom).is_unit(det(M))
