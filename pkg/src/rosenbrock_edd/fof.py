"""System matrices whose blocks have entries in the field of fractions.

Blocks are cleared by their least common denominators alpha, beta, gamma
(in the ring, not in Q(z)), giving

    P = 1/(beta gamma) [[alpha A, beta B], [gamma C, (beta gamma / alpha) D]].

Over the proper rational functions this exposes structure at infinity of
polynomial systems.
"""

from dataclasses import dataclass
from typing import Optional

from .concrete import QZ, RPR, Frac, lcd
from .coprime import CoprimeReport, fraction_coprime
from .errors import DomainError, HypothesisError, RingMismatchError, ShapeError, SingularMatrixError
from .matrices import Matrix, base_ring, det, is_field, transfer_function
from .normal_forms import smith, smith_mcmillan
from .poly import Poly


def _field(M):
    return M.to_field() if not is_field(M.dom) else M


def canonical_frac(f):
    """The associate of f with canonical numerator (denominator already canonical)."""
    R = f.ring
    return Frac._raw(R.canonical(f.num), f.den, R)


def sm_fractions(G):
    sm = smith_mcmillan(G)
    return tuple(canonical_frac(f) for f in sm.fractions), sm


@dataclass(frozen=True)
class FofSystem:
    A: Matrix
    B: Matrix
    C: Matrix
    D: Matrix
    alpha: object
    beta: object
    gamma: object
    P: Matrix
    left: CoprimeReport
    right: CoprimeReport

    @property
    def n(self):
        return self.A.nrows

    @property
    def ring(self):
        return base_ring(self.A.dom)

    @property
    def coprime(self):
        return self.left.coprime and self.right.coprime

    def transfer(self):
        return transfer_function(self.A, self.B, self.C, self.D)


def fof_assemble(A, B, C, D):
    A, B, C, D = (_field(X) for X in (A, B, C, D))
    R = base_ring(A.dom)
    if any(base_ring(X.dom) is not R for X in (B, C, D)):
        raise RingMismatchError("blocks live over different rings")
    n, m, p = A.nrows, B.ncols, C.nrows
    if not A.is_square() or B.nrows != n or C.ncols != n or D.shape != (p, m):
        raise ShapeError(f"inconsistent block shapes A{A.shape} B{B.shape} C{C.shape} D{D.shape}")
    if det(A).is_zero():
        raise SingularMatrixError("the A block must be nonsingular")
    alpha, beta, gamma = (R.canonical(lcd(X)) for X in (A, B, C))
    bg = beta * gamma
    scale_D = Frac(bg, alpha, ring=R)
    DD = D.scale(scale_D)
    if not DD.is_ring_valued():
        raise HypothesisError("(beta gamma / alpha) D is not ring-valued")
    left = fraction_coprime(A, B, "left")
    right = fraction_coprime(A, C, "right")
    Q = Matrix.block([[A.scale(alpha), B.scale(beta)], [C.scale(gamma), DD]])
    P = Q.scale(Frac(R.one(), bg, ring=R))
    return FofSystem(A, B, C, D, alpha, beta, gamma, P, left, right)


@dataclass(frozen=True)
class FofForwardReport:
    eps: tuple
    psi: tuple
    delta: tuple
    nu: tuple
    chi: tuple
    alpha_hat: tuple
    beta_hat: tuple
    alpha_tilde: tuple
    beta_tilde: tuple
    eps_tilde: tuple
    psi_tilde: tuple
    g: int
    predicted_SA: tuple
    predicted_SP: tuple
    computed_SA: tuple
    computed_SP: tuple

    @property
    def match_A(self):
        return self.predicted_SA == self.computed_SA

    @property
    def match_P(self):
        return self.predicted_SP == self.computed_SP

    @property
    def match(self):
        return self.match_A and self.match_P


def fof_forward(sys, verify=True):
    if not sys.coprime:
        raise HypothesisError("blocks are not coprime in the ring; the prediction does not apply")
    R = sys.ring
    n = sys.n
    sm = smith_mcmillan(sys.transfer())
    a, bg = sys.alpha, R.canonical(sys.beta * sys.gamma)
    cols = {k: [] for k in ("delta", "nu", "chi", "ah", "bh", "at", "bt", "et", "pt")}
    for e, q in zip(sm.eps, sm.psi):
        d = R.gcd(e, a)
        ah, et = R.divide_exact(a, d), R.canonical(R.divide_exact(e, d))
        nu = R.gcd(q, bg)
        bh, pt = R.divide_exact(bg, nu), R.canonical(R.divide_exact(q, nu))
        c = R.gcd(ah, bh)
        at, bt = R.canonical(R.divide_exact(ah, c)), R.canonical(R.divide_exact(bh, c))
        for k, v in zip(cols, (d, nu, c, R.canonical(ah), R.canonical(bh), at, bt, et, pt)):
            cols[k].append(v)
    r = sm.rank
    g = 0
    for i in range(r):
        if not R.is_unit(cols["at"][i] * cols["pt"][i]):
            g = i + 1
    inv_a = Frac(R.one(), a, ring=R)
    pSA = [inv_a] * (n - g) if n >= g else []
    pSA += [Frac(cols["pt"][i], cols["delta"][i] * cols["chi"][i], ring=R) for i in reversed(range(g))]
    inv_bg = Frac(R.one(), bg, ring=R)
    pSP = [inv_bg] * n + [Frac(cols["et"][i], cols["nu"][i] * cols["chi"][i], ring=R)
                          for i in range(r)]
    pSA = tuple(canonical_frac(f) for f in pSA)
    pSP = tuple(canonical_frac(f) for f in pSP)
    cSA = cSP = ()
    if verify:
        cSA, _ = sm_fractions(sys.A)
        cSP, _ = sm_fractions(sys.P)
    return FofForwardReport(tuple(sm.eps), tuple(sm.psi), *(tuple(cols[k]) for k in cols),
                            g, pSA, pSP, cSA, cSP)


@dataclass(frozen=True)
class FofConverseReport:
    mu: tuple
    sigma: tuple
    alpha_tilde: tuple
    beta_tilde: tuple
    delta_tilde: tuple
    nu_tilde: tuple
    predicted_SG: tuple
    computed_SG: Optional[tuple] = None

    @property
    def match(self):
        return self.computed_SG is None or self.predicted_SG == self.computed_SG


def fof_converse(sm_A, sm_P, n, r, ring=None, G=None):
    """SM(G) from the SM forms of A (n fractions) and P (n + r fractions).

    The first n fractions of ``sm_P`` must all equal 1/(beta gamma).  When
    the n - i + 1 index drops below 1 (r > n) the A-side factors are taken
    as alpha_1 and 1, the values that make those positions of alpha A trivial.
    """
    sm_A, sm_P = list(sm_A), list(sm_P)
    if len(sm_A) != n or len(sm_P) != n + r:
        raise ShapeError(f"need {n} fractions of A and {n + r} of P, got {len(sm_A)} and {len(sm_P)}")
    if ring is None:
        ring = (sm_A + sm_P)[0].ring
    R = ring
    F = R.field
    sm_A = [canonical_frac(F.coerce(f)) for f in sm_A]
    sm_P = [canonical_frac(F.coerce(f)) for f in sm_P]
    if n:
        lead = sm_P[0]
        if not R.is_one(lead.num) or any(f != lead for f in sm_P[:n]):
            raise DomainError("the first n invariant fractions of P are not a common 1/(beta gamma)")
    betas = [f.num for f in sm_A]
    alphas = [f.den for f in sm_A]

    def a_(j):
        return alphas[j - 1] if j >= 1 else (alphas[0] if alphas else R.one())

    def b_(j):
        return betas[j - 1] if j >= 1 else R.one()

    mu, sigma, at, bt, dt, nt, out = [], [], [], [], [], [], []
    for i in range(1, r + 1):
        nu_i, de_i = sm_P[n + i - 1].num, sm_P[n + i - 1].den
        aj, bj = a_(n - i + 1), b_(n - i + 1)
        m_ = R.gcd(aj, de_i)
        s_ = R.gcd(bj, nu_i)
        at.append(R.canonical(R.divide_exact(aj, m_)))
        dt.append(R.canonical(R.divide_exact(de_i, m_)))
        bt.append(R.canonical(R.divide_exact(bj, s_)))
        nt.append(R.canonical(R.divide_exact(nu_i, s_)))
        mu.append(m_)
        sigma.append(s_)
        out.append(canonical_frac(Frac(at[-1] * nt[-1], bt[-1] * dt[-1], ring=R)))
    computed = None
    if G is not None:
        computed, _ = sm_fractions(G)
    return FofConverseReport(tuple(mu), tuple(sigma), tuple(at), tuple(bt), tuple(dt), tuple(nt),
                             tuple(out), computed)


def fof_converse_from_system(sys):
    """Run the converse on the SM forms computed from an assembled system."""
    sA, _ = sm_fractions(sys.A)
    sP, smP = sm_fractions(sys.P)
    r = smP.rank - sys.n
    return fof_converse(sA, sP, sys.n, r, ring=sys.ring, G=sys.transfer())


# -- structure at infinity -------------------------------------------------------

@dataclass(frozen=True)
class InfinityStructure:
    degree: int
    zero_exponents: tuple
    orders_reversal: tuple
    orders_proper: tuple

    @property
    def orders(self):
        return self.orders_reversal

    @property
    def agree(self):
        return self.orders_reversal == self.orders_proper


def _poly_matrix(T):
    if is_field(T.dom):
        T = T.to_ring()
    if T.dom is not QZ:
        raise RingMismatchError("infinity structure needs a polynomial matrix over Qz")
    return T


def reversal(T, d=None):
    T = _poly_matrix(T)
    if d is None:
        d = max((x.deg for x in T.entries() if x), default=0)
    return Matrix._raw(QZ, [[x.reversal(d) for x in row] for row in T.rows], T.nrows, T.ncols)


def orders_by_reversal(T):
    T = _poly_matrix(T)
    d = max(x.deg for x in T.entries() if x)
    inv = smith(reversal(T, d)).inv_factors
    e = tuple(a.trailing_zeros() for a in inv)
    return d, e, tuple(k - d for k in e)


def to_proper(T):
    """A polynomial matrix as a matrix over the fractions of Rpr."""
    T = _poly_matrix(T)
    one = Poly.const(1)
    rows = [[RPR.embed(x, one) for x in row] for row in T.rows]
    return Matrix._raw(RPR.field, rows, T.nrows, T.ncols)


def orders_by_proper(T):
    sm = smith_mcmillan(to_proper(T))
    return tuple(e.valuation - q.valuation for e, q in zip(sm.eps, sm.psi))


def infinity_structure(T):
    T = _poly_matrix(T)
    if all(not x for x in T.entries()):
        raise DomainError("the zero matrix has no structure at infinity")
    d, e, rev_orders = orders_by_reversal(T)
    return InfinityStructure(d, e, rev_orders, orders_by_proper(T))
