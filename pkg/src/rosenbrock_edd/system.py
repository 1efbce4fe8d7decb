"""System matrices P = [[A, B], [C, D]] and the Rosenbrock correspondence.

The transfer function of P is the Schur complement G = D - C A^{-1} B.
When (A, B) is left coprime and (A, C) right coprime, the Smith forms of
P and A are determined by the Smith-McMillan form of G; the helpers here
predict, verify, reduce to that case, and diagnose what survives when it
fails.
"""

from dataclasses import dataclass, field
from typing import Optional

from .concrete import QZ, ZZ
from .coprime import CoprimeReport, coprime_check
from .errors import DomainError, HypothesisError, RingMismatchError, ShapeError, SingularMatrixError
from .matrices import (Matrix, base_ring, det, direct_sum, hstack, is_field, transfer_function)
from .normal_forms import SMDecomp, partial_multiplicities, smith, smith_mcmillan


@dataclass(frozen=True)
class SystemMatrix:
    A: Matrix
    B: Matrix
    C: Matrix
    D: Matrix

    def __post_init__(self):
        A, B, C, D = self.A, self.B, self.C, self.D
        if not A.is_square():
            raise ShapeError(f"A must be square, got {A.shape}")
        n, m, p = A.nrows, B.ncols, C.nrows
        if B.nrows != n or C.ncols != n or D.shape != (p, m):
            raise ShapeError(f"inconsistent block shapes A{A.shape} B{B.shape} C{C.shape} D{D.shape}")
        doms = {id(X.dom): X.dom for X in (A, B, C, D)}
        if len(doms) > 1:
            if len({id(base_ring(d)) for d in doms.values()}) > 1:
                raise RingMismatchError("blocks live over different rings")
            for name in "ABCD":
                object.__setattr__(self, name, getattr(self, name).to_field())
        if det(self.A) == self.A.dom.zero():
            raise SingularMatrixError("the A block of a system matrix must be nonsingular")

    @classmethod
    def from_matrix(cls, P, n):
        if not 0 <= n <= min(P.nrows, P.ncols):
            raise ShapeError(f"n={n} does not fit a {P.nrows}x{P.ncols} matrix")
        N, M = P.nrows, P.ncols
        return cls(P.slice(0, n, 0, n), P.slice(0, n, n, M), P.slice(n, N, 0, n), P.slice(n, N, n, M))

    @property
    def n(self):
        return self.A.nrows

    @property
    def p(self):
        return self.C.nrows

    @property
    def m(self):
        return self.B.ncols

    @property
    def ring(self):
        return base_ring(self.A.dom)

    @property
    def P(self):
        return Matrix.block([[self.A, self.B], [self.C, self.D]])

    def transfer(self):
        return transfer_function(self.A, self.B, self.C, self.D)

    def to_ring(self):
        return SystemMatrix(*(X.to_ring() for X in (self.A, self.B, self.C, self.D)))


def _ring_system(P):
    if is_field(P.A.dom):
        return P.to_ring()
    return P


# -- irreducibility -------------------------------------------------------------

@dataclass(frozen=True)
class IrreducibilityReport:
    left: CoprimeReport
    right: CoprimeReport

    @property
    def irreducible(self):
        return self.left.coprime and self.right.coprime


def is_irreducible(P):
    P = _ring_system(P)
    return IrreducibilityReport(coprime_check(P.A, P.B, "left"), coprime_check(P.A, P.C, "right"))


# -- Rosenbrock forward / converse -----------------------------------------------

def _g(sm):
    R = sm.ring
    return sum(1 for p in sm.psi if not R.is_unit(p))


def predict_from_sm(sm, n):
    """Smith forms of P and A forced by SM(G) for an irreducible realization of size n."""
    R = sm.ring
    g = _g(sm)
    if n < g:
        raise HypothesisError(f"n={n} is smaller than g={g}")
    SP = (R.one(),) * n + tuple(sm.eps)
    SA = (R.one(),) * (n - g) + tuple(reversed(sm.psi[:g]))
    return SP, SA


def rosenbrock_forward(G, n):
    sm = smith_mcmillan(G)
    SP, SA = predict_from_sm(sm, n)
    return SP, SA, sm


@dataclass(frozen=True)
class ConverseResult:
    eps: tuple
    psi: tuple

    @property
    def fractions(self):
        from .concrete import Frac

        return tuple(Frac(e, p) for e, p in zip(self.eps, self.psi))


def rosenbrock_converse(S_A, S_P, n, r):
    """Invariant fractions of G from the Smith forms of A and P.

    ``S_A`` lists psi_n | ... | psi_1 (Smith order) and ``S_P`` the n + r
    nonzero invariant factors of P.
    """
    S_A, S_P = list(S_A), list(S_P)
    if len(S_A) != n:
        raise ShapeError(f"S_A must have n={n} entries, got {len(S_A)}")
    if len(S_P) != n + r:
        raise ShapeError(f"S_P must have n+r={n + r} entries, got {len(S_P)}")
    from .rings import ring_of

    R = ring_of(S_A[0] if S_A else S_P[0])
    for i in range(n):
        if not R.is_unit(S_P[i]):
            raise HypothesisError(f"eps_{i + 1} = {S_P[i]} is not a unit; the source is not irreducible")
    for i in range(r + 1, n + 1):
        if not R.is_unit(S_A[n - i]):
            raise HypothesisError(f"psi_{i} = {S_A[n - i]} is not a unit; the source is not irreducible")
    eps, psi = [], []
    for i in range(1, r + 1):
        e = R.canonical(S_P[n + i - 1])
        q = R.canonical(S_A[n - i]) if i <= n else R.one()
        if not R.is_one(R.gcd(e, q)):
            raise HypothesisError(f"eps_{i} and psi_{i} share a factor; the source is not irreducible")
        eps.append(e)
        psi.append(q)
    return ConverseResult(tuple(eps), tuple(psi))


@dataclass(frozen=True)
class RosenbrockReport:
    sm_G: SMDecomp
    g: int
    predicted_SP: Optional[tuple]
    predicted_SA: Optional[tuple]
    computed_SP: tuple
    computed_SA: tuple
    irreducible: bool
    match: bool

    @property
    def consistent(self):
        return self.match == self.irreducible


def verify_rosenbrock(P):
    P = _ring_system(P)
    sm = smith_mcmillan(P.transfer())
    g = _g(sm)
    try:
        SP, SA = predict_from_sm(sm, P.n)
    except HypothesisError:
        SP = SA = None
    cSP = smith(P.P).inv_factors
    cSA = smith(P.A).inv_factors
    match = SP == cSP and SA == cSA
    irr = is_irreducible(P).irreducible
    return RosenbrockReport(sm, g, SP, SA, cSP, cSA, irr, match)


# -- reduction to an irreducible system -------------------------------------------

@dataclass(frozen=True)
class ReductionResult:
    E: Matrix
    F: Matrix
    P0: SystemMatrix
    order: str

    def reassemble(self):
        P0 = self.P0
        R = P0.ring
        L = direct_sum(self.E, Matrix.identity(R, P0.p))
        Rt = direct_sum(self.F, Matrix.identity(R, P0.m))
        return L @ P0.P @ Rt


def _left_step(A, B, factor=None):
    """[A B] = E [A1 B1] with [A1 B1] left coprime (or partially, with factor)."""
    R = A.dom
    n = A.nrows
    sd = smith(hstack(A, B), inverses=True)
    alphas = sd.inv_factors
    if factor is None and all(R.is_unit(a) for a in alphas):
        return Matrix.identity(R, n), A, B
    Wfull = sd.V_inv
    W11, W12 = Wfull.slice(0, n, 0, n), Wfull.slice(0, n, n, Wfull.ncols)
    Uinv = sd.U_inv
    if factor is None:
        return Uinv @ Matrix.diag(R, alphas), W11, W12
    part = [R.gcd(a, factor) for a in alphas]
    rest = Matrix.diag(R, [R.divide_exact(a, s) for a, s in zip(alphas, part)])
    return Uinv @ Matrix.diag(R, part), rest @ W11, rest @ W12


def _right_step(A, C):
    """[A; C] = [A0; C0] F with (A0, C0) right coprime."""
    Ft, At, Ct = _left_step(A.T, C.T)
    return Ft.T, At.T, Ct.T


def reduce_system(P, order="ef", left_factor=None):
    """Factor P = (E (+) I) P0 (F (+) I) with P0 irreducible.

    ``order="ef"`` removes the left common divisor first, ``"fe"`` the
    right one first.  ``left_factor`` (only with ``"ef"``) peels off just the
    part of the left divisor dividing that element, so the remainder is
    pushed into F; this can make both det E and det F non-units.
    """
    P = _ring_system(P)
    A, B, C, D = P.A, P.B, P.C, P.D
    if order == "ef":
        E, A1, B1 = _left_step(A, B, left_factor)
        F, A0, C0 = _right_step(A1, C)
        B0 = B1
        if left_factor is not None:
            E2, A0, B0 = _left_step(A0, B1)
            E = E @ E2
    elif order == "fe":
        if left_factor is not None:
            raise ValueError("left_factor is only supported with order='ef'")
        F, A1, C0 = _right_step(A, C)
        E, A0, B0 = _left_step(A1, B)
    else:
        raise ValueError(f"order must be 'ef' or 'fe', not {order!r}")
    return ReductionResult(E, F, SystemMatrix(A0, B0, C0, D), order)


# -- diagnostics for reducible systems ---------------------------------------------

@dataclass(frozen=True)
class Item:
    holds: Optional[bool]
    evidence: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Diagnosis:
    g: int
    r: int
    eps: tuple
    psi: tuple
    psi_tilde: tuple
    eps_tilde: tuple
    items: dict

    def __getitem__(self, key):
        return self.items[key]


def _prod(R, xs):
    out = R.one()
    for x in xs:
        out = out * x
    return out


def _quot(R, a, b):
    return R.canonical(R.divide_exact(a, b)) if R.divides(b, a) else None


def diagnose_reducible(P):
    """Divisibility relations between SM(G) and the Smith forms of a reducible P.

    Keys ``"i"``..``"v"`` follow the five relations linking psi/psi-tilde and
    eps/eps-tilde; ``"row"``/``"col"`` are the full-rank refinements.  An
    item whose hypotheses do not apply has ``holds=None``.
    """
    P = _ring_system(P)
    R = P.ring
    irr = is_irreducible(P)
    if irr.irreducible:
        raise DomainError("system matrix is irreducible; use verify_rosenbrock")
    n, p, m = P.n, P.p, P.m
    sm = smith_mcmillan(P.transfer())
    r, g = sm.rank, _g(sm)
    psi = [sm.psi[i] if i < r else R.one() for i in range(max(n, r))]
    SA = smith(P.A).inv_factors
    SP = smith(P.P).inv_factors
    pt = [SA[n - i] for i in range(1, n + 1)]  # psi-tilde_1 .. psi-tilde_n
    items = {}

    ratios = [_quot(R, pt[i], psi[i]) for i in range(n)]
    items["i"] = Item(n >= g and all(q is not None for q in ratios),
                      {"n": n, "g": g, "ratios": ratios})

    num_psi = _prod(R, pt)
    den_psi = _prod(R, sm.psi[:g])
    q_psi = _quot(R, num_psi, den_psi)
    items["ii"] = Item(q_psi is not None and not R.is_unit(q_psi), {"quotient": q_psi})

    e_ratios = [_quot(R, SP[n + i], sm.eps[i]) if n + i < len(SP) else None for i in range(r)]
    items["iii"] = Item(all(q is not None for q in e_ratios), {"ratios": e_ratios})

    q_eps = _quot(R, _prod(R, SP), _prod(R, sm.eps))
    items["iv"] = Item(q_eps is not None and q_psi is not None and R.divides(q_eps, q_psi),
                       {"quotient_eps": q_eps, "quotient_psi": q_psi})

    if r == p == m:
        ok = q_eps is not None and q_psi is not None and R.associates(q_eps, q_psi) \
            and not R.is_unit(q_eps)
        items["v"] = Item(ok, {"quotient_eps": q_eps, "quotient_psi": q_psi})
    else:
        items["v"] = Item(None, {"reason": "G is not square and nonsingular"})

    if not irr.left.coprime and r == p:
        items["row"] = Item(q_eps is not None and not R.is_unit(q_eps), {"quotient_eps": q_eps})
    else:
        items["row"] = Item(None, {"reason": "needs (A, B) not left coprime and rank G = p"})
    if not irr.right.coprime and r == m:
        items["col"] = Item(q_eps is not None and not R.is_unit(q_eps), {"quotient_eps": q_eps})
    else:
        items["col"] = Item(None, {"reason": "needs (A, C) not right coprime and rank G = m"})

    return Diagnosis(g, r, tuple(sm.eps), tuple(sm.psi), tuple(pt), tuple(SP), items)


# -- local zero structure ------------------------------------------------------------

@dataclass(frozen=True)
class LocalStructure:
    prime: object
    P_mults: tuple
    eps_mults: tuple

    @property
    def match(self):
        return self.P_mults == self.eps_mults


def local_zero_structure(P, prime):
    P = _ring_system(P)
    R = P.ring
    if R not in (ZZ, QZ):
        raise RingMismatchError(f"local structure needs a UFD instance (Z or Qz), not {R}")
    prime = R.coerce(prime)
    sm = smith_mcmillan(P.transfer())
    g = _g(sm)
    h = R.divide_exact(det(P.A), _prod(R, sm.psi[:g]))
    if not R.is_one(R.gcd(prime, h)):
        raise HypothesisError(f"gcd({prime}, det A / (psi_g...psi_1)) is not a unit")
    mp = partial_multiplicities(smith(P.P).inv_factors, prime)
    me = partial_multiplicities(sm.eps, prime)
    return LocalStructure(prime, mp.mults, me.mults)


# -- realizations ------------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    system: SystemMatrix
    n: int
    sm: SMDecomp
    left: Optional[CoprimeReport] = None
    right: Optional[CoprimeReport] = None


def minimal_realization(G, certify=True):
    """Realization G = D - C A^{-1} B of the least possible size g."""
    sm = smith_mcmillan(G, inverses=True)
    R = sm.ring
    p, m = G.shape
    g, r = _g(sm), sm.rank
    Ui, Vi = sm.U_inv, sm.V_inv
    A = Matrix.diag(R, sm.psi[:g])
    B = Vi.slice(0, g, 0, m)
    C = -(Ui @ Matrix.diag(R, sm.eps[:g], p, g))
    mid = Matrix.diag(R, [R.zero()] * g + list(sm.eps[g:r]), p, m)
    D = Ui @ mid @ Vi
    sysm = SystemMatrix(A, B, C, D)
    left = right = None
    if certify:
        left = coprime_check(A, B, "left")
        right = coprime_check(A, C, "right")
    return Realization(sysm, g, sm, left, right)


def realization_dimension(G):
    return _g(smith_mcmillan(G))
