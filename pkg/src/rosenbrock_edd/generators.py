"""Random instances for property tests and the experiment scripts."""

import random
from dataclasses import dataclass

from .concrete import QZ, RPR, ZZ, Frac
from .matrices import Matrix, direct_sum
from .poly import Poly, ProperRat
from .system import SystemMatrix, minimal_realization


@dataclass
class GenConfig:
    max_coeff: int = 4
    max_degree: int = 3
    max_size: int = 5
    zero_prob: float = 0.25


def rng_of(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def rand_poly(rng, cfg, max_degree=None):
    d = cfg.max_degree if max_degree is None else max_degree
    k = rng.randint(0, d)
    c = [rng.randint(-cfg.max_coeff, cfg.max_coeff) for _ in range(k + 1)]
    return Poly(c)


def rand_proper(rng, cfg):
    den = Poly()
    while not den:
        den = rand_poly(rng, cfg)
    num = rand_poly(rng, cfg, max(den.deg, 0))
    return ProperRat(num, den)


def rand_elem(R, rng, cfg=GenConfig(), nonzero=False):
    while True:
        if rng.random() < cfg.zero_prob and not nonzero:
            return R.zero()
        if R is ZZ:
            x = rng.randint(-cfg.max_coeff, cfg.max_coeff)
        elif R is QZ:
            x = rand_poly(rng, cfg)
        elif R is RPR:
            x = rand_proper(rng, cfg)
        else:
            raise ValueError(f"no generator for ring {R}")
        if x or not nonzero:
            return x


def rand_matrix(R, p, m, rng, cfg=GenConfig()):
    return Matrix(R, [[rand_elem(R, rng, cfg) for _ in range(m)] for _ in range(p)], p, m)


def rand_unit(R, rng):
    if R is ZZ:
        return rng.choice((1, -1))
    if R is QZ:
        return Poly.const(rng.choice((1, -1, 2, -3)))
    # a biproper function, e.g. (z + a)/(z + b)
    a, b = rng.sample(range(-3, 4), 2)
    return ProperRat(Poly((a, 1)), Poly((b, 1)))


def rand_small(R, rng):
    """A small ring element used for elementary operations."""
    if R is ZZ:
        return rng.randint(-2, 2)
    if R is QZ:
        return Poly([rng.randint(-2, 2) for _ in range(rng.randint(1, 2))])
    return rng.choice((RPR.zero(), RPR.one(), ProperRat.inv_z(1), ProperRat(1, Poly((1, 1))),
                       ProperRat(-2)))


def rand_unimodular(R, n, rng):
    """Product of a unit lower and a unit upper triangular matrix, rows scaled by units."""
    L = Matrix.identity(R, n).copy()
    U = Matrix.identity(R, n).copy()
    for i in range(n):
        for j in range(i):
            L.rows[i][j] = rand_small(R, rng)
            U.rows[j][i] = rand_small(R, rng)
        L.rows[i][i] = rand_unit(R, rng)
    M = L @ U
    perm = list(range(n))
    rng.shuffle(perm)
    return M.submatrix(perm, range(n))


# -- Smith-McMillan data ------------------------------------------------------------

def _prime_pool(R):
    if R is ZZ:
        return [2, 3, 5, 7]
    if R is QZ:
        return [Poly((-k, 1)) for k in (0, 1, -1, 2)] + [Poly((1, 0, 1))]
    return [ProperRat.inv_z(1)]


def rand_sm_chain(R, r, rng, max_steps=2):
    """Canonical (eps, psi) with eps_1 | ... | eps_r, psi_r | ... | psi_1, gcd(eps_i, psi_i) = 1."""
    one = R.one()
    if R is RPR:
        # the only prime is 1/z: eps_i and psi_i cannot both be non-units
        s = rng.randint(0, r)
        pi = ProperRat.inv_z(1)
        eps, e = [], one
        for i in range(r):
            if i >= s and rng.random() < 0.6:
                e = e * pi
            eps.append(e if i >= s else one)
        psi, q = [one] * r, one
        for i in reversed(range(s)):
            if rng.random() < 0.7 or i == s - 1:
                q = q * pi
            psi[i] = q
        return tuple(R.canonical(x) for x in eps), tuple(R.canonical(x) for x in psi)
    pool = _prime_pool(R)
    rng.shuffle(pool)
    k = rng.randint(1, len(pool) - 1)
    pe, pp = pool[:k], pool[k:]
    eps, e = [], one
    for _ in range(r):
        for _ in range(rng.randint(0, max_steps)):
            if rng.random() < 0.5:
                e = e * rng.choice(pe)
        eps.append(R.canonical(e))
    psi, q = [one] * r, one
    for i in reversed(range(r)):
        for _ in range(rng.randint(0, max_steps)):
            if rng.random() < 0.5:
                q = q * rng.choice(pp)
        psi[i] = R.canonical(q)
    return tuple(eps), tuple(psi)


def sm_matrix(R, eps, psi, p, m, rng, disguise=True):
    """A field matrix whose Smith-McMillan form is diag(eps/psi) (+) 0."""
    fr = [Frac(e, q, ring=R) for e, q in zip(eps, psi)]
    S = Matrix.diag(R.field, fr, p, m)
    if not disguise:
        return S
    return rand_unimodular(R, p, rng).to_field() @ S @ rand_unimodular(R, m, rng).to_field()


def rand_sm_instance(R, rng, max_rank=3, max_extra=1):
    r = rng.randint(1, max_rank)
    p = r + rng.randint(0, max_extra)
    m = r + rng.randint(0, max_extra)
    eps, psi = rand_sm_chain(R, r, rng)
    return sm_matrix(R, eps, psi, p, m, rng), eps, psi


# -- systems -------------------------------------------------------------------------

def disguise_system(P, rng, pad=0):
    """(U (+) I) P (V (+) I) with unimodular U, V; optional identity padding of A."""
    R = P.ring
    A, B, C, D = P.A, P.B, P.C, P.D
    if pad:
        A = direct_sum(A, Matrix.identity(R, pad))
        B = Matrix.block([[B], [Matrix.zeros(R, pad, B.ncols)]]) if B.ncols else \
            Matrix.zeros(R, A.nrows, 0)
        C = Matrix.block([[C, Matrix.zeros(R, C.nrows, pad)]]) if C.nrows else \
            Matrix.zeros(R, 0, A.ncols)
    n = A.nrows
    U, V = rand_unimodular(R, n, rng), rand_unimodular(R, n, rng)
    return SystemMatrix(U @ A @ V, U @ B, C @ V, D)


def rand_irreducible(R, rng, max_rank=3, pad_max=1, need_g=True):
    """An irreducible system matrix with known transfer-function SM data."""
    while True:
        G, eps, psi = rand_sm_instance(R, rng, max_rank)
        g = sum(1 for q in psi if not R.is_unit(q))
        if need_g and g == 0:
            continue
        real = minimal_realization(G, certify=False)
        pad = rng.randint(0, pad_max)
        if real.n + pad == 0:
            pad = 1
        return disguise_system(real.system, rng, pad), G


def corruption_factor(R, rng):
    if R is ZZ:
        return rng.choice((2, 3))
    if R is QZ:
        return Poly((-rng.choice((3, -2)), 1))
    return ProperRat.inv_z(1)


def corrupt(P, rng, factor=None, side=None):
    """Left (or right) multiply by diag(factor, 1, ..., 1) (+) I to break coprimeness."""
    R = P.ring
    factor = corruption_factor(R, rng) if factor is None else factor
    side = side or rng.choice(("left", "right"))
    n = P.n
    E = Matrix.diag(R, [factor] + [R.one()] * (n - 1))
    W = rand_unimodular(R, n, rng)
    E = W @ E @ rand_unimodular(R, n, rng)
    if side == "left":
        return SystemMatrix(E @ P.A, E @ P.B, P.C, P.D)
    return SystemMatrix(P.A @ E, P.B, P.C @ E, P.D)


# -- systems with fraction entries ----------------------------------------------------

def rand_fof_system(rng, max_rank=3, max_shift=2, tries=50):
    """A coprime Rpr-fraction system with prescribed SM data for A and P.

    Starts from an irreducible ring system P0 realizing random SM data and
    divides A0, B0, C0 by alpha, beta, gamma (powers of 1/z), with D scaled
    by alpha/(beta gamma).  Then the SM form of A is that of A0 over alpha
    and the SM form of P is that of P0 over beta gamma.  Returns
    ``(fof_system, (alpha, beta, gamma))``.
    """
    from .fof import fof_assemble
    from .errors import HypothesisError

    for _ in range(tries):
        P0, _ = rand_irreducible(RPR, rng, max_rank, pad_max=1)
        a, b, c = (ProperRat.inv_z(rng.randint(0, max_shift)) for _ in range(3))
        s = Frac(a, b * c, ring=RPR)
        A = P0.A.to_field().scale(Frac(1, a, ring=RPR))
        B = P0.B.to_field().scale(Frac(1, b, ring=RPR))
        C = P0.C.to_field().scale(Frac(1, c, ring=RPR))
        D = P0.D.to_field().scale(s)
        try:
            sys = fof_assemble(A, B, C, D)
        except HypothesisError:
            continue
        if sys.coprime:
            return sys, (a, b, c)
    raise RuntimeError("no coprime fraction system found; loosen the generator settings")
