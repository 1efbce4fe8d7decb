"""Dense exact matrices over a ring or its field of fractions.

``Matrix.dom`` is either a :class:`~rosenbrock_edd.rings.Ring` or a
:class:`~rosenbrock_edd.concrete.FractionField`.  Shapes with zero rows or
zero columns are legal and keep their other dimension.
"""

from dataclasses import dataclass
from itertools import combinations

from .concrete import Frac, FractionField
from .errors import NotDivisibleError, RingMismatchError, ShapeError, SingularMatrixError


def is_field(dom):
    return isinstance(dom, FractionField)


def base_ring(dom):
    return dom.ring if is_field(dom) else dom


class Matrix:
    __slots__ = ("dom", "nrows", "ncols", "rows")

    def __init__(self, dom, rows, nrows=None, ncols=None):
        rows = [list(r) for r in rows]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ShapeError(f"ragged or mis-sized rows for a {nrows}x{ncols} matrix")
        self.dom = dom
        self.nrows, self.ncols = nrows, ncols
        self.rows = [[dom.coerce(x) for x in r] for r in rows]

    @classmethod
    def _raw(cls, dom, rows, nrows, ncols):
        M = object.__new__(cls)
        M.dom, M.rows, M.nrows, M.ncols = dom, rows, nrows, ncols
        return M

    # -- constructors --------------------------------------------------
    @classmethod
    def zeros(cls, dom, p, m):
        z = dom.zero()
        return cls._raw(dom, [[z] * m for _ in range(p)], p, m)

    @classmethod
    def identity(cls, dom, n):
        M = cls.zeros(dom, n, n)
        one = dom.one()
        for i in range(n):
            M.rows[i][i] = one
        return M

    @classmethod
    def diag(cls, dom, entries, p=None, m=None):
        entries = [dom.coerce(x) for x in entries]
        k = len(entries)
        p = k if p is None else p
        m = k if m is None else m
        if k > min(p, m):
            raise ShapeError(f"{k} diagonal entries do not fit a {p}x{m} matrix")
        M = cls.zeros(dom, p, m)
        for i, x in enumerate(entries):
            M.rows[i][i] = x
        return M

    @classmethod
    def block(cls, blocks, dom=None):
        """Assemble a 2D grid of matrices; every block must be a Matrix."""
        if dom is None:
            dom = blocks[0][0].dom
        heights = [row[0].nrows for row in blocks]
        widths = [b.ncols for b in blocks[0]]
        out = []
        for row, h in zip(blocks, heights):
            if len(row) != len(widths):
                raise ShapeError("block rows have different numbers of blocks")
            for b, w in zip(row, widths):
                if b.nrows != h or b.ncols != w:
                    raise ShapeError("incompatible block sizes")
            for i in range(h):
                line = []
                for b in row:
                    line.extend(b.convert(dom).rows[i] if b.dom is not dom else b.rows[i])
                out.append(line)
        return cls._raw(dom, out, sum(heights), sum(widths))

    # -- basic access --------------------------------------------------
    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for r in self.rows:
            yield from r

    def copy(self):
        return Matrix._raw(self.dom, [list(r) for r in self.rows], self.nrows, self.ncols)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix<{self.dom}, {self.nrows}x{self.ncols}>[{body}]"

    @property
    def T(self):
        rows = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix._raw(self.dom, rows, self.ncols, self.nrows)

    def submatrix(self, rows, cols):
        """0-based row and column index sequences."""
        return Matrix._raw(self.dom, [[self.rows[i][j] for j in cols] for i in rows],
                           len(rows), len(cols))

    def slice(self, r0, r1, c0, c1):
        return self.submatrix(range(r0, r1), range(c0, c1))

    # -- domain changes ------------------------------------------------
    def to_field(self):
        if is_field(self.dom):
            return self
        F = self.dom.field
        R = self.dom
        one = R.one()
        rows = [[Frac._raw(x, one, R) for x in r] for r in self.rows]
        return Matrix._raw(F, rows, self.nrows, self.ncols)

    def is_ring_valued(self):
        return not is_field(self.dom) or all(x.in_ring() for x in self.entries())

    def to_ring(self):
        if not is_field(self.dom):
            return self
        if not self.is_ring_valued():
            raise RingMismatchError("matrix has non-integral entries")
        rows = [[x.num for x in r] for r in self.rows]
        return Matrix._raw(self.dom.ring, rows, self.nrows, self.ncols)

    def convert(self, dom):
        if dom is self.dom:
            return self
        if is_field(dom) and not is_field(self.dom) and dom.ring is self.dom:
            return self.to_field()
        if not is_field(dom) and is_field(self.dom) and self.dom.ring is dom:
            return self.to_ring()
        raise RingMismatchError(f"cannot convert matrix over {self.dom} to {dom}")

    # -- arithmetic ----------------------------------------------------
    def _unify(self, other):
        if self.dom is other.dom:
            return self, other
        if base_ring(self.dom) is not base_ring(other.dom):
            raise RingMismatchError(f"matrices over {self.dom} and {other.dom}")
        return self.to_field(), other.to_field()

    def __add__(self, other):
        a, b = self._unify(other)
        if a.shape != b.shape:
            raise ShapeError(f"cannot add {a.shape} and {b.shape}")
        rows = [[x + y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)]
        return Matrix._raw(a.dom, rows, a.nrows, a.ncols)

    def __sub__(self, other):
        a, b = self._unify(other)
        if a.shape != b.shape:
            raise ShapeError(f"cannot subtract {b.shape} from {a.shape}")
        rows = [[x - y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)]
        return Matrix._raw(a.dom, rows, a.nrows, a.ncols)

    def __neg__(self):
        return Matrix._raw(self.dom, [[-x for x in r] for r in self.rows], self.nrows, self.ncols)

    def __matmul__(self, other):
        a, b = self._unify(other)
        if a.ncols != b.nrows:
            raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
        zero = a.dom.zero()
        cols = [[b.rows[k][j] for k in range(b.nrows)] for j in range(b.ncols)]
        rows = []
        for r in a.rows:
            out = []
            for col in cols:
                acc = zero
                for x, y in zip(r, col):
                    if x and y:
                        acc = acc + x * y
                out.append(acc)
            rows.append(out)
        return Matrix._raw(a.dom, rows, a.nrows, b.ncols)

    def scale(self, c):
        """Multiply every entry by the scalar c (ring element or Frac)."""
        M = self
        if isinstance(c, Frac) and not is_field(self.dom):
            M = self.to_field()
        c = M.dom.coerce(c)
        return Matrix._raw(M.dom, [[c * x for x in r] for r in M.rows], M.nrows, M.ncols)

    def diagonal(self):
        return [self.rows[i][i] for i in range(min(self.nrows, self.ncols))]


def hstack(*ms):
    return Matrix.block([list(ms)])


def vstack(*ms):
    return Matrix.block([[m] for m in ms])


def direct_sum(a, b):
    dom = a.dom if a.dom is b.dom else a.to_field().dom
    return Matrix.block([[a, Matrix.zeros(a.dom, a.nrows, b.ncols)],
                         [Matrix.zeros(b.dom, b.nrows, a.ncols), b]], dom=dom)


# -- determinants, rank, inverse ------------------------------------------

def _bareiss(rows, n_rows, n_cols, ring, full_pivot):
    """Fraction-free elimination in place; returns (rank, sign, last pivot)."""
    prev = ring.one()
    sign = 1
    rank = 0
    cols = list(range(n_cols))
    for k in range(min(n_rows, n_cols)):
        piv = None
        for i in range(k, n_rows):
            for jj in range(k, n_cols if full_pivot else k + 1):
                if not ring.is_zero(rows[i][cols[jj]]):
                    piv = (i, jj)
                    break
            if piv:
                break
        if piv is None:
            break
        i, jj = piv
        if i != k:
            rows[i], rows[k] = rows[k], rows[i]
            sign = -sign
        if jj != k:
            cols[jj], cols[k] = cols[k], cols[jj]
            sign = -sign
        rank += 1
        pk = rows[k][cols[k]]
        for i in range(k + 1, n_rows):
            ri = rows[i]
            a = ri[cols[k]]
            for jj in range(k + 1, n_cols):
                j = cols[jj]
                val = pk * ri[j] - a * rows[k][j]
                ri[j] = ring.divide_exact(val, prev) if not ring.is_one(prev) else val
            ri[cols[k]] = ring.zero()
        prev = pk
    return rank, sign, prev


def _field_elim(rows, n_rows, n_cols, zero):
    """Gaussian elimination in place over a field; returns (rank, sign, pivot product)."""
    rank = 0
    sign = 1
    prod = None
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[piv], rows[r] = rows[r], rows[piv]
            sign = -sign
        p = rows[r][c]
        prod = p if prod is None else prod * p
        inv = p.inverse()
        for i in range(r + 1, n_rows):
            f = rows[i][c]
            if f:
                f = f * inv
                ri, rr = rows[i], rows[r]
                for j in range(c, n_cols):
                    if rr[j]:
                        ri[j] = ri[j] - f * rr[j]
        r += 1
        rank += 1
        if r == n_rows:
            break
    return rank, sign, prod


def det(M):
    """Exact determinant; det of the 0x0 matrix is 1."""
    if not M.is_square():
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    n = M.nrows
    if n == 0:
        return M.dom.one()
    rows = [list(r) for r in M.rows]
    if is_field(M.dom):
        rank, sign, prod = _field_elim(rows, n, n, M.dom.zero())
        if rank < n:
            return M.dom.zero()
        return prod if sign == 1 else -prod
    ring = M.dom
    rank, sign, last = _bareiss(rows, n, n, ring, full_pivot=False)
    if rank < n:
        return ring.zero()
    return last if sign == 1 else -last


def rank(M):
    if M.nrows == 0 or M.ncols == 0:
        return 0
    rows = [list(r) for r in M.rows]
    if is_field(M.dom):
        return _field_elim(rows, M.nrows, M.ncols, M.dom.zero())[0]
    return _bareiss(rows, M.nrows, M.ncols, M.dom, full_pivot=True)[0]


def _clear(M):
    """(N, d) with M = N / d and N a ring matrix."""
    if not is_field(M.dom):
        return M, M.dom.one()
    from .concrete import lcd

    d = lcd(M)
    return M.scale(d).to_ring(), d


def _ff_solve(A, B):
    """Fraction-free Gauss-Jordan on [A | B] over the ring.

    Returns (d, X) with A X = d B, d = +-det A; every division is exact.
    """
    R = A.dom
    n = A.nrows
    aug = [list(A.rows[i]) + list(B.rows[i]) for i in range(n)]
    prev = R.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        rc = aug[c]
        p = rc[c]
        for i in range(n):
            if i == c:
                continue
            ri = aug[i]
            f = ri[c]
            ri[:] = [R.divide_exact(p * x - f * y, prev) if (x or (f and y)) else x
                     for x, y in zip(ri, rc)]
        prev = p
    return prev, [r[n:] for r in aug]


def solve(A, B):
    """A^{-1} B over the field of fractions."""
    if not A.is_square() or A.nrows != B.nrows:
        raise ShapeError(f"cannot solve {A.shape} against {B.shape}")
    NA, a = _clear(A)
    NB, b = _clear(B)
    R = NA.dom
    if base_ring(NB.dom) is not R:
        raise RingMismatchError(f"matrices over {A.dom} and {B.dom}")
    F = R.field
    if A.nrows == 0:
        return Matrix.zeros(F, 0, B.ncols)
    d, X = _ff_solve(NA, NB)
    den = d * b
    rows = [[Frac(a * x, den, ring=R) if x else F.zero() for x in r] for r in X]
    return Matrix._raw(F, rows, A.nrows, B.ncols)


def inverse(M):
    """Inverse over the field of fractions (result is a field matrix)."""
    if not M.is_square():
        raise ShapeError(f"inverse of non-square {M.shape} matrix")
    return solve(M, Matrix.identity(base_ring(M.dom), M.nrows))


def unimodular_inverse(U):
    """Inverse of a unimodular ring matrix, as a ring matrix."""
    inv = inverse(U)
    try:
        return inv.to_ring()
    except RingMismatchError:
        raise NotDivisibleError("matrix is not unimodular") from None


def is_unimodular(U):
    if not U.is_square():
        return False
    if is_field(U.dom):
        if not U.is_ring_valued():
            return False
        U = U.to_ring()
    return U.dom.is_unit(det(U))


# -- minors ----------------------------------------------------------------

def index_set(idx, bound):
    """Validate a 1-based strictly increasing index tuple within 1..bound."""
    idx = tuple(idx)
    if any(type(i) is not int for i in idx):
        raise ShapeError("indices must be integers")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ShapeError(f"index set {idx} is not strictly increasing")
    if idx and (idx[0] < 1 or idx[-1] > bound):
        raise ShapeError(f"index set {idx} out of bounds 1..{bound}")
    return idx


def minor(M, I, J):
    I = index_set(I, M.nrows)
    J = index_set(J, M.ncols)
    if len(I) != len(J):
        raise ShapeError(f"minor needs |I| = |J|, got {len(I)} and {len(J)}")
    return det(M.submatrix([i - 1 for i in I], [j - 1 for j in J]))


def minors(M, k):
    """All k x k minors in lexicographic (I, J) order."""
    for I in combinations(range(M.nrows), k):
        sub = M.submatrix(I, range(M.ncols))
        for J in combinations(range(M.ncols), k):
            yield det(sub.submatrix(range(k), J))


# -- Schur complements -----------------------------------------------------

@dataclass(frozen=True)
class SchurComplement:
    G: Matrix
    rank_G: int
    rank_P: int


def _blocks(P):
    return P.A, P.B, P.C, P.D


def schur_complement(P):
    """G = D - C A^{-1} B for a system matrix, with the rank bookkeeping.

    ``P`` is anything exposing ``A, B, C, D`` blocks (normally a
    :class:`~rosenbrock_edd.system.SystemMatrix`).
    """
    A, B, C, D = _blocks(P)
    if det(A) == A.dom.zero():
        raise SingularMatrixError("the A block is singular")
    G = transfer_function(A, B, C, D)
    rG = rank(G)
    full = Matrix.block([[A.to_field(), B.to_field()], [C.to_field(), D.to_field()]])
    rP = rank(full)
    if rP != A.nrows + rG:
        raise AssertionError(f"rank P = {rP} but n + rank G = {A.nrows + rG}")
    return SchurComplement(G, rG, rP)


def transfer_function(A, B, C, D):
    n = A.nrows
    if n == 0:
        return D.to_field()
    if det(A) == A.dom.zero():
        raise SingularMatrixError("the A block is singular")
    return D.to_field() - C.to_field() @ solve(A, B)


def block_lu(P):
    """Factors (L, A (+) G, R) with P = L (A (+) G) R over the field."""
    A, B, C, D = (X.to_field() for X in _blocks(P))
    n, p, m = A.nrows, C.nrows, B.ncols
    F = A.dom
    Ainv = inverse(A)
    G = D - C @ Ainv @ B
    L = Matrix.block([[Matrix.identity(F, n), Matrix.zeros(F, n, p)],
                      [C @ Ainv, Matrix.identity(F, p)]])
    R = Matrix.block([[Matrix.identity(F, n), Ainv @ B],
                      [Matrix.zeros(F, m, n), Matrix.identity(F, m)]])
    return L, direct_sum(A, G), R


@dataclass(frozen=True)
class SchurMinorReport:
    lhs: object
    rhs: object
    lhs_scaled: object
    rhs_scaled: object

    @property
    def holds(self):
        return self.lhs == self.rhs and self.lhs_scaled == self.rhs_scaled


def schur_minor_identity(P, I, J, e=None):
    """Evaluate both sides of det P[[n]+I^, [n]+J^] = det A * det G[I, J].

    The ``e``-scaled variant uses det(eP)[...] and det(eA) * det(eG)[I, J].
    Both sides are computed independently (the left from P, the right from
    the Schur complement).
    """
    A, B, C, D = _blocks(P)
    n, p, m = A.nrows, C.nrows, B.ncols
    I = index_set(I, p)
    J = index_set(J, m)
    if len(I) != len(J):
        raise ShapeError("|I| must equal |J|")
    ring = base_ring(A.dom)
    e = ring.one() if e is None else e
    full = Matrix.block([[X.to_field() for X in (A, B)], [X.to_field() for X in (C, D)]])
    G = transfer_function(A, B, C, D)
    rows = list(range(1, n + 1)) + [i + n for i in I]
    cols = list(range(1, n + 1)) + [j + n for j in J]
    lhs = minor(full, rows, cols)
    rhs = det(A.to_field()) * (minor(G, I, J) if I else G.dom.one())
    lhs_e = minor(full.scale(e), rows, cols)
    rhs_e = det(A.to_field().scale(e)) * (minor(G.scale(e), I, J) if I else G.dom.one())
    return SchurMinorReport(lhs, rhs, lhs_e, rhs_e)
