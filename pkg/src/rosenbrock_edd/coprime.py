"""Left/right coprimeness with certificates, and unimodular completions."""

from dataclasses import dataclass
from typing import Optional

from .concrete import lcd
from .errors import NotCoprimeError, RingMismatchError, ShapeError
from .matrices import Matrix, base_ring, det, direct_sum, is_field, vstack
from .normal_forms import SmithDecomp, smith


@dataclass(frozen=True)
class CoprimeReport:
    """Outcome of a coprimeness test.

    Right side: coprime means X G1 + Y G2 = I_m; otherwise G1 = Q1 D and
    G2 = Q2 D with det D not a unit.  Left side transposes everything:
    G1 X + G2 Y = I and G1 = D Q1, G2 = D Q2.  ``completion_U`` is a
    unimodular matrix with U [G1; G2] = [I; 0] (right) or [G1 G2] U = [I 0]
    (left).
    """

    coprime: bool
    side: str
    witness_XY: Optional[tuple] = None
    common_divisor: Optional[Matrix] = None
    quotients: Optional[tuple] = None
    completion_U: Optional[Matrix] = None
    smith: Optional[SmithDecomp] = None


def _ring_matrix(M):
    if is_field(M.dom):
        return M.to_ring()
    return M


def _right(G1, G2):
    R = G1.dom
    p, q, m = G1.nrows, G2.nrows, G1.ncols
    M = vstack(G1, G2)
    sd = smith(M, inverses=True)
    ok = sd.rank == m and all(R.is_one(a) for a in sd.inv_factors)
    if ok:
        W = direct_sum(sd.V, Matrix.identity(R, p + q - m)) @ sd.U
        top = W.slice(0, m, 0, p + q)
        X, Y = top.slice(0, m, 0, p), top.slice(0, m, p, p + q)
        return CoprimeReport(True, "right", witness_XY=(X, Y), completion_U=W, smith=sd)
    # M = U^-1 E Dg V^-1 with S = E Dg
    Dg = Matrix.diag(R, sd.inv_factors, m, m)
    E = Matrix.diag(R, [R.one()] * min(p + q, m), p + q, m)
    D = Dg @ sd.V_inv
    Q = sd.U_inv @ E
    return CoprimeReport(False, "right", common_divisor=D,
                         quotients=(Q.slice(0, p, 0, m), Q.slice(p, p + q, 0, m)), smith=sd)


def coprime_check(G1, G2, side="right"):
    G1, G2 = _ring_matrix(G1), _ring_matrix(G2)
    if base_ring(G1.dom) is not base_ring(G2.dom):
        raise RingMismatchError(f"matrices over {G1.dom} and {G2.dom}")
    if side == "right":
        if G1.ncols != G2.ncols:
            raise ShapeError(f"right coprimeness needs equal column counts, got {G1.ncols} and {G2.ncols}")
        return _right(G1, G2)
    if side != "left":
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if G1.nrows != G2.nrows:
        raise ShapeError(f"left coprimeness needs equal row counts, got {G1.nrows} and {G2.nrows}")
    rep = _right(G1.T, G2.T)
    if rep.coprime:
        X, Y = rep.witness_XY
        return CoprimeReport(True, "left", witness_XY=(X.T, Y.T),
                             completion_U=rep.completion_U.T, smith=rep.smith)
    Q1, Q2 = rep.quotients
    return CoprimeReport(False, "left", common_divisor=rep.common_divisor.T,
                         quotients=(Q1.T, Q2.T), smith=rep.smith)


def verify_report(rep, G1, G2):
    """Check a report's certificate exactly; returns True or raises AssertionError."""
    G1, G2 = _ring_matrix(G1), _ring_matrix(G2)
    R = base_ring(G1.dom)
    if rep.coprime:
        X, Y = rep.witness_XY
        U = rep.completion_U
        if rep.side == "right":
            m = G1.ncols
            assert X @ G1 + Y @ G2 == Matrix.identity(R, m)
            target = Matrix.diag(R, [R.one()] * m, G1.nrows + G2.nrows, m)
            assert U @ vstack(G1, G2) == target
        else:
            n = G1.nrows
            assert G1 @ X + G2 @ Y == Matrix.identity(R, n)
            from .matrices import hstack

            target = Matrix.diag(R, [R.one()] * n, n, G1.ncols + G2.ncols)
            assert hstack(G1, G2) @ U == target
        assert R.is_unit(det(U))
    else:
        D = rep.common_divisor
        Q1, Q2 = rep.quotients
        assert not R.is_unit(det(D))
        if rep.side == "right":
            assert Q1 @ D == G1 and Q2 @ D == G2
        else:
            assert D @ Q1 == G1 and D @ Q2 == G2
    return True


@dataclass(frozen=True)
class Completion:
    U: Matrix
    n: int

    def block(self, i, j):
        n, N = self.n, self.U.nrows
        rows = (0, n) if i == 1 else (n, N)
        cols = (0, n) if j == 1 else (n, N)
        return self.U.slice(rows[0], rows[1], cols[0], cols[1])

    @property
    def Y11(self):
        return self.block(1, 1)

    @property
    def Y12(self):
        return self.block(1, 2)

    @property
    def Y21(self):
        return self.block(2, 1)

    @property
    def Y22(self):
        return self.block(2, 2)


def completion_I0(A, B):
    """Unimodular U with [A B] U = [I_n 0]; det of its lower-right block is nonzero."""
    A, B = _ring_matrix(A), _ring_matrix(B)
    if not A.is_square() or A.nrows != B.nrows:
        raise ShapeError("completion needs A square and B with the same row count")
    R = A.dom
    if R.is_zero(det(A)):
        raise ShapeError("A must be nonsingular")
    rep = coprime_check(A, B, side="left")
    if not rep.coprime:
        raise NotCoprimeError("A and B are not left coprime")
    c = Completion(rep.completion_U, A.nrows)
    if R.is_zero(det(c.Y22)):
        raise AssertionError("lower-right block of the completion is singular")
    return c


def fraction_coprime(T1, T2, side="right"):
    """Coprimeness in R of two field matrices after clearing their lcds."""
    t1, t2 = lcd(T1), lcd(T2)
    N1 = T1.scale(t1) if is_field(T1.dom) else T1
    N2 = T2.scale(t2) if is_field(T2.dom) else T2
    return coprime_check(N1, N2, side)
