import random

import pytest
from hypothesis import given, strategies as st

from rosenbrock_edd.concrete import QZ, RPR, ZZ, Frac, lcd
from rosenbrock_edd.errors import DomainError, HypothesisError, RingMismatchError
from rosenbrock_edd.fof import (fof_assemble, fof_converse, fof_converse_from_system,
                                fof_forward, infinity_structure, reversal, sm_fractions,
                                to_proper)
from rosenbrock_edd.generators import rand_fof_system, rand_matrix
from rosenbrock_edd.matrices import Matrix, rank
from rosenbrock_edd.normal_forms import smith_mcmillan
from rosenbrock_edd.poly import Poly, ProperRat
from rosenbrock_edd.system import predict_from_sm

from cases import scalar_system
from strategies import matrices

FP = RPR.field
one = FP.one()
z_frac = Frac(1, ProperRat.inv_z(1), ring=RPR)  # z = 1 / (1/z)
seeds = st.integers(0, 10 ** 6)


def M(rows, dom=FP):
    return Matrix(dom, rows)


def dvr_example():
    return fof_assemble(M([[z_frac]]), M([[one]]), M([[one]]), M([[FP.zero()]]))


def test_assemble_dvr():
    s = dvr_example()
    assert s.alpha == ProperRat.inv_z(1) and RPR.is_one(s.beta) and RPR.is_one(s.gamma)
    assert s.P == M([[one, one], [one, FP.zero()]])
    assert s.coprime


def test_assemble_ring_valued():
    P = scalar_system()
    s = fof_assemble(P.A, P.B, P.C, P.D)
    assert (s.alpha, s.beta, s.gamma) == (1, 1, 1)
    assert s.P == P.P.to_field()


def test_assemble_degree_condition():
    # d_B + d_C = 0 < d_A + d_D = 2
    with pytest.raises(HypothesisError):
        fof_assemble(M([[z_frac]]), M([[one]]), M([[one]]), M([[z_frac]]))
    # d_B + d_C = d_A + d_D is allowed
    s = fof_assemble(M([[z_frac]]), M([[z_frac]]), M([[one]]), M([[one]]))
    assert s.D.scale(Frac(s.beta * s.gamma, s.alpha, ring=RPR)).is_ring_valued()


def test_forward_dvr():
    rep = fof_forward(dvr_example())
    assert rep.g == 0
    assert rep.predicted_SA == (z_frac,) == rep.computed_SA
    assert rep.predicted_SP == (one, one) == rep.computed_SP
    assert rep.delta == (ProperRat.inv_z(1),) and RPR.is_one(rep.nu[0]) and RPR.is_one(rep.chi[0])


def test_forward_ring_valued_matches_ring_theorem():
    P = scalar_system()
    rep = fof_forward(fof_assemble(P.A, P.B, P.C, P.D))
    SP, SA = predict_from_sm(smith_mcmillan(P.transfer()), P.n)
    assert tuple(f.num for f in rep.predicted_SP) == SP
    assert all(f.den == 1 for f in rep.predicted_SP)
    assert tuple(f.num for f in rep.predicted_SA) == SA
    assert rep.match


def test_forward_refuses_non_coprime():
    A = M([[Frac(2, 1, ring=ZZ)]], ZZ.field)
    s = fof_assemble(A, M([[ZZ.field.coerce(2)]], ZZ.field), M([[ZZ.field.one()]], ZZ.field),
                     M([[ZZ.field.zero()]], ZZ.field))
    with pytest.raises(HypothesisError):
        fof_forward(s)


def test_converse_values():
    rep = fof_converse([z_frac], [one, one], 1, 1)
    assert rep.predicted_SG == (FP.coerce(ProperRat.inv_z(1)),)
    rep = fof_converse([one, one], [one] * 4, 2, 2, ring=RPR)
    assert rep.predicted_SG == (one, one)
    with pytest.raises(DomainError):
        fof_converse([one], [FP.coerce(ProperRat.inv_z(1)), one], 1, 1)


def test_converse_from_dvr_system():
    rep = fof_converse_from_system(dvr_example())
    assert rep.match and rep.predicted_SG == (FP.coerce(ProperRat.inv_z(1)),)


def test_inverse_times_b_special_case():
    rng = random.Random(5)
    for _ in range(10):
        A = rand_matrix(RPR, 2, 2, rng).to_field().scale(z_frac)
        if rank(A) < 2:
            continue
        B = rand_matrix(RPR, 2, 2, rng).to_field().scale(z_frac)
        s = fof_assemble(A, B, Matrix.identity(FP, 2), Matrix.zeros(FP, 2, 2))
        inv_b = Frac(1, s.beta, ring=RPR)
        got, _ = sm_fractions(s.P)
        sB, _ = sm_fractions(B)
        assert got == (inv_b, inv_b) + sB


def test_infinity_values():
    z = Poly.z()
    T = Matrix(QZ, [[z, 0], [0, 1]])
    inf = infinity_structure(T)
    assert inf.orders == (-1, 0) and inf.agree and inf.zero_exponents == (0, 1)
    assert reversal(T) == Matrix(QZ, [[1, 0], [0, z]])
    assert infinity_structure(Matrix.identity(QZ, 3)).orders == (0, 0, 0)
    assert infinity_structure(Matrix(QZ, [[z ** 2]])).orders == (-2,)
    with pytest.raises(DomainError):
        infinity_structure(Matrix.zeros(QZ, 2, 2))
    with pytest.raises(RingMismatchError):
        infinity_structure(Matrix.identity(ZZ, 2))


# -- properties -----------------------------------------------------------------------

def test_forward_and_converse_on_generated_systems():
    @given(seeds)
    def check(seed):
        s, (a, b, c) = rand_fof_system(random.Random(seed))
        rep = fof_forward(s)
        assert rep.match
        sP, smP = sm_fractions(s.P)
        lead = Frac(1, s.beta * s.gamma, ring=RPR)
        assert sP[:s.n] == (lead,) * s.n
        assert RPR.associates(smP.psi[0], s.beta * s.gamma)
        # predictions fed back into the converse recover SM(G)
        r = smP.rank - s.n
        conv = fof_converse(rep.predicted_SA, rep.predicted_SP, s.n, r, ring=RPR, G=s.transfer())
        assert conv.match
        assert conv.predicted_SG == sm_fractions(s.transfer())[0]
    check()


def test_lcd_of_polynomial_matrix_over_proper():
    @given(matrices(QZ, 3, 3))
    def check(T):
        if all(not x for x in T.entries()):
            return
        d = max(x.deg for x in T.entries() if x)
        TP = to_proper(T)
        assert RPR.associates(lcd(TP), ProperRat.inv_z(d))
        assert RPR.associates(smith_mcmillan(TP).psi[0], lcd(TP))
    check()


def test_infinity_two_ways_agree():
    @given(matrices(QZ, 4, 4))
    def check(T):
        if all(not x for x in T.entries()):
            return
        inf = infinity_structure(T)
        assert inf.agree
        assert len(inf.orders) == rank(T)
    check()
