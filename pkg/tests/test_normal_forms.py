import random

import pytest
from hypothesis import given, strategies as st

from rosenbrock_edd.concrete import QZ, RPR, ZZ, Frac
from rosenbrock_edd.errors import DomainError, GuardExceededError, RingMismatchError
from rosenbrock_edd.generators import rand_unimodular
from rosenbrock_edd.matrices import Matrix, direct_sum, rank
from rosenbrock_edd.normal_forms import (determinantal_divisors, elementary_divisors,
                                         is_smith_chain, partial_multiplicities, smith,
                                         smith_mcmillan, smith_oracle, unit_det)
from rosenbrock_edd.poly import Poly, ProperRat

from cases import diag_sixth_four, six_by_six
from oracles import inv_factors_sympy, rpr_exponents, rpr_inv_exponents
from strategies import RING_LIST, field_matrices, matrices

F = ZZ.field


def check_decomp(A, sd):
    R = A.dom
    assert sd.U @ A @ sd.V == sd.S
    assert unit_det(sd.U) and unit_det(sd.V)
    r = sd.rank
    for i in range(sd.S.nrows):
        for j in range(sd.S.ncols):
            if i != j or i >= r:
                assert R.is_zero(sd.S[i, j])
    assert tuple(sd.S[i, i] for i in range(r)) == sd.inv_factors
    assert is_smith_chain(sd.inv_factors, R)
    assert all(R.canonical(a) == a for a in sd.inv_factors)


# -- worked values ------------------------------------------------------------------

def test_identity():
    sd = smith(Matrix.identity(ZZ, 3))
    assert sd.inv_factors == (1, 1, 1) and sd.S == Matrix.identity(ZZ, 3)


def test_two_by_two():
    A = Matrix(ZZ, [[2, 4], [6, 8]])
    sd = smith(A)
    assert sd.inv_factors == (2, 4)
    check_decomp(A, sd)


def test_six_by_six_example():
    P = six_by_six().P
    sd = smith(P)
    assert sd.S == direct_sum(Matrix.diag(ZZ, [1, 1, 1, 3]), Matrix.zeros(ZZ, 2, 2))
    check_decomp(P, sd)


def test_empty_and_zero():
    for shape in [(0, 0), (0, 3), (2, 0)]:
        sd = smith(Matrix.zeros(ZZ, *shape))
        assert sd.inv_factors == () and sd.U.shape == (shape[0],) * 2
    sd = smith(Matrix.zeros(QZ, 2, 3))
    assert sd.rank == 0


def test_oracle_values():
    assert determinantal_divisors(Matrix.diag(ZZ, [2, 3])) == (1, 6)
    assert smith_oracle(Matrix.diag(ZZ, [2, 3])) == (1, 6)
    assert smith_oracle(Matrix.zeros(ZZ, 2, 2)) == ()
    assert determinantal_divisors(Matrix.identity(ZZ, 2)) == (1, 1)
    assert determinantal_divisors(Matrix(ZZ, [[2, 4], [6, 8]])) == (2, 8)
    assert determinantal_divisors(Matrix.diag(ZZ, [2, 0])) == (2,)
    with pytest.raises(GuardExceededError):
        smith_oracle(Matrix.identity(ZZ, 7))


def test_smith_mcmillan_values():
    sm = smith_mcmillan(diag_sixth_four())
    assert (sm.eps, sm.psi) == ((1, 4), (6, 1))
    sm = smith_mcmillan(Matrix(F, [[Frac(-1, 6)]]))
    assert (sm.eps, sm.psi) == ((1,), (6,))
    assert sm.U @ Matrix(F, [[Frac(-1, 6)]]) @ sm.V == sm.form


def test_partial_multiplicity_values():
    assert partial_multiplicities((2, 4, 24), 2).mults == (1, 2, 3)
    assert partial_multiplicities((3, 9), 2).mults == ()
    zm1 = Poly([-1, 1])
    pm = partial_multiplicities((zm1, zm1 ** 2 * Poly([1, 1])), zm1)
    assert pm.mults == (1, 2)
    assert pm.elementary_divisors() == (zm1, zm1 ** 2)
    assert partial_multiplicities((ProperRat.inv_z(2),), ProperRat.inv_z(1)).mults == (2,)
    with pytest.raises(DomainError):
        partial_multiplicities((2,), 1)
    with pytest.raises(DomainError):
        partial_multiplicities((2,), 0)
    with pytest.raises(RingMismatchError):
        partial_multiplicities((ProperRat.inv_z(2),), ProperRat.inv_z(2))


def test_elementary_divisors():
    assert elementary_divisors(Matrix.diag(ZZ, [2, 12, 0]), 2) == (2, 4)


# -- properties against independent oracles ----------------------------------------------

@pytest.mark.parametrize("R", [ZZ, QZ], ids=lambda R: R.name)
def test_smith_matches_sympy(R):
    @given(matrices(R, 4, 4))
    def check(A):
        sd = smith(A)
        check_decomp(A, sd)
        assert sd.inv_factors == inv_factors_sympy(A)
    check()


def test_smith_rpr_matches_minor_valuations():
    @given(matrices(RPR, 3, 3))
    def check(A):
        sd = smith(A)
        check_decomp(A, sd)
        assert rpr_exponents(sd.inv_factors) == rpr_inv_exponents(A)
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_tracked_inverses(R):
    @given(matrices(R, 4, 4))
    def check(A):
        sd = smith(A, inverses=True)
        assert sd.U_inv @ sd.U == Matrix.identity(R, A.nrows)
        assert sd.V @ sd.V_inv == Matrix.identity(R, A.ncols)
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_det_divisors_are_partial_products(R):
    @given(matrices(R, 4, 4))
    def check(A):
        sd = smith(A)
        assert sd.det_divisors == determinantal_divisors(A)
        assert smith_oracle(A) == sd.inv_factors
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_unimodular_invariance(R):
    @given(matrices(R, 3, 3), st.integers(0, 10 ** 6))
    def check(A, seed):
        rng = random.Random(seed)
        U, V = rand_unimodular(R, A.nrows, rng), rand_unimodular(R, A.ncols, rng)
        assert smith(U @ A @ V).S == smith(A).S
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_product_divisibility(R):
    @given(st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3)).flatmap(
        lambda s: st.tuples(matrices(R, rows=s[0], cols=s[1]), matrices(R, rows=s[1], cols=s[2]))))
    def check(pair):
        A1, A2 = pair
        prod = smith(A1 @ A2).inv_factors
        for Aj in pair:
            fj = smith(Aj).inv_factors
            for k, a in enumerate(prod):
                assert R.divides(fj[k], a)
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_smith_mcmillan_invariants(R):
    @given(field_matrices(R))
    def check(G):
        sm = smith_mcmillan(G)
        assert sm.U @ G @ sm.V == sm.form
        assert unit_det(sm.U) and unit_det(sm.V)
        assert is_smith_chain(sm.eps, R)
        assert is_smith_chain(tuple(reversed(sm.psi)), R)
        for e, q in zip(sm.eps, sm.psi):
            assert R.is_one(R.gcd(e, q))
            assert R.canonical(e) == e and R.canonical(q) == q
        assert sm.rank == rank(G)
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_ring_valued_smith_mcmillan(R):
    @given(matrices(R, 3, 3))
    def check(A):
        sm = smith_mcmillan(A)
        assert all(R.is_one(q) for q in sm.psi)
        assert sm.eps == smith(A).inv_factors
    check()


def _psi(G):
    return smith_mcmillan(G).psi


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_denominators_survive_adding_ring_matrix(R):
    @given(field_matrices(R).flatmap(
        lambda G: st.tuples(st.just(G), matrices(R, rows=G.nrows, cols=G.ncols))))
    def check(pair):
        G1, P2 = pair
        one = R.one()
        a = [q for q in _psi(G1) if not R.is_unit(q)]
        b = [q for q in _psi(G1 + P2.to_field()) if not R.is_unit(q)]
        assert a == b and all(R.canonical(q) == q for q in b) and one is not None
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_bordered_block_denominators(R):
    @given(st.tuples(st.integers(0, 2), st.integers(0, 2)).flatmap(
        lambda s: st.tuples(matrices(R, rows=s[0], cols=s[1]), field_matrices(R))
        .flatmap(lambda tw: st.tuples(
            st.just(tw[0]), matrices(R, rows=s[0], cols=tw[1].ncols),
            matrices(R, rows=tw[1].nrows, cols=s[1]), st.just(tw[1])))))
    def check(blocks):
        T, U, V, W = blocks
        Rm = Matrix.block([[T.to_field(), U.to_field()], [V.to_field(), W]])
        a = [q for q in _psi(Rm) if not R.is_unit(q)]
        b = [q for q in _psi(W) if not R.is_unit(q)]
        assert a == b
    check()
