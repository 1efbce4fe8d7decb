import random

import pytest
from hypothesis import assume, given, strategies as st

from rosenbrock_edd.concrete import QZ, RPR, ZZ, Frac

from rosenbrock_edd.errors import (DomainError, HypothesisError, RingMismatchError,
                                   SingularMatrixError)
from rosenbrock_edd.generators import (_prime_pool, corrupt, rand_irreducible, rand_matrix,
                                       rand_sm_instance, rand_unimodular)
from rosenbrock_edd.matrices import Matrix, det, inverse
from rosenbrock_edd.normal_forms import smith, smith_mcmillan
from rosenbrock_edd.system import (SystemMatrix, diagnose_reducible, is_irreducible,
                                   local_zero_structure, minimal_realization,
                                   realization_dimension, reduce_system, rosenbrock_converse,
                                   rosenbrock_forward, verify_rosenbrock)

from cases import diag_sixth_four, example_p, scalar_system, six_by_six
from strategies import RING_LIST

F = ZZ.field
seeds = st.integers(0, 10 ** 6)


def ring_system(R, rng, n, p, m):
    while True:
        A = rand_matrix(R, n, n, rng)
        if not R.is_zero(det(A)):
            return SystemMatrix(A, rand_matrix(R, n, m, rng), rand_matrix(R, p, n, rng),
                                rand_matrix(R, p, m, rng))


# -- worked values ------------------------------------------------------------------------

def test_irreducibility_values():
    assert is_irreducible(scalar_system()).irreducible
    rep = is_irreducible(example_p(2))
    assert not rep.left.coprime and not rep.right.coprime
    P = SystemMatrix(Matrix(ZZ, [[3]]), Matrix(ZZ, [[0]]), Matrix(ZZ, [[1]]), Matrix(ZZ, [[0]]))
    assert not is_irreducible(P).left.coprime
    with pytest.raises(SingularMatrixError):
        SystemMatrix(Matrix(ZZ, [[0]]), Matrix(ZZ, [[1]]), Matrix(ZZ, [[1]]), Matrix(ZZ, [[0]]))


def test_forward_values():
    SP, SA, _ = rosenbrock_forward(Matrix(F, [[Frac(-1, 6)]]), 1)
    assert (SP, SA) == ((1, 1), (6,))
    SP, SA, _ = rosenbrock_forward(Matrix(F, [[F.coerce(4)]]), 1)
    assert (SP, SA) == ((1, 4), (1,))
    SP, SA, _ = rosenbrock_forward(diag_sixth_four(), 2)
    assert (SP, SA) == ((1, 1, 1, 4), (1, 6))
    with pytest.raises(HypothesisError):
        rosenbrock_forward(Matrix(F, [[Frac(1, 2), 0], [0, Frac(1, 2)]]), 1)


def test_converse_values():
    res = rosenbrock_converse((6,), (1, 1), 1, 1)
    assert res.fractions == (Frac(1, 6),)
    assert rosenbrock_converse((1, 1), (1, 1, 1, 1), 2, 2).fractions == (1, 1)
    with pytest.raises(HypothesisError):
        rosenbrock_converse((1, 6), (1, 2, 1), 2, 1)


def test_verify_values():
    rep = verify_rosenbrock(scalar_system())
    assert rep.match and rep.irreducible and rep.g == 1
    rep = verify_rosenbrock(six_by_six())
    assert not rep.irreducible and not rep.match and rep.consistent
    assert rep.computed_SP == (1, 1, 1, 3) == rep.predicted_SP
    assert rep.computed_SA != rep.predicted_SA


def test_reduce_values():
    res = reduce_system(scalar_system())
    assert res.E == Matrix.identity(ZZ, 1) and res.F == Matrix.identity(ZZ, 1)
    assert res.P0 == scalar_system()

    P = example_p(2)
    for order in ("ef", "fe"):
        res = reduce_system(P, order=order)
        units = [ZZ.is_unit(det(res.E)), ZZ.is_unit(det(res.F))]
        assert sorted(units) == [False, True]
        assert res.reassemble() == P.P
        assert is_irreducible(res.P0).irreducible

    P = example_p(6)
    res = reduce_system(P, left_factor=2)
    assert abs(det(res.E)) == 2 and abs(det(res.F)) == 3
    assert res.reassemble() == P.P and is_irreducible(res.P0).irreducible


def test_diagnose_values():
    d = diagnose_reducible(six_by_six())
    assert d.psi_tilde == (10, 2, 1) and d.psi == (2,)
    assert d["i"].holds and d["i"].evidence["ratios"] == [5, 2, 1]
    assert d["ii"].holds and d["ii"].evidence["quotient"] == 10
    assert d["iii"].holds and d["iv"].holds
    with pytest.raises(DomainError):
        diagnose_reducible(scalar_system())

    # square nonsingular G = 1/2 realized with an extra factor 3 in A
    P = SystemMatrix(Matrix(ZZ, [[6]]), Matrix(ZZ, [[3]]), Matrix(ZZ, [[1]]), Matrix(ZZ, [[0]]))
    d = diagnose_reducible(P)
    assert d["v"].holds
    assert d["v"].evidence["quotient_eps"] == d["v"].evidence["quotient_psi"] == 3

    real = minimal_realization(diag_sixth_four()).system
    E = Matrix.diag(ZZ, [2])
    P = SystemMatrix(E @ real.A, E @ real.B, real.C, real.D)
    d = diagnose_reducible(P)
    assert d["row"].holds and not ZZ.is_unit(d["row"].evidence["quotient_eps"])


def test_local_values():
    loc = local_zero_structure(scalar_system(), 5)
    assert loc.P_mults == loc.eps_mults == ()
    P = minimal_realization(diag_sixth_four()).system
    loc = local_zero_structure(P, 2)
    assert loc.P_mults == loc.eps_mults == (2,) and loc.match
    with pytest.raises(HypothesisError):
        local_zero_structure(six_by_six(), 5)
    with pytest.raises(RingMismatchError):
        local_zero_structure(minimal_realization(Matrix(RPR.field, [[RPR.field.one()]])).system,
                             RPR.one())


def test_realization_values():
    real = minimal_realization(Matrix(F, [[Frac(1, 6)]]))
    S = real.system
    assert (S.A, S.B, S.C, S.D) == (Matrix(ZZ, [[6]]), Matrix(ZZ, [[1]]),
                                   Matrix(ZZ, [[-1]]), Matrix(ZZ, [[0]]))
    assert S.transfer() == Matrix(F, [[Frac(1, 6)]])
    G = Matrix(F, [[F.coerce(2), F.coerce(3)]])
    real = minimal_realization(G)
    assert real.n == 0 and real.system.A.shape == (0, 0) and real.system.D.to_field() == G
    real = minimal_realization(diag_sixth_four())
    assert real.n == 1 and real.system.A == Matrix(ZZ, [[6]])
    assert real.system.transfer() == diag_sixth_four()
    assert real.left.coprime and real.right.coprime
    assert realization_dimension(G) == 0
    assert realization_dimension(diag_sixth_four()) == 1
    assert realization_dimension(Matrix(F, [[Frac(1, 2), 0], [0, Frac(1, 2)]])) == 2


# -- properties ---------------------------------------------------------------------------

@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_round_trip(R):
    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        G, eps, psi = rand_sm_instance(R, rng)
        real = minimal_realization(G)
        S = real.system
        assert S.transfer() == G
        assert real.left.coprime and real.right.coprime
        g = sum(1 for q in psi if not R.is_unit(q))
        assert real.n == g
        rep = verify_rosenbrock(S)
        assert rep.match and rep.irreducible
        assert smith(S.P).inv_factors == (R.one(),) * g + eps
        assert smith(S.A).inv_factors == tuple(reversed(psi[:g]))
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_lower_bound(R):
    @given(seeds, st.integers(1, 3), st.integers(0, 2), st.integers(0, 2))
    def check(seed, n, p, m):
        P = ring_system(R, random.Random(seed), n, p, m)
        rep = verify_rosenbrock(P)
        assert P.n >= realization_dimension(P.transfer())
        assert rep.consistent
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
@pytest.mark.parametrize("order", ["ef", "fe"])
def test_reduction_sound(R, order):
    @given(seeds, st.integers(1, 3), st.integers(0, 2), st.integers(0, 2))
    def check(seed, n, p, m):
        P = ring_system(R, random.Random(seed), n, p, m)
        res = reduce_system(P, order=order)
        P0 = res.P0
        assert res.reassemble() == P.P
        assert is_irreducible(P0).irreducible
        assert P0.transfer() == P.transfer()
        assert R.associates(det(res.E) * det(res.F) * det(P0.A), det(P.A))
        irr = is_irreducible(P)
        if irr.left.coprime and order == "ef":
            assert res.E == Matrix.identity(R, n)
        if not irr.left.coprime and order == "ef":
            assert not R.is_unit(det(res.E))
        if irr.right.coprime and order == "fe":
            assert res.F == Matrix.identity(R, n)
        if not irr.right.coprime and order == "fe":
            assert not R.is_unit(det(res.F))
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_diagnosis_on_corrupted(R):
    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        P0, _ = rand_irreducible(R, rng)
        P = corrupt(P0, rng)
        assert not is_irreducible(P).irreducible
        d = diagnose_reducible(P)
        for key in ("i", "ii", "iii", "iv"):
            assert d[key].holds, key
        for key in ("v", "row", "col"):
            assert d[key].holds in (True, None), key
    check()


def _right_coprime(R, n, p, rng):
    W = rand_unimodular(R, n + p, rng)
    return W.slice(0, n, 0, n), W.slice(n, n + p, 0, n)


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_coprime_fraction_smith_forms(R):
    @given(seeds, st.integers(1, 3), st.integers(1, 3))
    def check(seed, n, p):
        A, C = _right_coprime(R, n, p, random.Random(seed))
        assume(not R.is_zero(det(A)))
        sm = smith_mcmillan(C.to_field() @ inverse(A))
        assert smith(C).inv_factors == sm.eps
        g = sum(1 for q in sm.psi if not R.is_unit(q))
        assert smith(A).inv_factors == (R.one(),) * (n - g) + tuple(reversed(sm.psi[:g]))
    check()


@pytest.mark.parametrize("R", RING_LIST, ids=lambda R: R.name)
def test_ring_valued_products(R):
    @given(seeds, st.integers(1, 3), st.integers(1, 3), st.integers(1, 2))
    def check(seed, n, p, k):
        rng = random.Random(seed)
        A, C = _right_coprime(R, n, p, rng)
        assume(not R.is_zero(det(A)))
        Rm = C.to_field() @ inverse(A)
        X = rand_matrix(R, n, k, rng)
        Y = A @ X
        assert (Rm @ Y.to_field()).is_ring_valued()
        assert inverse(A) @ Y.to_field() == X.to_field()
        Y = rand_matrix(R, n, k, rng)
        assert (Rm @ Y.to_field()).is_ring_valued() == (inverse(A) @ Y.to_field()).is_ring_valued()
    check()


@pytest.mark.parametrize("R", [ZZ, QZ], ids=lambda R: R.name)
def test_local_structure_on_irreducible(R):
    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        P, _ = rand_irreducible(R, rng)
        for prime in _prime_pool(R):
            assert local_zero_structure(P, prime).match
    check()
