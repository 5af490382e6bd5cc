import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locring.localization import (
    IntIdeal,
    LocMatrix,
    MonicUnivariateInt,
    NotALocalizedSyzygyError,
    PrimeComplement,
    Zariskification,
    bl_lift_maximal,
    dom_with_cofactors,
    loc_is_zero,
    loc_lift,
    loc_lift_row,
    loc_syzygies,
    loc_weak_lift,
    localization_problem,
    s_contains,
    solve_row,
)
from locring.matrix import Matrix
from locring.polys import PolyRing, RingMismatchError
from locring.rings import IdealSpec, QuotientRing, ring_membership, ring_syzygies
from locring.zt import ZT

from helpers import random_matrix, random_poly

Qx = PolyRing("QQ", ["x"])
(X,) = Qx.gens()
Qxy = PolyRing("QQ", ["x", "y"])
x, y = Qxy.gens()
Q = QuotientRing(Qxy, [x * y])


def lifts(R, S, A, b, sol):
    """Residual check done independently of the solver."""
    resid = sol.numerator @ A - Matrix.row(R, b).scale(sol.denominator)
    return s_contains(S, sol.denominator) and all(loc_is_zero(R, S, f) for f in resid.entries())


# -- multiplicative sets -------------------------------------------------------

def test_s_contains_examples():
    assert s_contains(PrimeComplement(Qxy, [x]), y)
    assert s_contains(Zariskification(Qx, [X]), 1 - X)
    assert not s_contains(MonicUnivariateInt(), ZT.parse("2*t + 1"))
    assert not s_contains(PrimeComplement(Qxy, [x]), x * y)
    assert not s_contains(Zariskification(Qx, [X]), X)


def test_s_contains_ring_mismatch():
    S = PrimeComplement(Qxy, [x])
    with pytest.raises(RingMismatchError):
        S.contains(X)


def test_localization_problem_examples():
    w = localization_problem(PrimeComplement(Qxy, [x]), [x**2, y])
    assert w.cofactors == [0, 1] and w.element == y
    assert localization_problem(PrimeComplement(Qx, [X]), [X**2, X**3]) is None
    w = localization_problem(Zariskification(Qx, [X]), [1 - X])
    assert w.cofactors == [1] and w.element == 1 - X


def test_monic_localization_problem():
    S = MonicUnivariateInt()
    w = localization_problem(S, IntIdeal([ZT.parse("2"), ZT.parse("t^2")]))
    assert w.element == ZT.parse("t^2")
    assert localization_problem(S, [ZT.parse("2*t + 1")]) is None


def test_zariski_refusal():
    # 1 + <x> meets <x> only if 1 is in <x>
    assert localization_problem(Zariskification(Qx, [X]), [X**2]) is None


# -- dom ideal -----------------------------------------------------------------

def test_dom_examples():
    A = Matrix(Qx, [[X]])
    gens = dom_with_cofactors(Qx, A, [Qx.one])
    assert [(g.r, g.L) for g in gens] == [(X, (-Qx.one,))]
    gens = dom_with_cofactors(Qx, A, [X**2])
    assert [(g.r, g.L) for g in gens] == [(Qx.one, (-X,))]
    gens = dom_with_cofactors(Qx, A, [Qx.zero])
    assert any(g.r == Qx.one for g in gens)


def test_dom_in_quotient_ring():
    gens = dom_with_cofactors(Q, Matrix(Q, [[x]]), [Qxy.one])
    ideal = IdealSpec(Q, [g.r for g in gens])
    assert x in ideal and Qxy.one not in ideal


# -- lifts -----------------------------------------------------------------------

def test_loc_lift_row_examples():
    S = PrimeComplement(Qx, [X])
    sol = loc_lift_row(Qx, S, Matrix(Qx, [[1 + X]]), [Qx.one])
    assert sol.numerator.to_strings() == [["1"]] and sol.denominator == X + 1
    assert loc_lift_row(Qx, S, Matrix(Qx, [[X]]), [Qx.one]) is None
    sol = loc_lift_row(Qx, S, Matrix(Qx, [[X]]), [X**2])
    assert sol.numerator.to_strings() == [["x"]] and sol.denominator == Qx.one


def test_refusal_certificate():
    S = PrimeComplement(Qx, [X])
    res = solve_row(Qx, S, Matrix(Qx, [[X]]), [Qx.one])
    assert res.solution is None
    for g in res.dom:
        assert ring_membership(Qx, g.r, S.prime) is not None


def test_loc_lift_examples():
    S = PrimeComplement(Qxy, [x, y])
    A = LocMatrix.from_ring(Matrix(Qxy, [[1 + x], [y]]), S)
    B = LocMatrix.from_ring(Matrix(Qxy, [[1]]), S)
    sol = loc_lift(Qxy, S, A, B)
    assert sol.shape == (1, 2) and (sol @ A).equals(B)
    Z = LocMatrix.from_ring(Matrix.zero(Qxy, 0, 1), S)
    assert loc_lift(Qxy, S, A, Z).shape == (0, 2)
    sq = LocMatrix(Matrix(Qxy, [[1 + x, y], [x, 2]]), 1 + y, S)
    sol = loc_lift(Qxy, S, sq, sq)
    assert (sol @ sq).equals(sq)


def test_loc_lift_with_denominators():
    S = PrimeComplement(Qxy, [x, y])
    A = LocMatrix(Matrix(Qxy, [[x + 1, y]]), 2 + y, S)
    B = LocMatrix(Matrix(Qxy, [[x**2 + x, x * y]]), 1 - x, S)
    sol = loc_lift(Qxy, S, A, B)
    assert sol is not None and (sol @ A).equals(B)


def test_loc_matrix_rejects_denominator_outside_set():
    S = PrimeComplement(Qx, [X])
    with pytest.raises(ValueError):
        LocMatrix(Matrix(Qx, [[1]]), X, S)


# -- syzygies, zero tests, weak lifts --------------------------------------------

def test_loc_syzygies_examples():
    S = PrimeComplement(Qxy, [x, y])
    L = loc_syzygies(Qxy, S, LocMatrix.from_ring(Matrix(Qxy, [[x], [y]]), S))
    a, b = L.numerator.rows[0]
    assert L.denominator == Qxy.one and (a * x + b * y).is_zero() and a.monic() == y
    L = loc_syzygies(Qxy, S, LocMatrix(Matrix.identity(Qxy, 2), 1 + x, S))
    assert L.shape == (0, 2)
    L = loc_syzygies(Qxy, S, LocMatrix.from_ring(Matrix(Qxy, [[0]]), S))
    assert L.numerator.to_strings() == [["1"]]


def test_loc_is_zero_examples():
    assert loc_is_zero(Q, PrimeComplement(Q, [x]), x)
    assert not loc_is_zero(Qx, PrimeComplement(Qx, [X]), X)
    assert loc_is_zero(Qx, PrimeComplement(Qx, [X]), 0)
    # y is in the prime, so the torsion of x is not killed there
    assert not loc_is_zero(Q, PrimeComplement(Q, [y]), x)


def test_weak_lift_domain_case():
    S = PrimeComplement(Qxy, [x, y])
    A = Matrix(Qxy, [[x], [y]])
    L = Matrix(Qxy, [[y, -x]])
    U = loc_weak_lift(Qxy, S, LocMatrix.from_ring(L, S), A, L)
    assert U.numerator.to_strings() == [["1"]] and U.denominator == Qxy.one


def test_weak_lift_torsion_case():
    S = PrimeComplement(Q, [x])
    A = Matrix(Q, [[x]])
    L = Matrix(Q, [[y]])
    U = loc_weak_lift(Q, S, LocMatrix.from_ring(Matrix(Q, [[x]]), S), A, L)
    assert U.numerator.to_strings() == [["0"]] and U.denominator == y
    T = LocMatrix.from_ring(Matrix(Q, [[x]]), S)
    assert (U @ LocMatrix.from_ring(L, S)).equals(T)


def test_weak_lift_zero_and_error():
    S = PrimeComplement(Qxy, [x, y])
    A = Matrix(Qxy, [[x], [y]])
    L = ring_syzygies(Qxy, A)
    U = loc_weak_lift(Qxy, S, LocMatrix.from_ring(Matrix.zero(Qxy, 1, 2), S), A, L)
    assert U.numerator.is_zero()
    with pytest.raises(NotALocalizedSyzygyError):
        loc_weak_lift(Qxy, S, LocMatrix.from_ring(Matrix(Qxy, [[1, 0]]), S), A, L)


# -- the BL method -----------------------------------------------------------------

def test_bl_examples():
    m = [x, y]
    sol = bl_lift_maximal(Qxy, m, Matrix(Qxy, [[1 + x]]), [Qxy.one])
    assert sol.numerator.to_strings() == [["1"]] and sol.denominator == 1 + x
    assert bl_lift_maximal(Qxy, m, Matrix(Qxy, [[x]]), [Qxy.one]) is None
    sol = bl_lift_maximal(Qxy, m, Matrix(Qxy, [[x]]), [Qxy.zero])
    assert sol.numerator.is_zero() and sol.denominator == Qxy.one


# -- properties ----------------------------------------------------------------------

seeds = st.integers(0, 10**6)


def test_unit_characterization():
    rng = random.Random(11)
    S = PrimeComplement(Qxy, [x, y - 1])
    for _ in range(100):
        f = random_poly(Qxy, rng, 2)
        if rng.random() < 0.3:
            f = f * x
        sol = loc_lift_row(Qxy, S, Matrix(Qxy, [[f]]), [Qxy.one])
        assert (sol is not None) == s_contains(S, f)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_lift_soundness_and_refusal(seed):
    rng = random.Random(seed)
    S = PrimeComplement(Qxy, [x])
    A = random_matrix(Qxy, rng, rng.randint(1, 2), rng.randint(1, 2), 2)
    b = [random_poly(Qxy, rng, 2) for _ in range(A.ncols)]
    res = solve_row(Qxy, S, A, b)
    for g in res.dom:
        resid = [g.r * f for f in b]
        for c, row in zip(g.L, A.rows):
            resid = [u + c * v for u, v in zip(resid, row)]
        assert all(not f for f in resid)
    if res.solution is None:
        assert all(S.membership_certificate(g.r) is not None for g in res.dom)
    else:
        assert lifts(Qxy, S, A, b, res.solution)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_localized_round_trip(seed):
    rng = random.Random(seed)
    R = [Qxy, Q][seed % 2]
    S = [PrimeComplement(R, [x, y]), Zariskification(R, [x - y])][seed // 2 % 2]
    A = random_matrix(R, rng, rng.randint(1, 2), rng.randint(1, 2), 2)
    Xm = random_matrix(R, rng, rng.randint(1, 2), A.nrows, 1)
    B = LocMatrix.from_ring(Xm @ A, S)
    Aloc = LocMatrix.from_ring(A, S)
    sol = loc_lift(R, S, Aloc, B)
    assert sol is not None and (sol @ Aloc).equals(B)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_method_agreement(seed):
    rng = random.Random(seed)
    S = PrimeComplement(Qxy, [x, y])
    A = random_matrix(Qxy, rng, rng.randint(1, 2), rng.randint(1, 2), 2)
    b = [random_poly(Qxy, rng, 2) for _ in range(A.ncols)]
    dom = loc_lift_row(Qxy, S, A, b)
    bl = bl_lift_maximal(Qxy, [x, y], A, b, S)
    assert (dom is None) == (bl is None)
    for sol in (dom, bl):
        if sol is not None:
            assert lifts(Qxy, S, A, b, sol)
