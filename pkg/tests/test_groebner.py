import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locring.groebner import (
    NotASyzygyError,
    augmented_gb,
    buchberger,
    ideal_basis,
    lift_along_syzygies,
    lift_row,
    normal_form_with_cofactors,
    syzygies_of_rows,
)
from locring.matrix import Matrix
from locring.polys import ModuleOrdering, MonomialOrdering, PolyRing

from helpers import random_matrix, random_poly

Qx = PolyRing("QQ", ["x"])
Qxy = PolyRing("QQ", ["x", "y"], "lex")
x, y = Qxy.gens()
LEX1 = ModuleOrdering(MonomialOrdering("lex"), 1)


def row_combination(cof, G):
    width = len(G[0])
    out = [G[0][0].ring.zero] * width
    for c, g in zip(cof, G):
        out = [a + c * b for a, b in zip(out, g)]
    return out


def test_normal_form_examples():
    X = Qx.gens()[0]
    rem, cof = normal_form_with_cofactors([X**2], [[X]], LEX1)
    assert rem == [Qx.zero] and cof == [X]
    rem, cof = normal_form_with_cofactors([X + 1], [[X]], LEX1)
    assert rem == [Qx(1)] and cof == [Qx(1)]
    rem, cof = normal_form_with_cofactors([x * y], [[x - y]], LEX1)
    assert rem == [y**2] and cof == [y]


def test_buchberger_examples():
    X = Qx.gens()[0]
    assert buchberger([[X]], LEX1) == [[X]]
    gb = buchberger([[x - y], [x]], LEX1)
    assert sorted(str(g[0]) for g in gb) == ["x", "y"]
    assert buchberger([], LEX1) == []


def test_koszul_syzygy():
    A = Matrix(Qxy, [[x], [y]])
    L, _ = syzygies_of_rows(A)
    assert L.nrows == 1
    a, b = L.rows[0]
    # up to a unit
    c = a.leading_coefficient()
    assert (a.scale(1 / c), b.scale(1 / c)) == (y, -x)
    assert (L @ A).is_zero()


def test_identity_and_zero_syzygies():
    L, _ = syzygies_of_rows(Matrix.identity(Qxy, 2))
    assert L.shape == (0, 2)
    L, _ = syzygies_of_rows(Matrix(Qxy, [[0]]))
    assert L.to_strings() == [["1"]]


def test_empty_shapes():
    L, _ = syzygies_of_rows(Matrix.zero(Qxy, 0, 3))
    assert L.shape == (0, 0)
    L, _ = syzygies_of_rows(Matrix.zero(Qxy, 2, 0))
    assert sorted(map(tuple, L.to_strings())) == [("0", "1"), ("1", "0")]


def test_lift_along_syzygies_examples():
    A = Matrix(Qxy, [[x], [y]])
    L, aug = syzygies_of_rows(A)
    sign = L.rows[0][0].leading_coefficient()
    T = Matrix(Qxy, [[y, -x]])
    U = lift_along_syzygies(aug, T)
    assert U @ L == T and U.rows[0][0] == Qxy(1 / sign)
    T = Matrix(Qxy, [[x * y, -(x**2)]])
    assert lift_along_syzygies(aug, T) @ L == T
    with pytest.raises(NotASyzygyError):
        lift_along_syzygies(aug, Matrix(Qxy, [[1, 0]]))


def test_lift_row_examples():
    X = Qx.gens()[0]
    aug = augmented_gb(Matrix(Qx, [[X]]))
    assert lift_row(aug, [X**2]) == [X]
    assert lift_row(aug, [Qx(1)]) is None
    f, g = x**2 + 3, x * y - 1
    aug = augmented_gb(Matrix.identity(Qxy, 2))
    assert lift_row(aug, [f, g]) == [f, g]


def test_augmented_rows_track_combinations():
    rng = random.Random(7)
    A = random_matrix(Qxy, rng, 3, 2, 2)
    aug = augmented_gb(A)
    n = A.ncols
    for row in aug.rows:
        left, right = row[:n], row[n:]
        assert list((Matrix(Qxy, [right], A.nrows) @ A).rows[0]) == left


# -- properties --------------------------------------------------------------

seeds = st.integers(0, 10**6)


@settings(max_examples=500, deadline=None)
@given(seeds)
def test_normal_form_contract(seed):
    rng = random.Random(seed)
    P = PolyRing("QQ", ["x", "y"], rng.choice(["lex", "degrevlex"]))
    width = rng.randint(1, 2)
    order = ModuleOrdering(P.order, width)
    G = [[random_poly(P, rng, 2) for _ in range(width)] for _ in range(rng.randint(1, 3))]
    v = [random_poly(P, rng, 3) for _ in range(width)]
    rem, cof = normal_form_with_cofactors(v, G, order, P)
    combo = row_combination(cof, G) if G else [P.zero] * width
    assert [a + b for a, b in zip(combo, rem)] == v
    for comp, f in enumerate(rem):
        for e in f.terms:
            for g in G:
                if not any(g):
                    continue
                gc, ge = max(((c, f2.leading_monomial()) for c, f2 in enumerate(g) if f2),
                             key=lambda t: order.key(*t))
                assert not (gc == comp and all(a >= b for a, b in zip(e, ge)))


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_buchberger_confluence(seed):
    rng = random.Random(seed)
    P = PolyRing("QQ", ["x", "y", "z"], rng.choice(["lex", "degrevlex"]))
    gens = [random_poly(P, rng, 2) for _ in range(rng.randint(1, 3))]
    gb = ideal_basis(gens, P)
    order = ModuleOrdering(P.order, 1)
    G = [[g] for g in gb]
    for f in gens:
        rem, _ = normal_form_with_cofactors([f], G, order, P) if G else ([f], [])
        assert not rem[0]
    for g in gb:
        assert g.leading_coefficient() == 1


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_syzygy_soundness_and_completeness(seed):
    rng = random.Random(seed)
    A = random_matrix(Qxy, rng, rng.randint(1, 3), rng.randint(1, 3), 2)
    L, aug = syzygies_of_rows(A)
    assert (L @ A).is_zero()
    if L.nrows == 0:
        return
    U = random_matrix(Qxy, rng, 2, L.nrows, 1)
    T = U @ L
    U2 = lift_along_syzygies(aug, T)
    assert U2 @ L == T


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_lift_row_round_trip(seed):
    rng = random.Random(seed)
    A = random_matrix(Qxy, rng, rng.randint(1, 3), rng.randint(1, 3), 2)
    X = random_matrix(Qxy, rng, 1, A.nrows, 2)
    b = (X @ A).rows[0]
    aug = augmented_gb(A)
    x_ = lift_row(aug, b)
    assert x_ is not None
    assert (Matrix(Qxy, [x_], A.nrows) @ A).rows[0] == b
