from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locring.arith import GF
from locring.polys import (
    ModuleOrdering,
    MonomialOrdering,
    NoLeadingTermError,
    ParseError,
    PolyRing,
    RingMismatchError,
    block_priority,
    cmp_monomials,
    format_poly,
    parse_poly,
)

R = PolyRing("QQ", ["x", "y"], "lex")
x, y = R.gens()

ORDERINGS = [
    MonomialOrdering("lex"),
    MonomialOrdering("degrevlex"),
    MonomialOrdering("block", split=1),
    MonomialOrdering("block", split=2, inner="lex"),
]


def test_lex_and_degrevlex_examples():
    assert cmp_monomials((1, 0), (0, 2), "lex") == 1
    assert cmp_monomials((1, 1), (2, 0), "degrevlex") == -1
    for order in ORDERINGS:
        assert cmp_monomials((2, 1), (2, 1), order) == 0


def test_compare_length_mismatch():
    with pytest.raises(ValueError):
        cmp_monomials((1, 0), (1, 0, 0), "lex")


def test_local_orderings_rejected():
    with pytest.raises(ValueError, match="global"):
        MonomialOrdering("neglex")


def test_block_ordering_eliminates_first_block():
    order = MonomialOrdering("block", split=1)
    # x beats any power of y
    assert order.compare((1, 0, 0), (0, 9, 9)) == 1
    assert order.compare((1, 2, 0), (1, 0, 1)) == 1


def test_basic_arithmetic():
    assert (x + 1) * (x - 1) == x**2 - 1
    f = x * y - 3
    assert (f + (-f)).is_zero()
    assert (f + (-f)).terms == {}
    assert (x + y) ** 2 == x**2 + 2 * x * y + y**2


def test_ring_mismatch():
    S = PolyRing("QQ", ["x", "z"], "lex")
    with pytest.raises(RingMismatchError):
        x + S.gens()[0]


def test_leading_term():
    lt = (3 * x * y**2 + x**2 - 5).leading_term()
    assert lt.monomial == (2, 0) and lt.coeff == 1
    assert R(5).leading_term().coeff == 5
    with pytest.raises(NoLeadingTermError):
        R.zero.leading_term()


def test_parse_examples():
    P = PolyRing("QQ", ["x", "y"])
    f = P.parse("x^2*y - 3/2")
    assert f.terms == {(2, 1): 1, (0, 0): Fraction(-3, 2)}
    assert P.parse("0").is_zero()
    with pytest.raises(ParseError) as err:
        P.parse("x + z")
    assert err.value.kind == "unknown-variable"
    assert err.value.offset == 4


def test_parse_syntax_error_offset():
    with pytest.raises(ParseError) as err:
        R.parse("x^")
    assert err.value.offset == 2
    with pytest.raises(ParseError):
        R.parse("x + * y")


def test_parse_coefficient_outside_field():
    F = PolyRing(GF(5), ["x"])
    with pytest.raises(ParseError) as err:
        F.parse("1/5*x")
    assert err.value.kind == "coefficient"
    assert F.parse("3*x + 7") == F.parse("3*x + 2")


def test_parse_whitespace_and_leading_sign():
    assert R.parse("  - x ^ 2 * y  +3 ") == -(x**2) * y + 3


def test_module_ordering_position_over_term():
    order = ModuleOrdering(MonomialOrdering("degrevlex"), 2)
    # component 0 beats component 1 regardless of the monomial
    assert order.key(0, (0, 0)) > order.key(1, (5, 5))
    prio = block_priority(MonomialOrdering("lex"), 1, 2)
    assert prio.key(0, (0, 0)) > prio.key(1, (9, 9)) > prio.key(2, (9, 9))


# -- properties --------------------------------------------------------------

def polys(ring, max_deg=3, max_terms=4):
    n = len(ring.names)
    mono = st.tuples(*[st.integers(0, max_deg)] * n)
    coeff = st.fractions(min_value=-20, max_value=20, max_denominator=6)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(ring.from_dict)


P3 = PolyRing("QQ", ["x", "y", "z"])


@settings(max_examples=500, deadline=None)
@given(polys(P3), polys(P3), polys(P3))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == P3.zero


monomials = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))


@settings(max_examples=1000)
@given(monomials, monomials, monomials)
def test_orderings_multiplicative_and_global(u, v, w):
    for order in ORDERINGS:
        uw = tuple(a + b for a, b in zip(u, w))
        vw = tuple(a + b for a, b in zip(v, w))
        if order.compare(u, v) < 0:
            assert order.compare(uw, vw) < 0
        assert order.compare((0, 0, 0), u) <= 0


@settings(max_examples=500, deadline=None)
@given(polys(P3))
def test_parse_format_round_trip(p):
    assert parse_poly(format_poly(p), P3) == p


def test_sorted_terms_descending():
    f = R.parse("y^3 + x*y + x^2 + 1")
    monos = [t.monomial for t in f.sorted_terms()]
    assert monos == [(2, 0), (1, 1), (0, 3), (0, 0)]
