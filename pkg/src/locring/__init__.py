"""Constructive linear algebra over localizations of polynomial rings."""

from .arith import GF, QQ, DivisionByZeroError, extended_gcd
from .groebner import augmented_gb, buchberger, lift_along_syzygies, syzygies_of_rows
from .localization import (
    LocMatrix,
    MonicUnivariateInt,
    PrimeComplement,
    Zariskification,
    bl_lift_maximal,
    dom_with_cofactors,
    localization_problem,
    loc_is_zero,
    loc_lift,
    loc_lift_row,
    loc_syzygies,
    loc_weak_lift,
)
from .matrix import Matrix
from .polys import MonomialOrdering, PolyRing, parse_poly
from .rings import IdealSpec, QuotientRing, ring_lift, ring_membership, ring_syzygies
from .zt import ZT, ZPoly, strong_groebner_zt

__all__ = [
    "GF", "QQ", "DivisionByZeroError", "extended_gcd",
    "augmented_gb", "buchberger", "lift_along_syzygies", "syzygies_of_rows",
    "LocMatrix", "MonicUnivariateInt", "PrimeComplement", "Zariskification",
    "bl_lift_maximal", "dom_with_cofactors", "localization_problem", "loc_is_zero",
    "loc_lift", "loc_lift_row", "loc_syzygies", "loc_weak_lift",
    "Matrix", "MonomialOrdering", "PolyRing", "parse_poly",
    "IdealSpec", "QuotientRing", "ring_lift", "ring_membership", "ring_syzygies",
    "ZT", "ZPoly", "strong_groebner_zt",
]
