"""Linear systems over localizations S^-1 R of computable rings.

A row ``b`` lifts along ``A`` over S^-1 R exactly when the ideal

    dom(b, A) = {r in R : x A = r b for some x}

meets ``S``.  Generators of dom come from the syzygies of ``[b; A]``: each
syzygy row ``(r_i | L_i)`` satisfies ``r_i b + L_i A = 0``.  A combination
``s = sum(a_i r_i)`` lying in ``S`` yields the lift ``(-sum(a_i L_i)) / s``.
Deciding whether an ideal meets ``S`` (and producing the combination) is
the job of each multiplicative set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .matrix import Matrix, ShapeError
from .polys import Polynomial, RingMismatchError
from .rings import (
    IdealSpec,
    InvariantViolation,
    _check_matrix,
    ring_annihilator,
    ring_is_zero,
    ring_lift,
    ring_membership,
    ring_syzygies,
)
from .zt import ZT, IntPolyRing, monic_localization_problem


class NotALocalizedSyzygyError(ValueError):
    """``T * A`` does not vanish in the localization."""


@dataclass
class LocalizationWitness:
    """``element == sum(cofactors[i] * gens[i])`` and ``element`` lies in S."""

    cofactors: list
    element: object


# --------------------------------------------------------------------------
# multiplicative sets
# --------------------------------------------------------------------------

class MultiplicativeSet:
    ring = None
    preprocess_ms = 0.0

    def _own(self, s):
        base = self.ring.base
        if isinstance(s, Polynomial):
            if s.ring != base:
                raise RingMismatchError(f"{s.ring} does not match {self.ring}")
            return self.ring.reduce(s)
        return self.ring.reduce(base(s))

    def contains(self, s) -> bool:
        raise NotImplementedError

    def localization_problem(self, I: IdealSpec) -> LocalizationWitness | None:
        raise NotImplementedError


class PrimeComplement(MultiplicativeSet):
    """``S = R - p`` for a prime ideal ``p``.

    Primality is a precondition and is not checked: a non-prime ideal gives
    a set that need not be multiplicatively closed and the answers are
    meaningless.  The Gröbner basis of ``p`` is computed once here.
    """

    kind = "prime"

    def __init__(self, ring, gens):
        self.ring = ring
        start = time.perf_counter()
        self.prime = IdealSpec(ring, gens)
        self.prime.lifter()
        self.preprocess_ms = (time.perf_counter() - start) * 1000

    @property
    def gens(self):
        return self.prime.gens

    def contains(self, s) -> bool:
        return self.prime.membership(self._own(s)) is None

    def membership_certificate(self, f):
        """Cofactors expressing ``f`` in ``p``, or ``None`` if ``f`` lies in S."""
        return self.prime.membership(self._own(f))

    def localization_problem(self, I: IdealSpec) -> LocalizationWitness | None:
        # I meets R - p iff some generator lies outside p; the first one wins
        R = self.ring
        for i, f in enumerate(I.gens):
            if self.contains(f):
                cof = [R.base.zero] * len(I.gens)
                cof[i] = R.base.one
                return LocalizationWitness(cof, f)
        return None

    def __repr__(self):
        return f"PrimeComplement({[str(g) for g in self.gens]})"


class Zariskification(MultiplicativeSet):
    """``S = 1 + L`` for an ideal ``L``."""

    kind = "zariski"

    def __init__(self, ring, gens):
        self.ring = ring
        start = time.perf_counter()
        self.ideal = IdealSpec(ring, gens)
        self.ideal.lifter()
        self.preprocess_ms = (time.perf_counter() - start) * 1000

    @property
    def gens(self):
        return self.ideal.gens

    def contains(self, s) -> bool:
        s = self._own(s)
        return self.ideal.membership(s - self.ring.base.one) is not None

    def localization_problem(self, I: IdealSpec) -> LocalizationWitness | None:
        # I meets 1 + L iff 1 = sum(r_i h_i) + sum(r'_i f_i)
        R = self.ring
        h = list(self.ideal.gens)
        combined = IdealSpec(R, h + list(I.gens))
        cof = ring_membership(R, R.base.one, combined)
        if cof is None:
            return None
        fcof = cof[len(h):]
        element = R.base.zero
        for a, f in zip(fcof, I.gens):
            element = element + a * f
        element = R.reduce(element)
        if not self.contains(element):
            raise InvariantViolation("Zariski witness is not in 1 + L")
        return LocalizationWitness(list(fcof), element)

    def __repr__(self):
        return f"Zariskification({[str(g) for g in self.gens]})"


class MonicUnivariateInt(MultiplicativeSet):
    """Monic polynomials of Z[t]."""

    kind = "monic"

    def __init__(self, ring: IntPolyRing = ZT):
        self.ring = ring

    def contains(self, s) -> bool:
        s = self.ring(s)
        return s.is_monic()

    def localization_problem(self, I) -> LocalizationWitness | None:
        gens = [self.ring(g) for g in I.gens]
        out = monic_localization_problem(gens)
        if out is None:
            return None
        cof, witness = out
        return LocalizationWitness(cof, witness)

    def __repr__(self):
        return "MonicUnivariateInt()"


@dataclass
class IntIdeal:
    """Ideal of Z[t] given by generators (the ZPoly counterpart of IdealSpec)."""

    gens: list
    ring: IntPolyRing = ZT


def s_contains(S: MultiplicativeSet, s) -> bool:
    return S.contains(s)


def localization_problem(S: MultiplicativeSet, I) -> LocalizationWitness | None:
    """Decide whether ``I`` meets ``S`` and return a witness combination."""
    if isinstance(S, MonicUnivariateInt):
        if not isinstance(I, IntIdeal):
            I = IntIdeal([S.ring(g) for g in I])
        return S.localization_problem(I)
    if not isinstance(I, IdealSpec):
        I = IdealSpec(S.ring, list(I))
    elif I.ring != S.ring:
        raise RingMismatchError(f"ideal over {I.ring}, set over {S.ring}")
    w = S.localization_problem(I)
    if w is not None:
        total = S.ring.base.zero
        for a, f in zip(w.cofactors, I.gens):
            total = total + a * f
        if S.ring.reduce(total) != w.element or not S.contains(w.element):
            raise InvariantViolation("localization witness failed to verify")
    return w


# --------------------------------------------------------------------------
# localized matrices
# --------------------------------------------------------------------------

class LocMatrix:
    """The matrix ``numerator / denominator`` over S^-1 R (one common denominator)."""

    __slots__ = ("numerator", "denominator", "set")

    def __init__(self, numerator: Matrix, denominator, S: MultiplicativeSet):
        numerator = _check_matrix(S.ring, numerator)
        d = S._own(denominator)
        if not S.contains(d):
            raise ValueError(f"denominator {d} is not in {S!r}")
        self.numerator = numerator
        self.denominator = d
        self.set = S

    @classmethod
    def from_ring(cls, A: Matrix, S: MultiplicativeSet) -> LocMatrix:
        return cls(A, S.ring.base.one, S)

    @property
    def shape(self):
        return self.numerator.shape

    @property
    def ring(self):
        return self.set.ring

    def __matmul__(self, other: LocMatrix) -> LocMatrix:
        return LocMatrix(
            self.numerator @ other.numerator, self.denominator * other.denominator, self.set
        )

    def __sub__(self, other: LocMatrix) -> LocMatrix:
        num = self.numerator.scale(other.denominator) - other.numerator.scale(self.denominator)
        return LocMatrix(num, self.denominator * other.denominator, self.set)

    def is_zero(self) -> bool:
        return all(loc_is_zero(self.ring, self.set, f) for f in self.numerator.entries())

    def equals(self, other: LocMatrix) -> bool:
        """Equality in S^-1 R, which respects S-torsion."""
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    def to_strings(self):
        return {"numerator": self.numerator.to_strings(), "denominator": str(self.denominator)}

    def __repr__(self):
        return f"LocMatrix({self.numerator.to_strings()} / {self.denominator})"


# --------------------------------------------------------------------------
# dom ideal and lifts
# --------------------------------------------------------------------------

@dataclass
class DomGenerator:
    """Generator ``r`` of dom(b, A) with ``r * b + L @ A == 0``."""

    r: Polynomial
    L: tuple


def dom_with_cofactors(R, A: Matrix, b) -> list[DomGenerator]:
    A = _check_matrix(R, A)
    b = [R.reduce(R.base(f)) for f in b]
    if len(b) != A.ncols:
        raise ShapeError(f"row of length {len(b)} against {A.shape}")
    stacked = Matrix._raw(R, [tuple(b)], A.ncols).vstack(A)
    L = ring_syzygies(R, stacked)
    gens = []
    for row in L.rows:
        r, rest = row[0], row[1:]
        if r:
            # scale by a unit so that r is monic
            inv = 1 / r.leading_coefficient()
            r, rest = r.scale(inv), [f.scale(inv) for f in rest]
        gens.append(DomGenerator(r, tuple(rest)))
    for g in gens:
        resid = [g.r * f for f in b]
        for l, arow in zip(g.L, A.rows):
            resid = [x + l * y for x, y in zip(resid, arow)]
        if any(R.reduce(x) for x in resid):
            raise InvariantViolation("dom generator fails r*b + L*A == 0")
    return gens


@dataclass
class RowSolution:
    """Outcome of one localized row lift, with everything needed to certify it."""

    dom: list
    witness: LocalizationWitness | None
    solution: LocMatrix | None
    timings: dict = field(default_factory=dict)


def solve_row(R, S: MultiplicativeSet, A: Matrix, b) -> RowSolution:
    A = _check_matrix(R, A)
    t0 = time.perf_counter()
    dom = dom_with_cofactors(R, A, b)
    t1 = time.perf_counter()
    witness = localization_problem(S, IdealSpec(R, [g.r for g in dom]))
    t2 = time.perf_counter()
    timings = {"syzygy": (t1 - t0) * 1000, "localization": (t2 - t1) * 1000}
    if witness is None:
        return RowSolution(dom, None, None, timings)
    P = R.base
    num = [P.zero] * A.nrows
    for a, g in zip(witness.cofactors, dom):
        if a:
            num = [x - a * l for x, l in zip(num, g.L)]
    # the denominator is kept as sum(a_i r_i), which lies in S; the sign
    # goes into the numerator because S need not be closed under negation
    sol = LocMatrix(Matrix._raw(R, [tuple(R.reduce(x) for x in num)], A.nrows),
                    witness.element, S)
    resid = sol.numerator @ A - Matrix.row(R, b).scale(sol.denominator)
    if not all(loc_is_zero(R, S, f) for f in resid.entries()):
        raise InvariantViolation("localized lift failed its residual check")
    return RowSolution(dom, witness, sol, timings)


def loc_lift_row(R, S: MultiplicativeSet, A: Matrix, b) -> LocMatrix | None:
    """A row ``x`` over S^-1 R with ``x @ (A/1) == b/1``, or ``None``."""
    return solve_row(R, S, A, b).solution


def loc_lift_detailed(R, S: MultiplicativeSet, A: LocMatrix, B: LocMatrix):
    """Like :func:`loc_lift` but also returns the per-row :class:`RowSolution`s.

    Solving stops at the first row without a lift.
    """
    if A.numerator.ncols != B.numerator.ncols:
        raise ShapeError(f"cannot lift {B.shape} along {A.shape}")
    m = A.numerator.nrows
    P = R.base
    solved = []
    for brow in B.numerator.rows:
        rs = solve_row(R, S, A.numerator, brow)
        solved.append(rs)
        if rs.solution is None:
            return None, solved
    # row i lifts B_num/1 along A_num/1 as Y_i/e_i; then
    # X/d . A_num/d_A = B_num/d_B  with  X = d_A * Y  and  d = (prod e_i) * d_B
    dens = [rs.solution.denominator for rs in solved]
    common = P.one
    for d in dens:
        common = common * d
    out = []
    for i, rs in enumerate(solved):
        factor = A.denominator
        for j, d in enumerate(dens):
            if j != i:
                factor = factor * d
        out.append(tuple(factor * f for f in rs.solution.numerator.rows[0]))
    X = LocMatrix(Matrix(R, out, m), common * B.denominator, S)
    if not (X @ A).equals(B):
        raise InvariantViolation("localized lift failed its residual check")
    return X, solved


def loc_lift(R, S: MultiplicativeSet, A: LocMatrix, B: LocMatrix) -> LocMatrix | None:
    """``X`` with ``X @ A == B`` over S^-1 R, or ``None``."""
    return loc_lift_detailed(R, S, A, B)[0]


def loc_syzygies(R, S: MultiplicativeSet, A: LocMatrix) -> LocMatrix:
    """Row syzygies over S^-1 R: those of the numerator, over denominator 1."""
    return LocMatrix.from_ring(ring_syzygies(R, A.numerator), S)


def loc_is_zero(R, S: MultiplicativeSet, f) -> bool:
    """Whether ``f/1`` vanishes in S^-1 R, i.e. ``s f = 0`` for some ``s`` in S."""
    if ring_is_zero(R, f):
        return True
    return localization_problem(S, ring_annihilator(R, [f])) is not None


def loc_weak_lift(R, S: MultiplicativeSet, T: LocMatrix, A: Matrix, L: Matrix) -> LocMatrix:
    """``U`` with ``U @ (L/1) == T`` for a localized syzygy ``T`` of ``A``.

    ``s`` in S with ``s T A = 0`` over R comes from the annihilator of the
    entries of ``T A``; then ``s T`` factors through ``L`` over R.
    """
    A = _check_matrix(R, A)
    L = _check_matrix(R, L)
    resid = T.numerator @ A
    witness = localization_problem(S, ring_annihilator(R, resid.flatten()))
    if witness is None:
        raise NotALocalizedSyzygyError("T @ A is not zero in the localization")
    s = witness.element
    sT = T.numerator.scale(s)
    U = ring_lift(R, L, sT)
    if U is None:
        raise InvariantViolation("s*T does not factor through L; is L universal?")
    return LocMatrix(U, T.denominator * s, S)


def bl_lift_maximal(R, mgens, A: Matrix, b, S: PrimeComplement | None = None) -> LocMatrix | None:
    """Solve ``x @ (A/1) = b/1`` over R localized at a maximal ideal ``m``.

    Solves ``X @ [A; m_1 b; ...; m_l b] = -b`` over R.  For ``X = (X1 | X2)``
    the row ``-X1 / (1 + X2 . m)`` is a lift and its denominator lies in
    ``1 + m``.  Maximality of ``m`` is a precondition, not checked.
    """
    A = _check_matrix(R, A)
    if S is None:
        S = PrimeComplement(R, mgens)
    mg = list(S.gens) if mgens is None else [R.reduce(R.base(g)) for g in mgens]
    b = [R.reduce(R.base(f)) for f in b]
    m = A.nrows
    extra = Matrix._raw(R, [tuple(R.reduce(g * f) for f in b) for g in mg], A.ncols)
    stacked = A.vstack(extra)
    X = ring_lift(R, stacked, Matrix.row(R, [-f for f in b]))
    if X is None:
        return None
    x = X.rows[0]
    u = R.base.one
    for c, g in zip(x[m:], mg):
        u = u + c * g
    sol = LocMatrix(Matrix._raw(R, [tuple(-f for f in x[:m])], m), R.reduce(u), S)
    resid = sol.numerator @ A - Matrix.row(R, b).scale(sol.denominator)
    if not all(loc_is_zero(R, S, f) for f in resid.entries()):
        raise InvariantViolation("BL lift failed its residual check")
    return sol
