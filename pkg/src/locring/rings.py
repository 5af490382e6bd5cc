"""Computable rings: polynomial rings and their quotients by ideals.

Both kinds of ring handle expose ``base`` (the ambient :class:`PolyRing`)
and ``reduce`` (normal-form representative).  Syzygies and lifts over a
quotient ``P/I`` are computed over ``P`` after stacking the relation rows
``f * e_j`` for every generator ``f`` of ``I`` and every column ``j``.
"""

from __future__ import annotations

from .groebner import (
    _Basis,
    _reduce,
    augmented_gb,
    ideal_basis,
    lift_row,
    row_to_vec,
    vec_to_row,
)
from .matrix import Matrix, ShapeError
from .polys import ModuleOrdering, Polynomial, PolyRing, RingMismatchError


class InvariantViolation(RuntimeError):
    """An internal certificate failed to verify."""


class QuotientRing:
    """``base / <ideal>``; elements are represented by normal forms."""

    def __init__(self, base: PolyRing, ideal):
        if not isinstance(base, PolyRing):
            raise TypeError("quotients are taken of polynomial rings")
        gens = [base(f) for f in ideal]
        self.base = base
        self.ideal_gens = tuple(gens)
        self.gb = tuple(ideal_basis(gens, base)) if gens else ()
        self._nf = _Basis(ModuleOrdering(base.order, 1))
        for g in self.gb:
            self._nf.add(row_to_vec([g]))

    @property
    def field(self):
        return self.base.field

    @property
    def names(self):
        return self.base.names

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.gb or not f:
            return f
        rem, _ = _reduce({(0, e): a for e, a in f.terms.items()}, self._nf)
        return Polynomial(self.base, {e: a for (_, e), a in rem.items()})

    def __call__(self, value) -> Polynomial:
        return self.reduce(self.base(value))

    @property
    def zero(self) -> Polynomial:
        return self.base.zero

    @property
    def one(self) -> Polynomial:
        return self.reduce(self.base.one)

    def parse(self, text: str) -> Polynomial:
        return self.reduce(self.base.parse(text))

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.base == other.base and self.gb == other.gb

    def __hash__(self):
        return hash((self.base, self.gb))

    def __repr__(self):
        return f"QuotientRing({self.base!r}, {[str(g) for g in self.ideal_gens]})"

    def __str__(self):
        return f"{self.base}/<{', '.join(str(g) for g in self.ideal_gens)}>"


def relations(R) -> tuple:
    return R.gb if isinstance(R, QuotientRing) else ()


def _check_matrix(R, A: Matrix) -> Matrix:
    if A.ring is R or A.ring == R:
        return A
    if A.ring == R.base:
        return A.change_ring(R)
    raise RingMismatchError(f"matrix over {A.ring}, expected {R}")


def _stacked(R, A: Matrix) -> Matrix:
    """``A`` over the base ring with the relation rows ``f * e_j`` below it."""
    P = R.base
    rows = list(A.rows)
    n = A.ncols
    for f in relations(R):
        for j in range(n):
            rows.append(tuple(f if k == j else P.zero for k in range(n)))
    return Matrix._raw(P, rows, n)


class Lifter:
    """Solves ``x @ A = b`` over ``R`` for a fixed ``A``; the Gröbner basis
    is computed once at construction."""

    def __init__(self, R, A: Matrix):
        self.R = R
        self.A = _check_matrix(R, A)
        self.aug = augmented_gb(_stacked(R, self.A))

    def lift(self, b) -> list[Polynomial] | None:
        b = [self.R.reduce(self.R.base(f)) for f in b]
        x = lift_row(self.aug, b)
        if x is None:
            return None
        x = [self.R.reduce(f) for f in x[: self.A.nrows]]
        return x

    def obstruction(self, b) -> list[Polynomial]:
        """Left block of the normal form of ``[b | 0]``; nonzero iff ``b`` does not lift."""
        b = [self.R.reduce(self.R.base(f)) for f in b]
        rem, _ = _reduce(row_to_vec(b), self.aug.basis())
        return vec_to_row(rem, self.R.base, self.A.ncols)


def ring_syzygies(R, A: Matrix) -> Matrix:
    """Universal row syzygies ``L`` of ``A`` over ``R`` (``L @ A == 0``)."""
    A = _check_matrix(R, A)
    m = A.nrows
    aug = augmented_gb(_stacked(R, A))
    rows = []
    for row in aug.L.rows:
        proj = tuple(R.reduce(f) for f in row[:m])
        if any(proj):
            rows.append(proj)
    L = Matrix._raw(R, rows, m)
    if not (L @ A).is_zero():
        raise InvariantViolation("syzygy matrix does not annihilate A")
    return L


def ring_lift(R, A: Matrix, B: Matrix) -> Matrix | None:
    """A matrix ``X`` with ``X @ A == B`` over ``R``, or ``None`` if none exists."""
    A = _check_matrix(R, A)
    B = _check_matrix(R, B)
    if A.ncols != B.ncols:
        raise ShapeError(f"cannot lift {B.shape} along {A.shape}")
    lifter = Lifter(R, A)
    out = []
    for row in B.rows:
        x = lifter.lift(row)
        if x is None:
            return None
        out.append(tuple(x))
    X = Matrix._raw(R, out, A.nrows)
    if X @ A != B:
        raise InvariantViolation("lift does not reproduce B")
    return X


def ring_is_zero(R, f) -> bool:
    return not R.reduce(R.base(f))


class IdealSpec:
    """A finitely generated ideal ``<f_1, ..., f_l>`` of ``R``."""

    def __init__(self, R, gens):
        self.ring = R
        self.gens = tuple(R.reduce(R.base(f)) for f in gens)
        self._lifter = None

    def lifter(self) -> Lifter:
        if self._lifter is None:
            self._lifter = Lifter(self.ring, Matrix.column(self.ring, self.gens)
                                  if self.gens else Matrix.zero(self.ring, 0, 1))
        return self._lifter

    def membership(self, f) -> list[Polynomial] | None:
        """Cofactors ``a`` with ``sum(a_i f_i) == f`` in ``R``, or ``None``."""
        return self.lifter().lift([f])

    def __contains__(self, f) -> bool:
        return self.membership(f) is not None

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"IdealSpec({self.ring}, {[str(g) for g in self.gens]})"


def ring_membership(R, f, I: IdealSpec) -> list[Polynomial] | None:
    f = R.reduce(R.base(f))
    cof = I.membership(f)
    if cof is None:
        return None
    total = R.base.zero
    for a, g in zip(cof, I.gens):
        total = total + a * g
    if R.reduce(total) != f:
        raise InvariantViolation("membership cofactors do not reproduce f")
    return cof


def ring_annihilator(R, v) -> IdealSpec:
    """Generators of ``{r in R : r * v == 0}`` for a row ``v``."""
    row = Matrix.row(R, list(v)) if len(v) else Matrix.zero(R, 1, 0)
    L = ring_syzygies(R, row)
    return IdealSpec(R, [r[0].monic() for r in L.rows if r[0]])
