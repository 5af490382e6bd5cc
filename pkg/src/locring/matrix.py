"""Dense matrices of polynomials over a ring handle.

A ring handle is either a :class:`~locring.polys.PolyRing` or a
:class:`~locring.rings.QuotientRing`; it provides ``base`` (the ambient
polynomial ring) and ``reduce`` (normal-form representative).  Entries are
stored reduced, so equality of representatives is syntactic.
"""

from __future__ import annotations

from .polys import Polynomial, RingMismatchError


class ShapeError(ValueError):
    pass


class Matrix:
    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring, rows, ncols: int | None = None):
        base = ring.base
        conv = []
        for row in rows:
            conv.append(tuple(ring.reduce(_coerce(base, x)) for x in row))
        if ncols is None:
            if not conv:
                raise ShapeError("ncols is required for a matrix without rows")
            ncols = len(conv[0])
        for row in conv:
            if len(row) != ncols:
                raise ShapeError(f"ragged matrix: expected {ncols} columns, got {len(row)}")
        self.ring = ring
        self.rows = tuple(conv)
        self.nrows = len(conv)
        self.ncols = ncols

    @classmethod
    def _raw(cls, ring, rows, ncols):
        # rows already reduced tuples of base-ring polynomials
        m = object.__new__(cls)
        m.ring = ring
        m.rows = tuple(rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        return m

    @classmethod
    def zero(cls, ring, nrows: int, ncols: int) -> Matrix:
        z = ring.base.zero
        return cls._raw(ring, [(z,) * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ring, n: int) -> Matrix:
        base = ring.base
        one = ring.reduce(base.one)
        return cls._raw(
            ring, [tuple(one if i == j else base.zero for j in range(n)) for i in range(n)], n
        )

    @classmethod
    def row(cls, ring, entries) -> Matrix:
        return cls(ring, [list(entries)], len(entries))

    @classmethod
    def column(cls, ring, entries) -> Matrix:
        return cls(ring, [[e] for e in entries], 1)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def _same_ring(self, other: Matrix):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError(f"matrices over {self.ring} and {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __add__(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        red = self.ring.reduce
        return Matrix._raw(
            self.ring,
            [tuple(red(a + b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        red = self.ring.reduce
        return Matrix._raw(
            self.ring,
            [tuple(red(a - b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self) -> Matrix:
        return Matrix._raw(self.ring, [tuple(-a for a in r) for r in self.rows], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        base = self.ring.base
        red = self.ring.reduce
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = base.zero
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(red(acc))
            out.append(tuple(row))
        return Matrix._raw(self.ring, out, other.ncols)

    def scale(self, f) -> Matrix:
        f = _coerce(self.ring.base, f)
        red = self.ring.reduce
        return Matrix._raw(
            self.ring, [tuple(red(f * a) for a in r) for r in self.rows], self.ncols
        )

    def vstack(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.ncols != other.ncols:
            raise ShapeError(f"cannot stack {self.shape} over {other.shape}")
        return Matrix._raw(self.ring, self.rows + other.rows, self.ncols)

    def hstack(self, other: Matrix) -> Matrix:
        self._same_ring(other)
        if self.nrows != other.nrows:
            raise ShapeError(f"cannot join {self.shape} and {other.shape}")
        return Matrix._raw(
            self.ring, [r + s for r, s in zip(self.rows, other.rows)], self.ncols + other.ncols
        )

    def columns(self, start: int, stop: int) -> Matrix:
        return Matrix._raw(self.ring, [r[start:stop] for r in self.rows], stop - start)

    def select_rows(self, indices) -> Matrix:
        return Matrix._raw(self.ring, [self.rows[i] for i in indices], self.ncols)

    def transpose(self) -> Matrix:
        if not self.nrows:
            return Matrix.zero(self.ring, self.ncols, 0)
        return Matrix._raw(self.ring, list(zip(*self.rows)), self.nrows)

    def entries(self):
        for r in self.rows:
            yield from r

    def is_zero(self) -> bool:
        return all(not a for a in self.entries())

    def flatten(self) -> list[Polynomial]:
        return list(self.entries())

    def change_ring(self, ring) -> Matrix:
        return Matrix(ring, self.rows, self.ncols)

    def to_strings(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, {self.to_strings()})"


def _coerce(base, x):
    if isinstance(x, Polynomial):
        if x.ring is not base and x.ring != base:
            raise RingMismatchError(f"entry from {x.ring} in a matrix over {base}")
        return x
    return base(x)
