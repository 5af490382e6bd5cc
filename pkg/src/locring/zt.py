"""Univariate polynomials over the integers and their strong Gröbner bases.

A strong basis ``G`` of an ideal ``I`` of Z[t] has the property that the
leading term of every nonzero element of ``I`` is divisible by the leading
term of some ``g`` in ``G``.  It is computed with S-polynomials and
gcd-polynomials (Bézout combinations of leading coefficients), and every
basis element keeps its expression in the input generators.

The monic elements of Z[t] form a multiplicative set; an ideal meets it
exactly when the leading coefficients of a strong basis are coprime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import extended_gcd, gcd_combination
from .polys import ParseError, PolyRing


class ZPoly:
    """Dense integer polynomial, coefficients from the constant term up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, c: int, d: int) -> ZPoly:
        return cls([0] * d + [c])

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def leading_term(self) -> tuple[int, int]:
        """``(c, d)`` for the leading term ``c * t^d``."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading term")
        return self.coeffs[-1], len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ZPoly([other])
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _zp(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ZPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return ZPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-_zp(other))

    def __rsub__(self, other):
        return _zp(other) - self

    def __mul__(self, other):
        other = _zp(other)
        if not self.coeffs or not other.coeffs:
            return ZPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ZPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> ZPoly:
        if not self.coeffs:
            return self
        return ZPoly([0] * k + list(self.coeffs))

    def scale(self, c: int) -> ZPoly:
        return ZPoly([c * a for a in self.coeffs])

    def __str__(self):
        return format_zpoly(self)

    def __repr__(self):
        return f"ZPoly({format_zpoly(self)!r})"


def _zp(x) -> ZPoly:
    if isinstance(x, ZPoly):
        return x
    if isinstance(x, int):
        return ZPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as an integer polynomial")


def format_zpoly(p: ZPoly, var: str = "t") -> str:
    if not p.coeffs:
        return "0"
    pieces = []
    for d in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{c}*{mono}"
        if not pieces:
            pieces.append(s)
        elif s.startswith("-"):
            pieces.append(" - " + s[1:])
        else:
            pieces.append(" + " + s)
    return "".join(pieces)


class IntPolyRing:
    """Handle for Z[var]; parses with the shared polynomial grammar."""

    def __init__(self, var: str = "t"):
        self.var = var
        self._qq = PolyRing("QQ", [var], "lex")

    def __call__(self, value) -> ZPoly:
        if isinstance(value, ZPoly):
            return value
        if isinstance(value, int):
            return ZPoly([value])
        return self.parse(value)

    def parse(self, text: str) -> ZPoly:
        p = self._qq.parse(text)
        coeffs: dict[int, int] = {}
        for (d,), c in p.terms.items():
            if Fraction(c).denominator != 1:
                raise ParseError(f"coefficient {c} is not an integer", 0, "coefficient")
            coeffs[d] = int(c)
        top = max(coeffs, default=-1)
        return ZPoly([coeffs.get(i, 0) for i in range(top + 1)])

    def format(self, p: ZPoly) -> str:
        return format_zpoly(p, self.var)

    def __eq__(self, other):
        return isinstance(other, IntPolyRing) and other.var == self.var

    def __hash__(self):
        return hash(("ZZ", self.var))

    def __str__(self):
        return f"ZZ[{self.var}]"


ZT = IntPolyRing("t")


@dataclass
class StandardBasis:
    """Strong Gröbner basis with ``gens[i] == sum(transformation[i][j] * inputs[j])``."""

    gens: list
    transformation: list
    inputs: list

    def leading_coefficients(self) -> list[int]:
        return [g.lc for g in self.gens]

    def degrees(self) -> list[int]:
        return [g.degree for g in self.gens]

    def verify(self) -> bool:
        for g, row in zip(self.gens, self.transformation):
            total = ZPoly()
            for a, f in zip(row, self.inputs):
                total = total + a * f
            if total != g:
                return False
        return True


def _combine(rows, weights):
    out = [ZPoly() for _ in rows[0]] if rows else []
    for row, w in zip(rows, weights):
        if not w:
            continue
        for k, a in enumerate(row):
            if a:
                out[k] = out[k] + w * a
    return out


def _reduce_zt(p: ZPoly, pc: list, basis: list, skip=None):
    """Euclidean reduction of ``p`` (with cofactors ``pc``) by ``basis``.

    A coefficient ``c`` at degree ``d`` is replaced by ``c mod c_g`` using the
    first basis element ``g`` with ``deg g <= d`` and ``c // c_g != 0``.
    Basis leading coefficients are positive, so remainders are in ``[0, c_g)``.
    """
    coeffs = list(p.coeffs)
    pc = list(pc)
    d = len(coeffs) - 1
    while d >= 0:
        progressed = True
        while progressed and coeffs[d]:
            progressed = False
            for idx, (g, gc) in enumerate(basis):
                if idx == skip:
                    continue
                c_g, d_g = g.leading_term()
                if d_g > d:
                    continue
                q = coeffs[d] // c_g
                if q == 0:
                    continue
                shift = d - d_g
                for i, a in enumerate(g.coeffs):
                    coeffs[i + shift] -= q * a
                mult = ZPoly.monomial(q, shift)
                pc = [x - mult * y for x, y in zip(pc, gc)]
                progressed = True
                break
        d -= 1
    return ZPoly(coeffs), pc


def _positive(p: ZPoly, pc: list):
    if p.lc < 0:
        return -p, [-a for a in pc]
    return p, pc


def strong_groebner_zt(gens) -> StandardBasis:
    """Strong (standard) Gröbner basis of the ideal of Z[t] spanned by ``gens``."""
    inputs = [_zp(f) for f in gens]
    k = len(inputs)
    unit = [[ZPoly([1]) if i == j else ZPoly() for j in range(k)] for i in range(k)]
    basis: list = []
    pairs: list = []

    def add(p, pc):
        p, pc = _reduce_zt(p, pc, basis)
        if not p:
            return
        p, pc = _positive(p, pc)
        basis.append((p, pc))
        new = len(basis) - 1
        pairs.extend((i, new) for i in range(new))

    for f, row in zip(inputs, unit):
        if f:
            add(f, row)

    while pairs:
        i, j = pairs.pop(0)
        (f, fc), (g, gc) = basis[i], basis[j]
        a, di = f.leading_term()
        b, dj = g.leading_term()
        top = max(di, dj)
        mf = ZPoly.monomial(1, top - di)
        mg = ZPoly.monomial(1, top - dj)
        gcd, u, v = extended_gcd(a, b)
        lcm = a * b // gcd
        # S-polynomial cancels the leading terms
        s = mf.scale(lcm // a) * f - mg.scale(lcm // b) * g
        sc = _combine([fc, gc], [mf.scale(lcm // a), mg.scale(-(lcm // b))])
        add(s, sc)
        # gcd-polynomial has leading term gcd(a, b) * t^top
        h = mf.scale(u) * f + mg.scale(v) * g
        hc = _combine([fc, gc], [mf.scale(u), mg.scale(v)])
        add(h, hc)

    basis = _minimize(basis)
    sb = StandardBasis([g for g, _ in basis], [gc for _, gc in basis], inputs)
    if not sb.verify():
        raise RuntimeError("standard basis transformation does not verify")
    return sb


def _minimize(basis):
    keep = []
    for i, (g, _) in enumerate(basis):
        c, d = g.leading_term()
        redundant = False
        for j, (h, _) in enumerate(basis):
            if j == i:
                continue
            ch, dh = h.leading_term()
            if dh <= d and c % ch == 0 and ((ch, dh) != (c, d) or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(basis[i])
    out = []
    for i, (g, gc) in enumerate(keep):
        c, d = g.leading_term()
        tail = ZPoly(list(g.coeffs[:-1]))
        zero_row = [ZPoly() for _ in gc]
        # tails only need reducing below the leading degree
        r, rc = _reduce_zt(tail, zero_row, keep, skip=i)
        lead = ZPoly.monomial(c, d)
        out.append((lead + r, [x + y for x, y in zip(gc, rc)]))
    out.sort(key=lambda item: (item[0].degree, item[0].lc))
    return out


def monic_localization_problem(gens):
    """Find a monic element of ``<gens>`` as an explicit combination.

    Returns ``(cofactors, witness)`` with ``witness == sum(a_i * f_i)`` and
    ``witness`` monic, or ``None`` when the ideal contains no monic element.
    """
    inputs = [_zp(f) for f in gens]
    sb = strong_groebner_zt(inputs)
    if not sb.gens:
        return None
    g, a = gcd_combination(sb.leading_coefficients())
    if g != 1:
        return None
    top = max(sb.degrees())
    witness = ZPoly()
    weights = []
    for ai, gi in zip(a, sb.gens):
        w = ZPoly.monomial(ai, top - gi.degree)
        weights.append(w)
        witness = witness + w * gi
    cofactors = _combine(sb.transformation, weights)
    check = ZPoly()
    for c, f in zip(cofactors, inputs):
        check = check + c * f
    if check != witness or not witness.is_monic():
        raise RuntimeError("monic witness failed to verify")
    return cofactors, witness


def zt_membership(f, gens):
    """Cofactors ``a`` with ``sum(a_i * gens[i]) == f``, or ``None``."""
    f = _zp(f)
    inputs = [_zp(g) for g in gens]
    sb = strong_groebner_zt(inputs)
    zero_row = [ZPoly() for _ in inputs]
    r, rc = _reduce_zt(f, zero_row, list(zip(sb.gens, sb.transformation)))
    if r:
        return None
    return [-a for a in rc]
