"""Sparse multivariate polynomials over a coefficient field.

A polynomial is a mapping from exponent tuples to nonzero coefficients,
bound to a :class:`PolyRing` that fixes the field, the variable names and
the monomial ordering.  Only global orderings are available.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from .arith import QQ, CoefficientError, field_from_name

Monomial = tuple  # tuple of non-negative ints


class Term(NamedTuple):
    coeff: object
    monomial: Monomial


class NoLeadingTermError(ValueError):
    pass


class RingMismatchError(ValueError):
    pass


# --------------------------------------------------------------------------
# monomial orderings
# --------------------------------------------------------------------------

def _lex_key(e):
    return e


def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


_BASE_KEYS = {"lex": _lex_key, "degrevlex": _degrevlex_key}


class MonomialOrdering:
    """A global monomial ordering given by a sort key (larger key = larger).

    ``kind`` is ``"lex"``, ``"degrevlex"`` or ``"block"``.  A block ordering
    compares the first ``split`` variables with ``inner`` and breaks ties
    with ``inner`` on the remaining variables, so it eliminates the first
    block.
    """

    def __init__(self, kind: str = "degrevlex", split: int | None = None, inner: str = "degrevlex"):
        if kind == "block":
            if split is None or split < 0:
                raise ValueError("block ordering needs a split point >= 0")
            if inner not in _BASE_KEYS:
                raise ValueError(f"unsupported inner ordering {inner!r}")
            inner_key = _BASE_KEYS[inner]
            self._key = lambda e: (inner_key(e[:split]), inner_key(e[split:]))
        elif kind in _BASE_KEYS:
            self._key = _BASE_KEYS[kind]
        else:
            raise ValueError(
                f"unsupported ordering {kind!r}: only global orderings "
                "(lex, degrevlex, block) are available"
            )
        self.kind = kind
        self.split = split if kind == "block" else None
        self.inner = inner if kind == "block" else None

    def key(self, exps: Monomial):
        return self._key(exps)

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ValueError(f"monomials of different lengths {len(a)} and {len(b)}")
        ka, kb = self._key(a), self._key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrdering)
            and (self.kind, self.split, self.inner) == (other.kind, other.split, other.inner)
        )

    def __hash__(self):
        return hash((self.kind, self.split, self.inner))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrdering('block', split={self.split}, inner={self.inner!r})"
        return f"MonomialOrdering({self.kind!r})"


def as_ordering(order) -> MonomialOrdering:
    if isinstance(order, MonomialOrdering):
        return order
    return MonomialOrdering(order)


def cmp_monomials(a: Monomial, b: Monomial, order) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return as_ordering(order).compare(tuple(a), tuple(b))


class ModuleOrdering:
    """Ordering on (component, monomial) pairs of a free module.

    ``groups`` lists component indices in decreasing priority: every term
    in an earlier group beats every term in a later one.  Inside a group
    ``within`` is ``"pot"`` (position over term, lower component index
    first) or ``"top"`` (term over position, ties broken by position).
    """

    def __init__(self, base, width: int, groups: list[list[int]] | None = None,
                 within: str = "pot"):
        if within not in ("pot", "top"):
            raise ValueError(f"within-group rule must be 'pot' or 'top', not {within!r}")
        self.within = within
        self.base = as_ordering(base)
        self.width = width
        if groups is None:
            groups = [list(range(width))]
        rank = {}
        for gi, group in enumerate(groups):
            for c in group:
                if c in rank or not 0 <= c < width:
                    raise ValueError(f"bad component {c} in module ordering groups")
                rank[c] = gi
        if len(rank) != width:
            raise ValueError("module ordering groups must cover every component")
        self.groups = [list(g) for g in groups]
        self._rank = rank
        self._cache: dict = {}

    def key(self, comp: int, exps: Monomial):
        k = (comp, exps)
        try:
            return self._cache[k]
        except KeyError:
            pass
        if len(self._cache) > 200_000:
            self._cache.clear()
        if self.within == "pot":
            v = (-self._rank[comp], -comp, self.base.key(exps))
        else:
            v = (-self._rank[comp], self.base.key(exps), -comp)
        self._cache[k] = v
        return v

    def __repr__(self):
        return (f"ModuleOrdering({self.base!r}, width={self.width}, "
                f"groups={self.groups}, within={self.within!r})")


def block_priority(base, left: int, right: int, within: str = "top") -> ModuleOrdering:
    """Module ordering on ``left + right`` components favouring the left block.

    Term over position inside each block is the default: with position over
    term the right block behaves like an elimination ordering and rational
    coefficients grow by thousands of bits on small 3-variable inputs.
    """
    return ModuleOrdering(
        base, left + right, [list(range(left)), list(range(left, left + right))], within
    )


# --------------------------------------------------------------------------
# rings and polynomials
# --------------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class PolyRing:
    """The polynomial ring ``field[names]`` with a fixed global ordering."""

    def __init__(self, field=QQ, names: Iterable[str] = ("x",), order="degrevlex"):
        if isinstance(field, str):
            field = field_from_name(field)
        names = tuple(names)
        for n in names:
            if not _IDENT.match(n):
                raise ValueError(f"bad variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.field = field
        self.names = names
        self.nvars = len(names)
        self.order = as_ordering(order)
        self._zero_exp = (0,) * self.nvars

    # a PolyRing is also the ring handle of the polynomial ring itself
    @property
    def base(self) -> PolyRing:
        return self

    def reduce(self, f: Polynomial) -> Polynomial:
        return f

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {list(self.names)}, {self.order!r})"

    def __str__(self):
        return f"{self.field}[{','.join(self.names)}]"

    def with_order(self, order) -> PolyRing:
        return PolyRing(self.field, self.names, order)

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return Polynomial(self, {self._zero_exp: self.field.one})

    def gens(self) -> list[Polynomial]:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Polynomial(self, {tuple(e): self.field.one}))
        return out

    def var(self, name: str) -> Polynomial:
        return self.gens()[self.names.index(name)]

    def monomial(self, exps, coeff=None) -> Polynomial:
        c = self.field.one if coeff is None else self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms: dict) -> Polynomial:
        field = self.field
        clean = {}
        for e, c in terms.items():
            c = field(c)
            if c:
                clean[tuple(e)] = c
        return Polynomial(self, clean)

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} is not {self}")
            return value
        if isinstance(value, str):
            return parse_poly(value, self)
        c = self.field(value)
        return Polynomial(self, {self._zero_exp: c} if c else {})

    def parse(self, text: str) -> Polynomial:
        return parse_poly(text, self)


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lt = None

    def _check(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"cannot combine {self.ring} and {other.ring}")
            return other
        return self.ring(other)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = -c
            else:
                v = v - c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Polynomial:
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, exps: Monomial, c) -> Polynomial:
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()},
        )

    def sorted_terms(self) -> list[Term]:
        """Terms in strictly descending order under the ring's ordering."""
        key = self.ring.order.key
        return [Term(self.terms[e], e) for e in sorted(self.terms, key=key, reverse=True)]

    def leading_term(self) -> Term:
        if not self.terms:
            raise NoLeadingTermError("the zero polynomial has no leading term")
        if self._lt is None:
            e = max(self.terms, key=self.ring.order.key)
            self._lt = Term(self.terms[e], e)
        return self._lt

    def leading_monomial(self) -> Monomial:
        return self.leading_term().monomial

    def leading_coefficient(self):
        return self.leading_term().coeff

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.one / self.leading_coefficient())

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coefficient(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def evaluate(self, point) -> object:
        total = self.ring.field.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


# --------------------------------------------------------------------------
# printing and parsing
# --------------------------------------------------------------------------

def _format_monomial(names, exps) -> str:
    parts = []
    for name, k in zip(names, exps):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """ASCII rendering that :func:`parse_poly` reads back."""
    if not p.terms:
        return "0"
    ring = p.ring
    fmt = ring.field.format
    one = ring.field.one
    pieces = []
    for c, e in p.sorted_terms():
        mono = _format_monomial(ring.names, e)
        if not mono:
            s = fmt(c)
        elif c == one:
            s = mono
        elif c == -one:
            s = "-" + mono
        else:
            s = f"{fmt(c)}*{mono}"
        if not pieces:
            pieces.append(s)
        elif s.startswith("-"):
            pieces.append(" - " + s[1:])
        else:
            pieces.append(" + " + s)
    return "".join(pieces)


class ParseError(ValueError):
    """Polynomial text rejected; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int, kind: str = "syntax"):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset
        self.kind = kind


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.S)


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos == n:
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise ParseError(f"unexpected character {ch!r}", len(text[:start].encode()))
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def offset(self, tok) -> int:
        return len(self.text[: tok[2]].encode())

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, tok, what):
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"expected {what}, found {found}", self.offset(tok))

    def parse(self) -> Polynomial:
        ring = self.ring
        total: dict = {}
        sign = 1
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.take()
            sign = -1 if tok[0] == "-" else 1
        while True:
            c, e = self.term()
            c = c if sign > 0 else -c
            v = total.get(e)
            total[e] = c if v is None else v + c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] not in ("+", "-"):
                self.fail(tok, "'+', '-' or end of input")
            self.take()
            sign = -1 if tok[0] == "-" else 1
        return Polynomial(ring, {e: c for e, c in total.items() if c})

    def term(self):
        ring = self.ring
        exps = [0] * ring.nvars
        tok = self.peek()
        if tok[0] == "int":
            coeff = self.coeff()
        elif tok[0] == "ident":
            coeff = ring.field.one
            self.varpow(exps)
        else:
            self.fail(tok, "a coefficient or variable")
        while self.peek()[0] == "*":
            self.take()
            self.varpow(exps)
        return coeff, tuple(exps)

    def coeff(self):
        tok = self.take()
        num = int(tok[1])
        den = 1
        if self.peek()[0] == "/":
            self.take()
            dtok = self.take()
            if dtok[0] != "int":
                self.fail(dtok, "an unsigned integer denominator")
            den = int(dtok[1])
            if den == 0:
                raise ParseError("zero denominator", self.offset(dtok), "coefficient")
        try:
            return self.ring.field.from_ratio(num, den)
        except CoefficientError as exc:
            raise ParseError(str(exc), self.offset(tok), "coefficient") from None

    def varpow(self, exps):
        tok = self.take()
        if tok[0] != "ident":
            self.fail(tok, "a variable")
        try:
            idx = self.ring.names.index(tok[1])
        except ValueError:
            raise ParseError(
                f"unknown variable {tok[1]!r}", self.offset(tok), "unknown-variable"
            ) from None
        k = 1
        if self.peek()[0] == "^":
            self.take()
            ktok = self.take()
            if ktok[0] != "int":
                self.fail(ktok, "an unsigned integer exponent")
            k = int(ktok[1])
        exps[idx] += k


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` in the grammar ``poly := term (('+'|'-') term)*``.

    A single leading sign is accepted so that printed polynomials such as
    ``-x + 1`` read back.
    """
    return _Parser(text, ring).parse()
