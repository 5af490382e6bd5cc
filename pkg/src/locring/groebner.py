"""Buchberger's algorithm for submodules of free modules over k[x1..xn].

Module elements are handled internally as sparse dicts keyed by
``(component, exponent tuple)``.  Row syzygies and lifts use the
augmentation trick: a Gröbner basis of the rows of ``[A | I_m]`` under an
ordering that ranks every left-block term above every right-block term.
Rows whose left part vanishes then form a Gröbner basis of the syzygy
module, and any other row ``w`` satisfies ``w.left = w.right * A``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .matrix import Matrix, ShapeError
from .polys import ModuleOrdering, Polynomial, PolyRing, block_priority


class NotASyzygyError(ValueError):
    """``T * A`` is nonzero, so ``T`` cannot factor through the syzygies."""


# --------------------------------------------------------------------------
# sparse vector helpers
# --------------------------------------------------------------------------

def row_to_vec(row) -> dict:
    vec = {}
    for c, f in enumerate(row):
        for e, a in f.terms.items():
            vec[(c, e)] = a
    return vec


def vec_to_row(vec: dict, ring: PolyRing, width: int, offset: int = 0) -> list[Polynomial]:
    parts: list[dict] = [{} for _ in range(width)]
    for (c, e), a in vec.items():
        if offset <= c < offset + width:
            parts[c - offset][e] = a
    return [Polynomial(ring, p) for p in parts]


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lead(vec: dict, order: ModuleOrdering):
    key = order.key
    return max(vec, key=lambda t: key(t[0], t[1]))


def _sub_scaled(p: dict, g: dict, shift, f) -> None:
    # p -= f * x^shift * g, in place
    for (c, e), a in g.items():
        k = (c, tuple(x + y for x, y in zip(e, shift)))
        v = p.get(k)
        if v is None:
            p[k] = -f * a
        else:
            v = v - f * a
            if v:
                p[k] = v
            else:
                del p[k]


class _Basis:
    """Vectors with cached leading data, indexed by leading component."""

    def __init__(self, order: ModuleOrdering):
        self.order = order
        self.vecs: list[dict] = []
        self.leads: list[tuple] = []
        self.lcs: list = []
        self.by_comp: dict[int, list[int]] = {}

    def add(self, vec: dict) -> int:
        lead = _lead(vec, self.order)
        idx = len(self.vecs)
        self.vecs.append(vec)
        self.leads.append(lead)
        self.lcs.append(vec[lead])
        self.by_comp.setdefault(lead[0], []).append(idx)
        return idx

    def find_reducer(self, comp, e, active=None):
        for i in self.by_comp.get(comp, ()):
            if active is not None and i not in active:
                continue
            if _divides(self.leads[i][1], e):
                return i
        return None


def _reduce(vec: dict, basis: _Basis, track: bool = False, active=None, top_only=False):
    """Full reduction of ``vec``; returns (remainder, cofactors by basis index)."""
    key = basis.order.key
    p = dict(vec)
    rem: dict = {}
    cof: dict[int, dict] = {}
    while p:
        lead = max(p, key=lambda t: key(t[0], t[1]))
        c = p[lead]
        comp, e = lead
        i = basis.find_reducer(comp, e, active)
        if i is None:
            if top_only:
                rem.update(p)
                break
            rem[lead] = c
            del p[lead]
            continue
        shift = tuple(x - y for x, y in zip(e, basis.leads[i][1]))
        f = c / basis.lcs[i]
        _sub_scaled(p, basis.vecs[i], shift, f)
        if track:
            ci = cof.setdefault(i, {})
            v = ci.get(shift)
            v = f if v is None else v + f
            if v:
                ci[shift] = v
            else:
                del ci[shift]
    return rem, cof


def _monic(vec: dict, order: ModuleOrdering) -> dict:
    lc = vec[_lead(vec, order)]
    return {k: a / lc for k, a in vec.items()}


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def gb_vectors(vecs: list[dict], order: ModuleOrdering, nvars: int) -> list[dict]:
    """Reduced, head-monic Gröbner basis of the module spanned by ``vecs``."""
    basis = _Basis(order)
    sugar: list[int] = []
    for v in vecs:
        if v:
            basis.add(_monic(v, order))
            sugar.append(max(sum(e) for _, e in v))
    single = order.width == 1
    key = order.key

    def pair_sugar(i, j, lm):
        d = sum(lm)
        return max(sugar[i] + d - sum(basis.leads[i][1]), sugar[j] + d - sum(basis.leads[j][1]))

    def pair_entry(i, j):
        # sugar first, then lcm degree; the reduced basis is unique, so the
        # selection order only affects running time
        lm = _lcm(basis.leads[i][1], basis.leads[j][1])
        return (pair_sugar(i, j, lm), sum(lm), key(basis.leads[i][0], lm), j, i)

    pairs: set = set()
    heap: list = []

    def add_pairs(j):
        cj, ej = basis.leads[j]
        for i in basis.by_comp.get(cj, ()):
            if i == j:
                continue
            ei = basis.leads[i][1]
            if single and all(not (x and y) for x, y in zip(ei, ej)):
                continue  # coprime leading monomials, ideal case only
            pairs.add((i, j))
            heapq.heappush(heap, pair_entry(i, j))

    for j in range(len(basis.vecs)):
        cj = basis.leads[j][0]
        for i in basis.by_comp.get(cj, ()):
            if i >= j:
                break
            ei, ej = basis.leads[i][1], basis.leads[j][1]
            if single and all(not (x and y) for x, y in zip(ei, ej)):
                continue
            pairs.add((i, j))
            heapq.heappush(heap, pair_entry(i, j))

    def in_pairs(a, b):
        return (min(a, b), max(a, b)) in pairs

    while heap:
        ps, _, _, j, i = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        comp = basis.leads[i][0]
        lm = _lcm(basis.leads[i][1], basis.leads[j][1])
        # chain criterion
        skip = False
        for k in basis.by_comp.get(comp, ()):
            if k == i or k == j:
                continue
            if _divides(basis.leads[k][1], lm) and not in_pairs(i, k) and not in_pairs(j, k):
                skip = True
                break
        if skip:
            continue
        s = {}
        _sub_scaled(s, basis.vecs[i], tuple(x - y for x, y in zip(lm, basis.leads[i][1])),
                    -1 / basis.lcs[i])
        _sub_scaled(s, basis.vecs[j], tuple(x - y for x, y in zip(lm, basis.leads[j][1])),
                    1 / basis.lcs[j])
        if not s:
            continue
        r, _ = _reduce(s, basis)
        if r:
            new = basis.add(_monic(r, order))
            sugar.append(ps)
            add_pairs(new)

    return _interreduce(basis, order)


def _interreduce(basis: _Basis, order: ModuleOrdering) -> list[dict]:
    n = len(basis.vecs)
    keep = []
    for i in range(n):
        ci, ei = basis.leads[i]
        redundant = False
        for j in range(n):
            if j == i or basis.leads[j][0] != ci:
                continue
            ej = basis.leads[j][1]
            if _divides(ej, ei) and (ej != ei or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = _Basis(order)
    for i in keep:
        minimal.add(basis.vecs[i])
    out = []
    for idx in range(len(minimal.vecs)):
        others = set(range(len(minimal.vecs))) - {idx}
        vec = minimal.vecs[idx]
        lead = minimal.leads[idx]
        tail = {k: a for k, a in vec.items() if k != lead}
        r, _ = _reduce(tail, minimal, active=others)
        r[lead] = vec[lead]
        out.append(_monic(r, order))
    out.sort(key=lambda v: order.key(*_lead(v, order)))
    return out


# --------------------------------------------------------------------------
# public row-level interface
# --------------------------------------------------------------------------

def _ring_of(rows, ring):
    if ring is not None:
        return ring
    for row in rows:
        for f in row:
            return f.ring
    raise ValueError("cannot infer the ring from empty input; pass ring=")


def normal_form_with_cofactors(v, G, order: ModuleOrdering, ring: PolyRing | None = None):
    """Divide the row ``v`` by the rows ``G``.

    Returns ``(remainder, cofactors)`` with ``v == sum(cofactors[i] * G[i]) +
    remainder`` and no term of the remainder divisible by a leading term of
    ``G`` in the same component.  The first usable row of ``G`` is always
    the one chosen.
    """
    ring = _ring_of([v, *G], ring)
    width = len(v)
    basis = _Basis(order)
    index = []
    for i, g in enumerate(G):
        if len(g) != width:
            raise ShapeError("rows of different widths")
        vec = row_to_vec(g)
        if vec:
            basis.add(vec)
            index.append(i)
    rem, cof = _reduce(row_to_vec(v), basis, track=True)
    cofactors = [ring.zero] * len(G)
    for bi, terms in cof.items():
        cofactors[index[bi]] = Polynomial(ring, terms)
    return vec_to_row(rem, ring, width), cofactors


def buchberger(gens, order: ModuleOrdering, ring: PolyRing | None = None) -> list[list[Polynomial]]:
    """Reduced Gröbner basis of the module generated by the rows ``gens``."""
    if not gens:
        return []
    ring = _ring_of(gens, ring)
    width = len(gens[0])
    out = gb_vectors([row_to_vec(g) for g in gens], order, ring.nvars)
    return [vec_to_row(v, ring, width) for v in out]


def ideal_basis(polys, ring: PolyRing | None = None) -> list[Polynomial]:
    """Reduced Gröbner basis of an ideal under the ring's ordering."""
    ring = _ring_of([polys], ring)
    order = ModuleOrdering(ring.order, 1)
    return [row[0] for row in buchberger([[f] for f in polys], order, ring)]


@dataclass
class AugmentedGB:
    """Gröbner basis of the rows of ``[A | I_m]`` with left-block priority.

    ``vecs`` are the basis rows as sparse vectors on ``n + m`` components;
    ``syz`` indexes the rows with zero left block, which give ``L``.
    """

    ring: PolyRing
    A: Matrix
    order: ModuleOrdering
    vecs: list
    syz: list
    L: Matrix
    _basis: _Basis = field(repr=False, default=None)
    _syz_basis: _Basis = field(repr=False, default=None)

    @property
    def m(self) -> int:
        return self.A.nrows

    @property
    def n(self) -> int:
        return self.A.ncols

    @property
    def rows(self) -> list[list[Polynomial]]:
        return [vec_to_row(v, self.ring, self.n + self.m) for v in self.vecs]

    def basis(self) -> _Basis:
        if self._basis is None:
            self._basis = _Basis(self.order)
            for v in self.vecs:
                self._basis.add(v)
        return self._basis

    def syz_basis(self) -> _Basis:
        if self._syz_basis is None:
            self._syz_basis = _Basis(self.order)
            for i in self.syz:
                self._syz_basis.add(self.vecs[i])
        return self._syz_basis


def augmented_gb(A: Matrix, order=None) -> AugmentedGB:
    ring = A.ring.base
    m, n = A.nrows, A.ncols
    base = ring.order if order is None else order
    morder = block_priority(base, n, m)
    gens = []
    one = ring.field.one
    zero_exp = (0,) * ring.nvars
    for i, row in enumerate(A.rows):
        vec = row_to_vec(row)
        vec[(n + i, zero_exp)] = one
        gens.append(vec)
    vecs = gb_vectors(gens, morder, ring.nvars)
    syz = [i for i, v in enumerate(vecs) if all(c >= n for c, _ in v)]
    L = Matrix._raw(
        ring, [tuple(vec_to_row(vecs[i], ring, m, offset=n)) for i in syz], m
    )
    return AugmentedGB(ring, A, morder, vecs, syz, L)


def syzygies_of_rows(A: Matrix, order=None) -> tuple[Matrix, AugmentedGB]:
    """Generators ``L`` of the row syzygies of ``A`` (``L @ A == 0``) and the
    augmented basis that later lifts reuse."""
    if A.ring is not A.ring.base:
        raise ValueError("syzygies_of_rows works over a polynomial ring; use ring_syzygies")
    aug = augmented_gb(A, order)
    return aug.L, aug


def lift_along_syzygies(aug: AugmentedGB, T: Matrix) -> Matrix:
    """Find ``U`` with ``U @ L == T`` for a matrix ``T`` of syzygies of ``A``."""
    if T.ncols != aug.m:
        raise ShapeError(f"T has {T.ncols} columns, expected {aug.m}")
    if not (T @ aug.A).is_zero():
        raise NotASyzygyError("T @ A is not zero")
    ring, n = aug.ring, aug.n
    basis = aug.syz_basis()
    o = len(aug.syz)
    out = []
    for row in T.rows:
        vec = {(c + n, e): a for (c, e), a in row_to_vec(row).items()}
        rem, cof = _reduce(vec, basis, track=True)
        if rem:
            raise RuntimeError("syzygy failed to reduce to zero; Gröbner basis is broken")
        u = [ring.zero] * o
        for bi, terms in cof.items():
            u[bi] = Polynomial(ring, terms)
        out.append(tuple(u))
    return Matrix._raw(ring, out, o)


def lift_row(aug: AugmentedGB, b) -> list[Polynomial] | None:
    """Return ``x`` with ``x @ A == b`` or ``None`` if ``b`` is not in the row space."""
    b = list(b)
    if len(b) != aug.n:
        raise ShapeError(f"row of length {len(b)}, expected {aug.n}")
    rem, _ = _reduce(row_to_vec(b), aug.basis())
    if any(c < aug.n for c, _ in rem):
        return None
    # [b | 0] - [0 | rem_right] lies in the row module, hence b = (-rem_right) A
    right = vec_to_row(rem, aug.ring, aug.m, offset=aug.n)
    return [-f for f in right]
