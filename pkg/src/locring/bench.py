"""Seeded comparison of the dom-ideal solver against the BL method.

Both methods solve ``x @ (A/1) = b/1`` over a polynomial ring localized at
a maximal ideal.  Their verdicts must agree on every instance; a
disagreement is a bug and aborts the run with the offending instance.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .localization import PrimeComplement, bl_lift_maximal, loc_is_zero, solve_row
from .matrix import Matrix
from .polys import PolyRing
from .rings import QuotientRing, ideal_basis

HEADER = "id,m,n,deg,verdict_dom,verdict_bl,ms_dom,ms_bl,residual_ok"


class BenchDisagreement(RuntimeError):
    pass


@dataclass
class BenchRow:
    id: int
    m: int
    n: int
    deg: int
    verdict_dom: str
    verdict_bl: str
    ms_dom: float
    ms_bl: float
    residual_ok: bool

    def csv(self) -> str:
        return (
            f"{self.id},{self.m},{self.n},{self.deg},{self.verdict_dom},{self.verdict_bl},"
            f"{self.ms_dom:.3f},{self.ms_bl:.3f},{str(self.residual_ok).lower()}"
        )


@dataclass
class BenchResult:
    rows: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    preprocess_ms: float = 0.0

    def csv(self) -> str:
        return "\n".join([HEADER] + [r.csv() for r in self.rows]) + "\n"


def random_poly(P: PolyRing, rng: random.Random, deg: int, max_terms: int = 3, coeff: int = 5):
    out = P.zero
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * P.nvars
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(P.nvars)] += 1
        c = rng.randint(-coeff, coeff)
        if c:
            out = out + P.monomial(e, c)
    return out


def random_system(R, mgens, rng: random.Random, m: int, n: int, deg: int, solvable: bool):
    """A random ``(A, b)``.  With ``solvable`` the row ``b = X @ A0`` and
    ``A = u * A0`` for a unit ``u`` in ``1 + m``, so ``X / u`` lifts ``b``
    over the localization but usually not over R."""
    P = R.base
    A0 = [[random_poly(P, rng, deg) for _ in range(n)] for _ in range(m)]
    if not solvable:
        b = [random_poly(P, rng, deg) for _ in range(n)]
        return Matrix(R, A0, n), b
    X = [random_poly(P, rng, 1, 2) for _ in range(m)]
    b = []
    for j in range(n):
        acc = P.zero
        for i in range(m):
            acc = acc + X[i] * A0[i][j]
        b.append(acc)
    u = P.one
    for g in mgens:
        u = u + random_poly(P, rng, 1, 2) * g
    A = [[u * a for a in row] for row in A0]
    return Matrix(R, A, n), b


def maximality_warning(R, mgens) -> str | None:
    """Warn unless ``R/m`` is visibly the coefficient field (dimension one)."""
    P = R.base
    if isinstance(R, QuotientRing):
        gens = list(mgens) + list(R.gb)
    else:
        gens = list(mgens)
    gb = ideal_basis([P(g) for g in gens], P) if gens else []
    if any(g.is_constant() and g for g in gb):
        return "the ideal is the unit ideal, not maximal"
    leads = {g.leading_monomial() for g in gb}
    for i in range(P.nvars):
        e = tuple(1 if k == i else 0 for k in range(P.nvars))
        if e not in leads:
            return ("maximality of the ideal is a precondition that could not be "
                    "verified; verdicts of the two methods may legitimately differ")
    return None


def _verdict(sol) -> str:
    return "no-solution" if sol is None else "solved"


def _residual_ok(R, S, A, b, sol) -> bool:
    if sol is None:
        return True
    resid = sol.numerator @ A - Matrix.row(R, b).scale(sol.denominator)
    return all(loc_is_zero(R, S, f) for f in resid.entries()) and S.contains(sol.denominator)


def run_instance(R, S, mgens, idx: int, seed: int, m: int, n: int, deg: int) -> BenchRow:
    rng = random.Random(f"{seed}:{idx}")
    mi, ni = rng.randint(1, m), rng.randint(1, n)
    A, b = random_system(R, mgens, rng, mi, ni, deg, solvable=(idx % 2 == 0))
    t0 = time.perf_counter()
    dom_sol = solve_row(R, S, A, b).solution
    t1 = time.perf_counter()
    bl_sol = bl_lift_maximal(R, mgens, A, b, S)
    t2 = time.perf_counter()
    ok = _residual_ok(R, S, A, b, dom_sol) and _residual_ok(R, S, A, b, bl_sol)
    vd, vb = _verdict(dom_sol), _verdict(bl_sol)
    if vd != vb:
        raise BenchDisagreement(
            f"instance {idx} (seed {seed}): dom says {vd}, BL says {vb}\n"
            f"A = {A.to_strings()}\nb = {[str(f) for f in b]}"
        )
    degree = max([f.total_degree() for f in A.entries()] + [f.total_degree() for f in b] + [0])
    return BenchRow(idx, mi, ni, degree, vd, vb, (t1 - t0) * 1000, (t2 - t1) * 1000, ok)


def bench_compare(R, mgens, count: int, seed: int, m: int = 2, n: int = 2, deg: int = 2) -> BenchResult:
    """Run ``count`` seeded instances; dimensions are drawn from ``1..m`` and ``1..n``.

    Even ids are solvable by construction, odd ids are unconstrained.
    """
    result = BenchResult()
    warning = maximality_warning(R, mgens)
    if warning:
        result.warnings.append(warning)
    S = PrimeComplement(R, mgens)
    result.preprocess_ms = S.preprocess_ms
    for idx in range(count):
        result.rows.append(run_instance(R, S, list(S.gens), idx, seed, m, n, deg))
    return result
