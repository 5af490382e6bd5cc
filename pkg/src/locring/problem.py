"""Problem files and the task dispatcher behind the command line.

A problem file is a JSON object; see README.md for the full format.
Every task returns a plain-dict result record whose only nondeterministic
part is ``timings_ms``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .arith import CoefficientError
from .bench import bench_compare
from .localization import (
    LocMatrix,
    MonicUnivariateInt,
    PrimeComplement,
    Zariskification,
    dom_with_cofactors,
    localization_problem,
    loc_lift_detailed,
)
from .matrix import Matrix, ShapeError
from .polys import MonomialOrdering, ParseError, PolyRing
from .rings import (
    IdealSpec,
    InvariantViolation,
    Lifter,
    QuotientRing,
    ring_annihilator,
    ring_lift,
    ring_syzygies,
)
from .zt import IntPolyRing, strong_groebner_zt, zt_membership

TASKS = ("syz", "lift", "locsolve", "member", "dom", "iszero", "bench")


class ProblemError(ValueError):
    """Invalid problem input; ``location`` names the offending field."""

    def __init__(self, message: str, location: str | None = None, offset: int | None = None):
        super().__init__(message)
        self.location = location
        self.offset = offset

    def as_dict(self) -> dict:
        out = {"kind": "input", "message": str(self)}
        if self.location is not None:
            out["location"] = self.location
        if self.offset is not None:
            out["offset"] = self.offset
        return out


@dataclass
class ProblemFile:
    task: str
    ring: object
    set: object = None
    A: Matrix | None = None
    B: Matrix | None = None
    A_den: object = None
    B_den: object = None
    f: object = None
    ideal: list | None = None
    bench: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)


def _parse(ring, text, where: str):
    if not isinstance(text, (str, int)):
        raise ProblemError(f"{where}: expected a polynomial string", where)
    try:
        return ring(text) if isinstance(text, int) else ring.parse(text)
    except ParseError as exc:
        raise ProblemError(f"{where}: {exc}", where, exc.offset) from None
    except CoefficientError as exc:
        raise ProblemError(f"{where}: {exc}", where) from None


def _matrix(ring, data, where: str, ncols=None) -> Matrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ProblemError(f"{where}: expected a list of rows", where)
    rows = [[_parse(ring, x, f"{where}[{i}][{j}]") for j, x in enumerate(r)]
            for i, r in enumerate(data)]
    if ncols is None and not rows:
        raise ProblemError(f"{where}: empty matrix needs '{where}_cols'", where)
    try:
        return Matrix(ring, rows, ncols)
    except ShapeError as exc:
        raise ProblemError(f"{where}: {exc}", where) from None


def _ring(spec: dict, ordering: str | None):
    if not isinstance(spec, dict):
        raise ProblemError("ring: expected an object", "ring")
    field_name = spec.get("field", "QQ")
    names = spec.get("vars")
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise ProblemError("ring.vars: expected a list of variable names", "ring.vars")
    if field_name == "ZZ":
        if len(names) != 1 or spec.get("ideal"):
            raise ProblemError("ring: ZZ is supported only as ZZ[t] in one variable", "ring")
        return IntPolyRing(names[0]), 0.0
    order = ordering or spec.get("ordering", "degrevlex")
    try:
        P = PolyRing(field_name, names, MonomialOrdering(order))
    except ValueError as exc:
        raise ProblemError(f"ring: {exc}", "ring") from None
    ideal = spec.get("ideal") or []
    if not ideal:
        return P, 0.0
    gens = [_parse(P, g, f"ring.ideal[{i}]") for i, g in enumerate(ideal)]
    start = time.perf_counter()
    Q = QuotientRing(P, gens)
    return Q, (time.perf_counter() - start) * 1000


def _set(R, spec):
    if spec is None:
        return None
    if not isinstance(spec, dict):
        raise ProblemError("set: expected an object", "set")
    kind = spec.get("kind")
    if kind == "monic":
        if not isinstance(R, IntPolyRing):
            raise ProblemError("set: monic localization needs ring ZZ[t]", "set.kind")
        return MonicUnivariateInt(R)
    if isinstance(R, IntPolyRing):
        raise ProblemError("set: over ZZ[t] only the monic set is supported", "set.kind")
    gens = [_parse(R, g, f"set.gens[{i}]") for i, g in enumerate(spec.get("gens", []))]
    if kind == "prime":
        return PrimeComplement(R, gens)
    if kind == "zariski":
        return Zariskification(R, gens)
    raise ProblemError(f"set.kind: unknown kind {kind!r}", "set.kind")


def load_problem(data, task: str | None = None, ordering: str | None = None) -> ProblemFile:
    """Validate a decoded problem (dict) or JSON text."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ProblemError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}", exc.pos) from None
    if not isinstance(data, dict):
        raise ProblemError("problem file must hold a JSON object")
    task = task or data.get("task")
    if task not in TASKS:
        raise ProblemError(f"task: expected one of {', '.join(TASKS)}", "task")
    R, ring_ms = _ring(data.get("ring"), ordering)
    prob = ProblemFile(task=task, ring=R)
    prob.timings["gb_ring"] = ring_ms
    prob.set = _set(R, data.get("set"))
    if prob.set is not None:
        prob.timings["gb_set"] = prob.set.preprocess_ms
    if isinstance(R, IntPolyRing) and task not in ("member", "iszero"):
        raise ProblemError(f"task {task} is not available over ZZ[t]", "task")
    if "A" in data:
        prob.A = _matrix(R, data["A"], "A", data.get("A_cols"))
    if "B" in data:
        ncols = prob.A.ncols if prob.A is not None else data.get("B_cols")
        prob.B = _matrix(R, data["B"], "B", ncols)
    elif "b" in data:
        ncols = prob.A.ncols if prob.A is not None else None
        prob.B = _matrix(R, [data["b"]], "b", ncols)
    if "A_den" in data:
        prob.A_den = _parse(R, data["A_den"], "A_den")
    if "B_den" in data:
        prob.B_den = _parse(R, data["B_den"], "B_den")
    if "f" in data:
        prob.f = _parse(R, data["f"], "f")
    if "ideal" in data:
        prob.ideal = [_parse(R, g, f"ideal[{i}]") for i, g in enumerate(data["ideal"])]
    prob.bench = dict(data.get("bench", {}))
    _require(prob)
    return prob


def _require(prob: ProblemFile):
    need = {
        "syz": ("A",),
        "lift": ("A", "B"),
        "locsolve": ("A", "B", "set"),
        "member": ("ideal",) if prob.set is not None else ("f", "ideal"),
        "dom": ("A", "B"),
        "iszero": ("f",),
        "bench": ("set",),
    }[prob.task]
    for name in need:
        if getattr(prob, name) is None:
            raise ProblemError(f"task {prob.task} needs '{name}'", name)
    if prob.B is not None and prob.A is not None and prob.A.ncols != prob.B.ncols:
        raise ProblemError(f"B has {prob.B.ncols} columns but A has {prob.A.ncols}", "B")
    if prob.task == "bench" and not isinstance(prob.set, PrimeComplement):
        raise ProblemError("bench needs a prime set given by generators of a maximal ideal", "set")


# --------------------------------------------------------------------------
# task runners
# --------------------------------------------------------------------------

def _strs(polys):
    return [str(p) for p in polys]


def _record(task, verdict, solution=None, certificate=None, residual_ok=None, warnings=()):
    return {
        "task": task,
        "verdict": verdict,
        "solution": solution,
        "certificate": certificate or {},
        "residual_ok": residual_ok,
        "warnings": list(warnings),
    }


def _prime_refusal(S, gens):
    out = []
    for g in gens:
        cof = S.membership_certificate(g)
        if cof is None:
            raise InvariantViolation(f"refusal certificate: {g} is not in the prime ideal")
        out.append({"element": str(g), "cofactors": _strs(cof)})
    return out


def _run_syz(p: ProblemFile):
    L = ring_syzygies(p.ring, p.A)
    ok = (L @ p.A).is_zero()
    if not ok:
        raise InvariantViolation("syzygy residual check failed")
    return _record("syz", "solved", {"L": L.to_strings(), "rows": L.nrows, "denominator": "1"},
                   residual_ok=ok)


def _run_lift(p: ProblemFile):
    X = ring_lift(p.ring, p.A, p.B)
    if X is None:
        lifter = Lifter(p.ring, p.A)
        for i, row in enumerate(p.B.rows):
            obstruction = lifter.obstruction(row)
            if any(obstruction):
                return _record("lift", "no-solution", certificate={
                    "row": i, "normal_form": _strs(obstruction)})
        raise InvariantViolation("lift refused but every row reduces to zero")
    ok = X @ p.A == p.B
    if not ok:
        raise InvariantViolation("lift residual check failed")
    return _record("lift", "solved", {"X": X.to_strings(), "denominator": "1"}, residual_ok=ok)


def _dom_cert(dom):
    return [{"r": str(g.r), "L": _strs(g.L)} for g in dom]


def _run_locsolve(p: ProblemFile):
    R, S = p.ring, p.set
    one = R.base.one
    A = LocMatrix(p.A, p.A_den if p.A_den is not None else one, S)
    B = LocMatrix(p.B, p.B_den if p.B_den is not None else one, S)
    X, rows = loc_lift_detailed(R, S, A, B)
    timings = {
        "syzygy": sum(r.timings["syzygy"] for r in rows),
        "localization": sum(r.timings["localization"] for r in rows),
    }
    if X is None:
        bad = rows[-1]
        cert = {"row": len(rows) - 1, "dom": _dom_cert(bad.dom)}
        if isinstance(S, PrimeComplement):
            cert["refusal"] = _prime_refusal(S, [g.r for g in bad.dom])
        else:
            cert["refusal"] = "1 is not in L + dom"
        return _record("locsolve", "no-solution", certificate=cert), timings
    ok = (X @ A).equals(B)
    if not ok:
        raise InvariantViolation("localized residual check failed")
    cert = {"rows": [
        {"dom": _dom_cert(r.dom), "witness_cofactors": _strs(r.witness.cofactors),
         "witness": str(r.witness.element)}
        for r in rows
    ]}
    sol = {"X": X.numerator.to_strings(), "denominator": str(X.denominator)}
    return _record("locsolve", "solved", sol, cert, residual_ok=ok), timings


def _run_member(p: ProblemFile):
    R, S = p.ring, p.set
    if isinstance(R, IntPolyRing):
        return _run_member_zt(p)
    I = IdealSpec(R, p.ideal)
    if S is None:
        cof = I.membership(p.f)
        if cof is None:
            nf = I.lifter().obstruction([p.f])
            return _record("member", "no-solution", certificate={"normal_form": str(nf[0])})
        return _record("member", "solved", {"cofactors": _strs(cof)}, residual_ok=True)
    w = localization_problem(S, I)
    if w is None:
        cert = {}
        if isinstance(S, PrimeComplement):
            cert["refusal"] = _prime_refusal(S, I.gens)
        return _record("member", "no-solution", certificate=cert)
    return _record("member", "solved",
                   {"cofactors": _strs(w.cofactors), "element": str(w.element)},
                   residual_ok=True)


def _run_member_zt(p: ProblemFile):
    R, S = p.ring, p.set
    fmt = R.format
    if S is None:
        cof = zt_membership(p.f, p.ideal)
        if cof is None:
            return _record("member", "no-solution")
        return _record("member", "solved", {"cofactors": [fmt(c) for c in cof]},
                       residual_ok=True)
    w = localization_problem(S, list(p.ideal))
    if w is None:
        sb = strong_groebner_zt(p.ideal)
        return _record("member", "no-solution", certificate={
            "standard_basis": [fmt(g) for g in sb.gens],
            "leading_coefficients": sb.leading_coefficients()})
    return _record("member", "solved",
                   {"cofactors": [fmt(c) for c in w.cofactors], "element": fmt(w.element)},
                   residual_ok=True)


def _run_dom(p: ProblemFile):
    out = []
    for row in p.B.rows:
        out.append(_dom_cert(dom_with_cofactors(p.ring, p.A, row)))
    return _record("dom", "solved", {"dom": out}, residual_ok=True)


def _run_iszero(p: ProblemFile):
    R, S = p.ring, p.set
    if isinstance(R, IntPolyRing):
        return _record("iszero", "solved", {"is_zero": not p.f}, residual_ok=True)
    if S is None:
        nf = R.reduce(p.f)
        return _record("iszero", "solved", {"is_zero": not nf, "normal_form": str(nf)},
                       residual_ok=True)
    ann = ring_annihilator(R, [p.f])
    w = localization_problem(S, ann)
    cert = {"annihilator": _strs(ann.gens)}
    if w is not None:
        cert["witness"] = str(w.element)
        cert["witness_cofactors"] = _strs(w.cofactors)
    return _record("iszero", "solved", {"is_zero": w is not None or not R.reduce(p.f)}, cert,
                   residual_ok=True)


def _run_bench(p: ProblemFile, seed=None, count=None):
    cfg = p.bench
    seed = cfg.get("seed", 0) if seed is None else seed
    count = cfg.get("count", 10) if count is None else count
    res = bench_compare(p.ring, list(p.set.gens), count, seed,
                        cfg.get("m", 2), cfg.get("n", 2), cfg.get("deg", 2))
    rec = _record("bench", "solved", {"csv": res.csv()},
                  residual_ok=all(r.residual_ok for r in res.rows), warnings=res.warnings)
    return rec, res


def run_task(problem: ProblemFile, seed: int | None = None, count: int | None = None) -> dict:
    """Run a validated problem and return its result record."""
    start = time.perf_counter()
    timings = {}
    if problem.task == "locsolve":
        record, timings = _run_locsolve(problem)
    elif problem.task == "bench":
        record, _ = _run_bench(problem, seed, count)
    else:
        record = {
            "syz": _run_syz,
            "lift": _run_lift,
            "member": _run_member,
            "dom": _run_dom,
            "iszero": _run_iszero,
        }[problem.task](problem)
    timings.update(problem.timings)
    timings["total"] = (time.perf_counter() - start) * 1000
    record["timings_ms"] = {k: round(v, 3) for k, v in sorted(timings.items())}
    return record


def error_record(task, exc) -> dict:
    if isinstance(exc, ProblemError):
        err = exc.as_dict()
    else:
        err = {"kind": "internal", "message": str(exc)}
    rec = _record(task, "error")
    rec["error"] = err
    rec["timings_ms"] = {}
    return rec


def dumps(record: dict) -> str:
    return json.dumps(record, indent=2, sort_keys=True) + "\n"


def strip_timings(record: dict) -> dict:
    out = dict(record)
    out.pop("timings_ms", None)
    return out
