"""Command-line entry point: ``locring <task> --in FILE``."""

from __future__ import annotations

import argparse
import sys

from .bench import BenchDisagreement
from .problem import TASKS, ProblemError, dumps, error_record, load_problem, run_task
from .rings import InvariantViolation

EXIT_OK, EXIT_NO_SOLUTION, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locring",
        description="Syzygies, lifts and localized linear systems over polynomial rings.",
    )
    parser.add_argument("task", choices=TASKS)
    parser.add_argument("--in", dest="infile", required=True, help="problem file (JSON)")
    parser.add_argument("--out", dest="outfile", help="write the result here instead of stdout")
    parser.add_argument("--seed", type=int, help="bench seed (overrides the file)")
    parser.add_argument("--count", type=int, help="bench instance count (overrides the file)")
    parser.add_argument("--ordering", choices=("lex", "degrevlex"),
                        help="monomial ordering (overrides the file)")
    return parser


def _emit(text: str, outfile: str | None):
    if outfile:
        with open(outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.infile, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"locring: cannot read {args.infile}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    try:
        problem = load_problem(text, task=args.task, ordering=args.ordering)
        record = run_task(problem, seed=args.seed, count=args.count)
    except ProblemError as exc:
        _emit(dumps(error_record(args.task, exc)), args.outfile)
        return EXIT_INPUT
    except (InvariantViolation, BenchDisagreement) as exc:
        print(f"locring: {exc}", file=sys.stderr)
        _emit(dumps(error_record(args.task, exc)), args.outfile)
        return EXIT_INTERNAL
    except (ValueError, ArithmeticError) as exc:
        # solver preconditions (e.g. a denominator outside the set) are input errors
        _emit(dumps(error_record(args.task, ProblemError(str(exc)))), args.outfile)
        return EXIT_INPUT

    if args.task == "bench":
        for w in record["warnings"]:
            print(f"warning: {w}", file=sys.stderr)
        _emit(record["solution"]["csv"], args.outfile)
        return EXIT_OK
    _emit(dumps(record), args.outfile)
    return EXIT_NO_SOLUTION if record["verdict"] == "no-solution" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
