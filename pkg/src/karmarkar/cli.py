"""Command-line front end.

    karmarkar solve problem.json [--epsilon 1e-6] [--max-iter K] [--alpha A]
                                 [--trace out.csv] [--json]
    karmarkar check problem.json
    karmarkar bound problem.json [--epsilon 1e-6]
    karmarkar vertices problem.json [--cost]

Results go to stdout, diagnostics to stderr. Exit codes: 0 solved (or the
centre is already optimal), 1 bad input, 2 iteration limit, 3 objective
constant on the feasible set, 4 numerical breakdown.
"""

import argparse
import json
import math
import sys

from . import oracle
from .errors import DomainError, KarmarkarError, RankDeficient
from .geometry import SimplexGeometry
from .potential import PSI_ONE
from .problem import load, validate
from .solver import SolverConfig, Status, iteration_bound, solve, trace_csv

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CODES = {
    Status.CONVERGED: 0,
    Status.TRIVIAL_CENTRE_OPTIMAL: 0,
    Status.ITERATION_LIMIT: 2,
    Status.CONSTANT_OBJECTIVE: 3,
    Status.NUMERICAL_BREAKDOWN: 4,
}


def _fmt(v):
    return f"{v:.17g}"


def _vec(xs):
    return " ".join(_fmt(float(v)) for v in xs)


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text!r}")
    return value


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _alpha(text):
    return None if text == "auto" else _positive_float(text)


def _error(msg):
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def _load_validated(path):
    """Load and validate; returns the problem or raises KarmarkarError."""
    problem = load(path)
    report = validate(problem)
    if not report.ok:
        print(report.format(), file=sys.stderr)
        raise DomainError("problem violates the canonical-form assumptions")
    return problem


def cmd_solve(args):
    problem = _load_validated(args.problem)
    config = SolverConfig(
        epsilon=args.epsilon,
        max_iterations=args.max_iter or None,
        alpha_override=args.alpha,
    )
    geometry = config.geometry(problem.n)  # rejects alpha * r >= 1 before running
    result = solve(problem, config)

    if args.trace:
        with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(trace_csv(result.trace))

    if args.json:
        payload = {
            "status": str(result.status),
            "iterations": result.iterations,
            "theoretical_bound": result.theoretical_bound,
            "objective": result.objective,
            "x": result.final_x.tolist(),
            "alpha": geometry.alpha,
            "message": result.message,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"status: {result.status}")
        print(f"iterations: {result.iterations}")
        print(f"theoretical_bound: {result.theoretical_bound}")
        print(f"objective: {_fmt(result.objective)}")
        print(f"x: {_vec(result.final_x)}")
        flagged = sum(rec.flagged for rec in result.trace)
        if flagged:
            print(f"warning: {flagged} step(s) fell short of the guaranteed potential drop",
                  file=sys.stderr)
    if result.message and result.status not in (Status.CONVERGED, Status.TRIVIAL_CENTRE_OPTIMAL):
        print(result.message, file=sys.stderr)
    return EXIT_CODES[result.status]


def cmd_check(args):
    problem = load(args.problem)
    try:
        report = validate(problem)
    except RankDeficient as exc:
        print(exc.report.format())
        return EXIT_INPUT
    print(report.format())
    return EXIT_OK if report.ok else EXIT_INPUT


def cmd_bound(args):
    problem = load(args.problem)
    n = problem.n
    geometry = SimplexGeometry.for_dimension(n)
    c_dot_e = problem.c_dot_e()
    if c_dot_e < -1e-9:
        raise DomainError(f"c'e = {c_dot_e!r} is negative")
    bound = iteration_bound(n, c_dot_e, args.epsilon) if c_dot_e > 1e-9 else 0
    print(f"n: {n}")
    print(f"c'e: {_fmt(c_dot_e)}")
    print(f"R: {_fmt(geometry.R)}")
    print(f"r: {_fmt(geometry.r)}")
    print(f"alpha: {_fmt(geometry.alpha)}")
    print(f"psi(1): {_fmt(PSI_ONE)}")
    print(f"epsilon: {_fmt(args.epsilon)}")
    print(f"bound: {bound}")
    return EXIT_OK


def cmd_vertices(args):
    problem = load(args.problem)
    vs = oracle.enumerate_vertices(problem)
    payload = {"count": len(vs), "vertices": [v.tolist() for v in vs.vertices]}
    if args.cost:
        payload["optimum_value"] = vs.optimum_value
        payload["optimum_vertex"] = vs.optimum_vertex.tolist()
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="karmarkar",
        description="Projective-scaling LP solver for problems in canonical form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the algorithm from the centre")
    p.add_argument("problem")
    p.add_argument("--epsilon", type=_positive_float, default=1e-6)
    p.add_argument("--max-iter", type=_nonnegative_int, default=0,
                   help="iteration cap; 0 means four times the theoretical bound")
    p.add_argument("--alpha", type=_alpha, default=None,
                   help="step fraction, or 'auto' for 1/(r+1)")
    p.add_argument("--trace", metavar="CSV", help="write the per-iteration trace here")
    p.add_argument("--json", action="store_true", help="print a JSON result object")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="validate the canonical-form assumptions")
    p.add_argument("problem")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bound", help="print geometry constants and the iteration bound")
    p.add_argument("problem")
    p.add_argument("--epsilon", type=_positive_float, default=1e-6)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("vertices", help="enumerate vertices of the feasible set (n <= 16)")
    p.add_argument("problem")
    p.add_argument("--cost", action="store_true", help="also report the exact optimum")
    p.set_defaults(func=cmd_vertices)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2, which is reserved for the iteration limit
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except KarmarkarError as exc:
        return _error(f"{type(exc).__name__}: {exc}")
    except OSError as exc:
        return _error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
