"""Command-line front end.

Four subcommands: ``minimize`` runs one optimizer on one objective and
writes its iteration trace, ``compare`` runs a method grid and prints a
report table, ``roots`` searches for roots of a complex function by
minimizing its squared modulus, and ``bench`` executes the named
reproduction suites.  Exit code 2 means the invocation itself was invalid;
a run that diverges or hits a numerical error still exits 0 with the
termination status in the output, because divergence is a result, not a
failure of the tool.
"""

import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path

import numpy as np

from .errors import InvalidInputError
from .harness import (ExperimentSpec, ResultRow, SUITES, build_spec,
                      emit_report, results_root, run_experiment, suite_spec,
                      x0_digest)
from .objectives import catalog_listing, default_start, make_benchmark
from .optimizers import METHODS, DeltaSchedule, StopCriteria, run
from .rootfind import builtin, find_root, parse_poly_coeffs, poly_mero


def _parse_floats(text, flag, parser):
    toks = [t for t in str(text).split(",") if t.strip() != ""]
    try:
        vals = [float(t) for t in toks]
    except ValueError:
        parser.error(f"{flag} expects comma-separated numbers, got {text!r}")
    if not vals:
        parser.error(f"{flag} expects at least one number")
    return vals


def _sched_from(args, parser):
    deltas = tuple(_parse_floats(args.delta_set, "--delta-set", parser))
    return DeltaSchedule(deltas=deltas, alpha=args.alpha)


def _stop_from(args):
    return StopCriteria(max_iter=args.max_iter, grad_tol=args.gtol,
                        step_tol=args.xtol)


def cmd_minimize(args, parser):
    if args.list_functions:
        listing = catalog_listing()
        sys.stdout.write(listing if listing.endswith("\n") else listing + "\n")
        return 0
    if not args.function:
        parser.error("--function is required (or use --list-functions)")

    dim = args.dim
    explicit = None
    if args.x0 and not args.x0.startswith("random:"):
        explicit = _parse_floats(args.x0, "--x0", parser)
        if dim is not None and len(explicit) != dim:
            parser.error(f"--x0 has {len(explicit)} coordinates "
                         f"but --dim is {dim}")
        dim = len(explicit) if dim is None else dim

    obj = make_benchmark(args.function, dim=dim)

    if explicit is not None:
        x0 = np.asarray(explicit, dtype=float)
    elif args.x0:
        seed_text = args.x0.split(":", 1)[1]
        try:
            draw_seed = int(seed_text)
        except ValueError:
            parser.error(f"--x0 random:<seed> needs an integer seed, "
                         f"got {seed_text!r}")
        rng = np.random.default_rng(draw_seed)
        x0 = rng.uniform(-args.x0_box, args.x0_box, obj.dim)
    else:
        start = default_start(args.function)
        if start is None:
            parser.error(f"{args.function} has no registered start point; "
                         f"pass --x0")
        x0 = np.asarray(start, dtype=float)
        if x0.size != obj.dim:
            parser.error(f"the registered start for {args.function} has "
                         f"dim {x0.size}, not {obj.dim}; pass --x0")

    sched = _sched_from(args, parser)
    stop = _stop_from(args)
    t0 = time.perf_counter()
    trace = run(args.method, obj, x0, sched=sched, stop=stop, seed=args.seed)
    wall = time.perf_counter() - t0

    slug = args.function.replace(":", "-")
    out = (Path(args.out) if args.out
           else results_root() / "minimize" / f"{slug}-{args.method}.csv")
    out.parent.mkdir(parents=True, exist_ok=True)
    trace.to_csv(out)

    row = ResultRow(args.method, args.function, x0_digest(tuple(x0)),
                    trace.iterations, trace.final_f, trace.final_grad_norm,
                    wall, trace.termination)
    sys.stdout.write(emit_report([row], "csv"))
    sys.stderr.write(f"trace written to {out}\n")
    return 0


def cmd_compare(args, parser):
    picked = [s for s in (args.suite, args.spec, args.function) if s]
    if len(picked) != 1:
        parser.error("pass exactly one of --suite, --spec, or --function")

    if args.suite:
        spec = suite_spec(args.suite)
        if args.seed is not None:
            spec = replace(spec, seed=args.seed)
    elif args.spec:
        spec = ExperimentSpec.from_json(Path(args.spec).read_text())
    else:
        if args.methods.strip().lower() == "all":
            methods = list(METHODS)
        else:
            methods = [m.strip() for m in args.methods.split(",")
                       if m.strip()]
        if not methods:
            parser.error("--methods must name at least one method")
        points = [_parse_floats(t, "--x0", parser) for t in (args.x0 or [])]
        if not points:
            start = default_start(args.function)
            if start is None:
                parser.error(f"{args.function} has no registered start "
                             f"point; pass --x0")
            points = [list(start)]
        params = {} if args.dim is None else {"dim": args.dim}
        spec = build_spec(
            name="compare-" + args.function.replace(":", "-"),
            objective=args.function, params=params,
            initial_points=points, methods=methods,
            stop={"max_iter": args.max_iter, "grad_tol": args.gtol},
            seed=args.seed)
    if args.out:
        spec = replace(spec, out_dir=args.out)

    rows = run_experiment(spec)
    sys.stdout.write(emit_report(rows, args.format))
    return 0


def cmd_roots(args, parser):
    if bool(args.poly) == bool(args.builtin):
        parser.error("pass exactly one of --poly or --builtin")
    m = poly_mero(parse_poly_coeffs(args.poly)) if args.poly \
        else builtin(args.builtin)

    vals = _parse_floats(args.x0, "--x0", parser)
    if len(vals) != 2:
        parser.error(f"--x0 expects two numbers re,im, got {args.x0!r}")

    result = find_root(m, complex(vals[0], vals[1]), method=args.method,
                       sched=_sched_from(args, parser), stop=_stop_from(args),
                       seed=args.seed)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        result.trace.to_csv(out)
        sys.stderr.write(f"trace written to {out}\n")
    sys.stdout.write(result.to_json() + "\n")
    return 0


def cmd_bench(args, parser):
    if args.suites.strip().lower() == "all":
        names = list(SUITES)
    else:
        names = [s.strip() for s in args.suites.split(",") if s.strip()]
    if not names:
        parser.error("--suites must name at least one suite")

    for name in names:
        spec = suite_spec(name)
        if args.out:
            spec = replace(spec, out_dir=str(Path(args.out) / spec.name))
        rows = run_experiment(spec)
        sys.stdout.write(f"## {spec.name}\n\n")
        sys.stdout.write(emit_report(rows, "markdown"))
        sys.stdout.write("\n")
    return 0


def _add_run_flags(p, include_xtol=True):
    p.add_argument("--method", default="nqn", choices=list(METHODS),
                   help="optimizer to run")
    p.add_argument("--delta-set", default="0,1,-1",
                   help="comma-separated shift coefficients, tried in order")
    p.add_argument("--alpha", type=float, default=1.0,
                   help="exponent in the shift size h(t) = min{1, t^(1+alpha)}")
    p.add_argument("--max-iter", type=int, default=1000,
                   help="iteration cap")
    p.add_argument("--gtol", type=float, default=1e-10,
                   help="stop when the gradient norm falls to this")
    if include_xtol:
        p.add_argument("--xtol", type=float, default=1e-20,
                       help="stop when the step norm falls to this")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for any randomized method choices")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qnewton",
        description="Newton-type optimization with spectrally reflected "
                    "steps and shift-stabilized Hessians: single runs, "
                    "method comparisons, benchmark suites, and complex "
                    "root finding.",
        epilog="Result files go under ./results by default; set the "
               "QNEWTON_RESULTS environment variable to move them.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    p = sub.add_parser(
        "minimize", formatter_class=fmt,
        help="run one optimizer on one objective and write its trace",
        description="Run one optimizer on one objective, write the "
                    "iteration trace as CSV (plus a .json summary sidecar), "
                    "and print the result row.")
    p.add_argument("--function", default=None,
                   help="objective identifier or alias, e.g. rosenbrock, "
                        "griewank, protein:ABBBA")
    p.add_argument("--x0", default=None,
                   help="comma-separated start point (use --x0=-1,2 when "
                        "the first coordinate is negative), or random:<seed> "
                        "for a uniform draw; defaults to the registered "
                        "start")
    p.add_argument("--x0-box", type=float, default=2.0,
                   help="half-width of the cube random:<seed> draws from")
    p.add_argument("--dim", type=int, default=None,
                   help="dimension for size-parametric objectives")
    _add_run_flags(p)
    p.add_argument("--out", default=None,
                   help="trace CSV path (default: "
                        "<results>/minimize/<function>-<method>.csv)")
    p.add_argument("--list-functions", action="store_true",
                   help="print the objective catalog and exit")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser(
        "compare", formatter_class=fmt,
        help="run a grid of methods and print a report table",
        description="Run a method-by-start grid from a named suite, a JSON "
                    "spec file, or inline flags, and print the result "
                    "table.")
    p.add_argument("--suite", default=None, choices=sorted(SUITES),
                   help="named reproduction suite")
    p.add_argument("--spec", default=None,
                   help="path to an experiment JSON document")
    p.add_argument("--function", default=None,
                   help="objective identifier for an inline comparison")
    p.add_argument("--methods", default="all",
                   help="comma-separated method ids, or 'all'")
    p.add_argument("--x0", action="append", default=None,
                   help="start point as comma-separated numbers; repeat the "
                        "flag for several starts")
    p.add_argument("--dim", type=int, default=None,
                   help="dimension for size-parametric objectives")
    p.add_argument("--max-iter", type=int, default=1000, help="iteration cap")
    p.add_argument("--gtol", type=float, default=1e-10,
                   help="stop when the gradient norm falls to this")
    p.add_argument("--seed", type=int, default=None,
                   help="base seed for randomized methods and drawn starts")
    p.add_argument("--out", default=None,
                   help="directory for traces and rows.csv "
                        "(default: <results>/<experiment-name>)")
    p.add_argument("--format", default="markdown",
                   choices=("markdown", "csv"), help="report format")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser(
        "roots", formatter_class=fmt,
        help="find a root of a complex function from a start point",
        description="Minimize the squared modulus of a polynomial or a "
                    "built-in complex function and print the end point, "
                    "its classification, and the iteration count as JSON.")
    p.add_argument("--poly", default=None,
                   help="polynomial coefficients, highest degree first, "
                        "e.g. 1,0,1 for z^2+1 (complex entries like 1+2j "
                        "are accepted)")
    p.add_argument("--builtin", default=None,
                   choices=("g1", "g2", "g3", "g4", "g5", "g6"),
                   help="built-in test function")
    p.add_argument("--x0", required=True,
                   help="start point as re,im (use --x0=-1,2 when the "
                        "first coordinate is negative)")
    _add_run_flags(p)
    p.add_argument("--out", default=None,
                   help="optional trace CSV path")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser(
        "bench", formatter_class=fmt,
        help="run the named reproduction suites",
        description="Run reproduction suites and print one markdown table "
                    "per suite.  Available: " + ", ".join(sorted(SUITES)) + ".")
    p.add_argument("--suites", default="all",
                   help="comma-separated suite names, or 'all'")
    p.add_argument("--out", default=None,
                   help="base directory for suite outputs "
                        "(default: <results>/<suite-name>)")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except InvalidInputError as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
