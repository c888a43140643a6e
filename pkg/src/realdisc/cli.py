"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error,
3 no generic configuration could be drawn.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import perm_oracle, report
from .pencil.config import GenericityExhausted, Tolerances
from .pencil.count import invariance_experiment
from .sign_calculus import (
    CountMode,
    OpenClosedProblem,
    admissible_splittings,
    boundary_epsilon,
    maslov_from_dimension,
    open_closed_dimension_check,
    open_closed_marked_point_bound,
    table_cells,
    theorem_invariance_check,
)

DEFAULT_SEED = 42
OUTPUT_DIR_ENV = "REALDISC_OUTPUT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GENERICITY = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    cells = table_cells()
    ok = all(c.verified for c in cells)
    if args.check:
        for c in cells:
            if not c.verified:
                print(f"mismatch: dim {c.n_mod4}, k {c.k_mod4}, {c.mode.value}: "
                      f"derived {c.sign}, reference {c.reference}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAIL
    _emit(report.table_json(cells) if args.format == "json" else report.table_text(cells), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cancel(args) -> int:
    rep = theorem_invariance_check(CountMode(args.mode), args.n, args.kmax)
    if args.format == "json":
        _emit(json.dumps({
            "mode": rep.mode.value, "n": rep.n, "kMax": rep.k_max, "checked": rep.checked,
            "failures": [{"k": k, "k1": s.k1, "mu1": s.mu1, "k2": s.k2, "mu2": s.mu2, "side": side}
                         for k, s, side in rep.failures],
            "pass": rep.passed,
        }, indent=2) + "\n", args.out)
    else:
        lines = [f"mode {rep.mode.value}, n={rep.n}, k<={rep.k_max}: {rep.checked} splittings, "
                 f"{len(rep.failures)} failures"]
        seen = set()
        for k, s, side in rep.failures:
            key = (k, s.k1, s.mu1, s.k2, s.mu2, side)
            if key not in seen:
                seen.add(key)
                lines.append(f"  k={k}: (k1={s.k1}, mu1={s.mu1} | k2={s.k2}, mu2={s.mu2}) side {side} does not cancel")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_splittings(args) -> int:
    if maslov_from_dimension(args.n, args.k) is None:
        print(f"error: no even Maslov index makes (n={args.n}, k={args.k}) rigid", file=sys.stderr)
        return EXIT_USAGE
    rows = [{"k1": s.k1, "mu1": s.mu1, "k2": s.k2, "mu2": s.mu2, "i": s.i,
             "epsilon": boundary_epsilon(s.k1, s.k2, s.i, args.n), "admissible": s.admissible}
            for s in admissible_splittings(args.n, args.k)]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        _emit("".join(f"k1={r['k1']} mu1={r['mu1']} | k2={r['k2']} mu2={r['mu2']}  i={r['i']}  eps={r['epsilon']}\n"
                      for r in rows), args.out)
    return EXIT_OK


def cmd_verify_signs(args) -> int:
    rep = perm_oracle.verify_all(args.kmax)
    lines = [f"{rep.checked} permutation checks, {len(rep.failures)} failures"]
    lines += [f"  FAIL {f}" for f in rep.failures]
    if rep.reading_disagreements:
        ks = sorted({d.k2 for d in rep.reading_disagreements})
        lines.append(f"note: the two readings of sigma differ in sign for k2 in {ks}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_open_closed(args) -> int:
    try:
        prob = OpenClosedProblem(args.n, args.mu, args.k, args.l, tuple(args.degq), args.mc)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    dim_ok = open_closed_dimension_check(prob)
    bound_ok = open_closed_marked_point_bound(prob.l, prob.mu, prob.MC)
    _emit(f"dimension condition: {'holds' if dim_ok else 'fails'}\n"
          f"interior point bound l <= min((mu-2)/2, MC): {'holds' if bound_ok else 'fails'}\n", args.out)
    return EXIT_OK if dim_ok and bound_ok else EXIT_FAIL


def cmd_count_cubics(args, parser) -> int:
    if args.real < 1:
        parser.error("a real configuration needs at least one real point (--real >= 1)")
    if args.real + 2 * args.pairs != 8:
        parser.error("cubics need --real + 2 * --pairs = 8")
    if args.trials < 2:
        parser.error("--trials must be at least 2")
    tol = Tolerances(interp=args.tol_interp, root_residual=args.tol_root, cluster=args.tol_cluster,
                     hess=args.tol_hess, node=args.tol_node)
    try:
        summary = invariance_experiment(args.real, args.pairs, args.trials, args.seed, tol=tol, jobs=args.jobs)
    except GenericityExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY

    out = args.out
    if out is None and os.environ.get(OUTPUT_DIR_ENV):
        out = str(Path(os.environ[OUTPUT_DIR_ENV]) / f"cubics_r{args.real}_c{args.pairs}_seed{args.seed}.{args.format}")
    render = {"json": report.summary_json, "csv": report.summary_csv, "text": report.summary_text}[args.format]
    _emit(render(summary), out)
    if out and args.format == "json":
        Path(out).with_suffix(".csv").write_text(report.summary_csv(summary))
    if not summary.passed:
        print(f"trials disagree: seeds {summary.disagreement}", file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realdisc", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default=None, help="write here instead of stdout")

    p = sub.add_parser("table", help="derive the A/B comparison table")
    common(p)
    p.add_argument("--check", action="store_true", help="only verify; exit status reports the result")

    p = sub.add_parser("cancel", help="check cancellation on every admissible splitting")
    common(p)
    p.add_argument("--mode", choices=[m.value for m in CountMode], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, default=25)

    p = sub.add_parser("splittings", help="list admissible boundary splittings")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify-signs", help="cross-check closed-form signs by inversion counting")
    common(p, formats=("text",))
    p.add_argument("--kmax", type=int, default=12)

    p = sub.add_parser("open-closed", help="dimension and interior-point conditions for open-closed counts")
    common(p, formats=("text",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--degq", type=int, nargs="+", required=True)
    p.add_argument("--mc", type=int, default=1)

    p = sub.add_parser("count-cubics", help="signed counts of real rational cubics over random configurations")
    common(p, formats=("json", "csv", "text"))
    p.add_argument("--real", type=int, default=8)
    p.add_argument("--pairs", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    d = Tolerances()
    p.add_argument("--tol-interp", type=float, default=d.interp)
    p.add_argument("--tol-root", type=float, default=d.root_residual)
    p.add_argument("--tol-cluster", type=float, default=d.cluster)
    p.add_argument("--tol-hess", type=float, default=d.hess)
    p.add_argument("--tol-node", type=float, default=d.node)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    handlers = {
        "table": cmd_table,
        "cancel": cmd_cancel,
        "splittings": cmd_splittings,
        "verify-signs": cmd_verify_signs,
        "open-closed": cmd_open_closed,
    }
    if args.command == "count-cubics":
        return cmd_count_cubics(args, parser)
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
