"""Command-line entry point.

Exit codes: 0 success or verified, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .certificate import default_jobs, verify_lemma
from .cliquelp import MAX_PACKING_VERTICES, fmt, max_fractional_triangle_packing, max_integer_triangle_packing
from .decomposer import (
    AveragingPlan,
    BudgetExceeded,
    averaging_decomposition,
    corollary_check,
    greedy_decomposition,
)
from .flags import CertificateMatrix
from .graphs import GraphError, enumerate_graphs, read_graph6_lines, write_graph6

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_graphs(path: str):
    try:
        with open(path, "rb") as fh:
            return read_graph6_lines(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _open_out(path: str):
    try:
        return open(path, "w")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def cmd_enumerate(args) -> int:
    graphs = enumerate_graphs(args.n)
    lines = "".join(c.cert.decode() + "\n" for c in graphs)
    if args.out:
        with _open_out(args.out) as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    print(len(graphs), file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    matrix = None
    if args.matrix:
        try:
            matrix = CertificateMatrix.from_json(json.loads(Path(args.matrix).read_text()))
        except OSError as exc:
            raise InputError(f"cannot read {args.matrix}: {exc.strerror}") from None
        except ValueError as exc:
            raise InputError(f"{args.matrix}: {exc}") from None
    try:
        threshold = Fraction(args.threshold)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad threshold {args.threshold!r}") from None
    fh = _open_out(args.report) if args.report else None
    report = verify_lemma(matrix, threshold, jobs=args.jobs)
    if fh is not None:
        with fh:
            report.write_jsonl(fh)
    summary = {**report.header(), **report.summary()}
    print(json.dumps(summary))
    return EXIT_OK if report.verified else EXIT_FAIL


def cmd_values(args) -> int:
    for g in _read_graphs(args.inp):
        if g.n > MAX_PACKING_VERTICES:
            raise InputError(f"values supports at most {MAX_PACKING_VERTICES} vertices, got {g.n}")
        e = g.num_edges()
        nu = int(max_integer_triangle_packing(g).value)
        nu_f = max_fractional_triangle_packing(g).value
        row = {"g6": write_graph6(g).decode(), "e": e, "nu": nu, "nu_f": fmt(nu_f),
               "pi3": 2 * e - 3 * nu, "pi3f": fmt(2 * e - 3 * nu_f)}
        if args.approx:
            row["pi3f_approx"] = float(2 * e - 3 * nu_f)
        print(json.dumps(row))
    return EXIT_OK


def cmd_decompose(args) -> int:
    graphs = _read_graphs(args.inp)
    records = []
    for g in graphs:
        if args.method == "greedy":
            dec = greedy_decomposition(g)
            summary = {"n": g.n, "edges": g.num_edges(), "total_weight": fmt(dec.total_weight),
                       "half_n_squared": fmt(Fraction(g.n * g.n, 2)), "mode": "greedy"}
        else:
            if args.sample:
                plan = AveragingPlan("sampled", args.sample, args.seed)
            else:
                plan = AveragingPlan("exhaustive", budget=args.budget)
            try:
                res = averaging_decomposition(g, plan, jobs=args.jobs)
            except BudgetExceeded as exc:
                raise InputError(str(exc)) from None
            dec = res.decomposition
            summary = res.summary(g)
        records.append({"g6": write_graph6(g).decode(), "decomposition": dec.to_json(g.n),
                        "summary": summary})
        print(json.dumps(summary))
    if args.out:
        with _open_out(args.out) as fh:
            for rec in records:
                fh.write(json.dumps(rec) + "\n")
    return EXIT_OK


def cmd_corollary(args) -> int:
    for g in _read_graphs(args.inp):
        rec = corollary_check(g)
        print(json.dumps({"g6": write_graph6(g).decode(), "n": g.n, "edges": g.num_edges(),
                          **rec.to_json()}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tridecomp",
                                description="Exact edge/triangle decompositions and their certificate.")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: $TRIDECOMP_JOBS or available cores)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="graphs on n vertices up to isomorphism, as graph6")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="check the certificate over all 7-vertex graphs")
    s.add_argument("--matrix", help="JSON file {denominator, numerators}")
    s.add_argument("--threshold", default="21")
    s.add_argument("--report", help="JSON-lines report path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("values", help="nu, nu_f, pi3, pi3f per input graph")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--approx", action="store_true", help="add a float column (approximate)")
    s.set_defaults(func=cmd_values)

    s = sub.add_parser("decompose", help="averaging or greedy decomposition")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--method", choices=("averaging", "greedy"), default="averaging")
    s.add_argument("--sample", type=int, default=None, help="sampled averaging with this many subsets")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=AveragingPlan().budget)
    s.add_argument("--out")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("corollary", help="edge-disjoint triangles against 2k/3")
    s.add_argument("--in", dest="inp", required=True)
    s.set_defaults(func=cmd_corollary)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        try:
            args.jobs = default_jobs()
        except ValueError:
            parser.error("TRIDECOMP_JOBS must be an integer")
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except (InputError, GraphError) as exc:
        print(f"tridecomp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
