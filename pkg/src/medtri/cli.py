"""``medtri`` command line.

Exit status is 0 whenever a run completes, whatever it finds, and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from . import families as fam
from . import prop_checks as pc
from . import report
from . import search
from .core import MAX_SIDE, DegenerateTriangleError, Triangle

EXIT_OK = 0
EXIT_USAGE = 2

GEN_FAMILIES = {"f1": "F1", "f2a": "F2a", "f2b": "F2b", "f3": "F3", "f4": "F4"}


class UsageError(Exception):
    pass


def _bound(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= v <= MAX_SIDE:
        raise argparse.ArgumentTypeError(f"must be in 1..{MAX_SIDE}, got {v}")
    return v


def _workers(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("worker count must be >= 1")
    return v


def _side(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"side length must be an integer: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "human"], default=None)
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")
    common.add_argument("--workers", type=_workers, default=1)
    common.add_argument("--dedup", action="store_true", help="collapse hits by canonical triangle")
    common.add_argument("--diagnostics", action="store_true",
                        help="report rejected candidates on standard error")

    p = argparse.ArgumentParser(prog="medtri", description="Integer triangles with integral medians.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("medians", parents=[common], help="median lengths of one triangle")
    s.add_argument("sides", nargs=3, type=_side, metavar="SIDE")

    s = sub.add_parser("classify", parents=[common], help="tags and family witnesses of one triangle")
    s.add_argument("sides", nargs=3, type=_side, metavar="SIDE")

    s = sub.add_parser("gen", parents=[common], help="generate a parametric family")
    s.add_argument("family", choices=sorted(GEN_FAMILIES))
    s.add_argument("--m-max", type=_bound)
    s.add_argument("--n-max", type=_bound)
    s.add_argument("--delta-max", type=_bound)
    s.add_argument("--k-max", type=_bound)
    s.add_argument("--l-max", type=_bound)
    s.add_argument("--odd-max", type=_bound)
    s.add_argument("--e-max", type=_bound)
    s.add_argument("--max-side", type=_bound, help="drop hits with a longer side")

    s = sub.add_parser("search", parents=[common], help="exhaustive search for integral medians")
    s.add_argument("--max-side", type=_bound, required=True)
    s.add_argument("--min-integral", type=int, choices=[0, 1, 2, 3], default=1)
    s.add_argument("--filter", choices=["scalene", "isosceles"], action="append", default=[])

    s = sub.add_parser("verify", parents=[common], help="run the 2-adic survey or three-median experiment")
    s.add_argument("prop", choices=["prop1", "prop2"])
    s.add_argument("--max-side", type=_bound, required=True)

    s = sub.add_parser("census", parents=[common], help="analyze every triangle up to a bound")
    s.add_argument("--max-side", type=_bound, required=True)

    s = sub.add_parser("coverage", parents=[common], help="brute force vs. generator comparison")
    s.add_argument("--max-side", type=_bound, required=True)
    s.add_argument("--family", action="append", choices=["F1", "F2", "F3", "F4"])
    return p


def _gen_kwargs(family: str, args) -> dict:
    def need(name, value):
        if value is None:
            raise UsageError(f"gen {family.lower()} requires --{name}")
        return value

    if family in ("F1", "F2a", "F2b"):
        kw = dict(m_max=need("m-max", args.m_max), delta_max=need("delta-max", args.delta_max))
        if args.n_max is not None:
            kw["n_max"] = args.n_max
    elif family == "F3":
        kw = dict(k_max=need("k-max", args.k_max), l_max=need("l-max", args.l_max),
                  delta_max=need("delta-max", args.delta_max))
    else:
        e_max = need("e-max", args.e_max)
        if e_max < 2:
            raise UsageError("--e-max must be at least 2 (need e1 < e3)")
        kw = dict(odd_max=need("odd-max", args.odd_max), e_max=e_max)
        if args.diagnostics:
            kw["on_reject"] = lambda p, reason: print(f"rejected {p}: {reason}", file=sys.stderr)
    kw["max_side"] = args.max_side
    return kw


def _emit(rows, columns, fmt, out, human):
    if fmt == "human":
        n = 0
        for row in rows:
            print(human(row), file=out)
            n += 1
        return n
    return report.write_rows(rows, columns, fmt, out)


def _triangle(sides) -> Triangle:
    try:
        return Triangle(*sides)
    except (DegenerateTriangleError, OverflowError) as e:
        raise UsageError(str(e))


def run(args, out) -> int:
    fmt = args.format
    cmd = args.command

    if cmd == "medians":
        t = _triangle(args.sides)
        rec = search.SearchRecord.from_triangle(t, canonical=False)
        if (fmt or "human") == "human":
            for line in report.human_medians(t):
                print(line, file=out)
        else:
            report.write_rows([rec.to_dict()], report.RECORD_COLUMNS, fmt, out)

    elif cmd == "classify":
        t = _triangle(args.sides)
        rec = search.SearchRecord.from_triangle(t, canonical=False)
        witnesses = search.family_witnesses(t)
        if (fmt or "human") == "human":
            print(f"triangle {t.sides}: {{{', '.join(rec.tags)}}}", file=out)
            for family, pts in witnesses.items():
                print(f"  {family} witness parameters: {pts}", file=out)
        else:
            row = rec.to_dict()
            row["witnesses"] = {k: [list(p) for p in v] for k, v in witnesses.items()}
            cols = report.RECORD_COLUMNS + ["witnesses"]
            if fmt == "csv":
                row["witnesses"] = [f"{k}:{','.join(map(str, p))}" for k, v in witnesses.items() for p in v]
            report.write_rows([row], cols, fmt, out)

    elif cmd == "gen":
        family = GEN_FAMILIES[args.family]
        hits = fam.generate(family, **_gen_kwargs(family, args))
        if args.dedup:
            hits = fam.dedup_hits(hits)
        rows = hits if (fmt or "csv") == "human" else (report.hit_row(h) for h in hits)
        _emit(rows, report.HIT_COLUMNS, fmt or "csv", out, report.human_hit)

    elif cmd == "search":
        recs = search.search_integral_medians(args.max_side, args.min_integral, args.filter,
                                              workers=args.workers)
        f = fmt or "csv"
        rows = recs if f == "human" else (r.to_dict() for r in recs)
        n = _emit(rows, report.RECORD_COLUMNS, f, out, report.human_record)
        print(f"{n} record(s)", file=sys.stderr)

    elif cmd == "verify":
        f = fmt or "human"
        if args.prop == "prop1":
            survey = pc.prop1_necessity_survey(args.max_side, workers=args.workers)
            rows = survey.failures if f == "human" else (report.prop1_row(r) for r in survey.failures)
            _emit(rows, report.PROP1_COLUMNS, f, out, report.human_prop1)
            summary = survey.summary()
        else:
            findings = pc.prop2_experiment(args.max_side, workers=args.workers)
            recs = [search.SearchRecord.from_triangle(x.triangle) for x in findings]
            rows = recs if f == "human" else [r.to_dict() for r in recs]
            _emit(rows, report.RECORD_COLUMNS, f, out, report.human_record)
            summary = pc.prop2_verdict(findings, args.max_side)
        print(summary, file=out if f == "human" else sys.stderr)

    elif cmd == "census":
        census = search.median_census(args.max_side, workers=args.workers)
        for line in census.lines():
            print(line, file=out)

    elif cmd == "coverage":
        rep = search.coverage_report(args.max_side, args.family or ("F1", "F2", "F3", "F4"),
                                     workers=args.workers)
        for cov in rep.families.values():
            print(cov.summary(), file=out)
            for t in cov.missing:
                print(f"  missing {t.sides}", file=out)
            for t in cov.extra:
                print(f"  extra {t.sides}", file=out)
        for w in rep.warnings:
            print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            out = sys.stdout
            if args.out:
                out = stack.enter_context(open(args.out, "w", newline=""))
            return run(args, out)
    except UsageError as e:
        print(f"medtri: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"medtri: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
