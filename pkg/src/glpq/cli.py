"""Command-line front end: normalize expressions, run suites, spot-check.

Exit codes: 0 all checks pass, 1 at least one failure, 2 usage or
syntax errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import dsl, mside, series, tside
from .errors import AlgebraError, DslSyntaxError, UnknownIdentifier
from .numeric import (sample_mside, sample_series, sample_tside, spotcheck)
from .report import Report


def _parse_ray(text):
    try:
        a, b = text.split(",")
        return Fraction(a), Fraction(b)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad ray {text!r}: {exc}")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="glpq",
        description="Exact kernel for the two-parameter quantum supergroup "
                    "GL_pq(1|1): normal forms, supermatrix identities and "
                    "verification suites.")
    sub = ap.add_subparsers(dest="command", required=True)

    ctx_kw = dict(choices=("tside", "mside", "series"), default="tside")
    norm = sub.add_parser("normalize", help="print the canonical form")
    norm.add_argument("expr")
    norm.add_argument("--ctx", **ctx_kw)

    ev = sub.add_parser("eval", help="evaluate an expression numerically")
    ev.add_argument("expr")
    ev.add_argument("--ctx", **ctx_kw)
    ev.add_argument("--assign", default="",
                    help="comma-separated name=value pairs, e.g. p=2,q=3")

    st = sub.add_parser("suite", help="run a verification suite")
    st.add_argument("name", choices=("section2", "section3", "appendix",
                                     "series", "mside", "all"))
    st.add_argument("--n-bound", type=int, default=6,
                    help="symmetric exponent range of the power identities")
    st.add_argument("--m-bound", type=int, default=4,
                    help="symmetric range of the two-exponent reordering")
    st.add_argument("--n-max", type=int, default=8)
    st.add_argument("--k-max", type=int, default=6)
    st.add_argument("--N", type=int, default=6)
    st.add_argument("--K", type=int, default=12)
    st.add_argument("--weight", type=int, default=8)
    st.add_argument("--rays", type=_parse_ray, nargs="+", default=None,
                    metavar="A,B")
    st.add_argument("--json", dest="json_path", default=None)
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--verbose", action="store_true")

    sp = sub.add_parser("spotcheck", help="numeric cross-validation")
    sp.add_argument("name", choices=("section2", "section3", "appendix",
                                     "series", "mside", "all"))
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", dest="json_path", default=None)
    sp.add_argument("--verbose", action="store_true")
    return ap


def _series_cfgs(args):
    rays = args.rays or list(series.DEFAULT_RAYS)
    return [series.SeriesConfig(a, b, N=args.N, K=args.K,
                                weight=min(args.weight, args.K))
            for a, b in rays]


def _merge(name, reports, params):
    checks = []
    for rep in reports:
        label = rep.suite
        ray = rep.params.get("alpha")
        if ray is not None:
            label += f"[{rep.params['alpha']},{rep.params['beta_ray']}]"
        for c in rep.checks:
            checks.append(type(c)(f"{label}:{c.id}", c.anchor, c.status,
                                  c.witness))
    return Report(name, params, checks,
                  sum(r.elapsed_ms for r in reports))


def run_suites(args):
    if args.name == "section2":
        return tside.verify_section2(args.n_bound, args.m_bound)
    if args.name == "section3":
        return tside.verify_section3(args.n_max)
    if args.name == "appendix":
        return tside.verify_appendix(args.k_max)
    if args.name == "mside":
        return mside.verify_mside(args.n_max)
    if args.name == "series":
        reports = [series.verify_series(cfg) for cfg in _series_cfgs(args)]
        return _merge("series", reports,
                      {"N": args.N, "K": args.K,
                       "weight": min(args.weight, args.K),
                       "rays": [f"{c.alpha},{c.beta_ray}"
                                for c in _series_cfgs(args)]})
    reports = [tside.verify_section2(args.n_bound, args.m_bound),
               tside.verify_section3(args.n_max),
               tside.verify_appendix(args.k_max),
               mside.verify_mside(args.n_max)]
    reports += [series.verify_series(cfg) for cfg in _series_cfgs(args)]
    return _merge("all", reports, {"seed": args.seed})


_SPOT_TABLE = {
    "section2": (lambda: tside.section2_identities(), sample_tside),
    "section3": (lambda: tside.section3_identities(6), sample_tside),
    "appendix": (lambda: tside.appendix_identities(4), sample_tside),
    "mside": (lambda: mside.mside_identities(6), sample_mside),
}


def run_spotcheck(args):
    rng = random.Random(args.seed)
    reports = []
    names = (["section2", "section3", "appendix", "mside", "series"]
             if args.name == "all" else [args.name])
    for name in names:
        if name == "series":
            cfg = series.SeriesConfig(Fraction(1), Fraction(2))
            rep = spotcheck("series", series.series_identities(cfg),
                            sample_series, rng, trials=args.trials,
                            params={"alpha": "1", "beta_ray": "2"})
        else:
            gen, sampler = _SPOT_TABLE[name]
            rep = spotcheck(name, gen(), sampler, rng, trials=args.trials)
        reports.append(rep)
    if len(reports) == 1:
        return reports[0]
    return _merge("spotcheck.all", reports, {"seed": args.seed,
                                             "trials": args.trials})


def cmd_normalize(args):
    element = dsl.evaluate(args.expr, args.ctx)
    print(dsl.print_canonical(element))
    return 0


def cmd_eval(args):
    assignment = {}
    if args.assign:
        for pair in args.assign.split(","):
            name, _, value = pair.partition("=")
            assignment[name.strip()] = float(value)
    element = dsl.evaluate(args.expr, args.ctx)
    from .numeric import eval_terms
    values = eval_terms(element, assignment)
    if not values:
        print("0")
        return 0
    from .printing import _mono_str
    elem = getattr(element, "element", element)
    for m in sorted(values):
        word = _mono_str(elem.pres, m) or "1"
        print(f"{word}: {values[m]:.12g}")
    return 0


def _finish(report, args):
    for line in report.summary_lines(verbose=getattr(args, "verbose", False)):
        print(line)
    if getattr(args, "json_path", None):
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return 0 if report.ok else 1


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "normalize":
            return cmd_normalize(args)
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "suite":
            return _finish(run_suites(args), args)
        if args.command == "spotcheck":
            return _finish(run_spotcheck(args), args)
    except (DslSyntaxError, UnknownIdentifier) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
