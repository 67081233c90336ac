"""Command-line interface: compute series, verify identities, specialize.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 formula
precondition failure.  All numeric output is exact; big integers are printed
as decimal strings in JSON.  Identical invocations print identical bytes.
The environment variable HODGE_SERIES_THREADS caps the number of worker
threads used to run independent verification checks (default 1); results are
buffered and emitted in a fixed order either way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import gcd

from . import formulas, recursion
from .formulas import NotCoprime, NotGoodCase
from .ratfun import BivarPoly, RatFun1, RatFun2, UniPoly
from .rootdata import GroupSpec, degrees_of, good_case, parse_degree, parse_group


class UsageError(ValueError):
    pass


def _parse_spec_degree(args, need_degree=True):
    try:
        spec = parse_group(args.group)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not need_degree:
        return spec, None
    raw = args.degree if args.degree is not None else ",".join(
        "0" for _ in spec.factors)
    try:
        d = parse_degree(raw, spec)
    except ValueError as exc:
        raise UsageError(str(exc))
    return spec, d


def _single_gl(spec, d):
    if len(spec.factors) != 1 or spec.factors[0][0] != "GL":
        raise UsageError("fixed-det requires a single GL factor")
    return spec.factors[0][1], d[0]


def _compute_object(args):
    spec, d = _parse_spec_degree(args, need_degree=args.what != "classifying")
    if args.what == "classifying":
        return spec, None, formulas.hp_classifying(spec)
    g = args.genus
    if args.what == "stack":
        return spec, d, formulas.a_series(spec, g)
    if args.what == "semistable":
        return spec, d, formulas.hp_semistable_closed(spec, d, g)
    if args.what == "moduli":
        return spec, d, formulas.hp_moduli_space(spec, d, g)
    if args.what == "fixed-det":
        r, dd = _single_gl(spec, d)
        fd = formulas.hp_moduli_fixed_det(r, dd, g)
        bound = 2 * (g - 1) * (r * r - 1)
        return spec, d, formulas.to_polynomial(fd, bound)
    raise UsageError("unknown --what %r" % (args.what,))


def _poly_json(p: BivarPoly):
    return p.json_terms()


def _uni_json(p: UniPoly):
    return [[d, str(c)] for d, c in sorted(p.terms.items())]


def cmd_compute(args) -> int:
    spec, d, obj = _compute_object(args)
    expansion = None
    if args.expand is not None:
        r2 = obj if isinstance(obj, RatFun2) else RatFun2(obj)
        expansion = r2.expand(args.expand)
    if args.format == "json":
        out = {"group": str(spec), "what": args.what}
        if d is not None:
            out["degree"] = list(d)
        if args.what != "classifying":
            out["genus"] = args.genus
        if isinstance(obj, BivarPoly):
            out["polynomial"] = _poly_json(obj)
        else:
            out["num"] = _poly_json(obj.num)
            out["den"] = _poly_json(obj.den)
        if expansion is not None:
            out["expansion"] = expansion.json_obj()
        print(json.dumps(out, sort_keys=True))
    elif args.format == "latex":
        print(obj.latex())
        if expansion is not None:
            print(BivarPoly(expansion.coeffs).latex()
                  + " + O(\\deg %d)" % (expansion.order + 1))
    else:
        print(obj)
        if expansion is not None:
            print(expansion)
    return 0


def cmd_specialize(args) -> int:
    spec, d, obj = _compute_object(args)
    kind = args.at.replace("-", "_")
    value = formulas.specialize(obj, kind)
    if args.format == "json":
        out = {"group": str(spec), "what": args.what, "at": args.at}
        if d is not None:
            out["degree"] = list(d)
        out["genus"] = args.genus
        if isinstance(value, RatFun1):
            out["num_t"] = _uni_json(value.num)
            out["den_t"] = _uni_json(value.den)
        elif isinstance(value, UniPoly):
            out["value_t"] = _uni_json(value)
        else:
            out["value"] = str(value)
        print(json.dumps(out, sort_keys=True))
    else:
        print(value)
    return 0


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _classical_specs(max_rank):
    out = []
    for r in range(1, max_rank + 1):
        out.append(("GL", r))
    for r in range(2, max_rank + 1):
        out.append(("SL", r))
    for r in range(1, max_rank + 1):
        out.append(("SOodd", r))
    for r in range(1, max_rank + 1):
        out.append(("Sp", r))
    for r in range(2, max_rank + 1):
        out.append(("SOeven", r))
    return out


def _recursion_checks(max_rank, genus_list, order):
    checks = []
    for fam, r in _classical_specs(max_rank):
        spec = GroupSpec(((fam, r),))
        for d in degrees_of(spec):
            for g in genus_list:
                name = "recursion %s d=%s g=%d N=%d" % (spec, d, g, order)
                checks.append((name, lambda spec=spec, d=d, g=g:
                               recursion.verify_recursion(spec, d, g, order).match))
    return checks


def _classical_checks(max_rank, genus_list, order):
    checks = []
    for fam, r in _classical_specs(max_rank):
        spec = GroupSpec(((fam, r),))
        for d in degrees_of(spec):
            for g in genus_list:
                name = "classical %s d=%s g=%d" % (spec, d, g)
                if r <= 4:
                    checks.append((name, lambda fam=fam, r=r, d=d, g=g, spec=spec:
                                   formulas.hp_semistable_classical(fam, r, d[0], g).rat_eq(
                                       formulas.hp_semistable_closed(spec, d, g))))
                else:
                    checks.append((name + " series N=%d" % order,
                                   lambda fam=fam, r=r, d=d, g=g, spec=spec:
                                   formulas.hp_semistable_classical_series(fam, r, d[0], g, order)
                                   == formulas.hp_semistable_closed_series(spec, d, g, order)))
    return checks


def _good_case_checks(max_rank):
    checks = []
    for r in range(1, max_rank + 1):
        for d in range(r):
            name = "good-case GL%d d=%d == coprimality" % (r, d)
            checks.append((name, lambda r=r, d=d:
                           good_case(GroupSpec((("GL", r),)), (d,)) == (gcd(r, d) == 1)))
    for fam in ("SL", "Sp"):
        name = "good-case %s2 trivial degree is False" % fam
        checks.append((name, lambda fam=fam:
                       not good_case(GroupSpec(((fam, 2),)), (0,))))
    return checks


def _corollary_checks(max_rank, genus_list):
    checks = []
    for r in range(2, max_rank + 1):
        for d in range(1, r + 1):
            if gcd(r, d) != 1:
                continue
            for g in genus_list:
                bound = 2 * (g - 1) * (r * r - 1)

                def chi(r=r, d=d, g=g, bound=bound):
                    p = formulas.to_polynomial(
                        formulas.hp_moduli_fixed_det(r, d, g), bound)
                    return formulas.specialize(p, "chi_t") == \
                        formulas.chi_t_fixed_det_formula(r, g)

                def eu(r=r, d=d, g=g, bound=bound):
                    p = formulas.to_polynomial(
                        formulas.hp_moduli_fixed_det(r, d, g), bound)
                    return formulas.specialize(p, "euler") == 0 and \
                        formulas.specialize(p, "signature") == 0

                checks.append(("chi_t fixed-det GL%d d=%d g=%d" % (r, d, g), chi))
                checks.append(("euler+signature GL%d d=%d g=%d" % (r, d, g), eu))
    for r in range(2, max_rank + 1):
        for g in genus_list:
            d = 1

            def chi0(r=r, d=d, g=g):
                val = formulas.specialize(
                    formulas.hp_moduli_space(GroupSpec((("GL", r),)), (d,), g),
                    "chi_t")
                return val.num.is_zero()

            checks.append(("chi_t moduli GL%d d=%d g=%d == 0" % (r, d, g), chi0))
    return checks


def _run_checks(checks):
    threads = int(os.environ.get("HODGE_SERIES_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: bool(c[1]()), checks))
    else:
        results = [bool(fn()) for _, fn in checks]
    return results


def cmd_verify(args) -> int:
    genus_list = [int(x) for x in args.genus_list.split(",") if x]
    suites = {}
    if args.suite in ("recursion", "all"):
        suites["recursion"] = _recursion_checks(args.max_rank, genus_list, args.order)
    if args.suite in ("classical", "all"):
        suites["classical"] = _classical_checks(args.max_rank, genus_list, args.order)
    if args.suite in ("good-case", "all"):
        suites["good-case"] = _good_case_checks(args.max_rank)
    if args.suite in ("corollaries", "all"):
        suites["corollaries"] = _corollary_checks(args.max_rank, genus_list)
    if not suites:
        raise UsageError("unknown suite %r" % (args.suite,))
    all_checks = [c for suite in suites.values() for c in suite]
    results = _run_checks(all_checks)
    if args.format == "json":
        out = {"suite": args.suite,
               "checks": [{"name": n, "pass": ok}
                          for (n, _), ok in zip(all_checks, results)],
               "all_pass": all(results)}
        print(json.dumps(out, sort_keys=True))
    else:
        for (name, _), ok in zip(all_checks, results):
            print("%s %s" % ("PASS" if ok else "FAIL", name))
        print("%d/%d checks passed" % (sum(results), len(results)))
    return 0 if all(results) else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hodge-series",
        description="Exact two-variable series for moduli of principal "
                    "bundles on a curve of genus g >= 2.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=True):
        p.add_argument("--group", required=True,
                       help="e.g. GL3, SL2, SO5, SO8, Sp2, GL2xSO5")
        if degree:
            p.add_argument("--degree", default=None,
                           help="comma-separated, one entry per factor")
        p.add_argument("--genus", type=int, default=2)
        p.add_argument("--format", choices=("plain", "json", "latex"),
                       default="plain")

    pc = sub.add_parser("compute", help="print a series as a rational function")
    common(pc)
    pc.add_argument("--what", required=True,
                    choices=("stack", "semistable", "moduli", "fixed-det",
                             "classifying"))
    pc.add_argument("--expand", type=int, default=None, metavar="N",
                    help="also print the truncated expansion")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="run identity verification suites")
    pv.add_argument("--suite", required=True,
                    choices=("recursion", "classical", "good-case",
                             "corollaries", "all"))
    pv.add_argument("--max-rank", type=int, default=3)
    pv.add_argument("--genus-list", default="2,3")
    pv.add_argument("--order", type=int, default=20)
    pv.add_argument("--format", choices=("plain", "json"), default="plain")
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("specialize", help="specialize a series")
    common(ps)
    ps.add_argument("--what", required=True,
                    choices=("stack", "semistable", "moduli", "fixed-det"))
    ps.add_argument("--at", required=True,
                    choices=("poincare", "chi-t", "euler", "signature"))
    ps.set_defaults(func=cmd_specialize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except (NotGoodCase, NotCoprime, ValueError) as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
