"""charp-autos: verification runner and construction explorer.

Exit codes: 0 all checks pass, 1 some check fails, 2 usage or parse error.
Reports are deterministic for a fixed (suite, parameters, seed); timings are
kept out of the canonical output (use --timings to see them on stderr).
"""

import argparse
import sys

from .errors import CharpAutosError, ParseError, UnknownSuite
from .poly import VarTable
from .textio import (action_to_str, map_to_str, parse_coeff, parse_map,
                     parse_poly, poly_to_str, report_to_str)
from .suites import SUITES, run_suite
from . import expo, gallery, plane


def build_parser():
    top = argparse.ArgumentParser(prog="charp-autos", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    suite = sub.add_parser("suite", help="run or list verification suites")
    suite_sub = suite.add_subparsers(dest="suite_command", required=True)
    listp = suite_sub.add_parser("list", help="list registered suites")
    runp = suite_sub.add_parser("run", help="run one suite")
    runp.add_argument("name")
    for flag in ("p", "d", "l", "m", "n", "r", "seed", "count"):
        runp.add_argument("--%s" % flag, type=int, default=None)
    runp.add_argument("--json", action="store_true")
    runp.add_argument("--timings", action="store_true")

    gal = sub.add_parser("gallery", help="build a construction and report")
    gal.add_argument("name", choices=["triangular", "nonexp", "F", "rank-r",
                                      "rank3", "eps-invariants"])
    for flag, default in (("p", 2), ("d", 3), ("l", 1), ("m", 1), ("n", 3),
                          ("r", 2)):
        gal.add_argument("--%s" % flag, type=int, default=default)
    gal.add_argument("--g", default=None,
                     help="g for the nonexp family, in y (= u^((p+1)d) yt) and z")

    pl = sub.add_parser("plane", help="plane automorphism tools")
    pl_sub = pl.add_subparsers(dest="plane_command", required=True)
    fac = pl_sub.add_parser("factor")
    fac.add_argument("map", help='automorphism, e.g. "(x1+x2^2, x2)"')
    fac.add_argument("--p", type=int, default=2)
    cen = pl_sub.add_parser("centralize")
    cen.add_argument("map")
    cen.add_argument("--p", type=int, default=2)
    cen.add_argument("--t", default="1", help="translation constant in k*")

    ex = sub.add_parser("expo", help="exponentialize a triangular automorphism")
    ex.add_argument("map", help='sigma, e.g. "(x1+u, x2+x1^2)"')
    ex.add_argument("--p", type=int, default=2)
    ex.add_argument("--base", choices=["Fp", "Fp[u]"], default="Fp[u]")

    cr = sub.add_parser("criteria", help="non-exponentiality certificates")
    cr_sub = cr.add_subparsers(dest="criteria_command", required=True)
    cert = cr_sub.add_parser("certify")
    cert.add_argument("--p", type=int, default=2)
    cert.add_argument("--d", type=int, default=3)
    cert.add_argument("--l", type=int, default=1)
    cert.add_argument("--g", default=None)

    pr = sub.add_parser("parse", help="parse and reprint canonically")
    pr.add_argument("entity", choices=["poly", "map", "action", "word",
                                       "coeff"])
    pr.add_argument("text")
    pr.add_argument("--p", type=int, default=2)
    pr.add_argument("--vars", default="x1,x2")
    pr.add_argument("--t", default="1", help="t for centralizer words")
    return top


def _cmd_suite(args):
    if args.suite_command == "list":
        for name in sorted(SUITES):
            print(name)
        return 0
    params = {k: getattr(args, k)
              for k in ("p", "d", "l", "m", "n", "r", "seed", "count")
              if getattr(args, k) is not None}
    result = run_suite(args.name, **params)
    print(result.to_json() if args.json else result.to_text())
    if args.timings:
        total = sum(c.elapsed for c in result.cases)
        print("total %.3fs" % total, file=sys.stderr)
    return 0 if result.all_passed else 1


def _cmd_gallery(args):
    if args.name == "triangular":
        ex = gallery.build_example_triangular(args.p)
        print(action_to_str(ex.action))
        print(ex.report.to_text())
        return 0 if ex.report.all_ok() else 1
    if args.name == "nonexp":
        g_expr = None
        if args.g is not None:
            zs = ["z%d" % (i + 1) for i in range(args.l)]
            table = VarTable(args.p, tuple(["x", "y"] + zs))
            g_expr = parse_poly(table, args.g)
        fam, rep = gallery.build_nonexp_family(args.p, args.d, args.l, g_expr)
        print("a=%d b=%d c=%d" % (fam.a, fam.b, fam.c))
        print("E(y) = %s" % poly_to_str(fam.e_y()))
        print(rep.to_text())
        return 0 if rep.all_ok() else 1
    if args.name == "F":
        fam = gallery.build_F_and_Fh(args.n, args.p)
        print(action_to_str(fam.action))
        print(fam.report.to_text())
        return 0 if fam.report.all_ok() else 1
    if args.name == "rank-r":
        built = gallery.build_rank_r_action(args.n, args.r, args.p)
        print(action_to_str(built.action))
        print(built.report.to_text())
        return 0 if built.report.all_ok() else 1
    if args.name == "rank3":
        fam = gallery.build_rank3_family(args.p, args.l, args.m)
        print("classification: %s" % fam.classification)
        print(fam.report.to_text())
        return 0 if fam.report.all_ok() else 1
    table, gens = gallery.epsilon_invariants(args.n, args.p)
    print(", ".join(poly_to_str(g) for g in gens))
    return 0


def _cmd_plane(args):
    table = VarTable(args.p, ("x1", "x2"))
    phi = parse_map(table, args.map)
    if args.plane_command == "factor":
        word = plane.jvdk_factor(phi)
        print(word.to_text())
        return 0
    t = parse_coeff(args.p, args.t)
    word = plane.centralizer_decompose(phi, t)
    print(word.to_text())
    return 0


def _cmd_expo(args):
    names = ("x1", "x2") if args.base == "Fp[u]" else ("x1", "x2", "x3")
    table = VarTable(args.p, names)
    sigma = parse_map(table, args.map)
    if args.base == "Fp[u]":
        res = expo.exponentialize_triangular_n2(sigma)
    else:
        res = expo.exponentialize_field_n3(sigma)
    print("action     %s" % action_to_str(res.action))
    print("conjugator %s" % map_to_str(res.conjugator))
    theta = res.reduced_f.scale(res.a) if not res.a.is_zero() else res.reduced_f
    print("theta      %s" % poly_to_str(theta))
    report = [("E1_equals_sigma", res.action.evaluate(1) == sigma),
              ("restricts_to_R", res.action.restricts_to("R")[0])]
    print(report_to_str(report))
    return 0 if all(ok for _, ok in report) else 1


def _cmd_criteria(args):
    g_expr = None
    if args.g is not None:
        zs = ["z%d" % (i + 1) for i in range(args.l)]
        table = VarTable(args.p, tuple(["x", "y"] + zs))
        g_expr = parse_poly(table, args.g)
    fam, rep = gallery.build_nonexp_family(args.p, args.d, args.l, g_expr)
    from .criteria import non_exponentiality_certificate
    cert = non_exponentiality_certificate(
        fam.data(), restriction=(False, fam.restriction_witness()))
    entries = [(name, ok) for name, ok, _ in rep.entries]
    entries.append(("stability_" + cert.stability.kind.lower(),
                    cert.stability.is_stable()))
    entries.append(("verdict", cert.verdict))
    print(report_to_str(entries))
    return 0 if cert.verdict == "NotExponentialOverR" else 1


def _cmd_parse(args):
    if args.entity == "coeff":
        print(parse_coeff(args.p, args.text))
        return 0
    table = VarTable(args.p, tuple(v for v in args.vars.split(",") if v))
    if args.entity == "poly":
        print(poly_to_str(parse_poly(table, args.text)))
    elif args.entity == "map":
        print(map_to_str(parse_map(table, args.text)))
    elif args.entity == "word":
        from .textio import parse_word
        word = parse_word(table, args.text, t=parse_coeff(args.p, args.t))
        print(word.to_text())
    else:
        from .textio import parse_action
        print(action_to_str(parse_action(table, args.text)))
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "suite":
            return _cmd_suite(args)
        if args.command == "gallery":
            return _cmd_gallery(args)
        if args.command == "plane":
            return _cmd_plane(args)
        if args.command == "expo":
            return _cmd_expo(args)
        if args.command == "criteria":
            return _cmd_criteria(args)
        return _cmd_parse(args)
    except (ParseError, UnknownSuite) as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2
    except CharpAutosError as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
