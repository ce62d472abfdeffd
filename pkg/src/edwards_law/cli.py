"""Command-line front end: certify identities, check group axioms, add and
enumerate points.

Exit codes: 0 success, 1 verification or axiom failure, 2 usage or
hypothesis error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import curve as C
from .errors import EdwardsLawError, HypothesisViolated, NotOnCurve, NotSummable, ReductionFailed
from .identities import (
    certificate_to_dict,
    certify,
    dump_certificate,
    match_names,
    verify_certificate,
)
from .mpoly import to_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument handling ------------------------------------------------------------

def _curve_flags(p: argparse.ArgumentParser):
    p.add_argument("--p", type=int, default=13, help="odd prime (default 13)")
    p.add_argument("--c", type=int, help="curve parameter c (general form)")
    p.add_argument("--d", type=int, help="curve parameter d (general form)")
    p.add_argument("--t", type=int, help="rescaled parameter t (c = 1, d = t^2)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edwards-law", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("certify", help="build and verify identity certificates")
    s.add_argument("--filter", help="glob or substring selecting certificate names")
    s.add_argument("--out", help="directory receiving certificates/<name>.json")
    s.add_argument("--cache", help="certificate cache directory")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=20)
    s.add_argument("--cofactors", action="store_true", help="print cofactors")
    s.add_argument("--json", action="store_true")

    g = sub.add_parser("group-check", help="check the group axioms over F_p")
    _curve_flags(g)
    g.add_argument("--mode", choices=["affine", "projective"], default="affine")
    g.add_argument("--level", choices=["axioms", "full"], default="axioms")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="directory receiving report.json")
    g.add_argument("--json", action="store_true")

    a = sub.add_parser("add", help="add two points")
    _curve_flags(a)
    a.add_argument("--P", required=True, help="x,y")
    a.add_argument("--Q", required=True, help="x,y")
    a.add_argument("--layer", choices=["affine0", "affine1", "projective"], default="affine0")
    a.add_argument("--i", type=int, default=0, help="copy index of P (projective)")
    a.add_argument("--j", type=int, default=0, help="copy index of Q (projective)")
    a.add_argument("--json", action="store_true")

    e = sub.add_parser("enumerate", help="list points or classes")
    _curve_flags(e)
    e.add_argument("--mode", choices=["affine", "projective"], default="affine")
    e.add_argument("--json", action="store_true")

    x = sub.add_parser("export-cert", help="write one certificate as JSON")
    x.add_argument("name")
    x.add_argument("--out", help="directory receiving certificates/<name>.json")
    return ap


def _params(args, need_rescaled=False) -> C.CurveParams:
    try:
        if args.t is not None:
            if args.c is not None or args.d is not None:
                raise UsageError("give either --t or --c/--d, not both")
            return C.CurveParams.rescaled(args.p, args.t)
        c = 1 if args.c is None else args.c
        if args.d is None:
            raise UsageError("--d (or --t) is required")
        params = C.CurveParams.general(args.p, c, args.d)
    except ValueError as exc:
        if isinstance(exc, HypothesisViolated):
            raise
        raise UsageError(str(exc)) from exc
    if need_rescaled:
        params = C.rescale(params)
    return params


def _point(text: str, params) -> C.AffinePoint:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected x,y but got {text!r}") from None
    return C.AffinePoint.of(params, x, y)


def _emit(obj, as_json: bool, text: str):
    print(json.dumps(obj, sort_keys=True) if as_json else text)


# -- commands ---------------------------------------------------------------------

def _digest(poly) -> str:
    return hashlib.sha256(to_text(poly).encode()).hexdigest()[:12]


def cmd_certify(args) -> int:
    names = match_names(args.filter)
    if not names:
        raise UsageError(f"no certificate matches {args.filter!r}")
    show = args.cofactors or len(names) == 1
    rows, failed = [], 0
    start = time.perf_counter()
    for name in names:
        t0 = time.perf_counter()
        try:
            cert = certify(name, args.cache)
        except ReductionFailed as exc:
            failed += 1
            rows.append({"name": name, "ok": False, "remainder_terms": len(exc.remainder),
                         "remainder_digest": _digest(exc.remainder)})
            if not args.json:
                print(f"FAIL {name}: remainder with {len(exc.remainder)} terms, "
                      f"digest {_digest(exc.remainder)}")
            continue
        except EdwardsLawError as exc:
            failed += 1
            rows.append({"name": name, "ok": False, "error": str(exc)})
            if not args.json:
                print(f"FAIL {name}: {exc}")
            continue
        v = verify_certificate(cert, samples=args.samples, seed=args.seed)
        elapsed = time.perf_counter() - t0
        counts = cert.term_counts()
        row = {"name": name, "ok": v.ok, "method": cert.method, **counts,
               "samples": v.samples, "seconds": round(elapsed, 4)}
        if v.detail:
            row["detail"] = v.detail
        rows.append(row)
        failed += not v.ok
        if args.out:
            dump_certificate(cert, Path(args.out) / "certificates" / f"{name}.json")
        if not args.json:
            status = "PASS" if v.ok else "FAIL"
            print(f"{status} {name:26s} {cert.method:9s} target={counts['target']:4d} "
                  f"cofactor_terms={counts['cofactors']:5d} {elapsed:7.3f}s"
                  + (f"  ({v.detail})" if v.detail else ""))
        if show and not args.json:
            data = certificate_to_dict(cert)
            for b, q in zip(data["basis"], data["cofactors"]):
                print(f"  cofactor {q}   of   {b}")
    total = time.perf_counter() - start
    if args.json:
        print(json.dumps({"certificates": rows, "failed": failed}, sort_keys=True))
    else:
        print(f"{len(names) - failed}/{len(names)} certificates verified in {total:.2f}s")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_group_check(args) -> int:
    params = _params(args, need_rescaled=(args.mode == "projective" and args.t is None))
    report = C.group_check(params, args.mode, args.level, args.seed)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(report.to_json())
        (out / "timing.json").write_text(json.dumps(report.timing, indent=2, sort_keys=True) + "\n")
    if args.json:
        print(report.to_json(), end="")
    else:
        print(f"{args.mode} group check on {params} ({args.level}, seed {args.seed}): "
              f"{report.counts}")
        for item in report.items:
            status = "PASS" if item.ok else ("NOTE" if item.informational else "FAIL")
            extra = " sampled" if item.sampled else ""
            wit = f" witness={item.witness}" if item.witness and not item.ok else ""
            print(f"{status} {item.name:20s} checked={item.checked} failed={item.failed}{extra}{wit}")
        print("all axioms hold" if report.ok else "AXIOM FAILURE")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_add(args) -> int:
    params = _params(args, need_rescaled=args.layer != "affine0" and args.t is None)
    P, Q = _point(args.P, params), _point(args.Q, params)
    C.affine.require_on_curve(params, P, Q)
    if args.layer == "projective":
        X, Y = C.glue(P, args.i, params), C.glue(Q, args.j, params)
        S = C.proj_add(X, Y, params)
        members = S.to_list()
        _emit({"class": members, "rep": list(S.key())}, args.json,
              f"[{S.rep.point.x},{S.rep.point.y}; {S.rep.i}]  members: "
              + "  ".join(f"[{x},{y}; {i}]" for i, x, y in members))
        return EXIT_OK
    which = int(args.layer[-1])
    try:
        S = C.add(which, P, Q, params)
    except NotSummable:
        dx, dy = (C.delta0_factors if which == 0 else C.delta1_factors)(P, Q, params)
        _emit({"summable": False, "layer": args.layer, "delta_x": int(dx), "delta_y": int(dy)},
              args.json, f"not summable under {args.layer}: delta_x={dx} delta_y={dy}")
        return EXIT_FAIL
    _emit({"summable": True, "point": [int(S.x), int(S.y)]}, args.json, f"{S.x},{S.y}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.mode == "projective":
        params = _params(args, need_rescaled=args.t is None)
        classes = C.enumerate_classes(params)
        if args.json:
            print(json.dumps({"classes": [X.to_list() for X in classes], "count": len(classes)}))
        else:
            for X in classes:
                print("  ".join(f"[{x},{y}; {i}]" for i, x, y in X.to_list()))
            print(f"{len(classes)} classes")
        return EXIT_OK
    params = _params(args)
    pts = C.enumerate_points(params)
    oo = sum(P.in_oo() for P in pts)
    if args.json:
        print(json.dumps({"points": [list(P.key()) for P in pts], "count": len(pts), "oo": oo}))
    else:
        for P in pts:
            print(f"{P.x},{P.y}")
        print(f"{len(pts)} points, {oo} with both coordinates nonzero")
    return EXIT_OK


def cmd_export_cert(args) -> int:
    if args.name not in match_names(args.name):
        raise UsageError(f"unknown certificate {args.name!r}")
    cert = certify(args.name)
    if args.out:
        path = dump_certificate(cert, Path(args.out) / "certificates" / f"{args.name}.json")
        print(path)
    else:
        print(json.dumps(certificate_to_dict(cert), indent=2))
    return EXIT_OK


COMMANDS = {
    "certify": cmd_certify,
    "group-check": cmd_group_check,
    "add": cmd_add,
    "enumerate": cmd_enumerate,
    "export-cert": cmd_export_cert,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except HypothesisViolated as exc:
        msg = f"hypothesis violated: {exc}"
        if exc.witness is not None:
            msg += f"; witness pair with delta = 0: {exc.witness}"
        print(msg, file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, NotOnCurve) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
