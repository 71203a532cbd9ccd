"""Command-line driver.

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification fails and 2 on a usage error.  ``--json`` (or
``INVCHERN_FORMAT=json`` in the environment) switches every subcommand to
JSON output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import chern, cobordism, divisibility, inversion, polytopes
from .chern import ChernRecord
from .partitions import GradedPolynomial

DEFAULT_CAP = 12
FORMAT_ENV = "INVCHERN_FORMAT"


class UsageError(Exception):
    pass


def _emit(args, text: str, data):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _bounded(args, value: int, name: str = "n", low: int = 1) -> int:
    if value < low:
        raise UsageError(f"{name} must be >= {low}")
    if value > DEFAULT_CAP and not args.unsafe_n:
        raise UsageError(f"{name}={value} exceeds the default cap {DEFAULT_CAP}; pass --unsafe-n")
    return value


def _poly_payload(poly: GradedPolynomial, **extra) -> dict:
    data = dict(extra)
    data.update(poly.to_json())
    return data


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_record(path: str) -> ChernRecord:
    data = _read_json(path)
    try:
        if "basis" in data:
            return divisibility.record_from_catalog(data)
        return ChernRecord.from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"{path}: invalid ChernRecord: {exc}") from exc


def _table(rows: list[tuple], header: tuple) -> str:
    cells = [tuple(str(c) for c in header)] + [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


# -- subcommands ---------------------------------------------------------------

def cmd_lagrange(args):
    n = _bounded(args, args.n)
    routes = inversion.LAGRANGE_ROUTES if args.route == "both" else (args.route,)
    results = [inversion.lagrange_polynomial(n, r) for r in routes]
    if any(r.polynomial != results[0].polynomial for r in results):
        print("routes disagree", file=sys.stderr)
        return 1
    poly = results[0].polynomial
    _emit(args, f"L_{n} = {poly.format(args.var)}",
          _poly_payload(poly, family="lagrange", routes=list(routes)))
    return 0


def cmd_multinv(args):
    n = _bounded(args, args.n)
    if args.hat:
        poly = inversion.hat_mult_inversion(n, "scaled")
        if poly != inversion.hat_mult_inversion(n, "series"):
            print("routes disagree", file=sys.stderr)
            return 1
        name, family = f"hat M_{n}", "hat-multiplicative"
    else:
        poly = inversion.mult_inversion_polynomial(n, "recursive").polynomial
        if poly != inversion.mult_inversion_polynomial(n, "determinant").polynomial:
            print("routes disagree", file=sys.stderr)
            return 1
        name, family = f"M_{n}", "multiplicative"
    _emit(args, f"{name} = {poly.format(args.var)}", _poly_payload(poly, family=family))
    return 0


def cmd_bell(args):
    n = _bounded(args, args.n)
    k = _bounded(args, args.k, "k")
    if k > n:
        raise UsageError("need k <= n")
    poly = inversion.bell_partial(n, k)
    g = poly.gcd_coefficients()
    _emit(args, f"B_{n},{k} = {poly.format(args.var)}\ngcd = {g} (k/gcd(n,k) = "
                f"{inversion.bell_gcd_predicted(n, k)})",
          _poly_payload(poly, family="bell", n=n, k=k, gcd=g))
    return 0


def cmd_hessenberg(args):
    n = _bounded(args, args.n)
    z = [GradedPolynomial.var(k) for k in range(1, n + 1)]
    det = inversion.hessenberg_determinant(z)
    _emit(args, f"det H_{n} = {det.format(args.var)}", _poly_payload(det, family="hessenberg"))
    return 0


def cmd_chern(args):
    if args.kind == "cpn":
        n = _bounded(args, args.n)
        rec = chern.cpn_record(n, args.bundle)
    elif args.kind == "theta":
        n = _bounded(args, args.n)
        k = _bounded(args, args.power, "k")
        rec = chern.theta_record(n, k, args.bundle)
    else:
        m = _bounded(args, args.n, "m", low=2)
        if args.d is None:
            raise UsageError("hypersurface needs a degree d")
        d = _bounded(args, args.d, "d")
        rec = chern.hypersurface_record(m, d)
        if args.bundle == "normal":
            rec = chern.flip_convention(rec)
    poly = rec.as_polynomial()
    chi = chern.euler_characteristic(rec)
    text = (f"{rec.name} ({rec.convention}): {poly.format(args.var)}\n"
            f"gcd = {poly.gcd_coefficients()}, chi = {chi}")
    _emit(args, text, rec.to_json())
    return 0


def cmd_cobordism(args):
    if args.action == "log":
        N = _bounded(args, int(args.target), "N")
        log = cobordism.mischenko_logarithm(N)
        rows = [(f"[CP^{n}]", log[n].format()) for n in range(1, N + 1)]
        _emit(args, _table(rows, ("class", "theta expansion")),
              [_poly_payload(log[n], dimension=n) for n in range(1, N + 1)])
        return 0
    rec = _load_record(args.target)
    if rec.convention == "tangent":
        rec = chern.flip_convention(rec)
    expr = cobordism.decompose_in_theta(rec)
    _emit(args, f"[{rec.name}] = {expr.format()}", _poly_payload(expr, name=rec.name))
    return 0


def cmd_faces(args):
    n = _bounded(args, args.n)
    if args.polytope == "assoc":
        census = polytopes.dissection_census(n)
        poly = inversion.lagrange_polynomial(n).polynomial
    else:
        census = polytopes.ordered_partition_census(n)
        poly = inversion.hat_mult_inversion(n)
    matches = polytopes.match_coefficients(census, poly)
    f = census.f_vector()
    rows = []
    for dim in range(n - 1, -1, -1):
        kinds = census.faces_of_dimension(dim)
        breakdown = " + ".join(f"{c}x{list(p)}" for p, c in kinds.items())
        rows.append((dim, f[dim], breakdown))
    text = (f"{census.polytope} (weight {n})\n"
            + _table(rows, ("dim", "faces", "by type")) + f"\nmatches coefficients: {matches}")
    data = census.to_json()
    data["f_vector"] = f
    data["matches_coefficients"] = matches
    _emit(args, text, data)
    return 0 if matches else 1


def _verdict_row(label, v: divisibility.DivisibilityVerdict):
    return (label, v.d, v.chi, "yes" if v.extremely_divisible else "no",
            "witness" if v.witnessed else "")


def _verdict_json(label, v: divisibility.DivisibilityVerdict, **extra):
    data = {"name": str(label), "d": v.d, "chi": v.chi,
            "extremely_divisible": v.extremely_divisible, "witnessed": v.witnessed}
    data.update(extra)
    return data


def cmd_divisibility(args):
    header = ("variety", "d", "chi", "extremely divisible", "")
    if args.what == "record":
        if not args.file:
            raise UsageError("record needs a ChernRecord JSON file")
        rec = _load_record(args.file)
        v = divisibility.gcd_chern_numbers(rec)
        _emit(args, _table([_verdict_row(rec.name, v)], header), _verdict_json(rec.name, v))
        return 0
    if args.what == "catalog":
        rows, data = [], []
        for e in divisibility.builtin_catalog():
            if e.record is None:
                rows.append((e.name, "-", "-", "-", "note"))
                data.append({"name": e.name, "kind": e.kind, "note": e.note})
                continue
            v = divisibility.gcd_chern_numbers(e.record)
            rows.append(_verdict_row(e.name, v))
            data.append(_verdict_json(e.name, v, kind=e.kind, note=e.note,
                                      record=e.record.to_json()))
        _emit(args, _table(rows, header), data)
        return 0
    if args.what == "delpezzo":
        scan, label = divisibility.del_pezzo_scan(), "S_{}"
    elif args.what == "toric":
        scan, label = divisibility.toric_surface_scan(_bounded(args, args.max, "maxN", 3)), "X_{}"
    else:
        scan, label = divisibility.hypersurface_scan(_bounded(args, args.max, "maxd")), "V_{}"
    rows = [_verdict_row(label.format(k), v) for k, v in scan.items()]
    divisible = [k for k, v in scan.items() if v.extremely_divisible]
    _emit(args, _table(rows, header) + f"\nextremely divisible: {divisible}",
          {"scan": args.what, "divisible": divisible,
           "verdicts": [_verdict_json(label.format(k), v) for k, v in scan.items()]})
    return 0


def cmd_verify(args):
    from .verify import run_checks
    max_n = _bounded(args, args.max_n, "max-n")
    results = run_checks(max_n, args.suite, args.jobs)
    ok = all(r.ok for r in results)
    text = "\n".join(f"[{'PASS' if r.ok else 'FAIL'}] {r.name}: {r.detail}" for r in results)
    text += f"\n{sum(r.ok for r in results)}/{len(results)} checks passed"
    _emit(args, text, {"max_n": max_n, "suite": args.suite, "ok": ok,
                       "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                                  for r in results]})
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=None,
                        help=f"emit JSON (default from ${FORMAT_ENV})")
    common.add_argument("--unsafe-n", action="store_true",
                        help=f"allow sizes above {DEFAULT_CAP}")
    common.add_argument("--var", default=None, help="display name for the variables")

    parser = argparse.ArgumentParser(
        prog="invchern",
        description="Inversion polynomials, Chern-number generating functions and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lagrange", parents=[common], help="Lagrange inversion polynomial L_n")
    p.add_argument("n", type=int)
    p.add_argument("--route", choices=inversion.LAGRANGE_ROUTES + ("both",), default="both")
    p.set_defaults(func=cmd_lagrange)

    p = sub.add_parser("multinv", parents=[common], help="multiplicative inversion polynomial M_n")
    p.add_argument("n", type=int)
    p.add_argument("--hat", action="store_true", help="exponential-form variant")
    p.set_defaults(func=cmd_multinv)

    p = sub.add_parser("bell", parents=[common], help="partial ordinary Bell polynomial")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("hessenberg", parents=[common], help="generic Hessenberg determinant")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_hessenberg)

    p = sub.add_parser("chern", parents=[common], help="monomial Chern number generating functions")
    p.add_argument("kind", choices=("cpn", "theta", "hypersurface"))
    p.add_argument("n", type=int, help="dimension (ambient dimension m for hypersurface)")
    p.add_argument("d", type=int, nargs="?", help="degree (hypersurface only)")
    p.add_argument("--bundle", choices=chern.CONVENTIONS, default="tangent")
    p.add_argument("--power", type=int, default=1, help="k for Theta^n(k)")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("cobordism", parents=[common], help="theta-basis cobordism expansions")
    p.add_argument("action", choices=("log", "decompose"))
    p.add_argument("target", help="N for log, a ChernRecord JSON file for decompose")
    p.set_defaults(func=cmd_cobordism)

    p = sub.add_parser("faces", parents=[common], help="associahedron / permutohedron face census")
    p.add_argument("polytope", choices=("assoc", "perm"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("divisibility", parents=[common], help="Chern-number divisibility scans")
    p.add_argument("what", choices=("delpezzo", "toric", "hypersurface", "catalog", "record"))
    p.add_argument("file", nargs="?", help="ChernRecord JSON (record only)")
    p.add_argument("--max", type=int, default=None, help="scan bound (toric: 12, hypersurface: 6)")
    p.set_defaults(func=cmd_divisibility)

    p = sub.add_parser("verify", parents=[common], help="run every identity check")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--suite", choices=("all", "fast"), default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json is None:
        args.json = os.environ.get(FORMAT_ENV, "text").lower() == "json"
    if getattr(args, "max", "unset") is None:
        args.max = 12 if args.what == "toric" else 6
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"invchern: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"invchern: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
