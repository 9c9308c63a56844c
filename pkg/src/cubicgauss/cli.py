"""Command-line interface: ``cubicgauss {gauss,periodpoly,repr,verify,table}``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from .chars import make_character
from .closedform import period_polynomial, primes_1_mod_6, rep_4p, rep_eisenstein, rep_x2_3y2
from .errors import FieldTooLarge, GaussSumError, InvalidParams, NotOneModSix
from .ffield import FieldHandle, extend, find_irreducible_poly, make_field
from .gsum import gauss_sum
from .verify import DEFAULT_PMAX, DEFAULT_SUITE_CAP, CheckKind, run_suite

log = logging.getLogger("cubicgauss")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _parse_value(text: str):
    """'3' -> 3, '1,2' -> [1, 2], '[[0,1],[2,0]]' -> nested coefficients."""
    if text.lstrip().startswith("["):
        return json.loads(text)
    if "," in text:
        return [int(t) for t in text.split(",")]
    return int(text)


def build_field(p: int, ext_steps: list[str]) -> FieldHandle:
    """Apply extension steps given as 'r:beta', 'r:auto[:cube][:qnr][:noncube]' or 'r:poly[:c0,c1,...]'."""
    F = make_field(p)
    for step in ext_steps:
        parts = step.split(":")
        try:
            r = int(parts[0])
        except ValueError:
            raise InvalidParams(f"bad extension step {step!r}") from None
        kind = parts[1] if len(parts) > 1 else "auto"
        if kind == "auto":
            flags = set(parts[2:])
            unknown = flags - {"cube", "qnr", "noncube"}
            if unknown:
                raise InvalidParams(f"unknown constraints {sorted(unknown)} in {step!r}")
            F = extend(F, r, cube="cube" in flags, qnr="qnr" in flags, noncube="noncube" in flags)
            chosen = F.describe()["steps"][-1]
            log.info("step %d: chose %s", F.level, chosen)
        elif kind == "poly":
            if len(parts) > 2:
                mod = [int(t) for t in parts[2].split(",")]
            else:
                mod = list(find_irreducible_poly(F, r))
                log.info("step %d: chose modulus %s", F.level + 1, mod)
            F = make_field(p, F.steps + ((r, {"modulus": mod}),))
        else:
            F = make_field(p, F.steps + ((r, _parse_value(kind)),))
    return F


def _emit(obj, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=False) + "\n")
    else:
        for k, v in obj.items():
            out.write(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}\n")


def field_from_description(desc: dict) -> FieldHandle:
    steps = []
    for s in desc["steps"]:
        arg = s["beta"] if "beta" in s else {"modulus": s["modulus"]}
        steps.append((s["degree"], arg))
    return make_field(desc["p"], steps)


def replay_gauss(record: dict) -> dict:
    """Recompute a ``gauss`` record from the parameters it embeds."""
    F = field_from_description(record["field"])
    ch = record["character"]
    chi = make_character(F, ch["m"], ch.get("g"))
    return gauss_sum(F, chi, record["beta_arg"]).to_json()


def cmd_gauss(args) -> int:
    F = build_field(args.p, args.ext or [])
    chi = make_character(F, args.m, _parse_value(args.gen) if args.gen else None)
    beta = _parse_value(args.beta_arg) if args.beta_arg else 1
    res = gauss_sum(F, chi, beta)
    _emit(res.to_json(), args.format)
    return EXIT_OK


def cmd_periodpoly(args) -> int:
    data = period_polynomial(args.p)
    v = data.rep.v_abs
    constants = {}
    for sv in (v, -v):
        d = period_polynomial(args.p, sv)
        constants[f"v={sv:+d}"] = {"a": d.a, "b": d.b, "c": d.c, "r1": str(d.r1), "r2": str(d.r2)}
    rec = {
        "p": args.p,
        "q": str(data),
        "coeffs": list(data.coeffs),
        "u": data.rep.u,
        "v_abs": v,
        "discriminant": data.discriminant,
        "constants": constants,
        "v_convention": "the sign of v is fixed by the generator: it is the one for which "
        "G0*G1 = a*G0 + b*G1 + c*G2 holds for the periods of that generator",
    }
    _emit(rec, args.format)
    return EXIT_OK


def cmd_repr(args) -> int:
    x, y = rep_x2_3y2(args.p)
    rep = rep_4p(args.p)
    u2, v2 = rep_eisenstein(args.p)
    rec = {
        "p": args.p,
        "x2+3y2": [x, y],
        "u2+27v2=4p": [rep.u, rep.v_abs],
        "u2+uv+v2": [u2, v2],
    }
    _emit(rec, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    kinds = [CheckKind.parse(k) for k in args.kinds.split(",")] if args.kinds else None
    report = run_suite(pmax=args.pmax, size_cap=args.size_cap, kinds=kinds, jobs=args.jobs)
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=1) + "\n"
    else:
        text = report.to_table() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        s = report.summary()
        print(f"{s['pass']} passed, {s['fail']} failed -> {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_FAIL


TABLE_HEADER = ["p", "u", "v", "c0", "c1", "c2", "c3", "a", "b", "c"]


def table_rows(pmax: int):
    for p in primes_1_mod_6(pmax):
        d = period_polynomial(p)
        yield [p, d.rep.u, d.v_signed, *d.coeffs, d.a, d.b, d.c]


def cmd_table(args) -> int:
    if args.pmax < 0:
        raise InvalidParams("pmax must be non-negative")
    if args.out == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        for row in table_rows(args.pmax):
            w.writerow(row)
    else:
        for row in table_rows(args.pmax):
            sys.stdout.write(json.dumps(dict(zip(TABLE_HEADER, row))) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubicgauss", description="Exact cubic Gauss sums and periods.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log chosen parameters to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gauss", help="compute G(beta, chi_m) over a field tower")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--ext", action="append", metavar="STEP",
                   help="'r:beta', 'r:auto[:cube][:qnr][:noncube]' or 'r:poly[:c0,...]'; repeatable")
    g.add_argument("--m", type=int, default=3)
    g.add_argument("--gen", help="generator (int, or comma-separated coefficients)")
    g.add_argument("--beta-arg", help="the element beta in G(beta, chi)")
    g.add_argument("--format", choices=["json", "pretty"], default="json")
    g.set_defaults(func=cmd_gauss)

    pp = sub.add_parser("periodpoly", help="period polynomial and constants for p = 1 mod 6")
    pp.add_argument("--p", type=int, required=True)
    pp.add_argument("--format", choices=["json", "pretty"], default="json")
    pp.set_defaults(func=cmd_periodpoly)

    rp = sub.add_parser("repr", help="quadratic-form representations of p")
    rp.add_argument("--p", type=int, required=True)
    rp.add_argument("--format", choices=["json", "pretty"], default="json")
    rp.set_defaults(func=cmd_repr)

    vf = sub.add_parser("verify", help="run the identity checks")
    vf.add_argument("--pmax", type=int, default=DEFAULT_PMAX)
    vf.add_argument("--kinds", help="comma-separated check names")
    vf.add_argument("--jobs", type=int, default=1)
    vf.add_argument("--size-cap", type=int, default=DEFAULT_SUITE_CAP,
                    help="largest field used by suite instances")
    vf.add_argument("--format", choices=["json", "table"], default="json")
    vf.add_argument("--out")
    vf.set_defaults(func=cmd_verify)

    tb = sub.add_parser("table", help="period polynomial table for p = 1 mod 6 up to pmax")
    tb.add_argument("--pmax", type=int, required=True)
    tb.add_argument("--out", choices=["csv", "json"], default="csv")
    tb.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except FieldTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidParams, NotOneModSix, GaussSumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
