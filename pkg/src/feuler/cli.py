"""Command-line front end.

    feuler table  --nmax 3 --r 1 [--at -1] [--x 1/2] [--weights 1,2]
    feuler check  SUITE [flags]
    feuler padic  KIND [flags]
    feuler kummer --p 5 --r 2 --k 1,2 --alpha 1 --n 3 --m 23 --u 2
    feuler zeta   KIND [flags]

All JSON payloads carry ``"schema": 1`` and are byte-stable for identical
arguments.  Exact values use the canonical ``num / den`` rendering; floats
are rendered with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import frobenius, kummer, padic, zeta
from .characters import dirichlet_characters
from .errors import FEulerError
from .exact_arith import URational, parse, render, urat_sum

log = logging.getLogger("feuler")

SCHEMA = 1


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def _fraction_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_fraction(t) for t in text.split(",") if t.strip())


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer: {text!r}")
    return v


def _pos(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer: {text!r}")
    return v


def _str_frac(x: Fraction) -> str:
    return str(x)


# ----------------------------------------------------------------------------
# Disk cache of H_n^{(r)}(u)

def cache_dir(explicit: str | None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get("FEULER_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "feuler"


class HCache:
    """One JSON file per (n, r) entry; unreadable entries are recomputed."""

    def __init__(self, root: Path | None):
        self.root = root

    def _path(self, n: int, r: int) -> Path:
        assert self.root is not None
        return self.root / f"H_{n}_{r}.json"

    def get(self, n: int, r: int) -> URational:
        if self.root is None:
            return frobenius.fe_number_r(n, r)
        path = self._path(n, r)
        if path.exists():
            try:
                blob = json.loads(path.read_text())
                if blob.get("schema") != SCHEMA or blob["n"] != n or blob["r"] != r:
                    raise ValueError("key mismatch")
                return parse(blob["value"])
            except (ValueError, KeyError, TypeError, FEulerError) as exc:
                log.warning("cache entry %s is corrupt (%s); recomputing", path, exc)
        value = frobenius.fe_number_r(n, r)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps({"schema": SCHEMA, "n": n, "r": r, "value": render(value)}))
            tmp.replace(path)
        except OSError as exc:
            log.warning("could not write cache entry %s (%s)", path, exc)
        return value


# ----------------------------------------------------------------------------
# Output

def _emit(payload: dict, fmt: str, out, text_lines: Callable[[dict], list[str]],
          csv_rows: Callable[[dict], list[list[str]]] | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        if csv_rows is None:
            raise FEulerError("csv output is not available for this command")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows(payload):
            writer.writerow(row)
        out.write(buf.getvalue())
    else:
        out.write("\n".join(text_lines(payload)) + "\n")


# ----------------------------------------------------------------------------
# table

def cmd_table(args, out) -> int:
    cache = HCache(None if args.no_cache else cache_dir(args.cache_dir))
    rs = list(range(1, args.rmax + 1)) if args.rmax else [args.r]
    values: dict[str, str] = {}
    rows = []
    for r in rs:
        for n in range(args.nmax + 1):
            if args.weights:
                if len(args.weights) != r:
                    raise FEulerError(f"--weights needs {r} entries for r = {r}")
                f = frobenius.fe_weighted(n, r, args.x, args.weights)
            elif args.x:
                f = frobenius.fe_poly(n, r, args.x)
            else:
                f = cache.get(n, r)
            shown = _str_frac(f.eval_at(args.at)) if args.at is not None else render(f)
            values[f"H({n},{r})"] = shown
            rows.append([str(n), str(r), shown])
    params = {"nmax": args.nmax, "r": rs, "x": str(args.x),
              "weights": list(args.weights) if args.weights else None,
              "at": None if args.at is None else str(args.at)}
    payload = {"schema": SCHEMA, "command": "table", "params": params, "values": values}
    _emit(payload, args.format, out,
          lambda p: list(p["values"].values()),
          lambda p: [["n", "r", "value"], *rows])
    return 0


# ----------------------------------------------------------------------------
# check suites

def _suite_reflection(a) -> list[dict]:
    xs = a.x_list or (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3))
    return [{"case": {"n": n, "r": r, "x": str(x)}, "pass": frobenius.check_reflection(n, r, x)}
            for r in range(1, (a.rmax or 3) + 1) for n in range(_d(a.nmax, 10) + 1) for x in xs]


def _suite_distribution(a) -> list[dict]:
    ps = a.p or (2, 3, 5)
    xs = a.x_list or (Fraction(0), Fraction(1), Fraction(1, 2))
    return [{"case": {"n": n, "r": r, "p": p, "x": str(x)},
             "pass": frobenius.check_distribution(n, r, p, x)}
            for p in ps for r in range(1, (a.rmax or 2) + 1)
            for n in range(_d(a.nmax, 6) + 1) for x in xs]


def _suite_chi(a) -> list[dict]:
    cases = []
    for d in range(1, (a.dmax or 4) + 1):
        for chi in dirichlet_characters(d):
            for r in range(1, (a.rmax or 2) + 1):
                for n in range(_d(a.nmax, 5) + 1):
                    ok = frobenius.fe_gen_chi(n, r, chi) == frobenius.fe_gen_chi_series(n, r, chi)
                    cases.append({"case": {"d": d, "chi": chi.label, "n": n, "r": r}, "pass": ok})
    return cases


def _suite_weighted(a) -> list[dict]:
    cases = []
    for ws in ((1,), (1, 2), (1, 2, 3)):
        if a.rmax and len(ws) > a.rmax:
            continue
        for n in range(_d(a.nmax, 8) + 1):
            for w in (a.x_list or (Fraction(0), Fraction(1, 2))):
                s = frobenius.fe_weighted_series(n, w, ws)
                um = frobenius.fe_weighted_umbral(n, w, ws)
                cases.append({"case": {"n": n, "weights": list(ws), "w": str(w)}, "pass": s == um})
    return cases


def _suite_shift_identity(a) -> list[dict]:
    cases = []
    M = a.M or 60
    for r in range(1, (a.rmax or 3) + 1):
        for u in (a.u_list or (2, 3)):
            for s in (a.s_list or (2, 3)):
                e = -r if a.exponent_sign < 0 else r
                lhs, rhs, err = zeta.lemma2_sides(s, u, r, M, exponent=e)
                cases.append({"case": {"r": r, "u": u, "s": s, "M": M, "exponent": e},
                              "lhs": _fmt_float(lhs), "rhs": _fmt_float(rhs),
                              "bound": _fmt_float(2 * err), "pass": abs(lhs - rhs) <= 2 * err})
    return cases


def _suite_moments(a) -> list[dict]:
    cases = []
    for p in (a.p or (5,)):
        u0 = a.u if a.u is not None else 2
        for n in range(_d(a.nmax, 4) + 1):
            prev = -1
            for N in range(2, (a.N if a.N is not None else 5) + 1):
                u = padic.padic_unit(u0, p, padic.guard_precision(N, n))
                got = padic.euler_integral_poly(
                    padic.EulerIntegralRequest(tuple([0] * n + [1]), u, N))
                dig = padic.agree_digits(got, padic.moment_exact(n, u))
                cases.append({"case": {"p": p, "u": u0, "n": n, "N": N}, "agree_digits": dig,
                              "pass": dig >= N - 2 and dig >= prev})
                prev = dig
    return cases


def _suite_witt(a) -> list[dict]:
    cases = []
    p = (a.p or (5,))[0]
    u0 = a.u if a.u is not None else 2
    for r in range(1, (a.rmax or 2) + 1):
        for n in range(_d(a.nmax, 3) + 1):
            prev = -1
            for N in range(1, (a.N if a.N is not None else 4) + 1):
                u = padic.padic_unit(u0, p, padic.guard_precision(N, n))
                res = padic.witt_check(n, r, u, N)
                ok = res.agree_digits >= prev
                if n == 0:
                    ok = ok and res.lhs == res.rhs and res.agree_digits == u.precision
                cases.append({"case": {"p": p, "u": u0, "r": r, "n": n, "N": N},
                              "agree_digits": res.agree_digits, "pass": ok})
                prev = res.agree_digits
    return cases


def _instance(a, **over) -> kummer.KummerInstance:
    p = over.get("p", (a.p or (5,))[0])
    r = over.get("r", a.r or 1)
    k = over.get("k", a.k or (1,) * r)
    return kummer.KummerInstance.make(
        p, r, over.get("alpha", a.alpha or 0), k,
        u=a.u if a.u is not None else 2, N=a.N or 0,
        n=over.get("n", a.n if a.n is not None else 1), m=a.m)


def _suite_sum_identity(a) -> list[dict]:
    inst = _instance(a)
    return [{"case": {"p": inst.p, "r": inst.r, "k": list(inst.kbar), "alpha": inst.alpha,
                      "N": inst.N, "n": n},
             "pass": kummer.check_sum_identity(inst, n)}
            for n in range(_d(a.nmax, 4) + 1)]


def _suite_integrality(a) -> list[dict]:
    inst = _instance(a)
    return [{"case": {"p": inst.p, "r": inst.r, "k": list(inst.kbar), "alpha": inst.alpha,
                      "u": inst.u.residue, "n": n},
             "pass": kummer.check_integrality(inst, n)}
            for n in range(_d(a.nmax, 4) + 1)]


def _suite_kummer(a) -> list[dict]:
    inst = _instance(a)
    if inst.m is None:
        raise FEulerError("check kummer needs --m")
    ok = kummer.check_congruence(inst)
    vals_n = kummer.t_valuations(inst, inst.n)
    return [{"case": {"p": inst.p, "r": inst.r, "k": list(inst.kbar), "alpha": inst.alpha,
                      "u": inst.u.residue, "N": inst.N, "n": inst.n, "m": inst.m},
             "t_valuations": vals_n, "pass": ok}]


def _suite_zeta_p(a) -> list[dict]:
    cases = []
    N = a.N if a.N is not None else 3
    for p in (a.p or (3, 5)):
        for r in range(1, (a.rmax or 2) + 1):
            for k in range(_d(a.nmax, 2) + 1):
                u = padic.padic_unit(a.u if a.u is not None else 2, p, padic.guard_precision(N, k))
                dig = padic.agree_digits(padic.padic_zeta_negk(k, r, u),
                                         padic.padic_zeta_negk_truncated(k, r, u, N))
                cases.append({"case": {"p": p, "r": r, "k": k, "N": N}, "agree_digits": dig,
                              "pass": dig >= N - 2})
    return cases


def _d(v, default):
    return default if v is None else v


SUITES: dict[str, Callable] = {
    "reflection": _suite_reflection,
    "distribution": _suite_distribution,
    "chi": _suite_chi,
    "weighted": _suite_weighted,
    "shift-identity": _suite_shift_identity,
    "moments": _suite_moments,
    "witt": _suite_witt,
    "sum-identity": _suite_sum_identity,
    "integrality": _suite_integrality,
    "kummer": _suite_kummer,
    "zeta-p": _suite_zeta_p,
}


def cmd_check(args, out) -> int:
    cases = SUITES[args.suite](args)
    all_pass = all(c["pass"] for c in cases)
    payload = {"schema": SCHEMA, "command": "check", "suite": args.suite,
               "cases": cases, "all_pass": all_pass}
    _emit(payload, args.format, out,
          lambda p: [f"{'PASS' if c['pass'] else 'FAIL'} {json.dumps(c['case'])}"
                     for c in p["cases"]] + [f"{args.suite}: {'all pass' if all_pass else 'FAILED'}"],
          lambda p: [["case", "pass"]] + [[json.dumps(c["case"]), str(c["pass"])]
                                          for c in p["cases"]])
    return 0 if all_pass else 1


# ----------------------------------------------------------------------------
# padic

def _padic_json(x: padic.PadicInt) -> dict:
    return {**x.to_json(), "text": str(x), "digits": x.digits()}


def cmd_padic(args, out) -> int:
    p = args.p[0] if args.p else 5
    n = args.n if args.n is not None else 1
    r = args.r or 1
    N = args.N if args.N is not None else 3
    u = padic.padic_unit(args.u if args.u is not None else 2, p,
                         args.precision or padic.guard_precision(N, n))
    result: dict = {}
    if args.kind == "moment":
        got = padic.euler_integral_poly(padic.EulerIntegralRequest(tuple([0] * n + [1]), u, N))
        exact = padic.moment_exact(n, u)
    elif args.kind == "multi":
        ws = args.k or (1,) * r
        got = padic.multi_moment(n, r, args.x, ws, u, N)
        exact = padic.padic_eval(padic.multi_moment_exact(n, r, args.x, ws), u)
    elif args.kind == "witt":
        res = padic.witt_check(n, r, u, N)
        got, exact = res.rhs, res.lhs
    elif args.kind == "restricted":
        got = padic.restricted_moment(n, r, u, N)
        exact = padic.padic_eval(padic.restricted_moment_exact(n, r, p), u)
    else:  # zeta
        got = padic.padic_zeta_negk_truncated(n, r, u, N)
        exact = padic.padic_zeta_negk(n, r, u)
    result = {"schema": SCHEMA, "command": "padic", "kind": args.kind,
              "params": {"p": p, "u": u.residue, "n": n, "r": r, "N": N, "M": u.precision},
              "truncated": _padic_json(got), "limit": _padic_json(exact),
              "agree_digits": padic.agree_digits(got, exact)}
    _emit(result, args.format, out, lambda d: [
        f"level {N}: {d['truncated']['text']}", f"limit:   {d['limit']['text']}",
        f"agreeing digits: {d['agree_digits']}"])
    return 0


# ----------------------------------------------------------------------------
# kummer

def cmd_kummer(args, out) -> int:
    inst = _instance(args)
    n = inst.n
    checks: dict[str, bool] = {}
    phi_exact = kummer.phi_expression(inst, n)
    checks["sum_identity"] = phi_exact == urat_sum(kummer.t_terms(inst, n))
    checks["integrality"] = kummer.check_integrality(inst, n, enforce_bound=False)
    phi_n = kummer.phi_padic(inst, n)
    checks["exact_padic_coherence"] = padic.padic_eval(phi_exact, inst.u) == phi_n
    vals = kummer.t_valuations(inst, n)
    checks["t_vanishing"] = all(v >= inst.N + 1 for v in vals[1:])
    report = {"schema": SCHEMA, "command": "kummer",
              "instance": {"p": inst.p, "r": inst.r, "alpha": inst.alpha, "k": list(inst.kbar),
                           "N": inst.N, "n": n, "m": inst.m, "u": inst.u.residue,
                           "precision": inst.u.precision},
              "p_at_least_2r_plus_1": inst.satisfies_bound(),
              "phi": {"n": {"exact": render(phi_exact), "padic": _padic_json(phi_n)}},
              "t_valuations": {"n": vals}}
    if inst.m is not None:
        bad = inst.congruence_preconditions()
        report["preconditions_violated"] = bad
        phi_m = kummer.phi_padic(inst, inst.m)
        report["phi"]["m"] = {"padic": _padic_json(phi_m)}
        vals_m = kummer.t_valuations(inst, inst.m)
        report["t_valuations"]["m"] = vals_m
        tn, tm = kummer.t_terms_padic(inst, n), kummer.t_terms_padic(inst, inst.m)
        checks["t_stability"] = all((tn[l] - tm[l]).valuation() >= inst.N + 1
                                    for l in range(min(len(tn), len(tm))))
        if not bad:
            checks["congruence"] = (phi_n - phi_m).valuation() >= inst.N + 1
    report["checks"] = checks
    report["all_pass"] = all(checks.values())
    _emit(report, args.format, out, lambda d: [
        f"{'PASS' if v else 'FAIL'} {k}" for k, v in d["checks"].items()])
    return 0 if report["all_pass"] else 1


# ----------------------------------------------------------------------------
# zeta

def cmd_zeta(args, out) -> int:
    r = args.r or 1
    M = args.M or 60
    u = float(args.u if args.u is not None else 2)
    s = float(args.s_list[0]) if args.s_list else 2.0
    payload: dict = {"schema": SCHEMA, "command": "zeta", "kind": args.kind}
    if args.kind == "mzeta":
        x = args.x if args.x else Fraction(1)
        v = zeta.mzeta_trunc(s, x, u, r, M)
        payload.update(params={"s": s, "x": str(x), "u": u, "r": r, "M": M},
                       value=_fmt_float(v.value), tail_bound=_fmt_float(v.tail_bound),
                       error=_fmt_float(v.error))
    elif args.kind == "barnes":
        k = args.k or (1,) * r
        alpha = Fraction(args.alpha) if args.alpha else Fraction(1)
        v = zeta.barnes_trunc(s, alpha, k, u, len(k), M)
        payload.update(params={"s": s, "alpha": str(alpha), "k": list(k), "u": u, "M": M},
                       value=_fmt_float(v.value), tail_bound=_fmt_float(v.tail_bound),
                       error=_fmt_float(v.error))
    else:  # special
        k = args.k or (1,) * r
        n = args.n if args.n is not None else 1
        alpha = Fraction(args.alpha or 0)
        payload.update(params={"n": n, "alpha": str(alpha), "k": list(k)},
                       value=render(zeta.special_value(n, alpha, k)))
    _emit(payload, args.format, out, lambda d: [f"{d['kind']}: {d['value']}"] + (
        [f"tail bound: {d['tail_bound']}"] if "tail_bound" in d else []))
    return 0


# ----------------------------------------------------------------------------

def _common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp.add_argument("--output", "-o", help="write to a file instead of stdout")


def _numeric_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--nmax", type=_nonneg)
    sp.add_argument("--rmax", type=_pos)
    sp.add_argument("--r", type=_pos)
    sp.add_argument("--dmax", type=_pos)
    sp.add_argument("--p", type=_int_list, help="prime or comma-separated primes")
    sp.add_argument("--u", type=int)
    sp.add_argument("--N", type=_nonneg, metavar="LEVEL")
    sp.add_argument("--n", type=_nonneg)
    sp.add_argument("--m", type=_pos, metavar="M_EXP")
    sp.add_argument("--k", type=_int_list, help="comma-separated weights k_1..k_r")
    sp.add_argument("--alpha", type=_nonneg)
    sp.add_argument("--M", type=_pos, metavar="TERMS", help="terms per index for zeta sums")
    sp.add_argument("--x", dest="x_list", type=_fraction_list)
    sp.add_argument("--u-list", dest="u_list", type=_int_list)
    sp.add_argument("--s", dest="s_list", type=_fraction_list)
    sp.add_argument("--precision", type=_pos)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="feuler", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate H_n^(r)(u)")
    t.add_argument("--nmax", type=_nonneg, required=True)
    t.add_argument("--r", type=_pos, default=1)
    t.add_argument("--rmax", type=_pos)
    t.add_argument("--at", type=_fraction, help="evaluate at this rational u")
    t.add_argument("--x", type=_fraction, default=Fraction(0), help="polynomial shift")
    t.add_argument("--weights", type=_int_list)
    t.add_argument("--cache-dir")
    t.add_argument("--no-cache", action="store_true")
    _common(t)

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--exponent-sign", type=int, choices=(-1, 1), default=-1,
                   help="shift-identity: compare against u^(-r) (-1) or u^(+r) (1)")
    _numeric_flags(c)
    _common(c)

    pa = sub.add_parser("padic", help="level-N p-adic integrals against their limits")
    pa.add_argument("kind", choices=("moment", "multi", "witt", "restricted", "zeta"))
    _numeric_flags(pa)
    _common(pa)

    k = sub.add_parser("kummer", help="Kummer-congruence verification report")
    _numeric_flags(k)
    _common(k)

    z = sub.add_parser("zeta", help="truncated zeta sums and special values")
    z.add_argument("kind", choices=("mzeta", "barnes", "special"))
    _numeric_flags(z)
    _common(z)
    return parser


COMMANDS = {"table": cmd_table, "check": cmd_check, "padic": cmd_padic,
            "kummer": cmd_kummer, "zeta": cmd_zeta}


def _postprocess(args, parser) -> None:
    # Single-valued flags reuse the list parsers of the check suites.
    if args.command in ("padic", "zeta", "kummer"):
        args.x = args.x_list[0] if args.x_list else Fraction(0)
    if args.command == "kummer" and args.m is not None and args.n is None:
        parser.error("--m requires --n")
    if getattr(args, "k", None) and getattr(args, "r", None) and len(args.k) != args.r:
        parser.error(f"--k has {len(args.k)} entries but --r is {args.r}")
    if getattr(args, "k", None) and not getattr(args, "r", None) and args.command != "table":
        args.r = len(args.k)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _postprocess(args, parser)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except FEulerError as exc:
        parser.exit(2, f"feuler: error: {exc}\n")
    finally:
        if args.output:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
