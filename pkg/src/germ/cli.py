"""Command-line front end.

Exit codes: 0 success, 1 computation error or timeout, 2 usage error,
3 when an ``--expect`` assertion fails.  Machine output is selected
with ``--json`` or (for sweeps and invariants) ``--csv``; JSON carries
a ``generated_at`` timestamp unless ``--reproducible`` is given.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import signal
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import selftest as selftest_mod
from .bounds import BOUND_IDS, BoundReport, SuperisolatedData, bound_report, \
    kerner_nemethi_constant, superisolated_invariants, wahl_tau_min
from .corpus import ReportRow, SweepSpec, sweep
from .errors import GermError
from .invariants import germ_invariants, suspend
from .poly import parse_polynomial
from .semigroup import (branch_milnor, certify_plane_branch, monomial_curve_equations,
                        semigroup_from_generators)

EXIT_OK = 0
EXIT_COMPUTE = 1
EXIT_USAGE = 2
EXIT_EXPECT = 3


@contextmanager
def _deadline(seconds: float | None):
    """Abort the enclosed computation with TimeoutError after ``seconds``."""
    if not seconds:
        yield
        return

    def handler(signum, frame):
        raise TimeoutError(f"computation exceeded {seconds} seconds")

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _finite_or_none(value) -> int | None:
    return value if isinstance(value, int) else None


def _fraction_fields(name: str, value: Fraction | None) -> dict:
    if value is None:
        return {f"{name}_num": None, f"{name}_den": None}
    return {f"{name}_num": value.numerator, f"{name}_den": value.denominator}


def _bounds_json(report: BoundReport | None) -> dict:
    out = {}
    if report is None:
        return out
    for key in BOUND_IDS:
        v = report.verdicts[key]
        out[key] = {"applicable": v.applicable, "holds": v.holds,
                    **_fraction_fields("margin", v.margin)}
    return out


def _emit_json(payload: dict, reproducible: bool) -> None:
    if not reproducible:
        payload["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _bounds_text(report: BoundReport) -> str:
    lines = []
    for key in BOUND_IDS:
        v = report.verdicts[key]
        if not v.applicable and v.margin is None:
            status = "not applicable"
        elif v.holds is None:
            status = "not evaluable" if v.margin is None else f"margin {v.margin} (not applicable)"
        else:
            status = ("holds" if v.holds else "FAILS") + f", margin {v.margin}"
        lines.append(f"  {key:22s} {status}")
    return "\n".join(lines)


def _parse_expect(text: str) -> dict[str, int]:
    out = {}
    for piece in text.split(","):
        if not piece:
            continue
        key, _, value = piece.partition("=")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise GermError(f"bad --expect entry {piece!r}; use key=integer") from None
    if not out:
        raise GermError("--expect is empty")
    return out


def _check_expect(expected: dict[str, int], computed: dict[str, int | None]) -> int:
    code = EXIT_OK
    for key, want in expected.items():
        if key not in computed:
            print(f"expect: unknown key {key!r}; known: {sorted(computed)}", file=sys.stderr)
            code = EXIT_EXPECT
            continue
        got = computed[key]
        if got != want:
            print(f"expect: {key} expected {want}, computed {got}", file=sys.stderr)
            code = EXIT_EXPECT
    return code


# ----------------------------------------------------------------------
# Subcommands


def _cmd_invariants(args) -> int:
    f = parse_polynomial(args.poly, args.vars)
    inv = None
    timed_out = False
    try:
        with _deadline(args.timeout):
            inv = germ_invariants(f)
    except TimeoutError:
        timed_out = True
    report = None
    if inv is not None and inv.isolated and inv.tau >= 1 and inv.germ_dimension >= 1:
        report = bound_report(inv.mu, inv.tau, inv.germ_dimension)
    payload = {
        "germ": str(f),
        "vars": list(f.vars),
        "n": len(f.vars) - 1,
        "mu": _finite_or_none(inv.mu) if inv else None,
        "tau": _finite_or_none(inv.tau) if inv else None,
        "isolated": inv.isolated if inv else None,
        **_fraction_fields("ratio", inv.ratio if inv else None),
        "weights": list(inv.weighted_homogeneous_in_coords[0])
        if inv and inv.weighted_homogeneous_in_coords else None,
        "weighted_degree": inv.weighted_homogeneous_in_coords[1]
        if inv and inv.weighted_homogeneous_in_coords else None,
        "bounds": _bounds_json(report),
        "timeout": timed_out,
    }
    if args.json:
        _emit_json(payload, args.reproducible)
    elif getattr(args, "csv", False):
        row = ReportRow(0, str(f), len(f.vars) - 1,
                        payload["mu"], payload["tau"], bool(payload["isolated"]),
                        inv.ratio if inv else None, report, 0.0,
                        note="timeout" if timed_out else "")
        sys.stdout.write(_rows_csv([row]))
    elif timed_out:
        print(f"germ: {f}")
        print(f"timeout after {args.timeout}s; partial report only")
    else:
        mu = inv.mu if inv.isolated else "infinite"
        print(f"germ: {f}")
        print(f"n={inv.germ_dimension}  mu={mu}  tau={inv.tau if inv.isolated else 'infinite'}")
        if inv.ratio is not None:
            print(f"mu/tau = {inv.ratio} ~ {float(inv.ratio):.6f}")
        if inv.weighted_homogeneous_in_coords:
            w, d = inv.weighted_homogeneous_in_coords
            print(f"weighted homogeneous: weights {w}, degree {d}")
        else:
            print("weighted homogeneous: no (in the given coordinates)")
        if report is not None:
            print("bounds:")
            print(_bounds_text(report))
    if timed_out:
        print(f"timeout: computation exceeded {args.timeout} seconds", file=sys.stderr)
        return EXIT_COMPUTE
    if args.expect:
        return _check_expect(_parse_expect(args.expect),
                             {"mu": _finite_or_none(inv.mu), "tau": _finite_or_none(inv.tau)})
    return EXIT_OK


def _cmd_suspend(args) -> int:
    f = parse_polynomial(args.poly, args.vars)
    result = suspend(f, args.power)
    with _deadline(args.timeout):
        base = germ_invariants(f)
        top = germ_invariants(result.suspended)
    payload = {
        "germ": str(f),
        "suspended": str(result.suspended),
        "new_variable": result.new_variable,
        "power": args.power,
        "base_mu": _finite_or_none(base.mu), "base_tau": _finite_or_none(base.tau),
        "mu": _finite_or_none(top.mu), "tau": _finite_or_none(top.tau),
    }
    if args.json:
        _emit_json(payload, args.reproducible)
    else:
        print(f"suspended germ: {result.suspended}   (new variable {result.new_variable})")
        print(f"base: mu={base.mu} tau={base.tau}")
        print(f"suspension: mu={top.mu} tau={top.tau}")
    return EXIT_OK


def _cmd_semigroup(args) -> int:
    gens = [int(x) for x in args.generators.split(",")]
    s = semigroup_from_generators(gens)
    cert = certify_plane_branch(s.generators)
    payload = {
        "generators": list(s.generators),
        "gaps": list(s.gaps),
        "delta": s.delta,
        "conductor": s.conductor,
        "plane_branch": cert is not None,
    }
    if cert is not None:
        eqs = monomial_curve_equations(cert, s.generators)
        payload.update({
            "e": list(cert.e),
            "n": list(cert.n),
            "witnesses": [list(w) for w in cert.witnesses],
            "mu": branch_milnor(s),
            "equations": [str(p) for p in eqs.as_polynomials()],
        })
    if args.json:
        _emit_json(payload, args.reproducible)
    else:
        print(f"semigroup <{','.join(str(g) for g in s.generators)}>")
        print(f"gaps: {list(s.gaps)}")
        print(f"delta={s.delta}  conductor={s.conductor}")
        if cert is None:
            print("plane branch: no")
        else:
            print(f"plane branch: yes  (e={list(cert.e)}, n={list(cert.n)})")
            print(f"mu = 2*delta = {2 * s.delta}")
            print(f"monomial curve equations: {payload['equations']}")
    if args.expect:
        computed = {"delta": s.delta, "conductor": s.conductor,
                    "mu": 2 * s.delta if cert is not None else None}
        return _check_expect(_parse_expect(args.expect), computed)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    report = bound_report(args.mu, args.tau, args.n, p_g=args.pg,
                          multiplicity=args.multiplicity)
    payload = {
        "mu": args.mu, "tau": args.tau, "n": args.n,
        "p_g": args.pg, "multiplicity": args.multiplicity,
        **_fraction_fields("ratio", Fraction(args.mu, args.tau)),
        "bounds": _bounds_json(report),
    }
    if args.json:
        _emit_json(payload, args.reproducible)
    else:
        print(f"mu={args.mu} tau={args.tau} n={args.n} "
              f"mu/tau={Fraction(args.mu, args.tau)} ~ {args.mu / args.tau:.6f}")
        print(_bounds_text(report))
    return EXIT_OK


def _cmd_superisolated(args) -> int:
    local_mus = tuple(int(x) for x in args.local_mus.split(",")) if args.local_mus else ()
    p_g, mu = superisolated_invariants(SuperisolatedData(args.degree, local_mus))
    payload = {"d": args.degree, "local_mus": list(local_mus), "p_g": p_g, "mu": mu}
    report = None
    if args.tau is not None:
        report = bound_report(mu, args.tau, 2, p_g=p_g)
        payload["tau"] = args.tau
        payload.update(_fraction_fields("ratio", Fraction(mu, args.tau)))
        payload["bounds"] = _bounds_json(report)
    if args.json:
        _emit_json(payload, args.reproducible)
    else:
        print(f"superisolated d={args.degree}: p_g={p_g}  mu={mu}")
        if report is not None:
            print(f"with tau={args.tau}: mu/tau={Fraction(mu, args.tau)} ~ {mu / args.tau:.6f}")
            print(_bounds_text(report))
    return EXIT_OK


def _cmd_constants(args) -> int:
    value = kerner_nemethi_constant(args.n, args.r)
    if args.json:
        _emit_json({"n": args.n, "r": args.r,
                    **_fraction_fields("constant", value)}, args.reproducible)
    else:
        suffix = "" if value.denominator == 1 else f" ~ {float(value):.6f}"
        print(f"C({args.n},{args.r}) = {value}{suffix}")
    return EXIT_OK


def _cmd_tau_min(args) -> int:
    value = wahl_tau_min(args.degree)
    ratio = Fraction((args.degree - 1) ** 3, value)
    payload = {"d": args.degree, "tau_min": value,
               **_fraction_fields("ratio", ratio)}
    if args.json:
        _emit_json(payload, args.reproducible)
    else:
        print(f"tau_min(d={args.degree}) = {value}")
        if args.ratio:
            print(f"(d-1)^3 / tau_min = {ratio} ~ {float(ratio):.6f}")
    return EXIT_OK


def _row_json(row: ReportRow, reproducible: bool = False) -> dict:
    return {
        "index": row.index,
        "germ": row.germ,
        "n": row.n,
        "mu": row.mu,
        "tau": row.tau,
        "isolated": row.isolated,
        **_fraction_fields("ratio", row.ratio),
        "ratio_decimal": float(row.ratio) if row.ratio is not None else None,
        "bounds": _bounds_json(row.report),
        "wall_time_s": None if reproducible else round(row.wall_time_s, 6),
        "note": row.note,
    }


_CSV_BASE = ("index", "germ", "n", "mu", "tau", "isolated",
             "ratio_num", "ratio_den", "ratio_decimal")


def _rows_csv(rows) -> str:
    buffer = io.StringIO()
    header = list(_CSV_BASE)
    for key in BOUND_IDS:
        header += [f"{key}.applicable", f"{key}.holds", f"{key}.margin_num", f"{key}.margin_den"]
    header.append("wall_time_s")
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        data = _row_json(row)
        record = [data[k] for k in _CSV_BASE]
        for key in BOUND_IDS:
            v = data["bounds"].get(key)
            if v is None:
                record += [None, None, None, None]
            else:
                record += [v["applicable"], v["holds"], v["margin_num"], v["margin_den"]]
        record.append(data["wall_time_s"])
        writer.writerow(record)
    return buffer.getvalue()


def _sweep_with_row_timeouts(spec: SweepSpec, seconds: float):
    # Per-germ deadlines need the alarm signal, so this path is serial.
    from germ.corpus import SweepResult, evaluate_germ, generate_corpus

    rows = []
    timed_out = False
    for index, f in enumerate(generate_corpus(spec)):
        try:
            with _deadline(seconds):
                rows.append(evaluate_germ(index, f))
        except TimeoutError:
            timed_out = True
            rows.append(ReportRow(index, str(f), len(f.vars) - 1, None, None, False,
                                  None, None, seconds, note="timeout"))
    ratios = [r.ratio for r in rows if r.ratio is not None]
    margins = [r.report.verdicts["dimca_greuel_4_3"].margin
               for r in rows if r.report is not None and r.n == 1]
    violations = tuple(f"row {r.index}: {key}" for r in rows if r.report
                       for key, v in r.report.verdicts.items() if v.holds is False)
    result = SweepResult(spec, tuple(rows),
                         min(ratios) if ratios else None,
                         max(ratios) if ratios else None,
                         min(margins) if margins else None,
                         violations)
    return result, timed_out


def _cmd_sweep(args) -> int:
    spec = SweepSpec(
        family=args.family, seed=args.seed,
        a_min=args.a_min, a_max=args.a_max, b_min=args.b_min, b_max=args.b_max,
        d_min=args.d_min, d_max=args.d_max, count=args.count,
        suspension_power=args.power,
    )
    timed_out = False
    if args.timeout:
        result, timed_out = _sweep_with_row_timeouts(spec, args.timeout)
    else:
        result = sweep(spec, threads=args.threads)
    summary = {
        "germs": len(result.rows),
        "isolated": sum(1 for r in result.rows if r.isolated),
        **_fraction_fields("min_ratio", result.min_ratio),
        **_fraction_fields("max_ratio", result.max_ratio),
        **_fraction_fields("min_4_3_margin", result.min_43_margin),
        "violations": list(result.violations),
    }
    if args.json:
        _emit_json({"family": spec.family, "seed": spec.seed,
                    "rows": [_row_json(r, args.reproducible) for r in result.rows],
                    "summary": summary}, args.reproducible)
    elif args.csv:
        sys.stdout.write(_rows_csv(result.rows))
    else:
        for r in result.rows:
            ratio = f"{r.ratio} ~ {float(r.ratio):.4f}" if r.ratio is not None else "-"
            note = f"  [{r.note}]" if r.note else ""
            print(f"[{r.index:3d}] {r.germ}: mu={r.mu} tau={r.tau} mu/tau={ratio}{note}")
        print(f"summary: {summary['germs']} germs, {summary['isolated']} isolated, "
              f"min ratio {result.min_ratio}, max ratio {result.max_ratio}, "
              f"min 4/3 margin {result.min_43_margin}, "
              f"{len(result.violations)} bound violations")
    if timed_out:
        print("timeout: some rows were aborted; partial report emitted", file=sys.stderr)
    return EXIT_COMPUTE if (result.violations or timed_out) else EXIT_OK


def _cmd_selftest(args) -> int:
    results = selftest_mod.run_all(fast=args.fast)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"criterion {r.number} [{status}] {r.name}: {r.detail} ({r.seconds:.2f}s)")
        if not r.passed:
            failed += 1
    print(f"selftest: {len(results) - failed}/{len(results)} criteria passed")
    return EXIT_OK if failed == 0 else EXIT_COMPUTE


# ----------------------------------------------------------------------
# Argument parsing


def _add_common(sub, csv_flag=False):
    sub.add_argument("--json", action="store_true", help="emit one JSON object")
    if csv_flag:
        sub.add_argument("--csv", action="store_true", help="emit RFC 4180 CSV rows")
    sub.add_argument("--reproducible", action="store_true",
                     help="suppress the timestamp field in JSON output")
    sub.add_argument("--timeout", type=float, default=None, metavar="SECONDS",
                     help="abort the computation cleanly after this many seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="germ",
        description="Exact Milnor/Tjurina invariants, plane-branch semigroups "
                    "and singularity bound checks.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("invariants", help="mu, tau and bound verdicts of one germ")
    p.add_argument("--vars", required=True, type=lambda s: s.split(","),
                   help="comma-separated ring variables, e.g. x,y,z")
    p.add_argument("--poly", required=True, help="germ in the polynomial grammar")
    p.add_argument("--expect", help="comma-separated assertions, e.g. mu=2288,tau=1660")
    _add_common(p, csv_flag=True)
    p.set_defaults(func=_cmd_invariants)

    p = subs.add_parser("suspend", help="add a power of a fresh variable")
    p.add_argument("--vars", required=True, type=lambda s: s.split(","))
    p.add_argument("--poly", required=True)
    p.add_argument("--power", type=int, default=2, help="suspension exponent k >= 2")
    _add_common(p)
    p.set_defaults(func=_cmd_suspend)

    p = subs.add_parser("semigroup", help="gaps, conductor and plane-branch data")
    p.add_argument("--generators", required=True, help="comma-separated naturals, gcd 1")
    p.add_argument("--expect", help="e.g. delta=8,conductor=16,mu=16")
    _add_common(p)
    p.set_defaults(func=_cmd_semigroup)

    p = subs.add_parser("bounds", help="evaluate the bound catalog on supplied numbers")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="germ dimension")
    p.add_argument("--pg", type=int, default=None, help="geometric genus, if known")
    p.add_argument("--multiplicity", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = subs.add_parser("superisolated", help="closed-form p_g and mu of a superisolated germ")
    p.add_argument("--degree", type=int, required=True, help="degree d of the initial form")
    p.add_argument("--local-mus", default="", help="comma-separated local Milnor numbers")
    p.add_argument("--tau", type=int, default=None, help="also evaluate the bound catalog")
    _add_common(p)
    p.set_defaults(func=_cmd_superisolated)

    p = subs.add_parser("constants", help="sharp mu >= C p_g constants")
    p.add_argument("--n", type=int, required=True, help="dimension n >= 2")
    p.add_argument("--r", type=int, required=True, help="codimension r >= 1")
    _add_common(p)
    p.set_defaults(func=_cmd_constants)

    p = subs.add_parser("tau-min", help="minimal Tjurina number of the diagonal family")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ratio", action="store_true", help="also print (d-1)^3 / tau_min")
    _add_common(p)
    p.set_defaults(func=_cmd_tau_min)

    p = subs.add_parser("sweep", help="evaluate a seeded germ family")
    p.add_argument("--family", required=True, choices=list(
        ("fermat", "suspension", "quasihomogeneous_2var", "deformed_quasihomogeneous")))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a-min", type=int, default=3)
    p.add_argument("--a-max", type=int, default=8)
    p.add_argument("--b-min", type=int, default=3)
    p.add_argument("--b-max", type=int, default=8)
    p.add_argument("--d-min", type=int, default=2)
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--power", type=int, default=2, help="suspension exponent")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: GERM_THREADS or 1)")
    _add_common(p, csv_flag=True)
    p.set_defaults(func=_cmd_sweep)

    p = subs.add_parser("selftest", help="run the acceptance suite end to end")
    p.add_argument("--fast", action="store_true", help="skip the heavy benchmark germ")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except TimeoutError as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (GermError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
