"""Command line front end.

Subcommands: analyze (full report), verify (named checks), shift (the
optimal exponential shift), isolate (real roots of a polynomial), fuzz
(randomized ledger runs).  Exit codes: 0 all checks pass, 1 a check
failed (with a witness emitted), 2 usage or parse error.

The fuzz seed comes from --seed, falling back to the HAWAII_SEED
environment variable, then to 0.  With --jobs N instances are evaluated
in parallel; results are assembled by instance index, so the output is
identical whatever the job count.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .harness import (FAIL, NOT_APPLICABLE, GenProfile, generate,
                      instance_payload, run_ledger)
from .lpstar import count_summary
from .parsing import ParseError, format_poly, parse, parse_polynomial
from .realroots import AlgebraicNumber, compare, isolate_roots
from .report import (algebraic_desc, analysis_report, decimal_enclosure,
                     frac_str, render_text, report_json,
                     write_analyze_report, write_fuzz_report)
from .theorems import compute_shift, verify_theorem2, verify_type_theorem

KINDS = ("polynomial", "exp-linear", "gaussian")


def main(argv=None) -> int:
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage, 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(exc.pretty(), file=sys.stderr)
        return 2


def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hawaii",
        description="Exact zero counts of Q = (phi'/phi)' for "
                    "phi = p(z)*exp(-a*z^2+b*z)")
    sub = ap.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full report for one function")
    p_an.add_argument("expr")
    p_an.add_argument("--json", action="store_true")
    p_an.add_argument("--no-timings", action="store_true")
    p_an.add_argument("--digits", type=int, default=12)
    p_an.add_argument("--report-dir", default=None,
                      help="also write counts.csv and counts.png here")
    p_an.set_defaults(fn=_cmd_analyze)

    p_ver = sub.add_parser("verify", help="run named certified checks")
    p_ver.add_argument("expr")
    p_ver.add_argument("--check", required=True,
                       choices=("hawaii", "theorem2", "type", "lemmas",
                                "all"))
    p_ver.set_defaults(fn=_cmd_verify)

    p_sh = sub.add_parser("shift", help="optimal exponential shift sigma*")
    p_sh.add_argument("expr")
    p_sh.add_argument("--digits", type=int, default=12)
    p_sh.add_argument("--json", action="store_true")
    p_sh.set_defaults(fn=_cmd_shift)

    p_iso = sub.add_parser("isolate", help="isolate real roots of a "
                                           "polynomial")
    p_iso.add_argument("poly")
    p_iso.add_argument("--from", dest="lo", default=None, metavar="R")
    p_iso.add_argument("--to", dest="hi", default=None, metavar="R")
    p_iso.add_argument("--digits", type=int, default=12)
    p_iso.add_argument("--json", action="store_true")
    p_iso.set_defaults(fn=_cmd_isolate)

    p_fz = sub.add_parser("fuzz", help="randomized ledger runs")
    p_fz.add_argument("--profile", required=True, choices=KINDS + ("all",))
    p_fz.add_argument("--count", type=int, default=100)
    p_fz.add_argument("--seed", type=int, default=None,
                      help="default: HAWAII_SEED env var, else 0")
    p_fz.add_argument("--degree-max", type=int, default=8)
    p_fz.add_argument("--jobs", type=int, default=1)
    p_fz.add_argument("--mult-max", type=int, default=3)
    p_fz.add_argument("--height", type=int, default=8)
    p_fz.add_argument("--json", action="store_true")
    p_fz.add_argument("--report-dir", default=None,
                      help="also write ledger.csv and ledger.png here")
    p_fz.set_defaults(fn=_cmd_fuzz)
    return ap


# -- analyze ------------------------------------------------------------------


def _cmd_analyze(args) -> int:
    f = parse(args.expr).lpstar()
    report = analysis_report(f, digits=args.digits,
                             with_timings=not args.no_timings)
    print(report_json(report) if args.json else render_text(report))
    if args.report_dir:
        for path in write_analyze_report(args.report_dir, report):
            print(f"wrote {path}", file=sys.stderr)
    v = report["verdicts"]
    ok = all(x is not False for x in v.values())
    return 0 if ok else 1


# -- verify -------------------------------------------------------------------


def _cmd_verify(args) -> int:
    f = parse(args.expr).lpstar()
    which = args.check
    failed = False

    if which in ("hawaii", "all"):
        s = count_summary(f)
        ok = s.zr_q <= s.two_m
        failed |= not ok
        print(f"hawaii: {'pass' if ok else 'FAIL'} "
              f"(Z(Q)={s.zr_q} <= 2m={s.two_m})")
    if which in ("theorem2", "all"):
        frag = verify_theorem2(f)
        failed |= _report_gated("theorem2", frag["theorem2_ok"],
                                frag["theorem2_bounds"], f)
    if which in ("type", "all"):
        frag = verify_type_theorem(f)
        failed |= _report_gated("type", frag["type_theorem_ok"],
                                frag["type_bounds"], f,
                                extra=f" case={frag['type_case']}")
    if which in ("lemmas", "all"):
        for e in run_ledger(f):
            print(f"{e.name}: {e.result}"
                  + (f" ({e.reason})" if e.reason else ""))
            if e.result == FAIL:
                failed = True
                print("  witness: " + json.dumps(e.witness))
    if which == "all":
        from .theorems import check_property_a

        pa = check_property_a(f)
        print(f"property_a: {str(pa.overall).lower()} (recorded)")
    return 1 if failed else 0


def _report_gated(name, ok, bounds, f, extra="") -> bool:
    if ok is None:
        print(f"{name}: not applicable (property A fails){extra}")
        return False
    lo, hi = bounds
    print(f"{name}: {'pass' if ok else 'FAIL'} "
          f"(bounds [{lo}, {hi}]){extra}")
    if not ok:
        print("  witness: " + json.dumps(
            {"instance": instance_payload(f), "bounds": [lo, hi],
             "zr_q": count_summary(f).zr_q}))
    return not ok


# -- shift --------------------------------------------------------------------


def _cmd_shift(args) -> int:
    f = parse(args.expr).lpstar()
    sh = compute_shift(f)
    sigma = sh.sigma_star
    if args.json:
        payload = {
            "trivial": sh.trivial,
            "sigma": algebraic_desc(sigma, args.digits),
            "zeta": None if sh.zeta_star is None
                    else algebraic_desc(sh.zeta_star, args.digits),
            "property_a_after": sh.property_a_after,
            "zc_before": sh.zc_phi,
            "zc_after": sh.zc_psi_prime,
        }
        print(json.dumps(payload, indent=2))
        return 0
    if sh.trivial:
        print("Q has no real zeros; any shift works, sigma* = 0")
    dec = decimal_enclosure(sigma, args.digits)
    print(f"sigma* minpoly: {format_poly(sigma.minpoly)}")
    print(f"sigma* interval: [{frac_str(sigma.lo)}, {frac_str(sigma.hi)}]")
    print(f"sigma* decimal: [{dec[0]}, {dec[1]}]")
    if sh.zeta_star is not None:
        zdec = decimal_enclosure(sh.zeta_star, args.digits)
        print(f"attained at zeta in [{zdec[0]}, {zdec[1]}]")
    print(f"property A after shift: {sh.property_a_after}")
    print(f"nonreal zero count: {sh.zc_phi} -> {sh.zc_psi_prime} "
          f"(phi' of the shifted function)")
    return 0


# -- isolate ------------------------------------------------------------------


def _as_fraction_arg(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what} must be a rational number", 0, text)


def _cmd_isolate(args) -> int:
    p = parse_polynomial(args.poly)
    roots = [] if p.degree == 0 else list(isolate_roots(p))
    if args.lo is not None:
        lo = AlgebraicNumber.from_rational(_as_fraction_arg(args.lo, "--from"))
        roots = [(x, m) for x, m in roots if compare(x, lo) >= 0]
    if args.hi is not None:
        hi = AlgebraicNumber.from_rational(_as_fraction_arg(args.hi, "--to"))
        roots = [(x, m) for x, m in roots if compare(x, hi) <= 0]
    # Raw isolating intervals from different square-free factors can overlap;
    # narrow them before printing so the listing reads as disjoint brackets.
    width = Fraction(1, 10 ** max(args.digits, 1))
    roots = [(x.refine(width), m) for x, m in roots]
    if args.json:
        print(json.dumps([{"multiplicity": m,
                           **algebraic_desc(x, digits=args.digits)}
                          for x, m in roots], indent=2))
        return 0
    if not roots:
        print("no real roots in range")
        return 0
    for i, (x, m) in enumerate(roots):
        dec = decimal_enclosure(x, args.digits)
        print(f"root {i}: mult {m}, interval [{frac_str(x.lo)}, "
              f"{frac_str(x.hi)}], decimal [{dec[0]}, {dec[1]}]")
    return 0


# -- fuzz ---------------------------------------------------------------------


def _fuzz_task(task):
    """One fuzz instance; module-level so worker processes can run it."""
    kind, degree_max, mult_max, height, seed, index = task
    rng = random.Random(f"hawaii-fuzz:{kind}:{seed}:{index}")
    rrb = rng.randint(0, min(3, degree_max))
    npb = rng.randint(0, min(max((degree_max - rrb) // 2, 0), 2))
    if kind != "gaussian" and rrb + npb == 0:
        rrb = 1
    prof = GenProfile(kind, degree_max, rrb, npb,
                      multiplicity_max=rng.randint(1, mult_max),
                      coefficient_height=height, seed=rng.getrandbits(63))
    try:
        f = generate(prof)
        entries = run_ledger(f)
        rows = [(e.name, e.result) for e in entries]
        fails = [dict(e.witness, entry=e.name)
                 for e in entries if e.result == FAIL]
    except Exception as exc:  # a crash is a reportable defect, not an abort
        rows = []
        fails = [{"entry": "harness-crash", "error": repr(exc),
                  "instance": None}]
    return index, kind, prof._asdict(), rows, fails


def _cmd_fuzz(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("HAWAII_SEED", "0"))
    kinds = KINDS if args.profile == "all" else (args.profile,)
    tasks = [(kind, args.degree_max, args.mult_max, args.height, seed, i)
             for kind in kinds for i in range(args.count)]

    if args.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            results = list(pool.imap(_fuzz_task, tasks, chunksize=8))
    else:
        results = [_fuzz_task(t) for t in tasks]

    tallies: dict = {}
    failures = []
    for index, kind, prof, rows, fails in results:
        for name, result in rows:
            t = tallies.setdefault(name, {"pass": 0, "fail": 0,
                                          "not-applicable": 0})
            t[result] += 1
        for w in fails:
            failures.append({"index": index, "kind": kind,
                             "profile": prof, **w})

    if args.json:
        print(json.dumps({
            "profile": args.profile, "count": args.count, "seed": seed,
            "degree_max": args.degree_max, "instances": len(tasks),
            "entries": tallies, "failures": failures}, indent=2))
    else:
        print(f"{len(tasks)} instances (profile={args.profile}, "
              f"seed={seed}, degree_max={args.degree_max})")
        for name, t in tallies.items():
            print(f"  {name}: {t['pass']} pass / {t['fail']} fail / "
                  f"{t['not-applicable']} n/a")
        for w in failures:
            print("FAILURE " + json.dumps(w))
        if not failures:
            print("no ledger failures")
    if args.report_dir:
        for path in write_fuzz_report(args.report_dir, tallies):
            print(f"wrote {path}", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
