"""Analysis reports: exact JSON payloads, text rendering, file dumps.

Every rational in a report is a "num/den" string (never a float), so
reports are diffable and byte-identical across runs.  Algebraic numbers
carry their minimal polynomial and exact isolating interval, plus an
advisory decimal enclosure computed by exact scaling, not floating
point.  The timings block is always last and drops out entirely with
with_timings=False, which is what the determinism contract covers.
"""

from __future__ import annotations

import csv
import json
import time
from fractions import Fraction

from .lpstar import LPStarFn, count_summary
from .realroots import AlgebraicNumber
from .theorems import check_property_a, compute_shift, verify_theorem2, \
    verify_type_theorem


def frac_str(x) -> str:
    return str(Fraction(x))


def _dec_floor(fr: Fraction, digits: int) -> str:
    scaled = fr.numerator * 10 ** digits // fr.denominator
    return _place_point(scaled, digits)


def _dec_ceil(fr: Fraction, digits: int) -> str:
    scaled = -((-fr.numerator * 10 ** digits) // fr.denominator)
    return _place_point(scaled, digits)


def _place_point(scaled: int, digits: int) -> str:
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + body
    return f"{sign}{body[:-digits]}.{body[-digits:]}"


def decimal_enclosure(x: AlgebraicNumber, digits: int) -> list:
    """[lo, hi] decimal strings guaranteed to bracket x."""
    y = x if x.is_rational else x.refine(Fraction(1, 10 ** digits))
    return [_dec_floor(y.lo, digits), _dec_ceil(y.hi, digits)]


def algebraic_desc(x: AlgebraicNumber, digits: int = 12) -> dict:
    return {
        "minpoly_coeffs": [frac_str(c) for c in x.minpoly.coeffs],
        "interval": [frac_str(x.lo), frac_str(x.hi)],
        "decimal": decimal_enclosure(x, digits),
    }


def interval_pair(x: AlgebraicNumber) -> list:
    return [frac_str(x.lo), frac_str(x.hi)]


def analysis_report(f: LPStarFn, digits: int = 12,
                    with_timings: bool = True) -> dict:
    """The full report for one function.  Field order is part of the
    format; timings_ms, when present, is last."""
    started = time.perf_counter()
    s = count_summary(f)
    pa = check_property_a(f)
    frag2 = verify_theorem2(f)
    fragt = verify_type_theorem(f)

    report = {
        "function": {
            "p_coeffs": [frac_str(c) for c in f.p.coeffs],
            "a": frac_str(f.a),
            "b": frac_str(f.b),
        },
        "counts": s.as_dict(),
        "property_a": {
            "overall": pa.overall,
            "per_zero": [
                {"alpha_interval": interval_pair(z.alpha),
                 "left_clear": z.left_clear,
                 "right_clear": z.right_clear}
                for z in pa.per_zero
            ],
        },
        "verdicts": {
            "hawaii": s.zr_q <= s.two_m,
            "prop1": frag2["prop1_ok"],
            "theorem2": frag2["theorem2_ok"],
            "type_theorem": fragt["type_theorem_ok"],
        },
    }
    if s.zr_q > 0:
        sh = compute_shift(f)
        report["shift"] = {
            "sigma_minpoly": [frac_str(c) for c in sh.sigma_star.minpoly.coeffs],
            "sigma_interval": interval_pair(sh.sigma_star),
            "sigma_decimal": decimal_enclosure(sh.sigma_star, digits),
            "zc_before": sh.zc_phi,
            "zc_after": sh.zc_psi_prime,
        }
    if with_timings:
        elapsed = (time.perf_counter() - started) * 1000.0
        report["timings_ms"] = {"total": round(elapsed, 3)}
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def render_text(report: dict) -> str:
    c = report["counts"]
    pa = report["property_a"]
    v = report["verdicts"]
    lines = [
        "function: p_coeffs=[%s], a=%s, b=%s" % (
            ", ".join(report["function"]["p_coeffs"]),
            report["function"]["a"], report["function"]["b"]),
        "counts: 2m=%d 2m1=%d Z(Q)=%d Z(Q1)=%d extra=%d" % (
            c["two_m"], c["two_m1"], c["zr_q"], c["zr_q1"], c["extra"]),
        "property A: %s (%d real zero%s)" % (
            "holds" if pa["overall"] else "fails", len(pa["per_zero"]),
            "" if len(pa["per_zero"]) == 1 else "s"),
    ]
    for z in pa["per_zero"]:
        lines.append("  zero in [%s, %s]: left %s, right %s" % (
            z["alpha_interval"][0], z["alpha_interval"][1],
            "clear" if z["left_clear"] else "blocked",
            "clear" if z["right_clear"] else "blocked"))

    def flag(x):
        return "not applicable" if x is None else ("pass" if x else "FAIL")

    lines.append("verdicts: hawaii=%s prop1=%s theorem2=%s type=%s" % (
        flag(v["hawaii"]), flag(v["prop1"]), flag(v["theorem2"]),
        flag(v["type_theorem"])))
    if "shift" in report:
        sh = report["shift"]
        lines.append("shift: sigma* in [%s, %s] ~ [%s, %s]" % (
            sh["sigma_interval"][0], sh["sigma_interval"][1],
            sh["sigma_decimal"][0], sh["sigma_decimal"][1]))
        lines.append("shift: nonreal zeros %d -> %d after exp(-sigma z)"
                     % (sh["zc_before"], sh["zc_after"]))
    if "timings_ms" in report:
        lines.append("timings: %s ms total" % report["timings_ms"]["total"])
    return "\n".join(lines)


# -- optional file reports ----------------------------------------------------


def write_analyze_report(dirpath: str, report: dict) -> list:
    """CSV of the counts plus a bar figure.  Returns written paths."""
    import os

    os.makedirs(dirpath, exist_ok=True)
    csv_path = os.path.join(dirpath, "counts.csv")
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["two_m", "two_m1", "zr_q", "zr_q1", "extra"])
        c = report["counts"]
        w.writerow([c["two_m"], c["two_m1"], c["zr_q"], c["zr_q1"],
                    c["extra"]])
    png_path = os.path.join(dirpath, "counts.png")
    _bar_figure(png_path, ["2m", "2m1", "Z(Q)", "Z(Q1)"],
                {"count": [report["counts"]["two_m"],
                           report["counts"]["two_m1"],
                           report["counts"]["zr_q"],
                           report["counts"]["zr_q1"]]},
                "zero counts")
    return [csv_path, png_path]


def write_fuzz_report(dirpath: str, tallies: dict) -> list:
    """Per-entry applicability CSV plus a stacked bar figure.

    tallies: name -> {"pass": int, "fail": int, "not-applicable": int}
    """
    import os

    os.makedirs(dirpath, exist_ok=True)
    csv_path = os.path.join(dirpath, "ledger.csv")
    names = list(tallies)
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["entry", "pass", "fail", "not_applicable"])
        for name in names:
            t = tallies[name]
            w.writerow([name, t["pass"], t["fail"], t["not-applicable"]])
    png_path = os.path.join(dirpath, "ledger.png")
    _bar_figure(png_path, names,
                {"pass": [tallies[n]["pass"] for n in names],
                 "fail": [tallies[n]["fail"] for n in names],
                 "n/a": [tallies[n]["not-applicable"] for n in names]},
                "ledger results per entry", stacked=True, horizontal=True)
    return [csv_path, png_path]


def _bar_figure(path, labels, series, title, stacked=False, horizontal=False):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    height = max(3.0, 0.3 * len(labels)) if horizontal else 4.0
    fig, ax = plt.subplots(figsize=(10, height))
    pos = range(len(labels))
    offset = [0] * len(labels)
    for name, values in series.items():
        if horizontal:
            ax.barh(list(pos), values, left=offset if stacked else None,
                    label=name)
        else:
            ax.bar(list(pos), values, bottom=offset if stacked else None,
                   label=name)
        if stacked:
            offset = [o + v for o, v in zip(offset, values)]
    if horizontal:
        ax.set_yticks(list(pos))
        ax.set_yticklabels(labels, fontsize=7)
        ax.invert_yaxis()
    else:
        ax.set_xticks(list(pos))
        ax.set_xticklabels(labels)
    ax.set_title(title)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
