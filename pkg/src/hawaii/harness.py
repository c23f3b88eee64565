"""Random instance generation and the count-inequality ledger.

generate() builds the polynomial part from linear and irreducible
quadratic factors, so the real and nonreal zero multisets are ground
truth by construction.  run_ledger() evaluates every certified count
statement on one function, each as a LedgerEntry with exact interval
arithmetic; statements whose preconditions fail are reported as
not-applicable rather than silently skipped, and failures carry a
replayable witness instead of raising.  run_scenarios() drives the
three scripted stress families behind a single seed.

The counts used here are rebuilt from isolated root lists instead of
count_summary, on purpose: count_summary asserts the universal
inequalities internally, and the ledger must be able to report a
violation as data.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key
from typing import NamedTuple

from .lpstar import (CountSummary, LPStarFn, build_tower, count_summary,
                     critical_pair, shift_by_rational)
from .polys import Poly
from .realroots import (NEG_INF, POS_INF, AlgebraicNumber, compare,
                        count_roots, isolate_roots, sign_at)
from .theorems import (_bound_fragment, _property_a_verdict, _type_fragment,
                       check_property_a, compute_shift)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

KINDS = ("polynomial", "exp-linear", "gaussian")


# -- generation ---------------------------------------------------------------


class GenProfile(NamedTuple):
    """Shape of one random instance family.

    kind picks the exponential part: none, e^(bz) with b != 0, or a
    genuine Gaussian with a > 0.  The budgets are exact: the generated p
    has real_root_budget distinct real roots and nonreal_pair_budget
    distinct conjugate pairs, each with multiplicity between 1 and
    multiplicity_max, subject to the total degree cap.
    """

    kind: str
    degree_max: int
    real_root_budget: int
    nonreal_pair_budget: int
    multiplicity_max: int = 1
    coefficient_height: int = 10
    seed: int = 0


class GroundTruth(NamedTuple):
    """What generate() built, by construction."""

    real_roots: tuple  # ((Fraction, multiplicity), ...) ascending
    nonreal_pairs: int  # conjugate pairs of p, counting multiplicity


def _validate(profile: GenProfile):
    if profile.kind not in KINDS:
        raise ValueError(f"unknown kind {profile.kind!r}")
    if profile.degree_max < 1:
        raise ValueError("degree_max must be positive")
    if profile.real_root_budget < 0 or profile.nonreal_pair_budget < 0:
        raise ValueError("budgets must be nonnegative")
    if profile.multiplicity_max < 1:
        raise ValueError("multiplicity_max must be positive")
    if profile.coefficient_height < 1:
        raise ValueError("coefficient_height must be positive")
    need = profile.real_root_budget + 2 * profile.nonreal_pair_budget
    if need > profile.degree_max:
        raise ValueError(
            f"budget needs degree {need}, degree_max is {profile.degree_max}")
    if profile.kind != "gaussian" and need == 0:
        raise ValueError(
            "a constant polynomial part needs kind='gaussian': "
            "plain constants and C*exp(b*z) are outside the class")


def _draw_rational(rng, height) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def _draw_distinct(rng, count, height, positive=False) -> list:
    seen: list[Fraction] = []
    tries = 0
    while len(seen) < count:
        tries += 1
        if tries > 10000:
            raise ValueError(
                f"cannot draw {count} distinct rationals of height {height}")
        if positive:
            r = Fraction(rng.randint(1, height), rng.randint(1, height))
        else:
            r = _draw_rational(rng, height)
        if r not in seen:
            seen.append(r)
    return seen


def generate(profile: GenProfile) -> LPStarFn:
    f, _ = generate_with_truth(profile)
    return f


def generate_with_truth(profile: GenProfile) -> tuple[LPStarFn, GroundTruth]:
    """Deterministic in the profile (the seed is one of its fields)."""
    _validate(profile)
    rng = random.Random(f"hawaii-gen:{profile!r}")
    height = profile.coefficient_height

    reals = sorted(_draw_distinct(rng, profile.real_root_budget, height))
    centers = []
    tries = 0
    while len(centers) < profile.nonreal_pair_budget:
        tries += 1
        if tries > 10000:
            raise ValueError("cannot draw distinct quadratic factors")
        u = _draw_rational(rng, height)
        v = Fraction(rng.randint(1, height), rng.randint(1, height))
        if (u, v) not in centers:
            centers.append((u, v))

    # multiplicities: everything starts simple, leftover degree is spent
    # in a shuffled pass so no factor is systematically favored
    mults = [1] * (len(reals) + len(centers))
    costs = [1] * len(reals) + [2] * len(centers)
    leftover = profile.degree_max - sum(costs)
    order = list(range(len(mults)))
    rng.shuffle(order)
    for idx in order:
        cap = min(profile.multiplicity_max - 1, leftover // costs[idx])
        if cap > 0:
            bump = rng.randint(0, cap)
            mults[idx] += bump
            leftover -= bump * costs[idx]

    while True:
        lead = rng.randint(-height, height)
        if lead:
            break
    p = Poly.constant(lead)
    for r, m in zip(reals, mults):
        p = p * Poly((-r, 1)) ** m
    pair_mults = mults[len(reals):]
    for (u, v), m in zip(centers, pair_mults):
        p = p * Poly((u * u + v * v, -2 * u, 1)) ** m

    if profile.kind == "polynomial":
        a, b = Fraction(0), Fraction(0)
    elif profile.kind == "exp-linear":
        a = Fraction(0)
        while True:
            b = _draw_rational(rng, height)
            if b:
                break
    else:
        a = Fraction(rng.randint(1, height), rng.randint(1, height))
        b = _draw_rational(rng, height)

    truth = GroundTruth(
        real_roots=tuple(zip(reals, mults[:len(reals)])),
        nonreal_pairs=sum(pair_mults))
    return LPStarFn(p, a, b), truth


def truth_matches(f: LPStarFn, truth: GroundTruth) -> bool:
    """Engine-side real root profile of p against the construction."""
    roots = _roots(f.p)
    if len(roots) != len(truth.real_roots):
        return False
    for (x, m), (r, wm) in zip(roots, truth.real_roots):
        if m != wm or compare(x, AlgebraicNumber.from_rational(r)) != 0:
            return False
    nonreal = f.p.degree - sum(m for _, m in roots)
    return nonreal == 2 * truth.nonreal_pairs


# -- ledger plumbing ----------------------------------------------------------


class LedgerEntry:
    """One checked count statement.

    result is "pass", "fail", or "not-applicable".  A failure carries a
    witness dict with the exact instance and the offending intervals and
    counts; an inapplicable entry names the missing precondition in
    reason instead.
    """

    __slots__ = ("name", "claim", "scope", "result", "witness", "reason")

    def __init__(self, name, claim, scope, result, witness=None, reason=None):
        self.name = name
        self.claim = claim
        self.scope = scope
        self.result = result
        self.witness = witness
        self.reason = reason

    def as_dict(self) -> dict:
        d = {"name": self.name, "claim": self.claim, "scope": self.scope,
             "result": self.result}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.reason is not None:
            d["reason"] = self.reason
        return d

    def __repr__(self):
        return f"LedgerEntry({self.name}: {self.result})"


def instance_payload(f: LPStarFn) -> dict:
    """Exact JSON-safe serialization of one function."""
    return {"p_coeffs": [str(c) for c in f.p.coeffs],
            "a": str(f.a), "b": str(f.b)}


def _roots(poly: Poly) -> list:
    if poly.is_zero or poly.degree == 0:
        return []
    return list(isolate_roots(poly))


def _inside(x, lo, hi, inc_lo, inc_hi) -> bool:
    if isinstance(lo, AlgebraicNumber):
        c = compare(x, lo)
        if c < 0 or (c == 0 and not inc_lo):
            return False
    if isinstance(hi, AlgebraicNumber):
        c = compare(x, hi)
        if c > 0 or (c == 0 and not inc_hi):
            return False
    return True


def _count(roots, lo=NEG_INF, hi=POS_INF, inc_lo=False, inc_hi=False) -> int:
    """Zeros inside the interval, counting multiplicities.  Infinite
    endpoints are the floats +-inf; finite ones are AlgebraicNumbers."""
    return sum(m for x, m in roots if _inside(x, lo, hi, inc_lo, inc_hi))


def _ndistinct(roots, lo=NEG_INF, hi=POS_INF, inc_lo=False, inc_hi=False) -> int:
    return sum(1 for x, _ in roots if _inside(x, lo, hi, inc_lo, inc_hi))


def _merged(lists) -> list:
    """Distinct union of root lists, ascending."""
    xs = [x for lst in lists for x, _ in lst]
    xs.sort(key=cmp_to_key(compare))
    out = []
    for x in xs:
        if not out or compare(out[-1], x) != 0:
            out.append(x)
    return out


def _pt(x) -> str:
    if isinstance(x, float):
        return "-inf" if x == NEG_INF else "+inf"
    if x.is_rational:
        return str(x.value)
    return f"~{x.approx(12):.12g}"


def _ival(lo, hi, inc_lo=False, inc_hi=False) -> str:
    lb = "[" if inc_lo else "("
    rb = "]" if inc_hi else ")"
    return f"{lb}{_pt(lo)}, {_pt(hi)}{rb}"


def _rational_strictly_between(floor, x: AlgebraicNumber) -> Fraction:
    """A rational strictly between floor (an AlgebraicNumber, or None
    for -inf) and x."""
    if floor is None:
        return x.lo - 1 if x.is_rational else x.lo
    eps = Fraction(1, 4)
    while True:
        a_hi = floor.hi if floor.is_rational else floor.refine(eps).hi
        b_lo = x.lo if x.is_rational else x.refine(eps).lo
        if a_hi < b_lo:
            return (a_hi + b_lo) / 2
        eps /= 16


def _blocks(roots, *obstacle_lists) -> list:
    """Maximal runs [i..j] of consecutive roots whose closed hull
    contains no obstacle.  A root that coincides with an obstacle starts
    no run."""
    out = []
    i, n = 0, len(roots)

    def clean(lo, hi):
        return all(_ndistinct(obs, lo, hi, True, True) == 0
                   for obs in obstacle_lists)

    while i < n:
        if not clean(roots[i][0], roots[i][0]):
            i += 1
            continue
        j = i
        while j + 1 < n and clean(roots[i][0], roots[j + 1][0]):
            j += 1
        out.append((i, j))
        i = j + 1
    return out


class _Ctx:
    """Shared per-function data: the tower, the reduced fractions, the
    isolated roots of P0, P1, P2, Qnum, Q1num, the counts rebuilt from
    those lists, and the property A verdict."""

    __slots__ = ("f", "t", "pair", "p0", "p1", "p2", "q", "q1", "s", "pa")

    def __init__(self, f: LPStarFn):
        self.f = f
        self.t = build_tower(f)
        self.pair = critical_pair(self.t)
        self.p0 = _roots(self.t.P0)
        self.p1 = _roots(self.t.P1)
        self.p2 = _roots(self.t.P2)
        self.q = _roots(self.pair.Qnum)
        self.q1 = _roots(self.pair.Q1num)

        zp_mult = sum(m for _, m in self.p0)
        zp_distinct = len(self.p0)
        zp1_mult = sum(m for _, m in self.p1)
        two_m = self.t.P0.degree - zp_mult
        two_m1 = self.t.P1.degree - zp1_mult
        extra = zp1_mult - (zp_mult - zp_distinct) - max(zp_distinct - 1, 0)
        self.s = CountSummary(two_m, two_m1,
                              sum(m for _, m in self.q),
                              sum(m for _, m in self.q1), extra)
        self.pa = _property_a_verdict(self.t, self.pair)


# -- the checks ---------------------------------------------------------------


def _ck_q_parity(ctx):
    if ctx.s.zr_q % 2 == 0:
        return PASS, None, None
    return FAIL, {"zr_q": ctx.s.zr_q}, None


def _ck_q1_parity(ctx):
    if ctx.s.zr_q1 % 2 == 0:
        return PASS, None, None
    return FAIL, {"zr_q1": ctx.s.zr_q1}, None


def _ck_q_negative_far_out(ctx):
    qn = ctx.pair.Qnum
    if qn.lc < 0 and qn.degree % 2 == 0:
        return PASS, None, None
    return FAIL, {"qnum_lead": str(qn.lc), "qnum_degree": qn.degree}, None


def _ck_upper_bound(ctx):
    if ctx.s.zr_q <= ctx.s.two_m:
        return PASS, None, None
    return FAIL, {"zr_q": ctx.s.zr_q, "two_m": ctx.s.two_m}, None


def _ck_lower_bound(ctx):
    if ctx.s.two_m - ctx.s.two_m1 <= ctx.s.zr_q:
        return PASS, None, None
    return FAIL, {"zr_q": ctx.s.zr_q, "two_m": ctx.s.two_m,
                  "two_m1": ctx.s.two_m1}, None


def _ck_theorem2(ctx):
    frag = _bound_fragment(ctx.s, ctx.pa)
    ok = frag["theorem2_ok"]
    if ok is None:
        return NOT_APPLICABLE, None, "property A fails"
    if ok:
        return PASS, None, None
    return FAIL, {"bounds": list(frag["theorem2_bounds"]),
                  "zr_q": ctx.s.zr_q}, None


def _ck_type_bound(ctx):
    frag = _type_fragment(ctx.f, ctx.s, ctx.pa)
    ok = frag["type_theorem_ok"]
    if ok is None:
        return NOT_APPLICABLE, None, "property A fails"
    if ok:
        return PASS, None, None
    return FAIL, {"type_case": frag["type_case"],
                  "bounds": list(frag["type_bounds"]),
                  "zr_q": ctx.s.zr_q}, None


def _ck_extra_sandwich(ctx):
    s = ctx.s
    zero_free_poly = (ctx.f.a == 0 and ctx.f.b == 0 and not ctx.p0)
    slack = 1 if zero_free_poly else 0
    mid = s.extra + s.two_m1
    if s.two_m - slack <= mid <= s.two_m + 2:
        return PASS, None, None
    return FAIL, {"extra": s.extra, "two_m": s.two_m, "two_m1": s.two_m1,
                  "slack": slack}, None


def _ck_multiplicity_transfer(ctx):
    scoped = [(b, m) for b, m in ctx.p1 if sign_at(ctx.t.P0, b) != 0]
    if not scoped:
        return NOT_APPLICABLE, None, \
            "phi' has no real zero at which phi is nonzero"
    bad = []
    for beta, mult in scoped:
        got = next((m for x, m in ctx.q if compare(x, beta) == 0), 0)
        if got != mult - 1:
            bad.append({"beta": _pt(beta), "phi_prime_mult": mult,
                        "q_mult": got})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _consecutive_clear_pairs(ctx):
    # endpoints included: a multiple zero of phi at beta makes phi'/phi
    # blow up there instead of vanishing, and the count claim with it
    betas = [x for x, _ in ctx.p1]
    return [(u, v) for u, v in zip(betas, betas[1:])
            if _ndistinct(ctx.p0, u, v, True, True) == 0]


def _ck_odd_between_critical(ctx):
    if len(ctx.p1) < 2:
        return NOT_APPLICABLE, None, \
            "phi' has fewer than two distinct real zeros"
    pairs = _consecutive_clear_pairs(ctx)
    if not pairs:
        return NOT_APPLICABLE, None, \
            "every gap between consecutive zeros of phi' holds a zero of phi"
    bad = []
    for u, v in pairs:
        zq = _count(ctx.q, u, v)
        if zq % 2 == 0:
            bad.append({"interval": _ival(u, v), "zr_q": zq})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_sandwich_between_critical(ctx):
    if len(ctx.p1) < 2:
        return NOT_APPLICABLE, None, \
            "phi' has fewer than two distinct real zeros"
    pairs = _consecutive_clear_pairs(ctx)
    if not pairs:
        return NOT_APPLICABLE, None, \
            "every gap between consecutive zeros of phi' holds a zero of phi"
    bad = []
    for u, v in pairs:
        zq = _count(ctx.q, u, v)
        z1 = _count(ctx.q1, u, v)
        if not 1 <= zq <= 1 + z1:
            bad.append({"interval": _ival(u, v), "zr_q": zq, "zr_q1": z1})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_even_flanks(ctx):
    if not ctx.p0:
        return NOT_APPLICABLE, None, "phi has no real zeros"
    scoped = [zn for zn in ctx.pa.per_zero
              if isinstance(zn.beta1, AlgebraicNumber)
              and isinstance(zn.beta2, AlgebraicNumber)
              and _ndistinct(ctx.p0, zn.beta1, zn.beta2) == 1]
    if not scoped:
        return NOT_APPLICABLE, None, \
            "no zero of phi sits alone between finite zeros of phi'"
    bad = []
    for zn in scoped:
        left = _count(ctx.q, zn.beta1, zn.alpha)
        right = _count(ctx.q, zn.alpha, zn.beta2)
        if left % 2 or right % 2:
            bad.append({"alpha": _pt(zn.alpha),
                        "left_interval": _ival(zn.beta1, zn.alpha),
                        "left_count": left,
                        "right_interval": _ival(zn.alpha, zn.beta2),
                        "right_count": right})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_outer_evens(ctx):
    if not ctx.p0:
        return NOT_APPLICABLE, None, "phi has no real zeros"
    a_s, a_l = ctx.p0[0][0], ctx.p0[-1][0]
    right = _count(ctx.q, a_l, POS_INF)
    left = _count(ctx.q, NEG_INF, a_s)
    if right % 2 == 0 and left % 2 == 0:
        return PASS, None, None
    return FAIL, {"beyond_largest": right, "below_smallest": left}, None


def _outer_sides(ctx):
    """(label, r, extreme zero, inner beta, outer beta) per qualifying
    side: r counts zeros of phi' past the extreme zero of phi."""
    sides = []
    a_l = ctx.p0[-1][0]
    r = _count(ctx.p1, a_l, POS_INF)
    if r >= 1:
        extra = [x for x, _ in ctx.p1 if compare(x, a_l) > 0]
        sides.append(("right", r, a_l, extra[0], extra[-1]))
    a_s = ctx.p0[0][0]
    r = _count(ctx.p1, NEG_INF, a_s)
    if r >= 1:
        extra = [x for x, _ in ctx.p1 if compare(x, a_s) < 0]
        sides.append(("left", r, a_s, extra[-1], extra[0]))
    return sides


def _ck_outer_parity(ctx):
    if not ctx.p0:
        return NOT_APPLICABLE, None, "phi has no real zeros"
    sides = _outer_sides(ctx)
    if not sides:
        return NOT_APPLICABLE, None, \
            "phi' has no real zeros beyond the extreme zeros of phi"
    bad = []
    for label, r, _, _, outermost in sides:
        if label == "right":
            zq = _count(ctx.q, outermost, POS_INF)
        else:
            zq = _count(ctx.q, NEG_INF, outermost)
        want_odd = (r % 2 == 0)
        if (zq % 2 == 1) != want_odd:
            bad.append({"side": label, "extra_critical": r, "zr_q": zq})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_outer_floor(ctx):
    if not ctx.p0:
        return NOT_APPLICABLE, None, "phi has no real zeros"
    sides = _outer_sides(ctx)
    if not sides:
        return NOT_APPLICABLE, None, \
            "phi' has no real zeros beyond the extreme zeros of phi"
    bad = []
    for label, r, _, innermost, _ in sides:
        if label == "right":
            zq = _count(ctx.q, innermost, POS_INF, inc_lo=True)
            z1 = _count(ctx.q1, innermost, POS_INF, inc_lo=True)
            shown = _ival(innermost, POS_INF, inc_lo=True)
        else:
            zq = _count(ctx.q, NEG_INF, innermost, inc_hi=True)
            z1 = _count(ctx.q1, NEG_INF, innermost, inc_hi=True)
            shown = _ival(NEG_INF, innermost, inc_hi=True)
        floor = 2 * (r // 2)
        if not floor <= zq <= floor + z1:
            bad.append({"side": label, "interval": shown,
                        "extra_critical": r, "zr_q": zq, "zr_q1": z1})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_clear_intervals(ctx):
    if ctx.t.P2.is_zero:
        return NOT_APPLICABLE, None, "phi'' vanishes identically"
    cuts = _merged([ctx.p0, ctx.p1, ctx.p2])
    pts = [NEG_INF] + cuts + [POS_INF]
    bad = []
    for lo, hi in zip(pts, pts[1:]):
        zq = _count(ctx.q, lo, hi)
        z1 = _count(ctx.q1, lo, hi)
        if zq > 1 + z1:
            bad.append({"interval": _ival(lo, hi), "zr_q": zq, "zr_q1": z1})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_beside_zero(ctx):
    if not ctx.p0:
        return NOT_APPLICABLE, None, "phi has no real zeros"
    bad = []
    for alpha, _ in ctx.p0:
        below = [x for x, _ in ctx.p1 if compare(x, alpha) < 0]
        beta = below[-1] if below else NEG_INF
        if _ndistinct(ctx.p0, beta, alpha) == 0:
            zq = _count(ctx.q, beta, alpha)
            z1 = _count(ctx.q1, beta, alpha)
            if zq % 2 or zq > z1 + (z1 % 2):
                bad.append({"interval": _ival(beta, alpha),
                            "zr_q": zq, "zr_q1": z1})
        above = [x for x, _ in ctx.p1 if compare(x, alpha) > 0]
        beta = above[0] if above else POS_INF
        if _ndistinct(ctx.p0, alpha, beta) == 0:
            zq = _count(ctx.q, alpha, beta)
            z1 = _count(ctx.q1, alpha, beta)
            if zq % 2 or zq > z1 + (z1 % 2):
                bad.append({"interval": _ival(alpha, beta),
                            "zr_q": zq, "zr_q1": z1})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_property_a_window(ctx):
    if not ctx.p0:
        return NOT_APPLICABLE, None, "phi has no real zeros"
    scoped = [zn for zn in ctx.pa.per_zero
              if zn.holds
              and isinstance(zn.beta1, AlgebraicNumber)
              and isinstance(zn.beta2, AlgebraicNumber)
              and _ndistinct(ctx.p0, zn.beta1, zn.beta2) == 1]
    if not scoped:
        return NOT_APPLICABLE, None, \
            "no zero of phi holds property A between finite zeros of phi'"
    bad = []
    for zn in scoped:
        zq = _count(ctx.q, zn.beta1, zn.beta2)
        z1 = _count(ctx.q1, zn.beta1, zn.beta2)
        if zq > z1:
            bad.append({"alpha": _pt(zn.alpha),
                        "interval": _ival(zn.beta1, zn.beta2),
                        "zr_q": zq, "zr_q1": z1})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_critical_blocks(ctx):
    if not ctx.p1:
        return NOT_APPLICABLE, None, "phi' has no real zeros"
    scoped = []
    for i, j in _blocks(ctx.p1, ctx.p0):
        q_total = sum(m for _, m in ctx.p1[i:j + 1])
        if q_total >= 2:
            scoped.append((i, j, q_total))
    if not scoped:
        return NOT_APPLICABLE, None, \
            "no run of zeros of phi' has two of them (with multiplicity) " \
            "and no zero of phi inside"
    bad = []
    for i, j, q_total in scoped:
        b1, b2 = ctx.p1[i][0], ctx.p1[j][0]
        zq = _count(ctx.q, b1, b2, True, True)
        z1 = _count(ctx.q1, b1, b2, True, True)
        if not q_total - 1 <= zq <= q_total - 1 + z1:
            bad.append({"interval": _ival(b1, b2, True, True),
                        "critical_count": q_total, "zr_q": zq, "zr_q1": z1})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _sign_just_left(ctx, gamma: AlgebraicNumber) -> int:
    """Exact sign of phi*phi'' immediately left of gamma."""
    floor = None
    for x in _merged([ctx.p0, ctx.p2]):
        if compare(x, gamma) < 0:
            floor = x
        else:
            break
    pt = _rational_strictly_between(floor, gamma)
    return ctx.t.P0.sign_at(pt) * ctx.t.P2.sign_at(pt)


def _ck_inflection_blocks(ctx):
    if ctx.t.P2.is_zero:
        return NOT_APPLICABLE, None, "phi'' vanishes identically"
    if not ctx.p2:
        return NOT_APPLICABLE, None, "phi'' has no real zeros"
    scoped = [(i, j) for i, j in _blocks(ctx.p2, ctx.p0, ctx.p1) if j > i]
    if not scoped:
        return NOT_APPLICABLE, None, \
            "no two distinct zeros of phi'' have phi and phi' nonvanishing " \
            "across them"
    bad = []
    for i, j in scoped:
        g1, g2 = ctx.p2[i][0], ctx.p2[j][0]
        q_total = sum(m for _, m in ctx.p2[i:j + 1])
        zq = _count(ctx.q, g1, g2, True, True)
        z1 = _count(ctx.q1, g1, g2, True, True)
        if q_total % 2 == 1:
            case, allowance = "odd", 0
        elif _sign_just_left(ctx, g1) > 0:
            case, allowance = "even-positive-left", -1
        else:
            case, allowance = "even-negative-left", 1
        if zq % 2 or zq > z1 + allowance:
            bad.append({"interval": _ival(g1, g2, True, True),
                        "inflection_count": q_total, "case": case,
                        "zr_q": zq, "zr_q1": z1})
    if bad:
        return FAIL, {"violations": bad}, None
    return PASS, None, None


def _ck_global_domination(ctx):
    clear_12 = not ctx.p1 and not ctx.p2 and not ctx.t.P2.is_zero
    clear_01 = not ctx.p0 and not ctx.p1
    if not (clear_12 or clear_01):
        return NOT_APPLICABLE, None, \
            "needs phi' and phi'' real-zero-free, or phi and phi' " \
            "real-zero-free"
    if ctx.s.zr_q <= ctx.s.zr_q1:
        return PASS, None, None
    return FAIL, {"zr_q": ctx.s.zr_q, "zr_q1": ctx.s.zr_q1}, None


def _ck_shift_invariance(ctx):
    g = shift_by_rational(ctx.f, 1)
    moved = critical_pair(build_tower(g))
    if moved.Qnum == ctx.pair.Qnum and moved.Qden == ctx.pair.Qden:
        return PASS, None, None
    return FAIL, {"qnum": str(ctx.pair.Qnum),
                  "shifted_qnum": str(moved.Qnum)}, None


_CHECKS = (
    ("q-real-count-even",
     "Q has an even number of real zeros, counting multiplicities.",
     "always",
     _ck_q_parity),
    ("q1-real-count-even",
     "Q1 has an even number of real zeros, counting multiplicities.",
     "always",
     _ck_q1_parity),
    ("q-negative-far-out",
     "Q(x) < 0 for every x of sufficiently large magnitude: the reduced "
     "numerator of Q has even degree and negative leading coefficient.",
     "always",
     _ck_q_negative_far_out),
    ("nonreal-zero-upper-bound",
     "Z(Q) <= 2m, the number of nonreal zeros of phi.",
     "always",
     _ck_upper_bound),
    ("nonreal-deficit-lower-bound",
     "Z(Q) >= 2m - 2m1, the nonreal zero count of phi minus that of phi'.",
     "always",
     _ck_lower_bound),
    ("two-sided-bound-under-property-a",
     "2m - 2m1 <= Z(Q) <= 2m - 2m1 + Z(Q1) whenever phi has property A.",
     "requires property A",
     _ck_theorem2),
    ("type-bound-under-property-a",
     "under property A, Z(Q) lies within 2*floor(E/2) and that plus Z(Q1), "
     "shifted +2 for a real-zero-free polynomial and -2 for a Gaussian "
     "with a real zero, where E counts the extra zeros of phi'.",
     "requires property A",
     _ck_type_bound),
    ("extra-zero-sandwich",
     "2m - s <= E + 2m1 <= 2m + 2, where E counts zeros of phi' beyond "
     "those forced between and at real zeros of phi, and s = 1 exactly "
     "for a real-zero-free polynomial.",
     "always",
     _ck_extra_sandwich),
    ("critical-multiplicity-transfer",
     "a real zero of phi' of multiplicity M at which phi is nonzero is a "
     "real zero of Q of multiplicity exactly M - 1.",
     "real zeros of phi' away from zeros of phi",
     _ck_multiplicity_transfer),
    ("odd-count-between-consecutive-critical-zeros",
     "between consecutive real zeros of phi' with phi nonvanishing in "
     "between, Q has an odd number of zeros, counting multiplicities.",
     "consecutive zeros of phi' with no zero of phi between",
     _ck_odd_between_critical),
    ("sandwich-between-consecutive-critical-zeros",
     "between consecutive real zeros of phi' with phi nonvanishing in "
     "between, 1 <= Z(Q) <= 1 + Z(Q1).",
     "consecutive zeros of phi' with no zero of phi between",
     _ck_sandwich_between_critical),
    ("even-flanks-at-isolated-zero",
     "if alpha is the only real zero of phi between its nearest zeros "
     "b1 < alpha < b2 of phi', then Q has evenly many zeros in "
     "(b1, alpha) and in (alpha, b2).",
     "zeros of phi alone between finite zeros of phi'",
     _ck_even_flanks),
    ("even-counts-beyond-extreme-zeros",
     "Q has evenly many real zeros beyond the largest real zero of phi "
     "and below the smallest.",
     "phi with at least one real zero",
     _ck_outer_evens),
    ("outer-parity-from-extra-critical-zeros",
     "if phi' has r >= 1 zeros (with multiplicity) past the largest real "
     "zero of phi and bL is the outermost, Z(Q) beyond bL is odd exactly "
     "when r is even; mirrored below the smallest zero.",
     "zeros of phi' beyond the extreme zeros of phi",
     _ck_outer_parity),
    ("outer-floor-bound-from-extra-critical-zeros",
     "with r >= 1 zeros of phi' past the largest real zero of phi and bS "
     "the innermost, 2*floor(r/2) <= Z(Q) <= 2*floor(r/2) + Z(Q1) on "
     "[bS, +inf); mirrored below the smallest zero.",
     "zeros of phi' beyond the extreme zeros of phi",
     _ck_outer_floor),
    ("q1-dominates-on-clear-intervals",
     "Z(Q) <= 1 + Z(Q1) on every maximal open interval free of zeros of "
     "phi, phi', and phi'', half-infinite intervals included.",
     "always (the partition always exists)",
     _ck_clear_intervals),
    ("even-and-dominated-beside-zero",
     "between a real zero of phi (on either side) and the adjacent zero "
     "of phi' or -/+infinity, Z(Q) is even and at most Z(Q1) when Z(Q1) "
     "is even, at most 1 + Z(Q1) when odd.",
     "phi with at least one real zero",
     _ck_beside_zero),
    ("q1-dominates-at-property-a-zero",
     "if phi has property A at its only zero alpha inside the window "
     "(b1, b2) spanned by the nearest zeros of phi', then Z(Q) <= Z(Q1) "
     "on that window.",
     "zeros of phi with property A and finite flanking zeros of phi'",
     _ck_property_a_window),
    ("block-count-matches-critical-multiplicity",
     "a maximal closed interval holding q >= 2 zeros of phi' (with "
     "multiplicity) and no zero of phi has q - 1 <= Z(Q) <= q - 1 + "
     "Z(Q1), endpoints included.",
     "runs of zeros of phi' with phi nonvanishing across them",
     _ck_critical_blocks),
    ("even-and-case-bounded-between-inflections",
     "a maximal closed interval spanning two or more distinct zeros of "
     "phi'' (q with multiplicity) on which phi and phi' are nonvanishing "
     "has even Z(Q), and Z(Q) <= Z(Q1) + t with t = 0 for odd q, t = -1 "
     "for even q when phi*phi'' > 0 just left of the interval, t = +1 "
     "when phi*phi'' < 0 there.",
     "runs of zeros of phi'' with phi and phi' nonvanishing across them",
     _ck_inflection_blocks),
    ("global-q1-domination-when-nonvanishing",
     "Z(Q) <= Z(Q1) over the whole line when phi' and phi'' have no real "
     "zeros, and likewise when phi and phi' have none.",
     "phi', phi'' real-zero-free, or phi, phi' real-zero-free",
     _ck_global_domination),
    ("shift-leaves-q-fixed",
     "multiplying phi by exp(-z) changes neither the reduced numerator "
     "nor the reduced denominator of Q.",
     "always",
     _ck_shift_invariance),
)


def run_ledger(f: LPStarFn) -> list:
    """Evaluate every ledger entry on one function.  Failures come back
    as entries, never exceptions."""
    ctx = _Ctx(f)
    entries = []
    for name, claim, scope, fn in _CHECKS:
        try:
            result, data, reason = fn(ctx)
        except Exception as exc:  # a crashed check is a failed check
            result, data, reason = FAIL, {"error": repr(exc)}, None
        witness = None
        if result == FAIL:
            witness = {"instance": instance_payload(f)}
            if data:
                witness.update(data)
        entries.append(LedgerEntry(name, claim, scope, result, witness, reason))
    return entries


# -- scenarios ----------------------------------------------------------------


def _scenario_lifted(seed, count):
    """All-real simple-rooted f plus a rational constant big enough to
    push a batch of zeros off the axis; Z(Q) must then equal 2m exactly,
    and the engine's 2m must match the construction."""
    failures = []
    for i in range(count):
        rng = random.Random(f"hawaii-scn-lift:{seed}:{i}")
        k = rng.randint(2, 6)
        roots = _draw_distinct(rng, k, 6)
        base = Poly.constant(1)
        for r in roots:
            base = base * Poly((-r, 1))
        sgn = rng.choice((1, -1))
        target = (k % 2) if sgn > 0 else (2 - k % 2)
        c = Fraction(sgn)
        while count_roots(base + Poly.constant(c),
                          with_multiplicity=True) != target:
            c *= 2
        f = LPStarFn(base + Poly.constant(c))
        try:
            s = count_summary(f)
        except Exception as exc:
            failures.append({"index": i, "instance": instance_payload(f),
                             "error": repr(exc)})
            continue
        if s.two_m != k - target or s.zr_q != s.two_m:
            failures.append({"index": i, "instance": instance_payload(f),
                             "lift": str(c), "expected_two_m": k - target,
                             "two_m": s.two_m, "zr_q": s.zr_q})
    return {"instances": count, "failures": failures}


def _scenario_multiple(seed, count):
    """Every real zero multiple (nonreal pairs allowed): the two-sided
    bound must hold with no property A gate."""
    failures = []
    held = 0
    for i in range(count):
        rng = random.Random(f"hawaii-scn-mult:{seed}:{i}")
        k = rng.randint(1, 3)
        roots = _draw_distinct(rng, k, 5)
        p = Poly.constant(rng.choice((1, -1, 2, -2)))
        for r in roots:
            p = p * Poly((-r, 1)) ** rng.randint(2, 3)
        for _ in range(rng.randint(0, 1)):
            u = _draw_rational(rng, 3)
            v = Fraction(rng.randint(1, 3), rng.randint(1, 3))
            p = p * Poly((u * u + v * v, -2 * u, 1))
        kind = rng.choice(KINDS)
        if kind == "polynomial":
            a, b = 0, 0
        elif kind == "exp-linear":
            a, b = 0, rng.choice((1, -1, 2, Fraction(1, 2)))
        else:
            a, b = Fraction(rng.randint(1, 3), rng.randint(1, 3)), \
                _draw_rational(rng, 3)
        f = LPStarFn(p, a, b)
        try:
            s = count_summary(f)
            if check_property_a(f).overall:
                held += 1
        except Exception as exc:
            failures.append({"index": i, "instance": instance_payload(f),
                             "error": repr(exc)})
            continue
        lower = s.two_m - s.two_m1
        if not lower <= s.zr_q <= lower + s.zr_q1:
            failures.append({"index": i, "instance": instance_payload(f),
                             "bounds": [lower, lower + s.zr_q1],
                             "zr_q": s.zr_q})
    return {"instances": count, "failures": failures,
            "property_a_held": held}


def _scenario_round_trip(seed, count):
    """Shift by a rational at or just above the optimum, then demand a
    clean ledger and property A on the shifted function."""
    failures = []
    for i in range(count):
        rng = random.Random(f"hawaii-scn-shift:{seed}:{i}")
        kind = rng.choice(KINDS)
        rrb = rng.randint(0, 2)
        npb = rng.randint(0, 1)
        if kind != "gaussian" and rrb + npb == 0:
            rrb = 1
        profile = GenProfile(kind, degree_max=5, real_root_budget=rrb,
                             nonreal_pair_budget=npb, multiplicity_max=2,
                             coefficient_height=4,
                             seed=rng.getrandbits(63))
        f = generate(profile)
        try:
            sh = compute_shift(f)
            if sh.trivial:
                sigma_hat = Fraction(0)
            elif sh.sigma_star.is_rational:
                sigma_hat = sh.sigma_star.value
            else:
                sigma_hat = sh.sigma_star.refine(Fraction(1, 64)).hi
            psi = shift_by_rational(f, sigma_hat)
            ledger_fails = [e.as_dict() for e in run_ledger(psi)
                            if e.result == FAIL]
            pa_after = check_property_a(psi).overall
            contracted = sh.trivial or sh.zc_psi_prime < sh.zc_phi
        except Exception as exc:
            failures.append({"index": i, "profile": profile._asdict(),
                             "instance": instance_payload(f),
                             "error": repr(exc)})
            continue
        if ledger_fails or not pa_after or not contracted:
            failures.append({"index": i, "profile": profile._asdict(),
                             "instance": instance_payload(f),
                             "sigma_hat": str(sigma_hat),
                             "property_a_after": pa_after,
                             "zc": [sh.zc_phi, sh.zc_psi_prime],
                             "ledger_failures": ledger_fails})
    return {"instances": count, "failures": failures}


def run_scenarios(seed: int, count: int) -> dict:
    """Run the three scripted families, count instances each.  The
    result is deterministic in (seed, count), ordered by instance
    index."""
    scenarios = {
        "lifted-real-rooted": _scenario_lifted(seed, count),
        "multiple-real-zeros": _scenario_multiple(seed, count),
        "shift-round-trip": _scenario_round_trip(seed, count),
    }
    ok = all(not s["failures"] for s in scenarios.values())
    return {"seed": seed, "count": count, "ok": ok, "scenarios": scenarios}
