"""Zero-count verdicts for phi = p * exp(-a*z^2 + b*z).

Three layers, all exact:

  * property A: at each real zero alpha of phi, at least one of the two
    intervals reaching to the nearest zero of phi' must be free of real
    zeros of Q.  Decided with certified root counts.
  * the count inequalities: the two-sided bound
    2m - 2m1 <= Z_R(Q) <= 2m - 2m1 + Z_R(Q1) under property A (the lower
    bound holds unconditionally), and the sharper per-type bounds built
    from the extra-zero count E.
  * the optimal exponential shift: sigma* = max over real Q-zeros zeta_i
    of phi'(zeta_i)/phi(zeta_i), an exact algebraic number.  After
    multiplying by exp(-sigma* z), the function satisfies property A and
    its derivative has strictly fewer nonreal zeros.  Both facts are
    recomputed over Q(sigma*) and asserted, never assumed.

The shift arithmetic never floats: sigma* is represented by its defining
polynomial (a factor of the sigma-eliminant of Qnum and sigma*P0 - P1)
plus an isolating interval, and all after-shift root counts run through
the Q(sigma) Sturm machinery in extension.py.
"""

from __future__ import annotations

from typing import NamedTuple

from .extension import (ExtContext, count_roots_extension, ext_normalize,
                        ext_sign_at_algebraic, ext_strip_eff)
from .lpstar import (LPStarFn, build_tower, count_summary, critical_pair)
from .polys import Poly, eliminate_parameter, gcd as poly_gcd
from .realroots import (NEG_INF, POS_INF, AlgebraicNumber, compare,
                        count_roots, isolate_roots, sign_at)


class ZeroNeighborhood(NamedTuple):
    """Property-A data at one real zero alpha of phi."""

    alpha: AlgebraicNumber
    beta1: object  # nearest phi'-zero strictly below alpha, or -inf
    beta2: object  # nearest phi'-zero strictly above alpha, or +inf
    left_clear: bool
    right_clear: bool
    holds: bool


class PropertyAVerdict:
    """Per-zero clearances and their conjunction.

    readings_differ marks instances where widening the outermost
    intervals to infinity (the alternative reading of beta1/beta2 at the
    smallest and largest zero) would change some per-zero verdict.
    """

    __slots__ = ("per_zero", "overall", "readings_differ")

    def __init__(self, per_zero, overall, readings_differ):
        self.per_zero = tuple(per_zero)
        self.overall = overall
        self.readings_differ = readings_differ

    def __repr__(self):
        return (f"PropertyAVerdict(overall={self.overall}, "
                f"zeros={len(self.per_zero)}, "
                f"readings_differ={self.readings_differ})")


class ShiftResult:
    """The optimal shift sigma* and the certified after-shift facts.

    trivial marks the Z_R(Q) = 0 case, where any shift works and sigma*
    is reported as 0 with no distinguished Q-zero.
    """

    __slots__ = ("sigma_star", "zeta_star", "shifted_b_description",
                 "property_a_after", "zc_phi", "zc_psi_prime", "trivial")

    def __init__(self, sigma_star, zeta_star, shifted_b_description,
                 property_a_after, zc_phi, zc_psi_prime, trivial=False):
        self.sigma_star = sigma_star
        self.zeta_star = zeta_star
        self.shifted_b_description = shifted_b_description
        self.property_a_after = property_a_after
        self.zc_phi = zc_phi
        self.zc_psi_prime = zc_psi_prime
        self.trivial = trivial

    def __repr__(self):
        return (f"ShiftResult(sigma_star={self.sigma_star!r}, "
                f"zc_phi={self.zc_phi}, zc_psi_prime={self.zc_psi_prime}, "
                f"trivial={self.trivial})")


class TheoremVerdicts:
    """Aggregate pass/fail flags; None means not applicable."""

    __slots__ = ("hawaii_ok", "prop1_ok", "theorem2_applicable",
                 "theorem2_ok", "type_theorem_ok", "details")

    def __init__(self, hawaii_ok, prop1_ok, theorem2_applicable,
                 theorem2_ok, type_theorem_ok, details):
        self.hawaii_ok = hawaii_ok
        self.prop1_ok = prop1_ok
        self.theorem2_applicable = theorem2_applicable
        self.theorem2_ok = theorem2_ok
        self.type_theorem_ok = type_theorem_ok
        self.details = details

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__slots__}

    def __repr__(self):
        flags = ", ".join(f"{k}={getattr(self, k)}" for k in self.__slots__
                          if k != "details")
        return f"TheoremVerdicts({flags})"


# -- property A --------------------------------------------------------------


def check_property_a(f: LPStarFn) -> PropertyAVerdict:
    """Decide property A at every distinct real zero of phi.

    beta1/beta2 are the nearest real zeros of phi' strictly below/above
    alpha (never alpha itself, even when phi'(alpha) = 0 at a multiple
    zero), +-infinity when that side has none.  A side is clear when the
    open interval from beta to alpha holds no real zero of Q.  Vacuously
    true when phi has no real zeros.
    """
    t = build_tower(f)
    pair = critical_pair(t)
    return _property_a_verdict(t, pair)


def _property_a_verdict(t, pair) -> PropertyAVerdict:
    alphas = isolate_roots(t.P0).numbers()
    if not alphas:
        return PropertyAVerdict((), True, False)
    p1_roots = isolate_roots(t.P1).numbers()
    qnum = pair.Qnum
    per = []
    differ = False
    last = len(alphas) - 1
    for i, alpha in enumerate(alphas):
        below = [r for r in p1_roots if compare(r, alpha) < 0]
        above = [r for r in p1_roots if compare(r, alpha) > 0]
        beta1 = below[-1] if below else NEG_INF
        beta2 = above[0] if above else POS_INF
        left = count_roots(qnum, beta1, alpha) == 0
        right = count_roots(qnum, alpha, beta2) == 0
        holds = left or right
        per.append(ZeroNeighborhood(alpha, beta1, beta2, left, right, holds))
        # alternative reading: the outermost zeros look all the way out
        lit_left = left
        lit_right = right
        if i == 0 and below:
            lit_left = count_roots(qnum, NEG_INF, alpha) == 0
        if i == last and above:
            lit_right = count_roots(qnum, alpha, POS_INF) == 0
        if (lit_left or lit_right) != holds:
            differ = True
    return PropertyAVerdict(per, all(z.holds for z in per), differ)


# -- count inequalities ------------------------------------------------------


def verify_theorem2(f: LPStarFn) -> dict:
    """The two-sided bound on Z_R(Q) gated by property A.

    The lower bound 2m - 2m1 <= Z_R(Q) needs no property A and is
    asserted by count_summary on every instance; prop1_ok restates it.
    The upper bound Z_R(Q) <= 2m - 2m1 + Z_R(Q1) is reported only when
    property A holds (theorem2_ok is None otherwise).
    """
    s = count_summary(f)
    pa = check_property_a(f)
    return _bound_fragment(s, pa)


def _bound_fragment(s, pa) -> dict:
    lower = s.two_m - s.two_m1
    upper = lower + s.zr_q1
    prop1_ok = lower <= s.zr_q
    applicable = pa.overall
    ok = (prop1_ok and s.zr_q <= upper) if applicable else None
    return {
        "prop1_ok": prop1_ok,
        "theorem2_applicable": applicable,
        "theorem2_ok": ok,
        "theorem2_bounds": (lower, upper),
    }


def verify_type_theorem(f: LPStarFn) -> dict:
    """The E-based bound matching the exponential type of phi.

    With E the extra-zero count of phi' and under property A:
      pure polynomial, no real zero     2*floor(E/2)+2 <= Z_R(Q) <= ..+Z_R(Q1)
      polynomial with a real zero,
      a = 0 with b != 0, or
      a > 0 with p real-zero-free       2*floor(E/2)   <= Z_R(Q) <= ..+Z_R(Q1)
      a > 0 with a real zero            2*floor(E/2)-2 <= Z_R(Q) <= ..+Z_R(Q1)
    Without property A the check is skipped (type_theorem_ok is None).
    """
    s = count_summary(f)
    pa = check_property_a(f)
    return _type_fragment(f, s, pa)


def _type_fragment(f, s, pa) -> dict:
    has_real = len(pa.per_zero) > 0
    if f.a > 0:
        case = "gaussian-with-real-zero" if has_real else "gaussian-zero-free"
    elif f.b != 0:
        case = "exp-linear"
    else:
        case = "polynomial-with-real-zero" if has_real else "polynomial-zero-free"
    if not pa.overall:
        return {"type_theorem_ok": None, "type_case": case,
                "type_bounds": None}
    base = 2 * (s.extra // 2)
    if case == "polynomial-zero-free":
        base += 2
    elif case == "gaussian-with-real-zero":
        base -= 2
    ok = base <= s.zr_q <= base + s.zr_q1
    return {"type_theorem_ok": ok, "type_case": case,
            "type_bounds": (base, base + s.zr_q1)}


# -- the optimal shift -------------------------------------------------------


def _ratio_interval(num: Poly, den: Poly, x: AlgebraicNumber):
    """Rational enclosure of num(x)/den(x), or None while the denominator
    enclosure still straddles zero."""
    nlo, nhi = num.eval_interval(x.lo, x.hi)
    dlo, dhi = den.eval_interval(x.lo, x.hi)
    if dlo <= 0 <= dhi:
        return None
    qs = (nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi)
    return min(qs), max(qs)


def _paired_values(t, qnum: Poly, q_roots) -> list[AlgebraicNumber]:
    """v_i = P1(zeta_i)/P0(zeta_i) for each real Q-zero, exactly.

    Every v_i is a root of the eliminant of (Qnum, sigma*P0 - P1) in
    sigma.  A rational zeta gives its value directly; an irrational one
    is matched to the unique eliminant root whose isolating interval
    meets the interval enclosure of P1/P0, shrinking enclosures until
    the match is unambiguous.  Interval evaluation is inclusion
    monotone, so candidates ruled out once stay out.
    """
    n = max(len(t.P0.coeffs), len(t.P1.coeffs))
    gcs = [Poly((-t.P1.coeff(k), t.P0.coeff(k))) for k in range(n)]
    elim = eliminate_parameter(qnum, gcs)
    cands = isolate_roots(elim).numbers()
    out = []
    for zeta in q_roots:
        if zeta.is_rational:
            z = zeta.value
            v = t.P1.eval(z) / t.P0.eval(z)
            assert elim.sign_at(v) == 0
            out.append(AlgebraicNumber.from_rational(v))
            continue
        x = zeta
        local = cands
        for _ in range(1000):
            jay = _ratio_interval(t.P1, t.P0, x)
            if jay is not None:
                hits = [c for c in local
                        if not (c.hi < jay[0] or jay[1] < c.lo)]
                assert hits, "enclosure lost the eliminant root"
                if len(hits) == 1:
                    out.append(hits[0])
                    break
                local = [c if c.is_rational else c.refine(c.width() / 4)
                         for c in hits]
            x = x.refine(x.width() / 4)
            if x.is_rational:
                z = x.value
                v = t.P1.eval(z) / t.P0.eval(z)
                assert elim.sign_at(v) == 0
                out.append(AlgebraicNumber.from_rational(v))
                break
        else:
            raise AssertionError("value pairing failed to converge")
    return out


def _shift_parts(t) -> tuple[Poly, list[Poly]]:
    """P1 - sigma*P0 factored as G * H(sigma, z) with G = gcd(P0, P1)
    rational and H = h1 - sigma*h0 of small degree.

    G carries the zeros shared by phi and phi' (the multiple real zeros
    of p among them), so the sigma-dependent part H stays at degree
    deg P1 - deg G, which keeps all Q(sigma) chain work cheap.
    """
    G = poly_gcd(t.P0, t.P1)
    if G.degree == 0:
        h0, h1 = t.P0, t.P1
        G = Poly.constant(1)
    else:
        h0 = t.P0.div_exact(G)
        h1 = t.P1.div_exact(G)
    n = max(len(h0.coeffs), len(h1.coeffs))
    H = [Poly((h1.coeff(k), -h0.coeff(k))) for k in range(n)]
    return G, H


def compute_shift(f: LPStarFn) -> ShiftResult:
    """sigma* = max of phi'(zeta_i)/phi(zeta_i) over the real Q-zeros.

    Postconditions, all recomputed independently and asserted:
      * (P1 - sigma*P0)(zeta_i) * P0(zeta_i) <= 0 for every zeta_i, with
        equality exactly at the zeta_i attaining the maximum;
      * the shifted function satisfies property A;
      * the shifted derivative has fewer nonreal zeros than phi.
    With no real Q-zeros the result is the trivial shift sigma = 0,
    flagged as such.  An identically vanishing eliminant cannot happen
    (Qnum shares no root with P0 after reduction) and would surface as
    an elimination error.
    """
    t = build_tower(f)
    pair = critical_pair(t)
    s = count_summary(f)
    if s.zr_q == 0:
        zero = AlgebraicNumber.from_rational(0)
        after = _property_a_verdict(t, pair)
        assert after.overall
        return ShiftResult(zero, None, (f.b, zero), True,
                           s.two_m, s.two_m1, trivial=True)

    q_roots = isolate_roots(pair.Qnum).numbers()
    values = _paired_values(t, pair.Qnum, q_roots)
    best = 0
    for i in range(1, len(values)):
        if compare(values[i], values[best]) > 0:
            best = i
    sigma = values[best]
    is_tie = [compare(v, sigma) == 0 for v in values]

    ctx = ExtContext(sigma)
    G, H = _shift_parts(t)

    # the defining inequality, rechecked without using the pairing:
    # sign((P1 - sigma*P0)(zeta) * P0(zeta)) via the G*H split
    for zeta, tie in zip(q_roots, is_tie):
        prod = (sign_at(G, zeta) * ext_sign_at_algebraic(ctx, H, zeta)
                * sign_at(t.P0, zeta))
        assert prod <= 0, "shift candidate fails the sign condition"
        assert (prod == 0) == tie, "sign condition equality off a tie"

    after = _property_a_after_shift(t, ctx, G, H, q_roots, is_tie)
    assert after, "shifted function lost property A"

    zc_phi = s.two_m
    zc_psi = _nonreal_after_shift(ctx, G, H, sigma)
    assert zc_psi % 2 == 0
    assert zc_psi < zc_phi, "shifted derivative did not lose nonreal zeros"

    return ShiftResult(sigma, q_roots[best], (f.b, sigma), after,
                       zc_phi, zc_psi)


def _nonreal_after_shift(ctx, G: Poly, H, sigma) -> int:
    """Nonreal zero count of (P1 - sigma*P0) = G*H at sigma: effective
    degree minus real zeros with multiplicity, both split over the two
    factors (multiplicities add across a product, shared roots or not).
    """
    Hn = ext_strip_eff(ctx, ext_normalize(ctx, list(H)))
    deg_eff = G.degree + len(Hn) - 1
    real_mult = 0
    if G.degree > 0:
        real_mult += count_roots(G, with_multiplicity=True)
    if len(Hn) > 1:
        real_mult += count_roots_extension(H, sigma, with_multiplicity=True)
    return deg_eff - real_mult


def _property_a_after_shift(t, ctx, G: Poly, H, q_roots, is_tie) -> bool:
    """Property A of exp(-sigma*z)*phi, decided through the Q-zeros.

    The shift leaves Q and the zeros of phi unchanged; only the
    derivative moves.  A side of alpha is blocked exactly when the
    nearest Q-zero on that side can reach alpha without crossing a zero
    of P1 - sigma*P0: the interval from the nearest shifted-derivative
    zero would then contain it.  The endpoint zeta itself counts as a
    crossing exactly when its value ties the maximum (that is where
    (P1 - sigma*P0)(zeta) = 0; zeta is never a zero of G or P0).
    """
    alphas = isolate_roots(t.P0).numbers()
    if not alphas:
        return True
    for alpha in alphas:
        below = [(z, tie) for z, tie in zip(q_roots, is_tie)
                 if compare(z, alpha) < 0]
        above = [(z, tie) for z, tie in zip(q_roots, is_tie)
                 if compare(z, alpha) > 0]
        if below:
            zn, tie = below[-1]
            crossings = ((1 if tie else 0)
                         + (count_roots(G, zn, alpha) if G.degree > 0 else 0)
                         + count_roots_extension(H, ctx.sigma, zn, alpha))
            left_clear = crossings > 0
        else:
            left_clear = True
        if left_clear:
            continue
        if above:
            zn, tie = above[0]
            crossings = ((1 if tie else 0)
                         + (count_roots(G, alpha, zn) if G.degree > 0 else 0)
                         + count_roots_extension(H, ctx.sigma, alpha, zn))
            right_clear = crossings > 0
        else:
            right_clear = True
        if not right_clear:
            return False
    return True


# -- the aggregate verdict ---------------------------------------------------


def _num_desc(x: AlgebraicNumber) -> dict:
    if x.is_rational:
        return {"rational": str(x.value)}
    return {"minpoly": str(x.minpoly),
            "interval": (str(x.lo), str(x.hi)),
            "approx": x.approx()}


def _describe_property_a(pa: PropertyAVerdict) -> dict:
    return {
        "overall": pa.overall,
        "readings_differ": pa.readings_differ,
        "per_zero": [
            {"alpha": z.alpha.approx(),
             "left_clear": z.left_clear,
             "right_clear": z.right_clear,
             "holds": z.holds}
            for z in pa.per_zero
        ],
    }


def _describe_shift(sh: ShiftResult) -> dict:
    return {
        "trivial": sh.trivial,
        "sigma_star": _num_desc(sh.sigma_star),
        "zeta_star": None if sh.zeta_star is None else _num_desc(sh.zeta_star),
        "property_a_after": sh.property_a_after,
        "zc_phi": sh.zc_phi,
        "zc_psi_prime": sh.zc_psi_prime,
    }


def _rational_trace(f: LPStarFn, s, sh: ShiftResult) -> list[dict]:
    """Counts along repeated shift-and-differentiate reduction.

    Each level multiplies by exp(-sigma* z) and passes to the
    derivative, whose polynomial part P1 - sigma*P0 stays rational only
    when sigma* is.  The trace follows the reduction while that holds;
    the nonreal count drops strictly at every step, so it ends.
    """
    trace = [{"level": 0, "zc": s.two_m, "zr_q": s.zr_q,
              "sigma": _num_desc(sh.sigma_star)}]
    cur_f, cur_sh = f, sh
    level = 0
    while (not cur_sh.trivial and cur_sh.sigma_star.is_rational
           and level < 64):
        sig = cur_sh.sigma_star.value
        tow = build_tower(cur_f)
        p_next = tow.P1 - tow.P0.scale(sig)
        if cur_f.a == 0 and p_next.degree == 0:
            # next level would be a pure exponential; nothing left to count
            break
        level += 1
        nxt = LPStarFn(p_next, cur_f.a, cur_f.b - sig)
        s_next = count_summary(nxt)
        assert s_next.two_m == cur_sh.zc_psi_prime
        entry = {"level": level, "zc": s_next.two_m, "zr_q": s_next.zr_q}
        if s_next.zr_q == 0:
            entry["sigma"] = {"rational": "0"}
            trace.append(entry)
            break
        cur_sh = compute_shift(nxt)
        entry["sigma"] = _num_desc(cur_sh.sigma_star)
        trace.append(entry)
        cur_f = nxt
    return trace


def hawaii_verdict(f: LPStarFn) -> TheoremVerdicts:
    """All verdict flags for one function, plus per-check numbers.

    hawaii_ok is Z_R(Q) <= 2m straight from the counts.  When Q has real
    zeros the optimal shift runs once and its certified invariants are
    recorded; deeper reduction levels are traced only while the optimal
    shift stays rational.
    """
    s = count_summary(f)
    t = build_tower(f)
    pair = critical_pair(t)
    pa = _property_a_verdict(t, pair)
    frag2 = _bound_fragment(s, pa)
    fragt = _type_fragment(f, s, pa)
    details = {
        "counts": s.as_dict(),
        "property_a": _describe_property_a(pa),
        "theorem2_bounds": frag2["theorem2_bounds"],
        "type_case": fragt["type_case"],
        "type_bounds": fragt["type_bounds"],
    }
    if s.zr_q > 0:
        sh = compute_shift(f)
        details["shift"] = _describe_shift(sh)
        details["trace"] = _rational_trace(f, s, sh)
    return TheoremVerdicts(s.zr_q <= s.two_m, frag2["prop1_ok"],
                           frag2["theorem2_applicable"],
                           frag2["theorem2_ok"],
                           fragt["type_theorem_ok"], details)
