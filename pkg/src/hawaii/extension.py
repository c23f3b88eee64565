"""Real-root counting for polynomials with coefficients in Q(sigma).

A polynomial f(sigma, z) is represented as a list of rational polynomials
in sigma, indexed by the power of z.  sigma is an algebraic number whose
defining polynomial is square-free but need not be irreducible, so
Q[sigma]/(m) is not assumed to be a field and no coefficient inverses are
ever taken.  Chains are built from pseudo-remainders whose scale factors
have known sign at sigma, which keeps every stored object a positive
rational multiple of the classical Sturm chain member it stands for.

Three operations preserve the value (or its sign) at sigma and are used
freely: reducing a coefficient modulo sigma's defining polynomial,
multiplying the whole polynomial by a positive rational, and dropping
leading coefficients that vanish at sigma.  Coefficient sign queries at
sigma go through realroots.sign_at, which is exact; results are cached
per context.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Sequence

from .polys import Poly, _as_fraction
from .realroots import NEG_INF, POS_INF, AlgebraicNumber, compare, sign_at

ExtPoly = list[Poly]


class ExtContext:
    """sigma together with its reduction modulus and a sign cache."""

    def __init__(self, sigma: AlgebraicNumber):
        self.sigma = sigma
        self.modulus = sigma.minpoly
        self._signs: dict[tuple, int] = {}

    def sign_of(self, c: Poly) -> int:
        """Exact sign of c(sigma)."""
        if c.is_zero:
            return 0
        if c.degree == 0:
            return 1 if c.lc > 0 else -1
        key = c.coeffs
        s = self._signs.get(key)
        if s is None:
            s = sign_at(c, self.sigma)
            self._signs[key] = s
        return s

    def reduce(self, c: Poly) -> Poly:
        """c modulo the defining polynomial: same value at sigma."""
        d = self.modulus.degree
        if c.degree is None or d is None or c.degree < d:
            return c
        return c.divmod(self.modulus)[1]


def ext_from_rational(f: Poly) -> ExtPoly:
    """Lift a sigma-free polynomial."""
    return [Poly.constant(c) for c in f.coeffs]


def _reduce_tail(ctx: ExtContext, F: ExtPoly) -> ExtPoly:
    """Reduce each coefficient mod the modulus, drop formally-zero tail.
    Value-preserving at sigma."""
    F = [ctx.reduce(c) for c in F]
    while F and F[-1].is_zero:
        F.pop()
    return F


def ext_normalize(ctx: ExtContext, F: ExtPoly) -> ExtPoly:
    """Mod-reduce and strip a single positive rational content, leaving
    integer coefficients.  Scales the value at sigma by a positive
    rational; sign pattern is untouched."""
    F = _reduce_tail(ctx, F)
    num = 0
    den = 1
    for c in F:
        cont, _ = c.primitive()
        if cont:
            num = _int_gcd(num, cont.numerator)
            den = den * cont.denominator // _int_gcd(den, cont.denominator)
    if num == 0:
        return F
    scale = Fraction(den, num)
    if scale == 1:
        return F
    return [c.scale(scale) for c in F]


def ext_strip_eff(ctx: ExtContext, F: ExtPoly) -> ExtPoly:
    """Drop leading z-coefficients whose value at sigma is zero, so the
    formal degree equals the degree of F(sigma, .)."""
    F = list(F)
    while F and ctx.sign_of(F[-1]) == 0:
        F.pop()
    return F


def ext_derivative(F: ExtPoly) -> ExtPoly:
    return [c.scale(k) for k, c in enumerate(F)][1:]


def ext_eval(F: ExtPoly, t) -> Poly:
    """The sigma-polynomial F(sigma, t) for rational t."""
    t = _as_fraction(t)
    acc = Poly.zero()
    for c in reversed(F):
        acc = acc.scale(t) + c
    return acc


def ext_sign_at_point(ctx: ExtContext, F: ExtPoly, t) -> int:
    """Sign of F(sigma, t) at a rational point t."""
    return ctx.sign_of(ctx.reduce(ext_eval(F, t)))


def ext_prem(ctx: ExtContext, F: ExtPoly, G: ExtPoly) -> ExtPoly:
    """Pseudo-remainder: a positive multiple at sigma of
    lc_G(sigma)^(deg F - deg G + 1) * (F(sigma,.) mod G(sigma,.)).

    Both inputs must be effectively stripped.  Early degree drops are
    padded with extra lc_G factors so the total power is always
    deg F - deg G + 1, which is what the caller's sign bookkeeping uses.
    """
    dg = len(G) - 1
    lg = G[-1]
    steps = len(F) - len(G) + 1
    work = list(F)
    done = 0
    while done < steps and len(work) - 1 >= dg:
        lf, k = work[-1], len(work) - 1 - dg
        work = [c * lg for c in work]
        for j in range(dg + 1):
            work[k + j] = work[k + j] - lf * G[j]
        del work[-1]
        work = ext_strip_eff(ctx, ext_normalize(ctx, work))
        done += 1
    for _ in range(steps - done):
        work = [c * lg for c in work]
    return ext_normalize(ctx, work)


def _sturm_next(ctx: ExtContext, prev: ExtPoly, cur: ExtPoly) -> ExtPoly:
    """Next Sturm chain member: a positive multiple at sigma of
    -(prev(sigma,.) mod cur(sigma,.))."""
    steps = len(prev) - len(cur) + 1
    r = ext_strip_eff(ctx, ext_prem(ctx, prev, cur))
    if not r:
        return r
    if steps % 2 == 1 and ctx.sign_of(cur[-1]) < 0:
        return r
    return [-c for c in r]


def ext_chain(ctx: ExtContext, F: ExtPoly) -> list[ExtPoly]:
    """Sturm chain of F(sigma, .).  F must be normalized and stripped.
    Ends at a multiple of gcd(F, dF/dz) at sigma."""
    chain = [F]
    if len(F) <= 1:
        return chain
    G = ext_strip_eff(ctx, ext_normalize(ctx, ext_derivative(F)))
    chain.append(G)
    while len(G) > 1:
        nxt = _sturm_next(ctx, chain[-2], G)
        if not nxt:
            break
        chain.append(nxt)
        G = nxt
    return chain


def ext_gcd_tail(ctx: ExtContext, A: ExtPoly, B: ExtPoly) -> ExtPoly:
    """Last nonzero member of the remainder chain of (A, B): a nonzero
    multiple at sigma of gcd(A(sigma,.), B(sigma,.))."""
    A = ext_strip_eff(ctx, ext_normalize(ctx, list(A)))
    B = ext_strip_eff(ctx, ext_normalize(ctx, list(B)))
    if not A or not B:
        if not A and not B:
            raise ValueError("gcd of two polynomials that vanish at sigma")
        return A or B
    if len(A) < len(B):
        A, B = B, A
    while len(B) > 1:
        r = ext_strip_eff(ctx, ext_prem(ctx, A, B))
        if not r:
            return B
        A, B = B, r
    return B


def ext_pseudo_quotient(ctx: ExtContext, F: ExtPoly, G: ExtPoly) -> ExtPoly:
    """Q with Q(sigma,.) = c * F(sigma,.) / G(sigma,.), c a nonzero
    rational, assuming G divides F at sigma.

    The working remainder only undergoes value-preserving operations
    (mod-reduction, stripping vanishing leads), so the division identity
    lc_G^t * F = Q*G + work holds at sigma throughout.
    """
    F = ext_strip_eff(ctx, _reduce_tail(ctx, list(F)))
    G = ext_strip_eff(ctx, _reduce_tail(ctx, list(G)))
    if not G:
        raise ValueError("division by a polynomial that vanishes at sigma")
    if len(G) == 1:
        return ext_normalize(ctx, F)
    dg = len(G) - 1
    lg = G[-1]
    Q: list[Poly] = [Poly.zero()] * max(len(F) - dg, 1)
    work = list(F)
    while len(work) - 1 >= dg:
        lf, k = work[-1], len(work) - 1 - dg
        Q = [ctx.reduce(q * lg) for q in Q]
        Q[k] = Q[k] + lf
        work = [c * lg for c in work]
        for j in range(dg + 1):
            work[k + j] = work[k + j] - lf * G[j]
        del work[-1]
        work = ext_strip_eff(ctx, _reduce_tail(ctx, work))
    if work:
        raise ValueError("not divisible at sigma")
    return ext_normalize(ctx, Q)


def ext_squarefree_at_sigma(ctx: ExtContext, F: ExtPoly) -> ExtPoly:
    """A polynomial whose value at sigma is a nonzero rational multiple
    of the square-free part of F(sigma, .).  F normalized and stripped."""
    if len(F) <= 2:
        return F
    g = ext_gcd_tail(ctx, F, ext_derivative(F))
    if len(g) == 1:
        return F
    return ext_strip_eff(ctx, ext_pseudo_quotient(ctx, F, g))


# -- counting ---------------------------------------------------------------


def _ext_variations_at(ctx: ExtContext, chain: list[ExtPoly], x) -> int:
    signs = []
    if isinstance(x, float):
        direction = 1 if x == POS_INF else -1
        for F in chain:
            lead = ctx.sign_of(F[-1])
            if direction < 0 and (len(F) - 1) % 2 == 1:
                lead = -lead
            signs.append(lead)
    else:
        for F in chain:
            signs.append(ext_sign_at_point(ctx, F, x))
    out, prev = 0, 0
    for s in signs:
        if s:
            if prev and s != prev:
                out += 1
            prev = s
    return out


def _ext_count_open(ctx: ExtContext, sf: ExtPoly, lo, hi) -> int:
    """Distinct roots of sf(sigma,.), square-free at sigma, strictly
    between lo and hi (rational or infinite)."""
    if len(sf) <= 1:
        return 0
    chain = ext_chain(ctx, sf)
    n = _ext_variations_at(ctx, chain, lo) - _ext_variations_at(ctx, chain, hi)
    if not isinstance(hi, float) and ext_sign_at_point(ctx, sf, hi) == 0:
        n -= 1
    return n


def count_roots_extension(f_coeffs: Sequence[Poly], sigma: AlgebraicNumber,
                          lo=NEG_INF, hi=POS_INF,
                          with_multiplicity: bool = False) -> int:
    """Real roots of f(sigma, z) strictly inside the open interval (lo, hi).

    f_coeffs[k] is the sigma-polynomial coefficient of z^k; a plain
    rational polynomial can be lifted with ext_from_rational.  Endpoints
    may be rational, AlgebraicNumber, or the +-infinity sentinels.
    Raises ValueError if f vanishes identically at sigma.
    """
    ctx = ExtContext(sigma)
    F = ext_strip_eff(ctx, ext_normalize(ctx, list(f_coeffs)))
    if not F:
        raise ValueError("polynomial vanishes identically at sigma")
    _ext_check_order(lo, hi)
    lo_r = _ext_clean_lower(ctx, F, lo)
    hi_r = _ext_clean_upper(ctx, F, hi)
    total = 0
    cur = F
    while len(cur) > 1:
        sf = ext_squarefree_at_sigma(ctx, cur)
        total += _ext_count_open(ctx, sf, lo_r, hi_r)
        if not with_multiplicity:
            break
        cur = ext_gcd_tail(ctx, cur, ext_derivative(cur))
    return total


def _ext_check_order(lo, hi):
    if isinstance(lo, float) and lo == POS_INF:
        raise ValueError("malformed range")
    if isinstance(hi, float) and hi == NEG_INF:
        raise ValueError("malformed range")
    if isinstance(lo, float) or isinstance(hi, float):
        return
    if not isinstance(lo, AlgebraicNumber) and not isinstance(hi, AlgebraicNumber):
        if _as_fraction(lo) >= _as_fraction(hi):
            raise ValueError("malformed range: lo >= hi")
        return
    la = lo if isinstance(lo, AlgebraicNumber) else AlgebraicNumber.from_rational(lo)
    ha = hi if isinstance(hi, AlgebraicNumber) else AlgebraicNumber.from_rational(hi)
    if compare(la, ha) >= 0:
        raise ValueError("malformed range: lo >= hi")


def _ext_is_root(ctx: ExtContext, F: ExtPoly, x: AlgebraicNumber) -> bool:
    """Whether F(sigma, x) = 0 for algebraic x.

    The remainder-chain tail of (defining polynomial of x, F) vanishes
    exactly at their common roots; every such root is a root of x's
    defining polynomial, so the only one that can lie inside x's
    isolating interval is x itself.
    """
    if x.is_rational:
        return ext_sign_at_point(ctx, F, x.value) == 0
    g = ext_gcd_tail(ctx, ext_from_rational(x.minpoly), F)
    if len(g) <= 1:
        return False
    sf = ext_squarefree_at_sigma(ctx, g)
    return _ext_count_open(ctx, sf, x.lo, x.hi) >= 1


def ext_sign_at_algebraic(ctx: ExtContext, F: ExtPoly, x: AlgebraicNumber) -> int:
    """Exact sign of F(sigma, x) for an algebraic point x.

    Zero is decided symbolically first (see _ext_is_root); a nonzero sign
    is then certified by two-level interval arithmetic, refining both
    sigma's and x's isolating intervals until zero is excluded.
    """
    F = ext_strip_eff(ctx, ext_normalize(ctx, list(F)))
    if not F:
        raise ValueError("polynomial vanishes identically at sigma")
    if x.is_rational:
        return ext_sign_at_point(ctx, F, x.value)
    if _ext_is_root(ctx, F, x):
        return 0
    sig = ctx.sigma
    while True:
        acc = None
        for c in reversed(F):
            klo, khi = c.eval_interval(sig.lo, sig.hi)
            if acc is None:
                acc = (klo, khi)
                continue
            prods = (acc[0] * x.lo, acc[0] * x.hi,
                     acc[1] * x.lo, acc[1] * x.hi)
            acc = (min(prods) + klo, max(prods) + khi)
        if acc[0] > 0:
            return 1
        if acc[1] < 0:
            return -1
        if not sig.is_rational:
            sig = sig.refine(sig.width() / 4)
        x = x.refine(x.width() / 4)
        if x.is_rational:
            return ext_sign_at_point(ctx, F, x.value)


def _ext_clean_lower(ctx, F, lo):
    if isinstance(lo, float):
        return NEG_INF
    if not isinstance(lo, AlgebraicNumber):
        return _as_fraction(lo)
    if lo.is_rational:
        return lo.value
    return _ext_cleaned_bracket(ctx, F, lo)[1]


def _ext_clean_upper(ctx, F, hi):
    if isinstance(hi, float):
        return POS_INF
    if not isinstance(hi, AlgebraicNumber):
        return _as_fraction(hi)
    if hi.is_rational:
        return hi.value
    return _ext_cleaned_bracket(ctx, F, hi)[0]


def _ext_cleaned_bracket(ctx: ExtContext, F: ExtPoly,
                         x: AlgebraicNumber) -> tuple[Fraction, Fraction]:
    """Refine x until [x.lo, x.hi] holds no root of F(sigma,.) besides
    possibly x itself, with endpoints that are not roots."""
    if len(F) == 1:
        return x.lo, x.hi
    want = 1 if _ext_is_root(ctx, F, x) else 0
    sf = ext_squarefree_at_sigma(ctx, F)
    while True:
        if x.is_rational:
            return x.value, x.value
        if (ext_sign_at_point(ctx, sf, x.lo) != 0
                and ext_sign_at_point(ctx, sf, x.hi) != 0
                and _ext_count_open(ctx, sf, x.lo, x.hi) == want):
            return x.lo, x.hi
        x = x.refine(x.width() / 4)
