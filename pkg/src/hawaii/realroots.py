"""Certified real-root counting and isolation.

Sturm chains give exact root counts over any interval; Descartes/bisection
isolation gives ordered isolating intervals.  Both run on primitive integer
coefficient lists.  Algebraic numbers are (square-free polynomial, isolating
interval) pairs; every sign/order question about them is answered exactly,
never by floating-point proximity.

Interval conventions: the public count is over the OPEN interval (lo, hi);
the Sturm primitive counts the half-open (lo, hi].  Infinite endpoints are
`float("-inf")` / `float("inf")` sentinels, realized internally as bounds
beyond every root (limit signs of leading terms, which is what evaluating
past the Cauchy bound would give).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .polys import (
    Poly,
    gcd,
    squarefree_decomposition,
    squarefree_part,
    zz_gcd,
    zz_prem,
    zz_primitive,
    zz_sign_at,
    zz_strip,
)

NEG_INF = float("-inf")
POS_INF = float("inf")

Endpoint = Union[int, Fraction, "AlgebraicNumber", float]


# -- Sturm chains ---------------------------------------------------------


def _zz_sturm(cs: Sequence[int]) -> list[list[int]]:
    """Sign-corrected Sturm sequence on primitive integer coefficients.

    Each member is a positive rational multiple of the classical chain
    member, so all sign-variation counts agree with the classical chain.
    """
    f = zz_primitive(zz_strip(list(cs)))
    if not f:
        raise ValueError("zero polynomial has no Sturm chain")
    chain = [f]
    if len(f) == 1:
        return chain
    g = zz_primitive([k * c for k, c in enumerate(f)][1:])
    chain.append(g)
    while len(g) > 1:
        r = zz_strip(zz_prem(f, g))
        # prem scales by lc(g)^(deg f - deg g + 1); flip so the stored
        # element is a *negative* positive-multiple of (f mod g)
        steps = len(f) - len(g) + 1
        if g[-1] > 0 or steps % 2 == 0:
            r = [-v for v in r]
        if not r:
            break
        r = zz_primitive(r)
        chain.append(r)
        f, g = g, r
    return chain


def sturm_chain(f: Poly) -> list[Poly]:
    """Sturm sequence of f; sign variations at a < b count the distinct
    real roots in (a, b].  Members are positive multiples of the classical
    sequence (variation counts are unchanged by positive scaling)."""
    if f.is_zero:
        raise ValueError("zero polynomial has no Sturm chain")
    _, prim = f.primitive()
    return [Poly.from_int_coeffs(c) for c in _zz_sturm(prim)]


def _sign_inf(cs: Sequence[int], direction: int) -> int:
    """Limit sign of the polynomial at +infinity (direction=+1) or -infinity."""
    lead = 1 if cs[-1] > 0 else -1
    if direction > 0:
        return lead
    return lead if (len(cs) - 1) % 2 == 0 else -lead


def _variations(signs: Sequence[int]) -> int:
    out = 0
    prev = 0
    for s in signs:
        if s:
            if prev and s != prev:
                out += 1
            prev = s
    return out


def _variations_at(chain: Sequence[Sequence[int]], x) -> int:
    if x == NEG_INF:
        return _variations([_sign_inf(c, -1) for c in chain])
    if x == POS_INF:
        return _variations([_sign_inf(c, +1) for c in chain])
    return _variations([zz_sign_at(c, x) for c in chain])


def _count_halfopen(chain: Sequence[Sequence[int]], a, b) -> int:
    """Distinct roots of the chain's square-free polynomial in (a, b].

    Valid even when a or b is itself a root: with zeros dropped, the
    variation count at a root equals its right-hand limit.
    """
    return _variations_at(chain, a) - _variations_at(chain, b)


def _count_open(sf: Sequence[int], chain: Sequence[Sequence[int]], a, b) -> int:
    """Distinct roots of square-free sf strictly inside (a, b)."""
    n = _count_halfopen(chain, a, b)
    if b not in (POS_INF, NEG_INF) and zz_sign_at(sf, _as_frac(b)) == 0:
        n -= 1
    return n


def _as_frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# -- root bounds and rational recognition ---------------------------------


def cauchy_bound(f: Poly) -> Fraction:
    """Strict bound: every real root lies in (-B, B)."""
    if f.is_zero or f.degree == 0:
        raise ValueError("root bound needs a nonconstant polynomial")
    lead = abs(f.lc)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lead


def _dyadic_bound(cs: Sequence[int]) -> int:
    """Power of two >= the Cauchy bound of the integer polynomial."""
    lead = abs(cs[-1])
    m = max(abs(c) for c in cs[:-1]) if len(cs) > 1 else 0
    b = 1
    while b * lead < lead + m:
        b *= 2
    return b


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator (then smallest numerator
    magnitude) in the closed interval [lo, hi]."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo == hi:
        return lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    # now 0 < lo < hi
    fl = lo.numerator // lo.denominator
    ceil_lo = fl if lo == fl else fl + 1
    if ceil_lo <= hi:
        # an integer lies inside; the smallest one in range
        return Fraction(ceil_lo)
    frac = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / frac


def _rational_root_in(prim: Sequence[int], lo: Fraction,
                      hi: Fraction) -> Fraction | None:
    """Exact rational root of the primitive square-free polynomial inside
    (lo, hi), or None if the unique root there is irrational.

    Sound and complete: a rational root p/q in lowest terms has q dividing
    the leading coefficient, so refining the bracket below 1/(2 lc^2)
    leaves at most one rational with so small a denominator inside, and
    the simplest rational of the bracket is it.
    """
    L = abs(prim[-1])
    target = Fraction(1, 2 * L * L)
    slo = zz_sign_at(prim, lo)
    while hi - lo > target:
        mid = (lo + hi) / 2
        s = zz_sign_at(prim, mid)
        if s == 0:
            return mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    cand = simplest_between(lo, hi)
    if zz_sign_at(prim, cand) == 0 and lo < cand < hi:
        return cand
    return None


# -- algebraic numbers -----------------------------------------------------


class AlgebraicNumber:
    """A real algebraic number: square-free polynomial plus an isolating
    interval with rational, non-root endpoints.  lo == hi exactly when the
    number is rational, in which case minpoly is linear.

    Instances are immutable; refine() returns a new instance.
    """

    __slots__ = ("minpoly", "lo", "hi", "_prim", "_sign_lo")

    def __init__(self, minpoly: Poly, lo: Fraction, hi: Fraction,
                 _checked: bool = False):
        lo, hi = _as_frac(lo), _as_frac(hi)
        prim = tuple(minpoly.primitive()[1])
        if not prim or len(prim) == 1:
            raise ValueError("minpoly must be nonconstant")
        if prim[-1] < 0:
            prim = tuple(-v for v in prim)
        minpoly = Poly.from_int_coeffs(prim)
        if lo == hi:
            if zz_sign_at(prim, lo) != 0:
                raise ValueError("point interval must sit on a root")
            # canonical rational presentation
            prim = (-lo.numerator, lo.denominator)
            minpoly = Poly.from_int_coeffs(prim)
            slo = 0
        else:
            slo = zz_sign_at(prim, lo)
            if not _checked:
                if slo == 0 or zz_sign_at(prim, hi) == 0:
                    raise ValueError("interval endpoints must not be roots")
                if squarefree_part(minpoly) != minpoly:
                    raise ValueError("minpoly must be square-free")
                chain = _zz_sturm(prim)
                if _count_halfopen(chain, lo, hi) != 1:
                    raise ValueError("interval must isolate exactly one root")
                r = _rational_root_in(prim, lo, hi)
                if r is not None:
                    prim = (-r.numerator, r.denominator)
                    minpoly = Poly.from_int_coeffs(prim)
                    lo = hi = r
                    slo = 0
        object.__setattr__(self, "minpoly", minpoly)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "_prim", tuple(prim))
        object.__setattr__(self, "_sign_lo", slo)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicNumber is immutable")

    @staticmethod
    def from_rational(q) -> "AlgebraicNumber":
        q = _as_frac(q)
        return AlgebraicNumber(Poly((-q, 1)), q, q)

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        """Exact value; only for rational instances."""
        if not self.is_rational:
            raise ValueError("not a rational number")
        return self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def width(self) -> Fraction:
        return self.hi - self.lo

    def approx(self, digits: int = 15) -> float:
        x = self.refine(Fraction(1, 10**digits)) if not self.is_rational else self
        return float(x.mid())

    def refine(self, width) -> "AlgebraicNumber":
        """Same number, isolating interval of width <= width."""
        width = _as_frac(width)
        if width <= 0:
            raise ValueError("width must be positive")
        if self.is_rational or self.hi - self.lo <= width:
            return self
        lo, hi, slo = self.lo, self.hi, self._sign_lo
        prim = self._prim
        while hi - lo > width:
            mid = (lo + hi) / 2
            s = zz_sign_at(prim, mid)
            if s == 0:
                return AlgebraicNumber(self.minpoly, mid, mid)
            if s == slo:
                lo = mid
            else:
                hi = mid
        out = AlgebraicNumber.__new__(AlgebraicNumber)
        object.__setattr__(out, "minpoly", self.minpoly)
        object.__setattr__(out, "lo", lo)
        object.__setattr__(out, "hi", hi)
        object.__setattr__(out, "_prim", prim)
        object.__setattr__(out, "_sign_lo", slo)
        return out

    def __repr__(self) -> str:
        if self.is_rational:
            return f"AlgebraicNumber({self.lo})"
        return f"AlgebraicNumber({self.minpoly}, ({self.lo}, {self.hi}))"

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraicNumber):
            return compare(self, other) == 0
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.lo == other
        return NotImplemented

    def __hash__(self):
        raise TypeError("unhashable; use compare for ordering")


def sign_at(f: Poly, x: AlgebraicNumber) -> int:
    """Exact sign of f at the algebraic point x."""
    if x.is_rational:
        return f.sign_at(x.value)
    if f.is_zero:
        return 0
    g = gcd(f, x.minpoly)
    if g.degree is not None and g.degree > 0:
        _, gp = g.primitive()
        chain = _zz_sturm(gp)
        # any root of g inside x's isolating interval must be x itself
        if _count_open(gp, chain, x.lo, x.hi) == 1:
            return 0
    cur = x
    while True:
        lo, hi = f.eval_interval(cur.lo, cur.hi)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        cur = cur.refine(cur.width() / 4)


def compare(x: AlgebraicNumber, y: AlgebraicNumber) -> int:
    """-1, 0, or +1 as x < y, x = y, x > y.  Equality is decided
    symbolically (shared root of the minpoly gcd in the overlap), never by
    numeric closeness."""
    if x.is_rational and y.is_rational:
        a, b = x.value, y.value
        return (a > b) - (a < b)
    if x.is_rational:
        return -_side_of(y, x.value)
    if y.is_rational:
        return _side_of(x, y.value)
    g = gcd(x.minpoly, y.minpoly)
    gp: list[int] | None = None
    chain = None
    if g.degree is not None and g.degree > 0:
        _, gp = g.primitive()
        chain = _zz_sturm(gp)
    while True:
        if gp is not None:
            ilo, ihi = max(x.lo, y.lo), min(x.hi, y.hi)
            # a root of g in the open overlap lies strictly inside both
            # isolating intervals, so it is x and is y
            if ilo < ihi and _count_open(gp, chain, ilo, ihi) >= 1:
                return 0
        # endpoints of irrational numbers are non-roots, so the numbers
        # sit strictly inside their intervals and touching is enough
        if x.hi <= y.lo:
            return -1
        if y.hi <= x.lo:
            return 1
        x = x.refine(x.width() / 4)
        y = y.refine(y.width() / 4)
        if x.is_rational or y.is_rational:
            return compare(x, y)


def _side_of(y: AlgebraicNumber, v: Fraction) -> int:
    """-1, 0, +1 as the irrational-presented y is below, at, or above v."""
    if y.minpoly.sign_at(v) == 0 and y.lo < v < y.hi:
        return 0
    while y.lo < v < y.hi:
        y = y.refine(y.width() / 4)
        if y.is_rational:
            w = y.value
            return (w > v) - (w < v)
    # v excluded from the open interval holding y
    return 1 if v <= y.lo else -1


def _as_algebraic(x: Endpoint) -> AlgebraicNumber:
    if isinstance(x, AlgebraicNumber):
        return x
    return AlgebraicNumber.from_rational(_as_frac(x))


# -- isolation -------------------------------------------------------------


def _descartes_bound(cs: Sequence[int]) -> int:
    """Upper bound (exact when 0 or 1) on roots of cs in open (0, 1)."""
    # variations of (1+x)^n * f(1/(1+x)): reverse, then Taylor shift by 1
    n = len(cs) - 1
    work = list(reversed(cs))
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            work[j] += work[j + 1]
    return _variations([(v > 0) - (v < 0) for v in work])


def _half_left(cs: Sequence[int]) -> list[int]:
    """2^n f(x/2): roots of f in (0, 1/2) map to (0, 1)."""
    n = len(cs) - 1
    return [c << (n - i) for i, c in enumerate(cs)]


def _shift1(cs: Sequence[int]) -> list[int]:
    """f(x+1)."""
    work = list(cs)
    n = len(work) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            work[j] += work[j + 1]
    return work


def _isolate_01(cs: list[int], lo: Fraction, hi: Fraction,
                out: list[tuple[Fraction, Fraction]]):
    """Isolate roots of cs in (0,1), reporting in original coordinates
    (lo, hi).  Precondition: cs(0) != 0 and cs(1) != 0."""
    v = _descartes_bound(cs)
    if v == 0:
        return
    if v == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    left = zz_primitive(_half_left(cs))
    right = zz_strip(_shift1(left))
    if right and right[0] == 0:
        # exact root at the midpoint
        out.append((mid, mid))
        right = right[1:]
        # strip the matching root x=1 from the left image
        left = _exact_div_x_minus_1(left)
    _isolate_01(left, lo, mid, out)
    _isolate_01(zz_primitive(right), mid, hi, out)


def _exact_div_x_minus_1(cs: Sequence[int]) -> list[int]:
    """cs / (x - 1), exact (requires cs(1) == 0)."""
    out = [0] * (len(cs) - 1)
    acc = 0
    for i in range(len(cs) - 1, 0, -1):
        acc += cs[i]
        out[i - 1] = acc
    assert acc + cs[0] == 0
    return zz_strip(out)


def _isolate_squarefree_int(prim: list[int]) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (or exact points lo==hi) for all real roots of a
    primitive square-free integer polynomial with nonzero constant term,
    in increasing order.  Open-interval endpoints are never roots."""
    out: list[tuple[Fraction, Fraction]] = []
    if len(prim) <= 1:
        return out
    B = _dyadic_bound(prim)
    pos: list[tuple[Fraction, Fraction]] = []
    scaled = zz_primitive([c * B**i for i, c in enumerate(prim)])
    _isolate_01(scaled, Fraction(0), Fraction(B), pos)
    mirrored = [(-1) ** i * c for i, c in enumerate(scaled)]
    tmp: list[tuple[Fraction, Fraction]] = []
    _isolate_01(zz_primitive(mirrored), Fraction(0), Fraction(B), tmp)
    out.extend((-b, -a) for a, b in reversed(tmp))
    out.extend(pos)
    return out


def isolate_squarefree(f: Poly) -> list[AlgebraicNumber]:
    """Ordered algebraic numbers for the real roots of a square-free f."""
    _, prim = f.primitive()
    if not prim:
        raise ValueError("zero polynomial")
    if prim[-1] < 0:
        prim = [-v for v in prim]
    zero_root = False
    if len(prim) > 1 and prim[0] == 0:
        # square-free, so the zero root is simple; nonzero roots are
        # presented with the z factor stripped (0 must not be a root of a
        # minpoly whose intervals may touch 0)
        zero_root = True
        prim = zz_strip(prim[1:])
    ivals = _recognized(prim, _isolate_squarefree_int(prim))
    # rational roots sit on the boundary of neighboring intervals (exact
    # bisection hits), so divide them out of the minpoly the open
    # intervals carry: endpoints must never be minpoly roots
    quotient = Poly.from_int_coeffs(prim)
    for lo, hi in ivals:
        if lo == hi:
            quotient = quotient.div_exact(Poly((-lo, 1)))
    mp = quotient.primitive_positive()
    out = []
    for lo, hi in ivals:
        if lo == hi:
            out.append(AlgebraicNumber.from_rational(lo))
        else:
            out.append(AlgebraicNumber(mp, lo, hi, _checked=True))
    if zero_root:
        k = 0
        while k < len(out) and out[k].hi <= 0:
            k += 1
        out.insert(k, AlgebraicNumber.from_rational(Fraction(0)))
    return out


def _recognized(prim: list[int],
                ivals: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    """Collapse isolating intervals onto exact rational roots when the
    enclosed root is rational."""
    out = []
    for lo, hi in ivals:
        if lo == hi:
            out.append((lo, hi))
            continue
        r = _rational_root_in(prim, lo, hi)
        out.append((r, r) if r is not None else (lo, hi))
    return out


class RootList:
    """Ordered real roots with exact multiplicities."""

    __slots__ = ("roots",)

    roots: tuple[tuple[AlgebraicNumber, int], ...]

    def __init__(self, roots: Sequence[tuple[AlgebraicNumber, int]]):
        object.__setattr__(self, "roots", tuple(roots))

    def __setattr__(self, name, value):
        raise AttributeError("RootList is immutable")

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)

    def numbers(self) -> list[AlgebraicNumber]:
        return [x for x, _ in self.roots]

    def __repr__(self):
        inner = ", ".join(f"({x!r}, {m})" for x, m in self.roots)
        return f"RootList([{inner}])"


def isolate_roots(f: Poly) -> RootList:
    """All real roots of f, ordered, with multiplicities."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    tagged: list[tuple[AlgebraicNumber, int]] = []
    for factor, mult in squarefree_decomposition(f):
        for x in isolate_squarefree(factor):
            tagged.append((x, mult))
    # roots of distinct square-free factors are distinct; order exactly
    tagged.sort(key=_RootKey)
    roots = RootList(tagged)
    assert roots.total_multiplicity() == count_roots(f, with_multiplicity=True)
    return roots


class _RootKey:
    __slots__ = ("x",)

    def __init__(self, pair):
        self.x = pair[0]

    def __lt__(self, other):
        return compare(self.x, other.x) < 0


# -- counting ---------------------------------------------------------------


def count_roots(f: Poly, lo: Endpoint = NEG_INF, hi: Endpoint = POS_INF,
                with_multiplicity: bool = False) -> int:
    """Number of real roots of f strictly inside the open interval (lo, hi).

    Endpoints may be rationals, algebraic numbers, or +-infinity;
    with_multiplicity counts each root as many times as its multiplicity.
    """
    if f.is_zero:
        raise ValueError("cannot count roots of the zero polynomial")
    _check_order(lo, hi)
    total = 0
    if with_multiplicity:
        for factor, mult in squarefree_decomposition(f):
            total += mult * _count_factor_open(factor, lo, hi)
    else:
        if f.degree == 0:
            return 0
        total = _count_factor_open(squarefree_part(f), lo, hi)
    return total


def _check_order(lo: Endpoint, hi: Endpoint):
    if isinstance(lo, float) and lo == POS_INF:
        raise ValueError("malformed range")
    if isinstance(hi, float) and hi == NEG_INF:
        raise ValueError("malformed range")
    if isinstance(lo, float) or isinstance(hi, float):
        return
    if not isinstance(lo, AlgebraicNumber) and not isinstance(hi, AlgebraicNumber):
        if _as_frac(lo) >= _as_frac(hi):
            raise ValueError("malformed range: lo >= hi")
        return
    if compare(_as_algebraic(lo), _as_algebraic(hi)) >= 0:
        raise ValueError("malformed range: lo >= hi")


def _count_factor_open(factor: Poly, lo: Endpoint, hi: Endpoint) -> int:
    """Distinct roots of a square-free factor strictly inside (lo, hi)."""
    if factor.degree == 0:
        return 0
    _, prim = factor.primitive()
    chain = _zz_sturm(prim)
    lo_r = _clean_lower(prim, chain, lo)
    hi_r = _clean_upper(prim, chain, hi)
    return _count_open(prim, chain, lo_r, hi_r)


def _cleaned_bracket(prim, chain, x: AlgebraicNumber) -> tuple[Fraction, Fraction]:
    """Refine x until its bracket [x.lo, x.hi] contains no root of the
    counted factor other than possibly x itself, with non-root endpoints.
    Then roots of the factor beyond x on either side are exactly the roots
    beyond the corresponding bracket endpoint."""
    is_root = sign_at(Poly.from_int_coeffs(prim), x) == 0
    want = 1 if is_root else 0
    while True:
        if x.is_rational:
            return x.value, x.value
        if (zz_sign_at(prim, x.lo) != 0 and zz_sign_at(prim, x.hi) != 0
                and _count_open(prim, chain, x.lo, x.hi) == want):
            return x.lo, x.hi
        x = x.refine(x.width() / 4)


def _clean_lower(prim, chain, lo: Endpoint):
    """Rational stand-in a for the lower endpoint: counting in (a, .) open
    at a equals counting in (lo, .)."""
    if isinstance(lo, float):
        return NEG_INF
    if not isinstance(lo, AlgebraicNumber):
        return _as_frac(lo)
    if lo.is_rational:
        return lo.value
    return _cleaned_bracket(prim, chain, lo)[1]


def _clean_upper(prim, chain, hi: Endpoint):
    if isinstance(hi, float):
        return POS_INF
    if not isinstance(hi, AlgebraicNumber):
        return _as_frac(hi)
    if hi.is_rational:
        return hi.value
    return _cleaned_bracket(prim, chain, hi)[0]
