"""Dense univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored low-to-high with no
trailing zeros, so equality is structural and the zero polynomial is the
empty tuple.  The degree of the zero polynomial is ``None`` (a distinguished
marker; never -1, so degree arithmetic cannot silently use it).

The growth-sensitive algorithms (gcd, resultant) run on primitive integer
coefficient lists with content stripping at every remainder step; naive
Euclidean division over Q explodes coefficient sizes past degree ~40.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Sequence, Union

RatLike = Union[int, Fraction]


class DegenerateEliminationError(ValueError):
    """Raised when a resultant-based elimination collapses identically to zero."""


def _as_fraction(x: RatLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def constant(c: RatLike) -> "Poly":
        return Poly((c,))

    @staticmethod
    def x() -> "Poly":
        return _X

    @staticmethod
    def linear(c0: RatLike, c1: RatLike) -> "Poly":
        """c0 + c1*z."""
        return Poly((c0, c1))

    @staticmethod
    def from_int_coeffs(cs: Sequence[int]) -> "Poly":
        return Poly([Fraction(v) for v in cs])

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "z" if k == 1 else f"z^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        out = list(self.coeffs)
        bs = other.coeffs
        if len(out) < len(bs):
            out.extend([Fraction(0)] * (len(bs) - len(out)))
        for i, c in enumerate(bs):
            out[i] -= c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        # integer fast path: schoolbook on ints runs several times faster
        # than on Fractions, and the deep towers stay integral throughout
        if all(c.denominator == 1 for c in a) and all(c.denominator == 1 for c in b):
            ai = [c.numerator for c in a]
            bi = [c.numerator for c in b]
            out = [0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(ai):
                if ca:
                    for j, cb in enumerate(bi):
                        out[i + j] += ca * cb
            return Poly(out)
        outf = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    outf[i + j] += ca * cb
        return Poly(outf)

    def scale(self, c: RatLike) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return _ZERO
        return Poly([c * a for a in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift_up(self, k: int) -> "Poly":
        """Multiply by z^k."""
        if self.is_zero:
            return _ZERO
        return Poly((Fraction(0),) * k + self.coeffs)

    # -- calculus and evaluation ---------------------------------------

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x: RatLike) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: RatLike) -> int:
        v = self.eval(x)
        return (v > 0) - (v < 0)

    def eval_interval(self, lo: RatLike, hi: RatLike) -> tuple[Fraction, Fraction]:
        """Interval Horner: a superset of {f(x) : lo <= x <= hi}."""
        lo, hi = _as_fraction(lo), _as_fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        alo = ahi = Fraction(0)
        for c in reversed(self.coeffs):
            cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
            alo, ahi = min(cands) + c, max(cands) + c
        return alo, ahi

    def compose(self, inner: "Poly") -> "Poly":
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    # -- division ------------------------------------------------------

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or len(self.coeffs) < len(other.coeffs):
            return _ZERO, self
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lc = 1 / other.coeffs[-1]
        q = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                c *= inv_lc
                q[i - db] = c
                for j, bc in enumerate(other.coeffs[:-1]):
                    rem[i - db + j] -= c * bc
        return Poly(q), Poly(rem[:db])

    def div_exact(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def divides(self, other: "Poly") -> bool:
        if self.is_zero:
            return other.is_zero
        return other.divmod(self)[1].is_zero

    # -- normal forms ---------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.lc)

    def primitive(self) -> tuple[Fraction, list[int]]:
        """Split off positive rational content: f == content * Poly(prim).

        prim is an integer coefficient list with gcd 1 and the same sign
        pattern as f.  The zero polynomial yields (0, []).
        """
        if self.is_zero:
            return Fraction(0), []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = _igcd(g, v)
        return Fraction(g, den), [v // g for v in ints]

    def primitive_positive(self) -> "Poly":
        """The primitive integer polynomial, positive leading coefficient,
        sharing this polynomial's roots."""
        _, prim = self.primitive()
        if prim and prim[-1] < 0:
            prim = [-v for v in prim]
        return Poly.from_int_coeffs(prim)


_ZERO = Poly(())
_X = Poly((0, 1))


# -- integer-level kernels ---------------------------------------------
#
# The remainder-sequence work happens on primitive int lists (low-to-high,
# nonzero lead); content is stripped every step to keep growth near
# subresultant size.  Signs do not matter for the gcd; the Sturm chains in
# realroots do their own sign bookkeeping on top of zz_prem.


def zz_strip(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def zz_content(cs: Sequence[int]) -> int:
    g = 0
    for v in cs:
        g = _igcd(g, v)
    return g


def zz_primitive(cs: Sequence[int]) -> list[int]:
    g = zz_content(cs)
    if g in (0, 1):
        return list(cs)
    return [v // g for v in cs]


def zz_derivative(cs: Sequence[int]) -> list[int]:
    return [k * c for k, c in enumerate(cs)][1:]


def zz_eval_scaled(cs: Sequence[int], num: int, den: int) -> int:
    """den^deg(f) * f(num/den) as an exact integer, for den > 0.

    Same sign as f(num/den); avoids Fraction overhead in sign queries.
    """
    if not cs:
        return 0
    acc = cs[-1]
    dpow = 1
    for c in reversed(cs[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return acc


def zz_sign_at(cs: Sequence[int], x: Fraction) -> int:
    v = zz_eval_scaled(cs, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def zz_prem(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Pseudo-remainder over Z: lc(g)^(deg f - deg g + 1) * f  mod  g.

    Requires g nonzero.  deg f < deg g returns lc(g)^... * f scaled
    consistently (steps = deg f - deg g + 1 <= 0 means no scaling).
    """
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    steps = len(f) - len(g) + 1
    while steps > 0 and f and len(f) - 1 >= dg:
        lf = f[-1]
        k = len(f) - 1 - dg
        f = [c * lg for c in f]
        for j in range(dg + 1):
            f[k + j] -= lf * g[j]
        zz_strip(f)
        steps -= 1
    for _ in range(max(steps, 0)):
        f = [c * lg for c in f]
    return f


def zz_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd of integer polynomials via a content-stripped PRS.

    Result has positive leading coefficient; [] only if both inputs are zero.
    """
    f = zz_primitive(zz_strip(list(a)))
    g = zz_primitive(zz_strip(list(b)))
    if not f:
        out = g
    elif not g:
        out = f
    else:
        if len(f) < len(g):
            f, g = g, f
        while g:
            if len(g) == 1:
                out = [1]
                break
            r = zz_prem(f, g)
            f, g = g, zz_primitive(zz_strip(r))
        else:
            out = f
    if out and out[-1] < 0:
        out = [-v for v in out]
    return out


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over Q."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    _, fp = f.primitive()
    _, gp = g.primitive()
    return Poly.from_int_coeffs(zz_gcd(fp, gp)).monic()


def squarefree_part(f: Poly) -> Poly:
    """f / gcd(f, f'), primitive with positive leading coefficient."""
    if f.is_zero:
        raise ValueError("zero polynomial has no square-free part")
    if f.degree == 0:
        return Poly((1,))
    g = gcd(f, f.derivative())
    return f.div_exact(g).primitive_positive()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: f == c * prod factor^mult with the factors square-free,
    pairwise coprime, primitive, positive leading coefficient.  Constants
    decompose to an empty list.
    """
    if f.is_zero:
        raise ValueError("zero polynomial has no square-free decomposition")
    out: list[tuple[Poly, int]] = []
    if f.degree == 0:
        return out
    g = gcd(f, f.derivative())
    b = f.div_exact(g)
    c = f.derivative().div_exact(g)
    d = c - b.derivative()
    i = 1
    while b.degree is not None and b.degree > 0:
        a = gcd(b, d) if not d.is_zero else b.monic()
        if a.degree is not None and a.degree > 0:
            out.append((a.primitive_positive(), i))
        b = b.div_exact(a)
        c = d.div_exact(a)
        d = c - b.derivative()
        i += 1
    return out


# -- resultants ----------------------------------------------------------


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant of two rational polynomials, exactly.

    Convention: res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots of
    f with multiplicity.  Zero iff the inputs share a root or one is zero;
    nonzero constants have resultant 1.
    """
    if f.is_zero or g.is_zero:
        return Fraction(0)
    acc = Fraction(1)
    sign = 1
    cf, F = f.primitive()
    cg, G = g.primitive()
    df, dg = len(F) - 1, len(G) - 1
    acc *= cf**dg * cg**df
    while True:
        if df < dg:
            F, G, df, dg = G, F, dg, df
            if (df * dg) % 2:
                sign = -sign
        if dg == 0:
            acc *= Fraction(G[0]) ** df
            return sign * acc
        R = zz_strip(zz_prem(F, G))
        if not R:
            return Fraction(0)
        dr = len(R) - 1
        lg = G[-1]
        # res(F,G) = (-1)^(df dg) lc(G)^(df-dr) res(G, F mod G), and the
        # pseudo-remainder carries an extra factor lc(G)^(df-dg+1)
        if (df * dg) % 2:
            sign = -sign
        acc *= Fraction(lg) ** (df - dr - (df - dg + 1) * dg)
        c = zz_content(R)
        R = [v // c for v in R]
        acc *= Fraction(c) ** dg
        F, G, df, dg = G, R, dg, dr


def eliminate_parameter(f: Poly, g_coeffs: Sequence[Poly]) -> Poly:
    """Resultant in z of f(z) and g(z) = sum_k g_coeffs[k](t) * z^k, as a
    polynomial in the parameter t.

    Computed by evaluation and interpolation: the resultant specializes
    correctly at every t where the leading z-coefficient of g does not
    vanish, so sample points where it does are skipped.  Raises
    DegenerateEliminationError when the eliminant is identically zero.
    """
    if f.is_zero:
        raise ValueError("cannot eliminate against the zero polynomial")
    gc = list(g_coeffs)
    while gc and gc[-1].is_zero:
        gc.pop()
    if not gc:
        raise ValueError("cannot eliminate against the zero polynomial")
    df = f.degree or 0
    dt = max((c.degree or 0) for c in gc)
    # t appears only in the df rows of g-coefficients of the Sylvester
    # matrix, so deg_t(eliminant) <= df * dt
    n = df * dt + 1
    lead = gc[-1]
    samples: list[tuple[Fraction, Fraction]] = []
    t = 0
    while len(samples) < n:
        tv = Fraction(t)
        t = -t if t > 0 else -t + 1
        if not lead.eval(tv):
            continue
        gt = Poly([c.eval(tv) for c in gc])
        samples.append((tv, resultant(f, gt)))
    result = _lagrange_interpolate(samples)
    if result.is_zero:
        raise DegenerateEliminationError(
            "eliminant vanishes identically; the inputs share a root at every parameter value"
        )
    return result


def _lagrange_interpolate(samples: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Unique polynomial of degree < len(samples) through the given points."""
    result = Poly.zero()
    for i, (xi, yi) in enumerate(samples):
        if not yi:
            continue
        basis = Poly((1,))
        denom = Fraction(1)
        for j, (xj, _) in enumerate(samples):
            if j != i:
                basis = basis * Poly((-xj, 1))
                denom *= xi - xj
        result = result + basis.scale(yi / denom)
    return result
