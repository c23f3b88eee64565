"""Independent sympy oracle for the function-model fixtures.

Run:  python3 tools/oracle_lpstar.py
Every value printed here is frozen into tests/test_lpstar.py only after
this script has produced it.
"""

import sympy as sp

z = sp.Symbol("z")


def tower(p, a, b):
    w = -a * z**2 + b * z
    phi = p * sp.exp(w)
    out = []
    cur = phi
    for _ in range(4):
        out.append(sp.cancel(sp.expand(cur / sp.exp(w))))
        cur = sp.diff(cur, z)
    return out


def reduced_q(p, a, b):
    P = tower(p, a, b)
    nf = sp.expand(P[0] * P[2] - P[1] ** 2)
    g = sp.gcd(sp.Poly(nf, z), sp.Poly(p, z) ** 2)
    qnum = sp.quo(sp.Poly(nf, z), g)
    qden = sp.quo(sp.Poly(p, z) ** 2, g)
    return nf, qnum, qden


def reduced_q1(p, a, b):
    P = tower(p, a, b)
    nf1 = sp.expand(P[1] * P[3] - P[2] ** 2)
    if nf1 == 0:
        return nf1, sp.Poly(0, z), sp.Poly(1, z)
    g = sp.gcd(sp.Poly(nf1, z), sp.Poly(P[1], z) ** 2)
    q1num = sp.quo(sp.Poly(nf1, z), g)
    q1den = sp.quo(sp.Poly(P[1], z) ** 2, g)
    return nf1, q1num, q1den


def real_count_mult(poly):
    if poly.degree() <= 0:
        return 0
    return sum(m for r, m in sp.Poly(poly, z).real_roots_multiplicities()) \
        if hasattr(poly, "real_roots_multiplicities") else _rc(poly)


def _rc(poly):
    return sum(poly.count_roots(r, r) and 0 or 0 for r in [])


def count_real(poly):
    """Real roots with multiplicity via factorization."""
    p = sp.Poly(poly, z)
    if p.degree() <= 0:
        return 0
    total = 0
    for fac, mult in p.factor_list()[1]:
        rr = sp.polys.polytools.count_roots(fac)
        total += rr * mult
    return total


def counts(p, a, b):
    P = tower(p, a, b)
    _, qnum, _ = reduced_q(p, a, b)
    _, q1num, _ = reduced_q1(p, a, b)
    pp = sp.Poly(p, z)
    p1 = sp.Poly(P[1], z)
    two_m = pp.degree() - count_real(pp)
    two_m1 = (p1.degree() if p1.degree() > 0 else 0) - count_real(p1)
    zr_q = count_real(qnum)
    zr_q1 = count_real(q1num) if not q1num.is_zero else 0
    # extra: real zeros of P1 minus Rolle-forced ones
    real_mults = []
    for fac, mult in pp.factor_list()[1]:
        n = sp.polys.polytools.count_roots(fac)
        real_mults += [mult] * n
    distinct = len(real_mults)
    excess = sum(m - 1 for m in real_mults)
    extra = count_real(p1) - excess - max(distinct - 1, 0)
    return dict(two_m=two_m, two_m1=two_m1, zr_q=zr_q, zr_q1=zr_q1,
                extra=extra)


print("== tower p=1, a=1, b=0 (Gaussian) ==")
print(tower(sp.Integer(1), 1, 0))

print("== tower p=z, a=0, b=1 ==")
print(tower(z, 0, 1))

print("== tower p=z^2+1, a=0, b=0 ==")
print(tower(z**2 + 1, 0, 0))

print("== NF / Qnum for z^2+1 ==")
nf, qn, qd = reduced_q(z**2 + 1, 0, 0)
print("NF =", nf, "| Qnum =", qn.as_expr(), "| Qden =", qd.as_expr())

print("== counts z^2+1 ==")
print(counts(z**2 + 1, 0, 0))

print("== counts z^3-z ==")
nf, qn, qd = reduced_q(z**3 - z, 0, 0)
print("NF =", nf)
print(counts(z**3 - z, 0, 0))

print("== counts z^2(z^2+1) ==")
nf, qn, qd = reduced_q(z**2 * (z**2 + 1), 0, 0)
nf1, q1n, q1d = reduced_q1(z**2 * (z**2 + 1), 0, 0)
print("NF =", sp.factor(nf), "| Qnum =", sp.factor(qn.as_expr()))
print("NF1 =", sp.factor(nf1), "| Q1num =", sp.factor(q1n.as_expr()))
print(counts(z**2 * (z**2 + 1), 0, 0))

print("== counts (z^2+1) * exp(-z^2)  [a=1, b=0] ==")
P = tower(z**2 + 1, 1, 0)
print("P1 =", P[1], "| P2 =", P[2], "| P3 =", P[3])
nf, qn, qd = reduced_q(z**2 + 1, 1, 0)
nf1, q1n, q1d = reduced_q1(z**2 + 1, 1, 0)
print("NF =", sp.factor(nf), "| Qnum =", sp.factor(qn.as_expr()))
print("NF1 =", sp.factor(nf1), "| Q1num =", sp.factor(q1n.as_expr()))
print(counts(z**2 + 1, 1, 0))

print("== counts p=z, a=0, b=0 (Q1 identically zero) ==")
nf1, q1n, q1d = reduced_q1(z, 0, 0)
print("NF1 =", nf1)
print(counts(z, 0, 0))

print("== Edwards ==")
pe = sp.expand(z * (z**2 - sp.Rational(1, 4)) * (z**2 + 1) ** 25)
import time

t0 = time.time()
print(counts(pe, 0, 0))
print("time: %.2fs" % (time.time() - t0))
nf, qn, qd = reduced_q(pe, 0, 0)
print("Qnum degree =", qn.degree(), "| factored:", sp.factor(qn.as_expr()))

print("== counts p=1, a=1, b=0 ==")
nf1, q1n, q1d = reduced_q1(sp.Integer(1), 1, 0)
print("NF1 =", sp.factor(nf1))
print(counts(sp.Integer(1), 1, 0))
