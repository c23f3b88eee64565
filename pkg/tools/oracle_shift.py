"""Independent oracle for the optimal-shift fixtures.

Computes sigma* = max over real Q-zeros zeta of phi'(zeta)/phi(zeta)
through sympy/numpy only (no imports from the package), printing exact
values where sympy can and numeric ones otherwise.  Run before freezing
any expected value in tests/test_theorems.py.
"""

from fractions import Fraction

import numpy as np
import sympy as sp

z, s = sp.symbols("z s")


def tower(p, a, b):
    D = b - 2 * a * z
    P = [p]
    for _ in range(3):
        P.append(sp.expand(sp.diff(P[-1], z) + D * P[-1]))
    return P


def reduced_q(p, a, b):
    P = tower(p, a, b)
    NF = sp.expand(P[0] * P[2] - P[1] ** 2)
    g = sp.gcd(NF, sp.expand(P[0] ** 2))
    return sp.quo(NF, g), P


def shift_report(name, p, a, b, exact=True):
    p = sp.expand(p)
    qnum, P = reduced_q(p, a, b)
    print(f"== {name}: p = {p}, a = {a}, b = {b}")
    print("   Qnum =", sp.factor(qnum))
    rr = sp.real_roots(sp.Poly(qnum, z))
    if not rr:
        print("   no real Q-zeros: trivial shift")
        return
    vals = []
    for r in rr:
        v = sp.simplify(P[1].subs(z, r.radical_expression if hasattr(r, "radical_expression") else r)
                        / P[0].subs(z, r.radical_expression if hasattr(r, "radical_expression") else r))
        vals.append((r, sp.nsimplify(v, rational=False)))
    num = [(float(r), float(v)) for r, v in vals]
    best = max(range(len(num)), key=lambda i: num[i][1])
    print("   values:", [(f"{fr:.12g}", f"{fv:.12g}") for fr, fv in num])
    print(f"   sigma* = {num[best][1]:.15g} at zeta = {num[best][0]:.15g}")
    if exact:
        try:
            vstar = sp.simplify(vals[best][1])
            print("   exact sigma* =", vstar)
            mp = sp.minimal_polynomial(vstar, s)
            print("   minpoly:", mp)
        except Exception as err:
            print("   (no exact form:", err, ")")


def resultant_minpoly(name, p, a, b, target):
    """Exact eliminant route: factor res_z(Qnum, s*P0 - P1) and pick the
    factor vanishing at the numeric sigma*."""
    qnum, P = reduced_q(sp.expand(p), a, b)
    R = sp.resultant(qnum, sp.expand(s * P[0] - P[1]), z)
    R = sp.Poly(R, s)
    print(f"== {name} eliminant degree {R.degree()}")
    for fac, _ in sp.factor_list(R.as_expr())[1]:
        fp = sp.Poly(fac, s)
        if abs(float(fp.as_expr().subs(s, target))) < 1e-3 * max(
                abs(float(c)) for c in fp.all_coeffs()):
            print("   factor with sigma*:", sp.expand(fac))


if __name__ == "__main__":
    shift_report("z^2+1", z**2 + 1, 0, 0)
    shift_report("z^2+2", z**2 + 2, 0, 0)
    shift_report("(z-1)^2+1", (z - 1) ** 2 + 1, 0, 0)
    shift_report("(z+1)^2+1", (z + 1) ** 2 + 1, 0, 0)
    shift_report("(z^2+1)e^{-z^2}", z**2 + 1, 1, 0)
    shift_report("(z^2+1)(z-1)", (z**2 + 1) * (z - 1), 0, 0, exact=True)

    edwards = z * (z**2 - sp.Rational(1, 4)) * (z**2 + 1) ** 25
    shift_report("edwards", edwards, 0, 0, exact=False)
    resultant_minpoly("edwards", edwards, 0, 0, target=13.345598160938366)
