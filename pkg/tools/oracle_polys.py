"""Independent sympy oracle for the frozen expected values in test_polys.py.

Run:  python tools/oracle_polys.py
Every printed value was transcribed into the tests only after this script
produced it; nothing in the test suite is hand-invented.
"""

import sympy as sp

z, s = sp.symbols("z s")


def dense_low_to_high(expr):
    p = sp.Poly(expr, z)
    return [sp.nsimplify(c) for c in reversed(p.all_coeffs())]


def main():
    # deep product: z (z^2 - 1/4) (z^2 + 1)^25
    p = sp.expand(z * (z**2 - sp.Rational(1, 4)) * (z**2 + 1) ** 25)
    P = sp.Poly(p, z)
    print("deep degree:", P.degree())
    print("deep lc:", P.LC())
    dP = sp.Poly(sp.diff(p, z), z)
    print("deep derivative degree:", dP.degree())
    print("deep derivative lc:", dP.LC())
    print("deep coeff of z^51 in derivative:", dP.coeff_monomial(z**51))
    print("deep coeff of z^49 in derivative:", dP.coeff_monomial(z**49))
    print("deep p(1/2):", p.subs(z, sp.Rational(1, 2)))
    print("deep p(1/3):", sp.nsimplify(p.subs(z, sp.Rational(1, 3))))

    # gcd / square-free battery: p = z^2 (z^2+1)
    q = sp.expand(z**2 * (z**2 + 1))
    qp = sp.diff(q, z)
    print("gcd(q, q'):", sp.gcd(sp.Poly(q, z), sp.Poly(qp, z)))
    nf = sp.expand(q * sp.diff(q, z, 2) - qp**2)
    print("NF for q:", sp.factor(nf))
    print("gcd(NF, q^2):", sp.gcd(sp.Poly(nf, z), sp.Poly(sp.expand(q**2), z)))
    print("NF / z^2:", sp.expand(sp.cancel(nf / z**2)))

    # Yun decomposition check: f = (z-1)^3 (z+2)^2 (z^2+1)
    f = sp.expand((z - 1) ** 3 * (z + 2) ** 2 * (z**2 + 1))
    print("sqf decomposition:", sp.sqf_list(f))
    print("sqf part:", sp.expand(sp.sqf_part(f)))

    # resultants
    f1 = sp.Poly(z**3 - 2 * z + 5, z)
    g1 = sp.Poly(2 * z**2 + z - 3, z)
    print("res(z^3-2z+5, 2z^2+z-3):", sp.resultant(f1, g1))
    f2 = sp.Poly(z**2 - 2, z)
    g2 = sp.Poly(z**2 - 3, z)
    print("res(z^2-2, z^2-3):", sp.resultant(f2, g2))
    # shared root
    print("res(z^2-1, z^3-1):", sp.resultant(sp.Poly(z**2 - 1, z), sp.Poly(z**3 - 1, z)))

    # parameter elimination: f = 2 - 2 z^2, g = s (z^2+1) - 2 z
    elim = sp.resultant(sp.Poly(2 - 2 * z**2, z), sp.Poly(s * (z**2 + 1) - 2 * z, z), z)
    print("eliminant:", sp.factor(elim))
    # and a denser one: f = z^3 - z, g = s (z^2 + z + 1) - (3 z^2 - 1)
    elim2 = sp.resultant(
        sp.Poly(z**3 - z, z), sp.Poly(s * (z**2 + z + 1) - (3 * z**2 - 1), z), z
    )
    print("eliminant2:", sp.expand(elim2), "=", sp.factor(elim2))

    # interval Horner sanity target: f = z^3 - 2z + 1 on [0, 1]
    h = z**3 - 2 * z + 1
    vals = [h.subs(z, sp.Rational(k, 100)) for k in range(101)]
    print("true range on [0,1] within:", min(vals), max(vals))


if __name__ == "__main__":
    main()
