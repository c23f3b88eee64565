"""Independent floating-point oracles used to cross-check the exact engine.

These never feed values back into the library; they only adjudicate test
expectations.  Instances whose roots the oracle cannot separate reliably
are reported as None and skipped by the callers.
"""

from fractions import Fraction

import numpy as np

SEPARATION = 1e-6
REAL_EPS = 1e-9


def real_root_count(coeffs_low_to_high) -> int | None:
    """Real-root count (with multiplicity) via the companion matrix, or
    None when roots are too close or too near the real axis to trust."""
    cs = [float(c) for c in coeffs_low_to_high]
    while cs and cs[-1] == 0.0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial")
    if len(cs) == 1:
        return 0
    roots = np.roots(list(reversed(cs)))
    n = len(roots)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) < SEPARATION:
                return None
    count = 0
    for r in roots:
        im = abs(r.imag)
        if im < REAL_EPS:
            count += 1
        elif im < SEPARATION:
            return None
    return count


def real_roots_sorted(coeffs_low_to_high) -> list[float] | None:
    """Well-separated real roots in increasing order, or None."""
    cs = [float(c) for c in coeffs_low_to_high]
    while cs and cs[-1] == 0.0:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = np.roots(list(reversed(cs)))
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < SEPARATION:
                return None
    out = []
    for r in roots:
        im = abs(r.imag)
        if im < REAL_EPS:
            out.append(float(r.real))
        elif im < SEPARATION:
            return None
    return sorted(out)


def as_floats(poly) -> list[float]:
    return [float(c) for c in poly.coeffs]


def rational_grid(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    step = (hi - lo) / n
    return [lo + k * step for k in range(n + 1)]
