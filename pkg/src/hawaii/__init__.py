"""Exact-arithmetic analysis of critical points of logarithmic derivatives
for real entire functions of the form p(z) * exp(-a z^2 + b z)."""

__version__ = "0.1.0"
