"""Accuracy profile of the built-in Lambert W evaluator.

The interior optimum of the cost model is expressed through the principal
branch W0 of the Lambert W function, so the package carries its own
evaluator.  This script shows the forward residual w*e^w - z across the real
domain, the agreement with the Maclaurin series inside its radius of
convergence, and the behavior at the branch point -1/e where the function
turns vertical.

Run:  python demos/lambert_w_accuracy.py
"""

import math

import numpy as np

from econlife import w0, w0_inverse, w0_series
from econlife.lambert_w import BRANCH_POINT

print("anchors: W0(0) =", w0(0.0), "  W0(e) =", w0(math.e), "  W0(-1/e) =", w0(BRANCH_POINT))

print("\nforward residual |w e^w - z| / max(1, |z|):")
offsets = np.logspace(-9, math.log10(1e6 - BRANCH_POINT), 13)
for z in BRANCH_POINT + offsets:
    w = w0(float(z))
    residual = abs(w * math.exp(w) - z) / max(1.0, abs(z))
    print(f"  z = {z:>16.8g}   w = {w:>18.15g}   residual = {residual:.2e}")

print("\nMaclaurin series partial sums at z = 0.25 (radius of convergence 1/e):")
exact = w0(0.25)
for terms in (1, 2, 5, 10, 20, 40, 80):
    print(f"  {terms:3d} terms: error {abs(w0_series(0.25, terms) - exact):.2e}")

print("\nround trip through the inverse map w -> w e^w:")
for w in (-0.9, -0.5, 0.0, 1.0, 5.0):
    back = w0(w0_inverse(w))
    print(f"  w = {w:+.1f}: |w0(w e^w) - w| = {abs(back - w):.2e}")

print("\nnear the branch point the root is ill-conditioned in z:")
for offset in (1e-12, 1e-9, 1e-6):
    z = BRANCH_POINT + offset
    # the exact branch behaves like -1 + sqrt(2 e (z + 1/e))
    expected = -1.0 + math.sqrt(2.0 * math.e * offset)
    print(f"  z = -1/e + {offset:.0e}: w = {w0(z):+.12f} (sqrt law {expected:+.12f})")
