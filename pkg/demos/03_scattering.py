"""
Scattering matrix and spectral shift
====================================

S(lam) is a unimodular function on the band.  It is computed here from an
explicit formula, from the ratio of the two multipliers sigma_-/sigma_+,
and from the T-matrix; the spectral shift function xi is its phase.
"""

import numpy as np

from gcheb import scattering as sc

lam = np.linspace(-0.95, 0.95, 9)
for a in (0.5, np.sqrt(2.0), 2.0):
    s = sc.smatrix(a, lam)
    d1 = np.abs(s - sc.smatrix_via_sigma(a, lam)).max()
    d2 = np.abs(s - sc.smatrix_via_t(a, lam)).max()
    bk = np.abs(s - np.exp(-2j * np.pi * sc.ssf_closed(a, lam))).max()
    print(f"a = {a:.4f}  sigma route {d1:.1e}  T route {d2:.1e}  exp(-2 pi i xi) {bk:.1e}")

# xi from continuous argument tracking, including outside the band
for a, x in ((2.0, 0.5), (2.0, 1.05), (0.8, 0.5657)):
    print(f"xi({a}, {x}): closed {sc.ssf_closed(a, x):.12f}  tracked {sc.ssf_arg_tracked(a, x):.12f}")

# the approach to the band edge is slow, like sqrt(1 - lam)
for eps in (1e-2, 1e-4, 1e-6, 1e-8):
    print(f"1 - lam = {eps:.0e}   |S - 1| = {abs(sc.smatrix(2.0, 1 - eps) - 1):.3e}")
