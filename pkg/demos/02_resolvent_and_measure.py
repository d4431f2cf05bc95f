"""
Resolvent and spectral measure
==============================

The (0, 0) resolvent entry is the Weyl function; its boundary values give
the density of the spectral measure, and for a > sqrt 2 two eigenvalues
split off the band.
"""

import numpy as np

from gcheb import oracle, pointres, spectral

a = 2.0
z = 0.4 + 0.3j

# closed form against a 4096 x 4096 finite section
T = oracle.truncate(a, 4096)
print("m(z) closed:", pointres.weyl_m(a, z))
print("m(z) dense: ", oracle.dense_resolvent_entry(T, 0, 0, z))

# eigenvalues of the finite section: two outliers beyond +-1
vals, first = oracle.dense_spectrum(T)
out = np.abs(vals) > 1
print("outlying eigenvalues:", vals[out], " closed:", spectral.eigenvalues(a))
print("their weights:", first[out] ** 2, " closed:", spectral.atom_weight(a))

# total mass: continuous part plus atoms
rec = spectral.spectral_measure(a)
print("total mass:", rec.total_mass())

# imaginary part of m just above the band approximates pi times the density
lam = np.linspace(-0.8, 0.8, 5)
print(np.c_[lam, spectral.density(a, lam), pointres.weyl_m(a, lam + 1e-9j).imag / np.pi])
