"""
Moments, traces and Hankel determinants
=======================================

The moments of the spectral measure and the trace differences
Tr(H_a^n - H_1^n) come from explicit generating functions.  Hankel
determinants of the moments give the Jacobi coefficients back.
"""

import numpy as np

from gcheb import oracle, spectral

a = 1.6
k = spectral.moment_coeffs(a, 12)
dense = [oracle.dense_moment(oracle.truncate(a, 64), n) for n in range(13)]
print("moments:", np.round(k, 10))
print("max diff to finite section:", np.abs(k - dense).max())

t = spectral.trace_coeffs(a, 8)
print("trace differences:", np.round(t, 10))
print("dense:            ", np.round([oracle.dense_power_trace_difference(a, n) for n in range(9)], 10))

hd = spectral.hankel_dets(spectral.moment_coeffs(a, 20), 8)
print("recovered a_n:", hd.offdiag)

# growth of the even moments once eigenvalues exist
for m in (10, 50, 200):
    print(f"m = {m}: kappa_2m / prediction = {spectral.moment_asymptotics_check(2.0, m):.8f}")
