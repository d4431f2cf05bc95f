"""
Generalized Chebyshev polynomials
=================================

The polynomials Ch_n attached to H_a obey the free recurrence from n = 1 on;
only the first step feels the coupling a.  Away from [-1, 1] they have a
closed form in omega(z) = z - sqrt(z^2 - 1).
"""

import numpy as np

from gcheb import genchebyshev as gc

# values at a complex point, two ways (the closed form starts at n = 1)
z = 0.3 + 0.8j
for a in (0.5, 1.0, np.sqrt(2.0), 2.0):
    rec = gc.eval_recurrence(a, z, 30).values[1:]
    closed = np.array([gc.eval_closed_form(a, z, n) for n in range(1, 31)])
    # the values grow like |omega|^-n, so compare relatively
    rel = np.abs(rec - closed) / np.abs(rec)
    print(f"a = {a:.4f}   |Ch_30| = {abs(rec[-1]):.2e}   max relative difference = {rel.max():.2e}")

# a = 1 gives Chebyshev U, a = sqrt 2 gives sqrt(2) T_n for n >= 1
x = np.linspace(-0.9, 0.9, 7)
u = np.array([gc.eval_recurrence(1.0, xx, 5).values[5] for xx in x])
theta = np.arccos(x)
print("Ch_5 at a = 1 equals U_5:", np.allclose(u, np.sin(6 * theta) / np.sin(theta)))

# at the band edge the value grows linearly in n unless a = sqrt 2
for a in (0.5, np.sqrt(2.0), 2.0):
    print(f"a = {a:.4f}   Ch_n(1), n = 1..5:", np.round(gc.eval_recurrence(a, 1.0, 5).values[1:], 4))
