"""
Jost determinant and inverse recovery
=====================================

For a perturbation supported on N sites the perturbation determinant is a
polynomial of degree 2N in omega.  From that polynomial the Jacobi
coefficients can be read back.
"""

from gcheb import jost

c = jost.JacobiCoeffs((0.7, 0.4), (0.1, -0.3))
poly = jost.det_polynomial(c)
print("coefficients:", poly.coeffs.real)

back = jost.recover_rank2(poly.coeffs.real)
print("a:", back.a_seq, " b:", back.b_seq)

# the point interaction H_a is the N = 1 case
print("H_2:", jost.det_polynomial(jost.JacobiCoeffs((1.0,), (0.0,))).coeffs.real)
