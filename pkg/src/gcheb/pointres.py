"""Closed-form resolvent algebra for the free operator H_1 and for H_a.

H_a differs from H_1 only in the (0, 1) and (1, 0) entries, which equal a/2
instead of 1/2.  Everything here is expressed through omega(z) and
sqrt(z^2 - 1) on the physical sheet; ``z`` may be a number, an array or an
:class:`~gcheb.branch.EnergyPoint` (use ``EnergyPoint.boundary`` for the
boundary values lam +- i0).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gcheb.branch import EnergyPoint, as_point
from gcheb.errors import DomainError, SingularEnergyError
from gcheb.genchebyshev import as_params

POLE_TOL = 1e-13


def _check_a(a) -> float:
    return as_params(a).a


def _regular_point(z) -> EnergyPoint:
    pt = as_point(z)
    if np.any(np.asarray(pt.sqrt_val) == 0):
        raise SingularEnergyError("resolvent is singular at z = +-1")
    return pt


def _check_det(det):
    if np.any(np.abs(det) < POLE_TOL):
        raise SingularEnergyError("perturbation determinant vanishes (eigenvalue of H_a)")


def free_resolvent_entry(n: int, m: int, z):
    """r_{n,m}(z) = (omega^(n+m+2) - omega^|n-m|) / sqrt(z^2 - 1)."""
    if n < 0 or m < 0:
        raise DomainError("indices must be non-negative")
    pt = _regular_point(z)
    w = pt.omega_val
    return (w ** (n + m + 2) - w ** abs(n - m)) / pt.sqrt_val


def whole_line_resolvent_entry(n: int, m: int, z):
    """Resolvent of the free operator on the full lattice Z."""
    pt = _regular_point(z)
    return -pt.omega_val ** abs(n - m) / pt.sqrt_val


def pert_det(a, z):
    """D_a(z) = 1 + (1 - a^2) omega(z)^2."""
    a = _check_a(a)
    w = as_point(z).omega_val
    return 1.0 + (1.0 - a * a) * w * w


def pert_det_derivative(a, z, method: str = "closed"):
    """dD_a/dz.

    ``method="closed"`` uses D' = 2(1 - a^2) omega omega' with
    omega' = -omega / sqrt(z^2 - 1).  ``method="complex_step"`` is only
    available at real z outside [-1, 1], where D is real analytic.
    """
    a = _check_a(a)
    if method == "closed":
        pt = _regular_point(z)
        w = pt.omega_val
        return 2.0 * (1.0 - a * a) * w * (-w / pt.sqrt_val)
    if method == "complex_step":
        x = as_point(z).z
        if np.any(np.imag(x) != 0) or np.any(np.abs(np.real(x)) <= 1.0):
            raise DomainError("complex-step derivative needs real z with |z| > 1")
        x = np.real(x)
        h = 1e-20
        return np.imag(pert_det(a, EnergyPoint.at(x + 1j * h))) / h
    raise DomainError(f"unknown method {method!r}")


@dataclass(frozen=True)
class TMatrixEntries:
    """Entries t_ij of 2 D_a(z) T_a(z) on span{e_0, e_1}.

    The operator itself is T_a(z)_{ij} = t_ij / (2 det).
    """

    t00: complex
    t01: complex
    t10: complex
    t11: complex
    det: complex
    z: complex

    def operator_block(self) -> np.ndarray:
        return np.array([[self.t00, self.t01], [self.t10, self.t11]]) / (2.0 * self.det)


def tmatrix(a, z) -> TMatrixEntries:
    a = _check_a(a)
    pt = as_point(z)
    w = pt.omega_val
    det = pert_det(a, pt)
    _check_det(det)
    c = (a - 1.0) ** 2
    t00 = 2.0 * c * pt.z * w * w
    t11 = c * w
    t01 = (a - 1.0) - c * w * w
    return TMatrixEntries(t00, t01, t01, t11, det, pt.z)


def weyl_m(a, z):
    """(R_a(z) e_0, e_0) = -2 omega / D_a(z)."""
    a = _check_a(a)
    pt = _regular_point(z)
    det = pert_det(a, pt)
    _check_det(det)
    return -2.0 * pt.omega_val / det


def weyl_m_direct(a, z):
    """Same quantity written as 2 / ((a^2 - 2) z - a^2 sqrt(z^2 - 1))."""
    a = _check_a(a)
    pt = _regular_point(z)
    den = (a * a - 2.0) * pt.z - a * a * pt.sqrt_val
    _check_det(den)
    return 2.0 / den


def resolvent_entry(a, n: int, m: int, z):
    """(R_a(z) e_n, e_m) for all n, m >= 0."""
    a = _check_a(a)
    if n < 0 or m < 0:
        raise DomainError("indices must be non-negative")
    if n < m:
        n, m = m, n
    if n == 0:
        return weyl_m(a, z)
    pt = _regular_point(z)
    w = pt.omega_val
    det = pert_det(a, pt)
    _check_det(det)
    r = free_resolvent_entry(n, m, pt)
    if m >= 1:
        return r - 4.0 * (a * a - 1.0) * pt.z * w ** (n + m + 2) / det
    return r - 2.0 * (a - 1.0) * w ** (n + 2) * (2.0 * pt.z + a * w) / det


def resolvent_via_tmatrix(a, n: int, m: int, z):
    """R_1 - R_1 T_a R_1 assembled from the 2x2 T-matrix block."""
    pt = _regular_point(z)
    block = tmatrix(a, pt).operator_block()
    left = np.array([free_resolvent_entry(n, i, pt) for i in (0, 1)])
    right = np.array([free_resolvent_entry(j, m, pt) for j in (0, 1)])
    return free_resolvent_entry(n, m, pt) - left @ block @ right


def trace_resolvent_difference(a, z):
    """Tr(R_a(z) - R_1(z)) = 2(1 - a^2) omega^2 / (D_a sqrt(z^2 - 1))."""
    a = _check_a(a)
    pt = _regular_point(z)
    det = pert_det(a, pt)
    _check_det(det)
    return 2.0 * (1.0 - a * a) * pt.omega_val**2 / (det * pt.sqrt_val)


def truncated_trace(a, z, tol: float = 1e-14, n_cap: int = 100_000):
    """Sum_n [R_a(z)_{nn} - r_{nn}(z)] until a term drops below ``tol``."""
    pt = _regular_point(z)
    total = 0j
    for n in range(n_cap):
        term = resolvent_entry(a, n, n, pt) - free_resolvent_entry(n, n, pt)
        total += term
        if n > 1 and abs(term) < tol:
            break
    return total
