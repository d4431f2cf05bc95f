"""Spectral data of H_a and its moment problem.

The spectral measure of e_0 is absolutely continuous on [-1, 1] with
density 2 a^2 sqrt(1 - lam^2) / (pi (a^4 - 4(a^2 - 1) lam^2)); for
a > sqrt(2) it also carries two atoms at +-a^2 / (2 sqrt(a^2 - 1)) with
common weight (a^2 - 2) / (2 (a^2 - 1)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import binom

from gcheb.branch import EnergyPoint, Sheet
from gcheb.errors import DomainError, RadiusError, SingularMomentError
from gcheb.genchebyshev import as_params
from gcheb.pointres import pert_det

SQRT2 = np.sqrt(2.0)


def _a(a) -> float:
    return as_params(a).a


def density(a, lam):
    """Absolutely continuous density of rho_a on (-1, 1)."""
    a = _a(a)
    lam = np.asarray(lam, dtype=float)
    if np.any(np.abs(lam) >= 1.0):
        raise DomainError("density is defined for |lambda| < 1")
    out = 2.0 / np.pi * a * a * np.sqrt(1.0 - lam**2) / (a**4 - 4.0 * (a * a - 1.0) * lam**2)
    return out[()] if out.ndim == 0 else out


def density_theta(a, theta):
    """rho_a density in the variable theta = arccos(lam), Jacobian included.

    Equal to density(a, cos theta) sin theta, written as
    (2/pi) a^2 sin^2 / ((a^2 - 2)^2 + 4 (a^2 - 1) sin^2) so that it stays
    accurate as theta approaches 0 or pi.
    """
    a = _a(a)
    s2 = np.sin(np.asarray(theta, dtype=float)) ** 2
    out = 2.0 / np.pi * a * a * s2 / ((a * a - 2.0) ** 2 + 4.0 * (a * a - 1.0) * s2)
    return out[()] if out.ndim == 0 else out


def eigenvalues(a) -> list:
    """Discrete eigenvalues of H_a: empty for a <= sqrt(2), else [lam_-, lam_+]."""
    a = _a(a)
    if a <= SQRT2:
        return []
    lam = a * a / (2.0 * np.sqrt(a * a - 1.0))
    return [-lam, lam]


def atom_weight(a) -> float:
    a = _a(a)
    if a <= SQRT2:
        raise DomainError("atoms exist only for a > sqrt(2)")
    return (a * a - 2.0) / (2.0 * (a * a - 1.0))


def atoms(a) -> list:
    """List of (location, weight) pairs, possibly empty."""
    ev = eigenvalues(a)
    if not ev:
        return []
    w = atom_weight(a)
    return [(x, w) for x in ev]


@dataclass(frozen=True)
class SpectralMeasureRecord:
    a: float
    density: Callable = field(repr=False)
    atoms: list

    def total_mass(self, tol: float = 1e-13) -> float:
        from gcheb.oracle import quad_theta

        ac = quad_theta(lambda t: density_theta(self.a, t), tol=tol)
        return float(ac) + sum(w for _, w in self.atoms)


def spectral_measure(a) -> SpectralMeasureRecord:
    a = _a(a)
    return SpectralMeasureRecord(a, lambda lam: density(a, lam), atoms(a))


def atom_term(a, n: int, m: int) -> float:
    """Atom contribution I_a(n, m) to the orthogonality relation."""
    from gcheb.genchebyshev import eval_recurrence

    total = 0.0
    for x, w in atoms(a):
        ch = eval_recurrence(a, x, max(n, m)).values
        total += w * ch[n] * ch[m]
    return total


def atom_pole_term(a, z, n: int, m: int):
    """I_a(z; n, m): atom contributions to the weighted Cauchy integral."""
    from gcheb.genchebyshev import eval_recurrence

    total = 0j
    for x, w in atoms(a):
        ch = eval_recurrence(a, x, max(n, m)).values
        total += w * ch[n] * ch[m] / (x - z)
    return total


# --- resonances -----------------------------------------------------------------


@dataclass(frozen=True)
class ResonanceSet:
    points: list

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def resonances(a, newton_steps: int = 3) -> ResonanceSet:
    """Zeros of D_a on the second sheet.

    D_a is quadratic in omega, so the candidates omega^2 = 1/(a^2 - 1) are
    exact; a few Newton steps in omega polish them.  Candidates with
    |omega| < 1 are physical-sheet zeros (eigenvalues) and are dropped.
    """
    a = _a(a)
    c = 1.0 - a * a
    if c == 0.0:
        return ResonanceSet([])
    root = np.sqrt(complex(-1.0 / c))
    points = []
    for w in (root, -root):
        for _ in range(newton_steps):
            f = 1.0 + c * w * w
            if f == 0:
                break
            w = w - f / (2.0 * c * w)
        if abs(w) < 1.0 - 1e-12:
            continue
        z = 0.5 * (w + 1.0 / w)
        if abs(z.imag) < 1e-15 * max(1.0, abs(z.real)):
            z = complex(z.real, 0.0)
        if abs(z.real) < 1e-15 * max(1.0, abs(z.imag)):
            z = complex(0.0, z.imag)
        points.append(z)
    points.sort(key=lambda p: (p.real, p.imag))
    return ResonanceSet(points)


def second_sheet_det(a, z):
    return pert_det(a, EnergyPoint.at(z, Sheet.SECOND))


# --- moments and generating functions ---------------------------------------------


def convergence_radius(a) -> float:
    a = _a(a)
    if a <= SQRT2:
        return 1.0
    return 2.0 * np.sqrt(a * a - 1.0) / (a * a)


def _check_radius(a, zeta):
    if np.any(np.abs(zeta) >= convergence_radius(a)):
        raise RadiusError("generating function argument outside the disc of convergence")


def sqrt1m_series(n_max: int) -> np.ndarray:
    """Taylor coefficients of sqrt(1 - zeta^2) up to zeta^n_max."""
    out = np.zeros(n_max + 1)
    j = np.arange(n_max // 2 + 1)
    out[0 : 2 * len(j) : 2] = binom(0.5, j) * (-1.0) ** j
    return out


def moment_coeffs(a, n_max: int) -> np.ndarray:
    """kappa_0..kappa_{n_max} from 2 / (a^2 sqrt(1 - zeta^2) + 2 - a^2).

    With q(zeta) the denominator, G q = 2 gives the convolution recurrence
    G_n = -(1/2) sum_{k>=1} q_k G_{n-k}.
    """
    a = _a(a)
    q = a * a * sqrt1m_series(n_max)
    q[0] += 2.0 - a * a
    G = np.zeros(n_max + 1)
    G[0] = 2.0 / q[0]
    for n in range(2, n_max + 1, 2):
        G[n] = -np.dot(q[2 : n + 1 : 2], G[n - 2 :: -2][: n // 2]) / q[0]
    return G


def moment(a, n: int) -> float:
    if n < 0:
        raise DomainError("moment order must be non-negative")
    if n % 2:
        return 0.0
    return float(moment_coeffs(a, n)[n])


def moment_gf(a, zeta):
    a = _a(a)
    _check_radius(a, zeta)
    out = 2.0 / (a * a * np.sqrt(1.0 - np.asarray(zeta, dtype=complex) ** 2) + 2.0 - a * a)
    return out[()] if out.ndim == 0 else out


def trace_gf(a, zeta):
    """Sum_n zeta^n Tr(H_a^n - H_1^n)."""
    a = _a(a)
    _check_radius(a, zeta)
    zeta = np.asarray(zeta, dtype=complex)
    s = np.sqrt(1.0 - zeta**2)
    # 1 - s written as zeta^2 / (1 + s) to avoid cancellation near zeta = 0
    p = zeta**2 / (1.0 + s)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = 2.0 * (a * a - 1.0) / s * p**2 / (zeta**2 + (1.0 - a * a) * p**2)
    out = np.where(zeta == 0, 0.0, out)
    return out[()] if out.ndim == 0 else out


def trace_coeffs(a, n_max: int) -> np.ndarray:
    """Tr(H_a^n - H_1^n) for n = 0..n_max as Taylor coefficients of trace_gf."""
    a = _a(a)
    P = np.polynomial.polynomial
    L = n_max + 4
    s = sqrt1m_series(L)
    p = -s
    p[0] += 1.0
    p2 = P.polymul(p, p)[: L + 1]
    num = 2.0 * (a * a - 1.0) * p2
    den = P.polymul(s, (1.0 - a * a) * p2 + np.eye(1, L + 1, 2)[0])[: L + 1]
    # den = zeta^2 (1 + ...); divide both by zeta^2 then invert the series
    num, den = num[2:], den[2:]
    out = np.zeros(len(num))
    for n in range(len(num)):
        out[n] = (num[n] - np.dot(den[1 : n + 1], out[n - 1 :: -1][:n])) / den[0]
    return out[: n_max + 1]


def trace_difference(a, n: int) -> float:
    if n < 0:
        raise DomainError("power must be non-negative")
    return float(trace_coeffs(a, n)[n])


# --- Hankel determinants and parity -------------------------------------------------


@dataclass(frozen=True)
class HankelData:
    """h[k] is the k x k Hankel determinant (h[0] = 1).

    ``offdiag[n]`` is the recovered a_n = sqrt(h_n h_{n+2}) / h_{n+1}.
    """

    h: np.ndarray
    offdiag: np.ndarray


def hankel_dets(moments, n_max: int) -> HankelData:
    moments = np.asarray(moments, dtype=float)
    if len(moments) < 2 * n_max - 1:
        raise DomainError("need at least 2 n_max - 1 moments")
    h = np.ones(n_max + 1)
    for k in range(1, n_max + 1):
        idx = np.arange(k)
        h[k] = np.linalg.det(moments[idx[:, None] + idx[None, :]])
        if not h[k] > 0:
            raise SingularMomentError(f"Hankel determinant h_{k} = {h[k]!r} is not positive")
    off = np.sqrt(h[:-2] * h[2:]) / h[1:-1]
    return HankelData(h, off)


def is_even_measure(moments, tol: float = 1e-12) -> bool:
    """True when every odd moment vanishes within ``tol``."""
    moments = np.asarray(moments, dtype=float)
    return bool(np.all(np.abs(moments[1::2]) <= tol))


def predicted_even_moment(a, m: int) -> float:
    """Leading large-m behaviour of kappa_{2m}(a)."""
    a = _a(a)
    if np.isclose(a, SQRT2, rtol=0, atol=1e-14):
        return 1.0 / (np.sqrt(np.pi) * m**0.5)
    if a < SQRT2:
        return (a / (a * a - 2.0)) ** 2 / (np.sqrt(np.pi) * m**1.5)
    return (a * a - 2.0) / (a * a - 1.0) * (a**4 / (4.0 * (a * a - 1.0))) ** m


def moment_asymptotics_check(a, m: int) -> float:
    """Ratio kappa_{2m}(a) / predicted leading term; tends to 1."""
    if m < 1:
        raise DomainError("m must be positive")
    return moment(a, 2 * m) / predicted_even_moment(a, m)
