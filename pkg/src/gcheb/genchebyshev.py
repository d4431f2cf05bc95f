"""Generalized Chebyshev polynomials Ch_n(z; a, b).

They are the orthonormal polynomials of the Jacobi matrix whose first row
is (b, a, 0, ...)/2 and whose remaining rows are those of the free discrete
Schrodinger operator.  For a = 1, b = 0 they are the Chebyshev polynomials
U_n of the second kind; for a = sqrt(2), b = 0 they are sqrt(2) T_n (n >= 1).

The three-term recurrence is the canonical evaluator.  The closed form in
terms of omega(z) and the trigonometric form on (-1, 1) are independent
routes used for validation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gcheb.branch import EnergyPoint, as_point
from gcheb.errors import DomainError, NearEdgeError

EDGE_WINDOW = 1e-8


@dataclass(frozen=True)
class CouplingParams:
    """Perturbation parameters: off-diagonal ``a`` > 0 and diagonal ``b``."""

    a: float
    b: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.a) or self.a <= 0:
            raise DomainError(f"coupling a must be positive, got {self.a!r}")
        if not np.isfinite(self.b):
            raise DomainError(f"coupling b must be finite, got {self.b!r}")


def as_params(p) -> CouplingParams:
    if isinstance(p, CouplingParams):
        return p
    return CouplingParams(float(p))


@dataclass(frozen=True)
class PolySeq:
    """Values Ch_0..Ch_N at a fixed z (``values[n]`` is Ch_n)."""

    params: CouplingParams
    z: complex
    values: np.ndarray

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def _recurrence(a: float, b: float, z, n_max: int) -> np.ndarray:
    z = np.asarray(z)
    dtype = np.result_type(z.dtype, float)
    out = np.empty((n_max + 1,) + z.shape, dtype=dtype)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = (2.0 * z - b) / a
    if n_max >= 2:
        out[2] = 2.0 * z * out[1] - a
    for k in range(2, n_max):
        out[k + 1] = 2.0 * z * out[k] - out[k - 1]
    return out


def eval_recurrence(params, z, n_max: int) -> PolySeq:
    """Evaluate Ch_0..Ch_{n_max} at ``z`` by the three-term recurrence.

    ``z`` may be a scalar or an array; ``values`` then has shape
    ``(n_max + 1,) + z.shape``.
    """
    params = as_params(params)
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    if isinstance(z, EnergyPoint):
        z = z.z
    return PolySeq(params, z, _recurrence(params.a, params.b, z, n_max))


def gamma_pm(params, z) -> tuple:
    """Coefficients (gamma_+, gamma_-) of omega^n and omega^-n."""
    params = as_params(params)
    pt = as_point(z)
    a, b = params.a, params.b
    corr = ((a * a - 2.0) * pt.z + b) / (2.0 * a * pt.sqrt_val)
    return a / 2.0 + corr, a / 2.0 - corr


def eval_closed_form(params, z, n: int):
    """Closed form gamma_+ omega^n + gamma_- omega^-n, valid for n >= 1.

    Refuses points within 1e-8 of the band edges, where the two terms
    cancel; use :func:`eval_edge` or the recurrence there.
    """
    params = as_params(params)
    if n < 1:
        raise DomainError("closed form holds for n >= 1")
    pt = as_point(z)
    zz = np.asarray(pt.z)
    if np.any(np.abs(zz - 1.0) < EDGE_WINDOW) or np.any(np.abs(zz + 1.0) < EDGE_WINDOW):
        raise NearEdgeError("closed form refused near z = +-1")
    gp, gm = gamma_pm(params, pt)
    w = pt.omega_val
    return gp * w**n + gm * w ** (-n)


def eval_edge(params, sign: int, n: int) -> float:
    """Ch_n(+-1; a) = (+-1)^n (2n/a - (n - 1) a) for b = 0."""
    params = as_params(params)
    if params.b != 0.0:
        raise DomainError("edge formula is stated for b = 0 only")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if n < 1:
        raise DomainError("edge formula holds for n >= 1")
    a = params.a
    return float(sign**n * (2.0 * n / a - (n - 1) * a))


def trig_amplitude_phase(a: float, lam):
    """Return (theta, kappa, delta) with Ch_n = kappa cos(n theta - delta)."""
    lam = np.asarray(lam, dtype=float)
    if np.any(np.abs(lam) >= 1.0):
        raise DomainError("trigonometric form requires |lambda| < 1")
    theta = np.arccos(lam)
    sin_t = np.sin(theta)
    kappa = np.sqrt(a**4 + 4.0 * (1.0 - a * a) * lam**2) / (a * sin_t)
    delta = np.arctan((2.0 - a * a) / (a * a) * lam / sin_t)
    return theta, kappa, delta


def eval_trig(a: float, lam, n: int):
    """kappa(theta; a) cos(n theta - delta(theta; a)) with lam = cos(theta)."""
    a = as_params(a).a
    if n < 1:
        raise DomainError("trigonometric form holds for n >= 1")
    theta, kappa, delta = trig_amplitude_phase(a, lam)
    out = kappa * np.cos(n * theta - delta)
    return out[()] if out.ndim == 0 else out


def psi_weight(a: float, lam):
    """sqrt(2/pi) a (1-lam^2)^(1/4) / sqrt(a^4 - 4(a^2-1) lam^2)."""
    lam = np.asarray(lam, dtype=float)
    if np.any(np.abs(lam) >= 1.0):
        raise DomainError("psi requires |lambda| < 1")
    return np.sqrt(2.0 / np.pi) * a * (1.0 - lam**2) ** 0.25 / np.sqrt(a**4 - 4.0 * (a * a - 1.0) * lam**2)


def psi(a: float, lam, n: int):
    """Normalized continuum eigenfunction psi_n(lam; a) on (-1, 1)."""
    a = as_params(a).a
    if n < 0:
        raise DomainError("n must be non-negative")
    w = psi_weight(a, lam)
    out = w * _recurrence(a, 0.0, np.asarray(lam, dtype=float), n)[n]
    return out[()] if out.ndim == 0 else out


def psi_table(a: float, lam, n_max: int) -> np.ndarray:
    """psi_0..psi_{n_max} on a grid; shape ``(n_max + 1, len(lam))``."""
    a = as_params(a).a
    lam = np.asarray(lam, dtype=float)
    return psi_weight(a, lam) * _recurrence(a, 0.0, lam, n_max)
