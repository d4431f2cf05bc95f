"""Stationary scattering for the pair H_1, H_a.

The scattering matrix is computed three ways: from the boundary values of
the perturbation determinant, from the unitary multipliers sigma_+-, and
from the on-shell kernel of the T-matrix.  The spectral shift function has
a closed piecewise form and an independent argument-tracking evaluation.
The eigenfunction transform F_a and a finite-time check of the wave
operators close the loop with the time-dependent picture.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from gcheb import oracle
from gcheb.branch import EnergyPoint, Side
from gcheb.errors import DomainError, StepFailureError
from gcheb.genchebyshev import as_params, psi, psi_table, psi_weight
from gcheb.pointres import pert_det, tmatrix
from gcheb.spectral import SQRT2, eigenvalues


class ReflectionWarning(UserWarning):
    """The propagated wave may have reached the truncation boundary."""


def _band(lam):
    lam = np.asarray(lam, dtype=float)
    if np.any(np.abs(lam) >= 1.0):
        raise DomainError("scattering quantities are defined for |lambda| < 1")
    return lam


def _out(x):
    return x[()] if np.ndim(x) == 0 else x


def smatrix(a, lam):
    """S_a(lam) = D_a(lam - i0) / D_a(lam + i0), written out in lam."""
    a = as_params(a).a
    lam = _band(lam)
    c = 1.0 - a * a
    root = np.sqrt(1.0 - lam**2)
    num = 1.0 + c * (2.0 * lam**2 - 1.0 + 2j * lam * root)
    den = 1.0 + c * (2.0 * lam**2 - 1.0 - 2j * lam * root)
    return _out(num / den)


def sigma_pm(a, lam):
    """Unitary multipliers (sigma_+, sigma_-) with W_+- = F_a^* sigma_+- F_1.

    sigma_+- = (a^2 + 2(1 - a^2) lam^2 +- 2i (a^2 - 1) lam sqrt(1 - lam^2))
    / sqrt(a^4 - 4(a^2 - 1) lam^2).  The sign in front of the imaginary part
    is the one for which e^{iH_a t} e^{-iH_1 t} -> F_a^* sigma_+- F_1 as
    t -> +-infinity and sigma_- / sigma_+ = S_a.
    """
    a = as_params(a).a
    lam = _band(lam)
    re = a * a + 2.0 * (1.0 - a * a) * lam**2
    im = 2.0 * (a * a - 1.0) * lam * np.sqrt(1.0 - lam**2)
    norm = np.sqrt(a**4 - 4.0 * (a * a - 1.0) * lam**2)
    return _out((re + 1j * im) / norm), _out((re - 1j * im) / norm)


def smatrix_via_sigma(a, lam):
    sp, sm = sigma_pm(a, lam)
    return sm / sp


def t_kernel(a, lam, mu, z):
    """Integral kernel of F_1 T_a(z) F_1^* at (lam, mu)."""
    block = tmatrix(a, z).operator_block()
    left = np.array([psi(1.0, lam, 0), psi(1.0, lam, 1)])
    right = np.array([psi(1.0, mu, 0), psi(1.0, mu, 1)])
    return left @ block @ right


def smatrix_via_t(a, lam):
    """S_a(lam) = 1 - 2 pi i t_a(lam, lam; lam + i0)."""
    lam = _band(lam)
    if lam.ndim:
        return np.array([smatrix_via_t(a, x) for x in lam])
    lam = float(lam)
    return 1.0 - 2j * np.pi * t_kernel(a, lam, lam, EnergyPoint.boundary(lam, Side.PLUS))


# --- spectral shift function -------------------------------------------------------


def ssf_closed(a, lam):
    """Spectral shift function xi_a(lam) for the pair H_1, H_a.

    At the jump points +-1 and +-lam_+(a) the one-sided limit taken from
    the side of the origin is returned.
    """
    a = as_params(a).a
    lam = np.asarray(lam, dtype=float)
    x = np.abs(lam)
    sign = np.sign(lam)
    val = np.zeros_like(x)
    inside = x < 1.0
    xi_ = x[inside]
    root = np.sqrt(1.0 - xi_**2)
    num = 2.0 * (a * a - 1.0) * xi_ * root
    den = 1.0 + (1.0 - a * a) * (2.0 * xi_**2 - 1.0)
    if a < SQRT2:
        val[inside] = np.arctan(num / den) / np.pi
    elif a > SQRT2:
        # arccot(den / num) with range (0, pi); num >= 0 here
        val[inside] = np.arctan2(num, den) / np.pi
    else:
        val[inside] = np.arctan(xi_ / root) / np.pi
    if a == SQRT2:
        val[x == 1.0] = 0.5
    elif a > SQRT2:
        lam_plus = eigenvalues(a)[1]
        val[(x >= 1.0) & (x <= lam_plus)] = 1.0
    return _out(sign * val)


def ssf_arg_tracked(a, lam, eps_floor: float = 1e-10, max_halvings: int = 40):
    """xi_a(lam) = (1/pi) arg D_a(lam + i0), by continuous argument tracking.

    The argument of D_a is followed along the vertical segment from lam + iY
    down to lam + i eps_floor, starting where |D_a - 1| < 1/2 so that the
    principal branch agrees with arg D -> 0 at infinity.  The final step
    goes to the boundary value itself.
    """
    a = as_params(a).a
    lam = float(lam)
    if abs(lam) == 1.0 or any(abs(lam - e) < 1e-14 for e in eigenvalues(a)):
        raise DomainError("argument tracking undefined at the jump points")
    Y = max(10.0, 2.0 * a)

    def D(y):
        if y == 0.0:
            if abs(lam) < 1.0:
                return pert_det(a, EnergyPoint.boundary(lam, Side.PLUS))
            return pert_det(a, EnergyPoint.at(lam))
        return pert_det(a, EnergyPoint.at(complex(lam, y)))

    phase = np.angle(D(Y))
    y, prev = Y, D(Y)
    log_y = np.log(Y)
    step = 0.05
    while y > eps_floor:
        target = max(np.exp(log_y - step), eps_floor)
        for _ in range(max_halvings):
            cur = D(target)
            jump = np.angle(cur / prev)
            if abs(jump) <= np.pi / 4:
                break
            step /= 2.0
            target = max(np.exp(log_y - step), eps_floor)
        else:
            raise StepFailureError("phase jump unresolved after refinement")
        phase += jump
        prev, y = cur, target
        log_y = np.log(y)
        step = min(step * 1.5, 0.25)
    cur = D(0.0)
    jump = np.angle(cur / prev)
    if abs(jump) > np.pi / 2:
        raise StepFailureError("boundary step exceeds pi/2")
    return (phase + jump) / np.pi


# --- records ----------------------------------------------------------------------


@dataclass(frozen=True)
class ScatteringRecord:
    lam: float
    s_value: complex
    xi: float
    sigma_plus: complex
    sigma_minus: complex
    det_plus: complex


def scattering_record(a, lam) -> ScatteringRecord:
    lam = float(_band(lam))
    sp, sm = sigma_pm(a, lam)
    return ScatteringRecord(
        lam,
        complex(smatrix(a, lam)),
        float(ssf_closed(a, lam)),
        complex(sp),
        complex(sm),
        complex(pert_det(a, EnergyPoint.boundary(lam, Side.PLUS))),
    )


# --- eigenfunction transform --------------------------------------------------------


def transform_row(a, n: int, grid):
    """psi_n(lam; a) on ``grid``: row n of the discretised transform F_a."""
    _band(grid)
    return psi(a, np.asarray(grid, dtype=float), n)


def forward_transform(a, f, grid):
    """(F_a f)(lam) = sum_n f_n psi_n(lam; a) for a finite vector f."""
    f = np.asarray(f)
    table = psi_table(a, _band(grid), len(f) - 1)
    return f @ table


def adjoint_transform(a, g_values, grid, weights, n_out: int):
    """(F_a^* g)_n = int psi_n(lam; a) g(lam) dlam for n < n_out.

    ``grid`` and ``weights`` form a quadrature rule on (-1, 1), e.g. from
    :func:`gcheb.oracle.theta_rule`.  Runs the recurrence row by row so the
    memory cost stays O(len(grid)).
    """
    a = as_params(a).a
    lam = _band(grid)
    wg = psi_weight(a, lam) * np.asarray(weights) * np.asarray(g_values)
    out = np.empty(n_out, dtype=np.result_type(wg.dtype, float))
    prev = np.ones_like(lam)
    out[0] = np.sum(wg * prev)
    if n_out == 1:
        return out
    cur = 2.0 * lam / a
    out[1] = np.sum(wg * cur)
    for n in range(2, n_out):
        nxt = 2.0 * lam * cur - (a if n == 2 else 1.0) * prev
        out[n] = np.sum(wg * nxt)
        prev, cur = cur, nxt
    return out


def wave_operator_image(a, f, sign: int, n_out: int, nodes: int | None = None):
    """F_a^* Sigma_sign F_1 f, truncated to its first ``n_out`` components."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    nodes = nodes or max(2 * n_out, 512)
    lam, w = oracle.theta_rule(nodes)
    g = forward_transform(1.0, f, lam)
    sp, sm = sigma_pm(a, lam)
    return adjoint_transform(a, g * (sp if sign > 0 else sm), lam, w, n_out)


def wave_operator_check(a, t: float, f, truncation: int = oracle.DEFAULT_SIZE) -> float:
    """||e^{iH_a t} e^{-iH_1 t} f - F_a^* Sigma_sign(t) F_1 f|| on a finite section.

    The evolution uses dense eigendecompositions of the truncated matrices
    (memoised across calls); the right-hand side uses quadrature.  Memory is
    O(truncation^2) per operator.
    """
    a = as_params(a).a
    f = np.asarray(f, dtype=float)
    if truncation < 2048:
        raise DomainError("truncation must be at least 2048")
    nz = np.nonzero(f)[0]
    reach = (nz.max() + 1 if nz.size else 0)
    if reach >= truncation / 8:
        raise DomainError("f must be supported on indices below truncation/8")
    if reach + abs(t) > 0.8 * truncation:
        warnings.warn("wave front may reach the truncation boundary", ReflectionWarning, stacklevel=2)
    if t == 0:
        raise DomainError("t must be non-zero")
    fv = np.zeros(truncation)
    fv[: len(f)] = f[:truncation]
    L1, V1 = oracle.dense_eigensystem(oracle.truncate(1.0, truncation))
    La, Va = oracle.dense_eigensystem(oracle.truncate(a, truncation))
    c = np.exp(-1j * L1 * t) * (V1.T @ fv)
    u = V1 @ c.real + 1j * (V1 @ c.imag)
    c = np.exp(1j * La * t) * (Va.T @ u.real + 1j * (Va.T @ u.imag))
    u = Va @ c.real + 1j * (Va @ c.imag)
    w = wave_operator_image(a, f, 1 if t > 0 else -1, truncation)
    return float(np.linalg.norm(u - w))


# --- oscillatory decay ----------------------------------------------------------------


def mollifier(c: float = 0.8):
    """Smooth bump exp(-1 / (1 - (lam/c)^2)) supported in (-c, c)."""

    def g(lam):
        lam = np.asarray(lam, dtype=float)
        x = (lam / c) ** 2
        out = np.zeros_like(lam)
        m = x < 1.0
        out[m] = np.exp(-1.0 / (1.0 - x[m]))
        return out

    g.support = c
    return g


def _oscillatory_integral(n, t, g, c, side, panels):
    x, w = oracle.gauss_legendre(16)
    edges = np.linspace(-c, c, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    lam = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wts = (half[:, None] * w[None, :]).ravel()
    om = lam - 1j * np.sqrt(1.0 - lam**2) if side is Side.PLUS else lam + 1j * np.sqrt(1.0 - lam**2)
    return np.sum(wts * om**n * np.exp(-1j * lam * t) * g(lam))


def oscillatory_decay_check(n: int, t: float, p: int = 1, bump=None, side: Side | None = None) -> float:
    """|int omega(lam +- i0)^n e^{-i lam t} g(lam) dlam| (n + |t|)^p.

    The side defaults to the non-stationary one: lam + i0 for t < 0 and
    lam - i0 for t > 0.  Passing the other side shows the growth on the
    stationary-phase side.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    g = bump or mollifier()
    c = getattr(g, "support", 1.0 - 1e-9)
    if side is None:
        side = Side.PLUS if t <= 0 else Side.MINUS
    freq = n / np.sqrt(1.0 - c * c) + abs(t) + 1.0
    panels = int(np.ceil(freq * 2.0 * c / np.pi)) + 16
    coarse = _oscillatory_integral(n, t, g, c, side, panels)
    fine = _oscillatory_integral(n, t, g, c, side, 2 * panels)
    if abs(fine - coarse) > 1e-10 * max(1.0, abs(fine)) + 1e-14:
        fine = _oscillatory_integral(n, t, g, c, side, 8 * panels)
    return float(abs(fine) * (n + abs(t)) ** p)
