"""Brute-force reference engines.

Nothing in this module uses the closed forms it is meant to check: spectra
and resolvents come from finite sections of the Jacobi matrix, integrals
from adaptive Gauss-Legendre quadrature, recurrence coefficients from
Lanczos on a discrete measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import linalg as sla
from scipy.special import roots_legendre

from gcheb.errors import DomainError, OrthogonalityLossError, QuadratureError, SingularEnergyError
from gcheb.genchebyshev import CouplingParams
from gcheb.jost import JacobiCoeffs

DEFAULT_SIZE = 4096
LARGE_SIZE = 8192


@dataclass(frozen=True)
class TruncatedOperator:
    """Top-left finite section of a half-lattice Jacobi operator."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        if len(self.offdiag) != len(self.diag) - 1:
            raise DomainError("offdiag must be one shorter than diag")

    @property
    def size(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def matvec(self, x: np.ndarray) -> np.ndarray:
        y = self.diag * x
        y[:-1] += self.offdiag * x[1:]
        y[1:] += self.offdiag * x[:-1]
        return y


def truncate(coeffs, size: int) -> TruncatedOperator:
    """Finite section of H_a, H_{a,b} or a general finite-support operator."""
    if size < 2:
        raise DomainError("truncation size must be at least 2")
    if isinstance(coeffs, (int, float)):
        coeffs = CouplingParams(float(coeffs))
    if isinstance(coeffs, CouplingParams):
        coeffs = JacobiCoeffs.from_coupling(coeffs)
    if not isinstance(coeffs, JacobiCoeffs):
        raise DomainError("expected JacobiCoeffs, CouplingParams or a number")
    if coeffs.support > size:
        raise DomainError("truncation smaller than the perturbation support")
    diag = np.zeros(size)
    off = np.full(size - 1, 0.5)
    k = coeffs.support
    diag[:k] = coeffs.b_seq
    off[: min(k, size - 1)] = coeffs.a_seq[: size - 1]
    return TruncatedOperator(diag, off)


def dense_spectrum(T: TruncatedOperator, select_range=None):
    """Eigenvalues (ascending) and the first component of each eigenvector.

    The squared first components are the weights of the discrete spectral
    measure of e_0.  ``select_range=(lo, hi)`` restricts the computation to
    eigenvalues in the half-open interval (lo, hi].
    """
    try:
        if select_range is None:
            vals, vecs = sla.eigh_tridiagonal(T.diag, T.offdiag)
        else:
            vals, vecs = sla.eigh_tridiagonal(T.diag, T.offdiag, select="v", select_range=select_range)
    except sla.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise SingularEnergyError(f"tridiagonal eigensolver failed: {exc}") from exc
    return vals, vecs[0].copy()


def dense_eigenvalues(T: TruncatedOperator) -> np.ndarray:
    return sla.eigvalsh_tridiagonal(T.diag, T.offdiag)


@lru_cache(maxsize=4)
def _eig_cached(diag: tuple, off: tuple):
    return sla.eigh_tridiagonal(np.array(diag), np.array(off))


def dense_eigensystem(T: TruncatedOperator):
    """Full eigendecomposition, memoised for repeated time evolution."""
    return _eig_cached(tuple(T.diag), tuple(T.offdiag))


def dense_resolvent_column(T: TruncatedOperator, m: int, z: complex) -> np.ndarray:
    """Column m of (T - z)^{-1} by a banded solve."""
    N = T.size
    ab = np.zeros((3, N), dtype=complex)
    ab[0, 1:] = T.offdiag
    ab[1, :] = T.diag - z
    ab[2, :-1] = T.offdiag
    rhs = np.zeros(N, dtype=complex)
    rhs[m] = 1.0
    try:
        x = sla.solve_banded((1, 1), ab, rhs)
    except sla.LinAlgError as exc:
        raise SingularEnergyError(f"near-singular resolvent solve: {exc}") from exc
    if not np.all(np.isfinite(x)):
        raise SingularEnergyError("near-singular resolvent solve")
    return x


def dense_resolvent_entry(T: TruncatedOperator, n: int, m: int, z: complex) -> complex:
    return complex(dense_resolvent_column(T, m, z)[n])


def dense_moment(T: TruncatedOperator, n: int) -> float:
    """(T^n e_0, e_0); equals the infinite-operator moment when size > n/2 + 1."""
    v = np.zeros(T.size)
    v[0] = 1.0
    half = n // 2
    for _ in range(half):
        v = T.matvec(v)
    if n % 2:
        return float(v @ T.matvec(v))
    return float(v @ v)


def dense_power_trace_difference(a: float, n: int, size: int | None = None) -> float:
    """Tr(H_a^n - H_1^n) from finite sections large enough to be exact."""
    size = size or max(n + 2, 8)
    Ta = truncate(a, size).dense()
    T1 = truncate(1.0, size).dense()
    return float(np.trace(np.linalg.matrix_power(Ta, n)) - np.trace(np.linalg.matrix_power(T1, n)))


# --- quadrature -----------------------------------------------------------------

_PANEL_ORDER = 24


@lru_cache(maxsize=16)
def gauss_legendre(n: int):
    x, w = roots_legendre(n)
    return x, w


def quad_theta(h, tol: float = 1e-12, lo: float = 0.0, hi: float = np.pi, max_panels: int = 20_000):
    """Adaptive composite Gauss-Legendre integral of h(theta) over [lo, hi].

    A panel is accepted when its 24-point estimate matches the sum over its
    two halves to within ``tol`` times the panel's share of the interval.
    ``h`` must accept numpy arrays and may return complex values; a result
    of shape (..., k) for k nodes integrates a vector of functions at once,
    with the acceptance test applied to the largest component error.
    """
    x, w = gauss_legendre(_PANEL_ORDER)

    def panel(p, q):
        c, r = 0.5 * (p + q), 0.5 * (q - p)
        return r * np.sum(w * h(c + r * x), axis=-1)

    total = 0.0
    stack = [(lo, hi, panel(lo, hi))]
    used = 1
    length = hi - lo
    while stack:
        p, q, est = stack.pop()
        mid = 0.5 * (p + q)
        left, right = panel(p, mid), panel(mid, q)
        used += 2
        if np.max(np.abs(left + right - est)) <= max(tol * (q - p) / length, 1e-300) or q - p < 1e-12:
            total = total + left + right
            continue
        if used > max_panels:
            raise QuadratureError("adaptive quadrature exceeded its panel budget")
        stack.append((p, mid, left))
        stack.append((mid, q, right))
    return total


def quad_integrate(f, tol: float = 1e-12, max_panels: int = 20_000):
    """Integral of f(lam) over (-1, 1) through lam = cos(theta)."""
    return quad_theta(lambda t: f(np.cos(t)) * np.sin(t), tol=tol, max_panels=max_panels)


def theta_rule(n: int):
    """Fixed n-point Gauss-Legendre rule in theta mapped to lam nodes.

    Returns (lam, weights) such that sum(weights * f(lam)) approximates the
    integral of f over (-1, 1); the Jacobian sin(theta) is included.
    """
    x, w = gauss_legendre(n)
    theta = 0.5 * np.pi * (x + 1.0)
    return np.cos(theta), 0.5 * np.pi * w * np.sin(theta)


# --- measures -------------------------------------------------------------------


def numeric_moment(a: float, n: int, tol: float = 1e-13) -> float:
    """Moment of rho_a: quadrature of the density plus the atoms."""
    from gcheb import spectral

    ac = quad_theta(lambda t: np.cos(t) ** n * spectral.density_theta(a, t), tol=tol)
    atoms = sum(w * x**n for x, w in spectral.atoms(a))
    return float(np.real(ac) + atoms)


def stieltjes_coeffs(nodes, weights, depth: int):
    """Recurrence coefficients of the orthonormal polynomials of a discrete measure.

    Lanczos on diag(nodes) started from sqrt(weights), with full
    reorthogonalisation.  Returns (a_seq, b_seq): a_seq[k] is the
    off-diagonal a_k (k < depth), b_seq[k] the diagonal b_k (k <= depth).
    """
    nodes = np.asarray(nodes, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if depth < 1 or depth >= len(nodes):
        raise DomainError("depth must satisfy 1 <= depth < number of nodes")
    q = np.sqrt(weights / weights.sum())
    Q = np.zeros((depth + 1, len(nodes)))
    Q[0] = q
    a_seq = np.zeros(depth)
    b_seq = np.zeros(depth + 1)
    prev_a = 0.0
    for k in range(depth + 1):
        v = nodes * Q[k]
        b_seq[k] = Q[k] @ v
        if k == depth:
            break
        v -= b_seq[k] * Q[k]
        if k:
            v -= prev_a * Q[k - 1]
        for _ in range(2):
            v -= Q[: k + 1].T @ (Q[: k + 1] @ v)
        nv = np.linalg.norm(v)
        if nv < 1e-13:
            raise OrthogonalityLossError("Lanczos breakdown: measure has too few points")
        a_seq[k] = prev_a = nv
        Q[k + 1] = v / nv
    if np.abs(Q @ Q.T - np.eye(depth + 1)).max() > 1e-8:
        raise OrthogonalityLossError("Lanczos basis lost orthogonality")
    return a_seq, b_seq
