"""Finite-support perturbations of the free Jacobi operator.

A :class:`JacobiCoeffs` instance stores a_0..a_{N-1} and b_0..b_{N-1}; beyond
the support a_n = 1/2 and b_n = 0.  The Jost solution u_n(z) equals omega^n
for n >= N and is continued downwards by the difference equation, with the
convention a_{-1} = 1.  Its value u_{-1}(z) is the Jost function, and the
perturbation determinant is D(z) = 2^(N+1) omega a_0...a_{N-1} u_{-1}(z).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from gcheb.branch import as_point
from gcheb.errors import AdmissibilityError, DomainError, SingularEnergyError
from gcheb.genchebyshev import CouplingParams

FREE_A = 0.5
DET_RADIUS = 0.5


@dataclass(frozen=True)
class JacobiCoeffs:
    a_seq: tuple = ()
    b_seq: tuple = ()

    def __post_init__(self):
        a_seq = tuple(float(x) for x in self.a_seq)
        b_seq = tuple(float(x) for x in self.b_seq)
        if len(b_seq) < len(a_seq):
            b_seq = b_seq + (0.0,) * (len(a_seq) - len(b_seq))
        elif len(a_seq) < len(b_seq):
            a_seq = a_seq + (FREE_A,) * (len(b_seq) - len(a_seq))
        if any(not x > 0 for x in a_seq):
            raise DomainError("off-diagonal coefficients must be positive")
        object.__setattr__(self, "a_seq", a_seq)
        object.__setattr__(self, "b_seq", b_seq)

    @property
    def support(self) -> int:
        return len(self.a_seq)

    def a(self, n: int) -> float:
        if n == -1:
            return 1.0
        return self.a_seq[n] if n < self.support else FREE_A

    def b(self, n: int) -> float:
        return self.b_seq[n] if 0 <= n < self.support else 0.0

    @classmethod
    def free(cls) -> "JacobiCoeffs":
        return cls()

    @classmethod
    def from_coupling(cls, params: CouplingParams) -> "JacobiCoeffs":
        """H_{a,b}: a_0 = a/2, b_0 = b/2."""
        return cls((params.a / 2.0,), (params.b / 2.0,))


@dataclass(frozen=True)
class DetPolynomial:
    """Perturbation determinant as a polynomial in omega, ascending powers."""

    coeffs: np.ndarray = field(default_factory=lambda: np.array([1.0]))

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.atleast_1d(np.asarray(self.coeffs)))

    @property
    def degree(self) -> int:
        nz = np.nonzero(np.abs(self.coeffs) > 0)[0]
        return int(nz[-1]) if nz.size else 0

    def __call__(self, w):
        return np.polynomial.polynomial.polyval(w, self.coeffs)

    def padded(self, length: int) -> np.ndarray:
        out = np.zeros(length, dtype=self.coeffs.dtype)
        k = min(length, len(self.coeffs))
        if np.any(self.coeffs[k:] != 0):
            raise AdmissibilityError(f"polynomial has degree above {length - 1}")
        out[:k] = self.coeffs[:k]
        return out


def _jost_from_omega(coeffs: JacobiCoeffs, z, w, n_min: int = -1, n_max: int | None = None):
    N = coeffs.support
    top = max(N + 1, n_max if n_max is not None else N)
    u = {top: w**top, top - 1: w ** (top - 1)}
    for n in range(top - 1, n_min, -1):
        u[n - 1] = ((z - coeffs.b(n)) * u[n] - coeffs.a(n) * u[n + 1]) / coeffs.a(n - 1)
    stop = n_max if n_max is not None else N
    return np.array([u[k] for k in range(n_min, stop + 1)])


def jost_solution(coeffs: JacobiCoeffs, z, n_min: int = -1, n_max: int | None = None) -> np.ndarray:
    """Return u_{n_min}..u_{n_max} (default up to u_N) of the Jost solution."""
    if n_min < -1:
        raise DomainError("n_min must be >= -1")
    pt = as_point(z)
    return _jost_from_omega(coeffs, pt.z, pt.omega_val, n_min, n_max)


def jost_function(coeffs: JacobiCoeffs, z):
    return jost_solution(coeffs, z, n_min=-1)[0]


def _det_from_omega(coeffs: JacobiCoeffs, w):
    z = 0.5 * (w + 1.0 / w)
    u_m1 = _jost_from_omega(coeffs, z, w, -1)[0]
    N = coeffs.support
    return 2.0 ** (N + 1) * w * np.prod(coeffs.a_seq) * u_m1


def pert_det_general(coeffs: JacobiCoeffs, z):
    """det(I + V R_1(z)) through the Jost function."""
    pt = as_point(z)
    u_m1 = jost_solution(coeffs, pt, n_min=-1)[0]
    N = coeffs.support
    return 2.0 ** (N + 1) * pt.omega_val * np.prod(coeffs.a_seq) * u_m1


def det_polynomial(coeffs: JacobiCoeffs, length: int | None = None, radius: float = DET_RADIUS) -> DetPolynomial:
    """Coefficients c_0..c_{2N} of D as a polynomial in omega.

    D is sampled at the 2N+1 roots of unity scaled by ``radius``; the
    discrete Fourier transform then solves the Vandermonde system exactly.
    A larger ``length`` oversamples, so coefficients above 2N come out as
    rounding noise and can be used to confirm the degree bound (radius 1
    keeps that noise at the level of machine epsilon).
    """
    M = 2 * coeffs.support + 1
    if length is not None:
        if length < M:
            raise DomainError(f"length must be at least {M}")
        M = length
    if not 0.0 < radius <= 1.0:
        raise DomainError("radius must lie in (0, 1]")
    nodes = radius * np.exp(2j * np.pi * np.arange(M) / M)
    vals = np.array([_det_from_omega(coeffs, w) for w in nodes])
    c = np.fft.fft(vals) / M / radius ** np.arange(M)
    if np.all(np.abs(c.imag) < 1e-12 * max(1.0, np.abs(c).max())):
        c = c.real
    return DetPolynomial(c)


def regular_solution(coeffs: JacobiCoeffs, z, n_max: int) -> np.ndarray:
    """phi_0..phi_{n_max} with phi_{-1} = 0, phi_0 = 1."""
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    z = z.z if hasattr(z, "omega_val") else z
    z = np.asarray(z)
    out = np.empty((n_max + 1,) + z.shape, dtype=np.result_type(z.dtype, float))
    out[0] = 1.0
    prev = np.zeros_like(out[0])
    for n in range(n_max):
        nxt = ((z - coeffs.b(n)) * out[n] - (coeffs.a(n - 1) if n >= 1 else 0.0) * prev) / coeffs.a(n)
        prev = out[n]
        out[n + 1] = nxt
    return out


def resolvent_entry_general(coeffs: JacobiCoeffs, n: int, m: int, z):
    """(R(z) e_n, e_m) = -phi_min(n,m)(z) u_max(n,m)(z) / u_{-1}(z)."""
    if n < 0 or m < 0:
        raise DomainError("indices must be non-negative")
    lo, hi = min(n, m), max(n, m)
    pt = as_point(z)
    u = jost_solution(coeffs, pt, n_min=-1, n_max=max(hi, coeffs.support))
    if abs(u[0]) < 1e-300 or abs(u[0]) < 1e-14 * np.abs(u).max():
        raise SingularEnergyError("Jost function vanishes: z is an eigenvalue")
    phi = regular_solution(coeffs, pt.z, lo)[lo]
    return -phi * u[hi + 1] / u[0]


def _as_real_coeffs(L, length: int) -> np.ndarray:
    c = L.padded(length) if isinstance(L, DetPolynomial) else DetPolynomial(L).padded(length)
    if np.iscomplexobj(c):
        if np.any(np.abs(c.imag) > 1e-12):
            raise AdmissibilityError("determinant coefficients must be real")
        c = c.real
    if abs(c[0] - 1.0) > 1e-12:
        raise AdmissibilityError("constant term of a perturbation determinant must be 1")
    return c


def recover_rank1(L) -> JacobiCoeffs:
    """Coefficients (a_0, b_0) whose determinant is 1 + l_1 w + l_2 w^2."""
    _, l1, l2 = _as_real_coeffs(L, 3)
    if not l2 < 1.0:
        raise AdmissibilityError("leading coefficient must be < 1")
    return JacobiCoeffs((0.5 * np.sqrt(1.0 - l2),), (-l1 / 2.0,))


def recover_rank2(L) -> JacobiCoeffs:
    """Coefficients (a_0, a_1, b_0, b_1) from a determinant of degree <= 4."""
    _, l1, l2, l3, l4 = _as_real_coeffs(L, 5)
    if not l4 < 1.0:
        raise AdmissibilityError("leading coefficient must be < 1")
    q = 1.0 - l4
    cross = (l3 - l1) * (l1 * l4 - l3)
    if not l2 < 1.0 + l4 + cross / q**2:
        raise AdmissibilityError("admissibility inequality for l_2 fails")
    radicand = (1.0 - l2 + l4) * q**2 + cross
    if not radicand > 0:
        raise AdmissibilityError("a_0 radicand is not positive")
    a1 = 0.5 * np.sqrt(q)
    b0 = (l3 - l1) / (2.0 * q)
    b1 = (l1 * l4 - l3) / (2.0 * q)
    a0 = np.sqrt(radicand) / (2.0 * q)
    return JacobiCoeffs((a0, a1), (b0, b1))
