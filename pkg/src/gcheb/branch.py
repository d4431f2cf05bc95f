"""Two-sheeted square root sqrt(z^2 - 1) and the uniformising map omega(z).

The physical sheet is fixed by sqrt(z^2 - 1) > 0 for real z > 1.  It is then
negative for z < -1 and equals +-i sqrt(1 - lam^2) on the upper/lower side
of the cut [-1, 1].  On the physical sheet |omega| <= 1; the second sheet
flips the sign of the root and inverts omega.

All functions accept scalars or numpy arrays.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

import numpy as np

from gcheb.errors import DomainError

ArrayLike = Union[complex, float, np.ndarray]


class Sheet(enum.Enum):
    PHYSICAL = "physical"
    SECOND = "second"


class Side(enum.Enum):
    """Side of the cut [-1, 1]: PLUS is lam + i0, MINUS is lam - i0."""

    PLUS = "+"
    MINUS = "-"


def _scalar(x):
    if isinstance(x, np.ndarray) and x.ndim == 0:
        return x[()]
    return x


def branch_sqrt(z: ArrayLike, sheet: Sheet = Sheet.PHYSICAL, side: Side = Side.PLUS) -> ArrayLike:
    """Return s with s**2 = z**2 - 1 on the requested sheet.

    Points lying exactly on the open cut (-1, 1) with zero imaginary part are
    interpreted as boundary values taken from ``side``.  At z = +-1 the
    result is 0.
    """
    z = np.asarray(z, dtype=complex)
    s = np.sqrt(z - 1.0) * np.sqrt(z + 1.0)
    on_cut = (z.imag == 0.0) & (np.abs(z.real) < 1.0)
    if np.any(on_cut):
        edge = 1j * np.sqrt(1.0 - z.real**2)
        s = np.where(on_cut, edge if side is Side.PLUS else -edge, s)
    if sheet is Sheet.SECOND:
        s = -s
    return _scalar(s)


def omega_from_sqrt(z: ArrayLike, s: ArrayLike) -> ArrayLike:
    """omega = z - s computed without cancellation."""
    z = np.asarray(z, dtype=complex)
    s = np.asarray(s, dtype=complex)
    w = z + s
    big = np.abs(w) >= 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(big, 1.0 / np.where(big, w, 1.0), z - s)
    return _scalar(out)


def omega(z: ArrayLike, sheet: Sheet = Sheet.PHYSICAL, side: Side = Side.PLUS) -> ArrayLike:
    """omega(z) = z - sqrt(z^2 - 1) = 1 / (z + sqrt(z^2 - 1))."""
    return omega_from_sqrt(z, branch_sqrt(z, sheet, side))


def boundary_omega(lam: ArrayLike, side: Side = Side.PLUS) -> ArrayLike:
    """Boundary value omega(lam +- i0) = lam -+ i sqrt(1 - lam^2), |lam| < 1."""
    lam = np.asarray(lam, dtype=float)
    if np.any(np.abs(lam) >= 1.0):
        raise DomainError("boundary_omega requires |lambda| < 1")
    root = np.sqrt(1.0 - lam**2)
    out = lam - 1j * root if side is Side.PLUS else lam + 1j * root
    return _scalar(out)


@dataclass(frozen=True)
class EnergyPoint:
    """A spectral parameter together with its sheet and cached branch values.

    Build instances with :meth:`at` (generic z) or :meth:`boundary`
    (lam +- i0 on the cut); the raw constructor does not check consistency.
    """

    z: complex
    sheet: Sheet
    sqrt_val: complex
    omega_val: complex

    @classmethod
    def at(cls, z, sheet: Sheet = Sheet.PHYSICAL, side: Side = Side.PLUS) -> "EnergyPoint":
        z = complex(z) if np.ndim(z) == 0 else np.asarray(z, dtype=complex)
        s = branch_sqrt(z, sheet, side)
        return cls(z, sheet, s, omega_from_sqrt(z, s))

    @classmethod
    def boundary(cls, lam, side: Side = Side.PLUS) -> "EnergyPoint":
        lam_arr = np.asarray(lam, dtype=float)
        if np.any(np.abs(lam_arr) >= 1.0):
            raise DomainError("boundary point requires |lambda| < 1")
        root = np.sqrt(1.0 - lam_arr**2)
        s = 1j * root if side is Side.PLUS else -1j * root
        w = lam_arr - s
        z = lam_arr + 0j
        return cls(_scalar(z), Sheet.PHYSICAL, _scalar(s), _scalar(w))

    @property
    def is_edge(self) -> bool:
        return bool(np.any(np.asarray(self.sqrt_val) == 0))


def as_point(z) -> EnergyPoint:
    """Accept an :class:`EnergyPoint` or a plain number (physical sheet)."""
    if isinstance(z, EnergyPoint):
        return z
    return EnergyPoint.at(z)
