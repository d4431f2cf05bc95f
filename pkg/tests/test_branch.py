import numpy as np
import pytest
from hypothesis import given, strategies as st

from gcheb.branch import EnergyPoint, Sheet, Side, as_point, boundary_omega, branch_sqrt, omega
from gcheb.errors import DomainError

finite = st.floats(-5.0, 5.0, allow_nan=False)


def test_sqrt_positive_right_of_cut():
    assert branch_sqrt(1.25) == pytest.approx(0.75)


def test_sqrt_negative_left_of_cut():
    assert branch_sqrt(-2.0) == pytest.approx(-np.sqrt(3.0))


def test_sqrt_on_cut_uses_side():
    assert branch_sqrt(0.0) == pytest.approx(1j)
    assert branch_sqrt(0.0, side=Side.MINUS) == pytest.approx(-1j)


def test_second_sheet_flips_sign():
    z = 0.3 + 0.7j
    assert branch_sqrt(z, Sheet.SECOND) == pytest.approx(-branch_sqrt(z))


def test_omega_values():
    assert omega(1.25) == pytest.approx(0.5)
    assert omega(0.0) == pytest.approx(-1j)
    for sheet in Sheet:
        assert omega(1.0, sheet) == pytest.approx(1.0)
        assert omega(-1.0, sheet) == pytest.approx(-1.0)


def test_boundary_omega():
    assert boundary_omega(0.6) == pytest.approx(0.6 - 0.8j)
    assert boundary_omega(0.0, Side.MINUS) == pytest.approx(1j)
    with pytest.raises(DomainError):
        boundary_omega(1.0)


def test_vectorised():
    z = np.array([1.25, -2.0, 0.5j])
    s = branch_sqrt(z)
    assert s.shape == (3,)
    assert np.allclose(s**2, z**2 - 1.0)


@given(finite, st.floats(1e-6, 5.0))
def test_physical_sheet_properties(x, y):
    for z in (complex(x, y), complex(x, -y)):
        s, w = branch_sqrt(z), omega(z)
        assert abs(s * s - (z * z - 1.0)) <= 1e-9 * max(1.0, abs(z) ** 2)
        assert abs(w) <= 1.0 + 1e-12
        assert abs(0.5 * (w + 1.0 / w) - z) <= 1e-9 * max(1.0, abs(z))
        # the second sheet inverts omega
        assert abs(omega(z, Sheet.SECOND) * w - 1.0) <= 1e-9


@given(st.floats(-0.999, 0.999))
def test_boundary_point_matches_limit(lam):
    pt = EnergyPoint.boundary(lam, Side.PLUS)
    near = EnergyPoint.at(complex(lam, 1e-12))
    assert abs(pt.omega_val - near.omega_val) < 1e-5
    assert abs(pt.omega_val) == pytest.approx(1.0)


def test_as_point_and_edge():
    pt = as_point(1.0)
    assert pt.is_edge
    assert as_point(pt) is pt
    assert not EnergyPoint.at(2.0).is_edge
