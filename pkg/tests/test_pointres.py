import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcheb import oracle, pointres as pr
from gcheb.branch import EnergyPoint, Side
from gcheb.errors import DomainError, SingularEnergyError

SQRT2 = np.sqrt(2.0)


def test_free_entries():
    assert pr.free_resolvent_entry(0, 0, 1.25) == pytest.approx(-1.0)
    assert pr.free_resolvent_entry(1, 0, 1.25) == pytest.approx(-0.5)
    assert pr.whole_line_resolvent_entry(0, 0, 1.25) == pytest.approx(-4 / 3)
    assert pr.whole_line_resolvent_entry(3, 1, 1.25) == pytest.approx(-1 / 3)
    with pytest.raises(SingularEnergyError):
        pr.free_resolvent_entry(0, 0, 1.0)
    with pytest.raises(DomainError):
        pr.free_resolvent_entry(-1, 0, 2.0)


def test_free_entry_against_dense():
    z = 2 + 1j
    ref = oracle.dense_resolvent_entry(oracle.truncate(1.0, 4096), 5, 3, z)
    assert abs(pr.free_resolvent_entry(5, 3, z) - ref) < 1e-8


def test_determinant_values():
    assert pr.pert_det(1.0, 0.3 + 2j) == pytest.approx(1.0)
    assert pr.pert_det(SQRT2, 1.25) == pytest.approx(0.75)
    lam = 0.37
    d = pr.pert_det(2.0, EnergyPoint.boundary(lam))
    root = np.sqrt(1 - lam**2)
    assert d == pytest.approx(1 - 3 * (2 * lam**2 - 1 - 2j * lam * root))
    assert abs(d) == pytest.approx(np.sqrt(16 + 4 * (1 - 4) * lam**2))


@pytest.mark.parametrize("a", [0.4, 1.3, 2.5])
@pytest.mark.parametrize("x", [1.3, -2.2, 4.0])
def test_determinant_derivative(a, x):
    closed = pr.pert_det_derivative(a, x)
    step = pr.pert_det_derivative(a, x, method="complex_step")
    assert closed == pytest.approx(step, rel=1e-12)


def test_complex_step_domain():
    with pytest.raises(DomainError):
        pr.pert_det_derivative(2.0, 0.5, method="complex_step")
    with pytest.raises(DomainError):
        pr.pert_det_derivative(2.0, 2.0, method="finite_difference")


def test_tmatrix_values():
    t = pr.tmatrix(1.0, 0.5 + 0.5j)
    assert np.allclose(t.operator_block(), 0.0)
    assert pr.tmatrix(2.0, 1.25).t11 == pytest.approx(0.5)
    with pytest.raises(SingularEnergyError):
        pr.tmatrix(2.0, 2 / np.sqrt(3))


def test_weyl_function():
    assert pr.weyl_m(1.0, 1.25) == pytest.approx(-1.0)
    assert pr.weyl_m(2.0, 1.25) == pytest.approx(-4.0)
    ref = oracle.dense_resolvent_entry(oracle.truncate(2.0, 4096), 0, 0, 1.25)
    assert ref == pytest.approx(-4.0, abs=1e-9)
    for a in (0.5, 1.5, 3.0):
        for y in (0.1, 1.0, 7.0):
            m = pr.weyl_m(a, 1j * y)
            assert abs(m.real) < 1e-14 and m.imag > 0
            assert m == pytest.approx(pr.weyl_m_direct(a, 1j * y))


def test_sqrt2_closed_entry():
    z = 1.25
    pt = EnergyPoint.at(z)
    w, s = pt.omega_val, pt.sqrt_val
    expect = pr.free_resolvent_entry(2, 1, z) - 2 * z * w**4 / s
    assert pr.resolvent_entry(SQRT2, 2, 1, z) == pytest.approx(expect)


def test_entry_against_dense():
    z = 0.5 + 0.8j
    ref = oracle.dense_resolvent_entry(oracle.truncate(1.7, 4096), 4, 2, z)
    assert abs(pr.resolvent_entry(1.7, 4, 2, z) - ref) < 1e-8


@settings(max_examples=40, deadline=None)
@given(st.floats(0.2, 3.0), st.integers(0, 6), st.integers(0, 6), st.floats(-2, 2), st.floats(0.05, 2))
def test_tmatrix_route_and_symmetry(a, n, m, x, y):
    z = complex(x, y)
    direct = pr.resolvent_entry(a, n, m, z)
    assert direct == pytest.approx(pr.resolvent_via_tmatrix(a, n, m, z), rel=1e-9, abs=1e-12)
    assert direct == pytest.approx(pr.resolvent_entry(a, m, n, z))
    # Schwarz reflection for a self-adjoint operator
    assert pr.resolvent_entry(a, n, m, z.conjugate()) == pytest.approx(direct.conjugate())


def test_trace_identity():
    for a, z in ((0.6, 1.8), (1.5, 0.2 + 0.9j), (2.5, -3.0 + 0.1j)):
        assert pr.truncated_trace(a, z) == pytest.approx(pr.trace_resolvent_difference(a, z), rel=1e-10)


def test_boundary_value_resolvent():
    # boundary values are limits from the upper half plane
    lam = 0.3
    up = pr.resolvent_entry(1.6, 2, 1, EnergyPoint.boundary(lam, Side.PLUS))
    near = pr.resolvent_entry(1.6, 2, 1, complex(lam, 1e-9))
    assert abs(up - near) < 1e-6
