import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcheb import oracle, scattering as sc, spectral
from gcheb.branch import Side
from gcheb.errors import DomainError

SQRT2 = np.sqrt(2.0)
band = st.floats(-0.999, 0.999)
coupling = st.floats(0.05, 8.0)


def test_trivial_values():
    lam = np.linspace(-0.9, 0.9, 5)
    assert np.allclose(sc.smatrix(1.0, lam), 1.0)
    assert np.allclose(sc.smatrix_via_t(1.0, lam), 1.0)
    sp, sm = sc.sigma_pm(1.0, lam)
    assert np.allclose(sp, 1.0) and np.allclose(sm, 1.0)
    assert sc.sigma_pm(2.0, 0.0) == (1.0, 1.0)


def test_sqrt2_value():
    assert sc.smatrix(SQRT2, 1 / SQRT2) == pytest.approx(-1j)
    lam = 0.5
    r = np.sqrt(1 - lam**2)
    assert sc.smatrix_via_t(SQRT2, lam) == pytest.approx((r - 1j * lam) / (r + 1j * lam))


def test_three_routes_at_point():
    s = sc.smatrix(2.0, 0.3)
    assert abs(s - sc.smatrix_via_t(2.0, 0.3)) < 1e-12
    assert abs(s - sc.smatrix_via_sigma(2.0, 0.3)) < 1e-12
    assert abs(sc.smatrix_via_sigma(1.3, 0.7) - sc.smatrix(1.3, 0.7)) < 1e-12


@given(coupling, band)
def test_unitarity_and_symmetry(a, lam):
    s = sc.smatrix(a, lam)
    assert abs(abs(s) - 1) < 1e-12
    assert sc.smatrix(a, -lam) == pytest.approx(np.conj(s), abs=1e-12)
    sp, sm = sc.sigma_pm(a, lam)
    assert abs(abs(sp) - 1) < 1e-12 and abs(abs(sm) - 1) < 1e-12
    assert abs(sc.smatrix_via_t(a, lam) - s) < 1e-12


@given(coupling, band)
def test_birman_krein(a, lam):
    xi = sc.ssf_closed(a, lam)
    assert abs(sc.smatrix(a, lam) - np.exp(-2j * np.pi * xi)) < 1e-10
    assert sc.ssf_closed(a, -lam) == pytest.approx(-xi, abs=1e-15)


def test_domain_errors():
    for fn in (sc.smatrix, sc.smatrix_via_t, sc.smatrix_via_sigma, sc.sigma_pm):
        with pytest.raises(DomainError):
            fn(1.5, 1.0)
    with pytest.raises(DomainError):
        sc.transform_row(1.5, 0, [0.2, 1.0])


def test_limit_laws():
    lam = np.linspace(-0.95, 0.95, 39)
    r = np.sqrt(1 - lam**2)
    big = (2 * lam**2 - 1 + 2j * lam * r) / (2 * lam**2 - 1 - 2j * lam * r)
    small = (lam + 1j * r) / (lam - 1j * r)
    assert np.abs(sc.smatrix(1e3, lam) - big).max() < 1e-4
    # the small-a limit is pointwise: S(a, 0) = 1 for every a, with a layer of width ~ a
    away = np.abs(lam) >= 0.05
    assert np.abs(sc.smatrix(1e-3, lam) - small)[away].max() < 1e-4
    assert sc.smatrix(1e-3, 0.0) == 1.0


def test_edge_limits_extrapolated():
    # S - limit behaves like c sqrt(1 - lam); two points cancel the leading term
    for a, limit in ((0.5, 1), (2.0, 1), (SQRT2, -1)):
        s1, s4 = sc.smatrix(a, 1 - 1e-8), sc.smatrix(a, 1 - 4e-8)
        assert abs(2 * s1 - s4 - limit) < 1e-6
        assert abs(s1 - limit) > 1e-5


def test_ssf_closed_values():
    assert sc.ssf_closed(1.7, 0.0) == 0.0
    assert sc.ssf_closed(SQRT2, 1.0) == 0.5
    assert sc.ssf_closed(SQRT2, 1 - 1e-12) == pytest.approx(0.5, abs=1e-6)
    a = 0.8
    peak = np.arctan((a * a - 1) / (a * np.sqrt(2 - a * a))) / np.pi
    assert sc.ssf_closed(a, a / SQRT2) == pytest.approx(peak)
    grid = np.linspace(0.0, 0.99, 200)
    assert np.all(sc.ssf_closed(a, grid) >= peak - 1e-15)


def test_ssf_plateaus():
    lam_p = spectral.eigenvalues(2.0)[1]
    x = np.array([1.0, 1.05, lam_p, lam_p + 1e-9, 3.0])
    assert np.allclose(sc.ssf_closed(2.0, x), [1, 1, 1, 0, 0])
    assert np.allclose(sc.ssf_closed(2.0, -x), [-1, -1, -1, 0, 0])
    assert np.allclose(sc.ssf_closed(1.2, [1.0, 1.5]), 0.0)


@pytest.mark.parametrize("a, lam", [(2.0, 1.05), (0.5, 0.5), (1.0, 0.4), (3.0, -0.7), (SQRT2, 0.9), (1.2, 1.3)])
def test_ssf_tracked(a, lam):
    assert sc.ssf_arg_tracked(a, lam) == pytest.approx(sc.ssf_closed(a, lam), abs=1e-8)


def test_ssf_tracked_large_coupling():
    for a in (20.0, 1e3):
        assert sc.ssf_arg_tracked(a, 0.4) == pytest.approx(sc.ssf_closed(a, 0.4), abs=1e-8)


def test_ssf_tracked_refuses_jumps():
    with pytest.raises(DomainError):
        sc.ssf_arg_tracked(2.0, 1.0)
    with pytest.raises(DomainError):
        sc.ssf_arg_tracked(2.0, spectral.eigenvalues(2.0)[1])


def test_scattering_record():
    r = sc.scattering_record(1.8, 0.45)
    assert abs(abs(r.s_value) - 1) < 1e-12
    assert abs(r.s_value - np.exp(-2j * np.pi * r.xi)) < 1e-10
    assert r.sigma_minus / r.sigma_plus == pytest.approx(r.s_value)
    assert abs(r.det_plus) == pytest.approx(np.sqrt(1.8**4 + 4 * (1 - 1.8**2) * 0.45**2))


def test_transform_rows():
    lam = np.linspace(-0.9, 0.9, 9)
    assert np.allclose(sc.transform_row(1.0, 0, lam), np.sqrt(2 / np.pi) * (1 - lam**2) ** 0.25)


@pytest.mark.parametrize("a", [0.6, 1.0, 1.3, SQRT2])
def test_transform_unitary_below_threshold(a):
    lam, w = oracle.theta_rule(512)
    n = 40
    # F_a F_a^* on psi_0 times a low-degree polynomial reproduces it
    g = sc.transform_row(a, 0, lam) * (1 + lam - 2 * lam**3)
    coef = sc.adjoint_transform(a, g, lam, w, n)
    assert np.abs(coef[4:]).max() < 1e-9
    # at a = sqrt 2 the rows blow up like (1 - lam^2)^(-1/4) at the edges
    weight = (1 - lam**2) ** 0.25
    assert np.abs(weight * (sc.forward_transform(a, coef, lam) - g)).max() < 1e-8
    # F_a^* F_a e_0 = e_0 when there are no eigenvalues
    back = sc.adjoint_transform(a, sc.forward_transform(a, [1.0], lam), lam, w, 4)
    assert np.allclose(back, [1, 0, 0, 0], atol=1e-10)


def test_transform_deficit_above_threshold():
    a = 2.0
    lam, w = oracle.theta_rule(512)
    back = sc.adjoint_transform(a, sc.forward_transform(a, [1.0], lam), lam, w, 1)
    assert back[0] == pytest.approx(1 - 2 * spectral.atom_weight(a), abs=1e-12)


@settings(max_examples=10, deadline=None)
@given(st.floats(0.2, SQRT2), st.sampled_from([1, -1]), st.lists(st.floats(-1, 1), min_size=1, max_size=6))
def test_wave_image_isometric(a, sign, f):
    f = np.array(f)
    img = sc.wave_operator_image(a, f, sign, 1024, nodes=2048)
    assert np.linalg.norm(img) == pytest.approx(np.linalg.norm(f), abs=1e-8)


def test_wave_check_free_case():
    f = np.array([1.0, -0.5, 0.25])
    assert sc.wave_operator_check(1.0, 30.0, f, 2048) < 1e-10


def test_wave_check_decreases():
    f = np.array([1.0])
    d = [sc.wave_operator_check(1.5, t, f, 2048) for t in (-10.0, -50.0, -200.0)]
    assert d[2] < d[1] < d[0]
    assert d[2] < 5e-2


def test_wave_check_preconditions():
    f = np.array([1.0])
    with pytest.raises(DomainError):
        sc.wave_operator_check(1.5, 10.0, f, 1024)
    with pytest.raises(DomainError):
        sc.wave_operator_check(1.5, 10.0, np.ones(300), 2048)
    with pytest.raises(DomainError):
        sc.wave_operator_check(1.5, 0.0, f, 2048)
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        sc.wave_operator_check(1.5, 1800.0, f, 2048)
    assert any(issubclass(r.category, sc.ReflectionWarning) for r in rec)


def test_oscillatory_decay():
    assert np.isfinite(sc.oscillatory_decay_check(0, 0.0))
    grid = [(n, t) for n in (0, 10, 50, 100, 200) for t in (-200.0, -50.0, 0.0, 50.0, 200.0)]
    vals = np.array([sc.oscillatory_decay_check(n, t) for n, t in grid])
    assert np.all(np.isfinite(vals))
    bound = vals.max()
    # refining the grid does not push the scaled quantity up appreciably
    fine = [(n, t) for n in range(0, 201, 25) for t in np.linspace(-200, 200, 17)]
    assert max(sc.oscillatory_decay_check(n, t) for n, t in fine) < 2 * bound
    with pytest.raises(DomainError):
        sc.oscillatory_decay_check(-1, 0.0)


def test_oscillatory_wrong_side_grows():
    n, t = 100, 60.0
    good = sc.oscillatory_decay_check(n, t, p=2)
    bad = sc.oscillatory_decay_check(n, t, p=2, side=Side.PLUS)
    assert bad > 100 * good
