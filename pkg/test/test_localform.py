from fractions import Fraction

import numpy as np
import pytest

from facilidyn.checks.acceptance import _a20_closed, _b20_closed, _n_closed
from facilidyn.localform import BRACKETS, Bifurcation, alpha3, bt_curves, bt_cusp, bt_unfolding, ek_reduction, \
    estar_sn_reduction, focal_certificate, g2_g3_nondegeneracy, hl_coefficients, hl_curve_implicit, hopf, isolate_factor, \
    locate, nondegeneracy_report, shifted_focal_coefficients, sign_trace_estar, taylor_coefficients, trace_estar, \
    unfolding_jacobian
from facilidyn.model import Params, State, alpha1, alpha2, bt_point, estar, phi0_poly, phi_poly, trace_det
from facilidyn.regions import Role, equilibria
from facilidyn.utils import DegenerateError, ParameterError


def test_taylor_coefficients_at_equilibrium():
    s2, a_star, e = bt_point(0.5, 1)
    a, b = taylor_coefficients(Params(0.5, 1, s2, a_star), e, order=2)
    assert a[(0, 0)] == pytest.approx(0, abs=1e-12)
    assert b[(0, 0)] == pytest.approx(0, abs=1e-12)
    assert a[(1, 0)] == pytest.approx(-0.640385, abs=1e-5)
    assert b[(1, 0)] == pytest.approx(0.155315, abs=1e-5)
    assert b[(0, 1)] == pytest.approx(0.640385, abs=1e-5)
    assert all(sum(m) <= 2 for m in a)


def test_taylor_coefficients_in_parameter():
    p = Params(0.5, 1, 0.62, 14.3)
    a, b = taylor_coefficients(p, State(0.4, 0.1), order=2, param='alpha')
    assert all(len(m) == 3 for m in a)
    # dy/dt depends on alpha only through k y x alpha y (1 - h)
    assert b[(0, 0, 1)] == pytest.approx(1 * 0.1 * 0.4 * 0.1 * 0.5)


def test_ek_transcritical():
    red = ek_reduction(0.5, 1, 1)
    assert red.classification is Bifurcation.Transcritical
    assert red.quadratic != 0
    other = ek_reduction(0.5, 1, 2)
    # the u**2 coefficient is proportional to alpha sigma + h - 1
    assert red.quadratic / other.quadratic == pytest.approx(1 / 3, rel=1e-9)


def test_ek_pitchfork():
    red = ek_reduction(Fraction(1, 2), 1, Fraction(1, 2))
    assert red.classification is Bifurcation.Pitchfork
    assert red.quadratic == 0
    assert red.cubic != 0
    with pytest.raises(ParameterError):
        ek_reduction(1.5, 1, 1)


def test_estar_saddle_node():
    red = estar_sn_reduction(0.5, 1, 0.62)
    assert red.classification is Bifurcation.SaddleNode
    assert red.quadratic != 0
    assert red.details['alpha1'] == pytest.approx(alpha1(0.5, 1, 0.62))
    assert red.details['zeta_prime'] == pytest.approx(red.constant / red.quadratic)
    s2 = bt_point(0.5, 1)[0]
    with pytest.raises(DegenerateError):
        estar_sn_reduction(0.5, 1, s2)
    with pytest.raises(ParameterError):
        estar_sn_reduction(0.5, 3, 1)


def test_trace_estar():
    p = Params(0.5, 1, 0.62, alpha1(0.5, 1, 0.62))
    t, _ = trace_det(p, estar(0.5, 1, 0.62))
    assert trace_estar(0.5, 1, 0.62) == pytest.approx(t, rel=1e-6)
    assert sign_trace_estar(0.5, 1, 0.5) == 1
    assert sign_trace_estar(0.5, 1, 0.62) == -1
    assert sign_trace_estar(0.5, 1, bt_point(0.5, 1)[0]) == 0


def test_hopf_weak_focus():
    d = hopf(0.5, 1, 0.62)
    assert d.alpha2 == pytest.approx(14.339, abs=1e-3)
    assert d.x1 == pytest.approx(0.68644, abs=1e-5)
    assert d.beta == pytest.approx(0.29178, abs=1e-4)
    assert d.beta_closed_form == pytest.approx(d.beta, rel=1e-6)
    assert d.focal_sign == -1
    assert d.G_value < 0
    assert d.lyapunov < 0
    assert d.transversality == pytest.approx(0.3388, abs=1e-3)
    assert d.transversality_partial == pytest.approx(0.01572, abs=1e-4)
    assert set(d.to_dict()) >= {'beta', 'G_value', 'focal_sign', 'transversality'}


def test_hopf_transversality_follows_e1():
    h, k, sigma = 0.5, 1, 0.62
    d = hopf(h, k, sigma)
    delta = 1e-5

    def trace_e1(alpha):
        return next(e.trace for e in equilibria(Params(h, k, sigma, alpha)) if e.role is Role.E1)

    slope = (trace_e1(d.alpha2 + delta) - trace_e1(d.alpha2 - delta)) / (2 * delta)
    assert slope == pytest.approx(d.transversality, rel=1e-4)


def test_hopf_scope():
    with pytest.raises(ParameterError):
        hopf(0.5, 1, 0.5)
    with pytest.raises(ParameterError):
        hopf(0.5, 7, 1)
    with pytest.raises(ParameterError):
        hopf(1.5, 1, 1)


def test_focal_certificates():
    assert all(c < 0 for c in shifted_focal_coefficients(0.5, 1))
    cert = focal_certificate(0.5)
    assert cert == {'phi_positive_roots': 0, 'phi0_positive_roots': 0, 'phi_at_zero': -1, 'phi0_at_zero': 1}


@pytest.mark.parametrize('h', [Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)])
def test_phi_signs(h):
    phi, phi_zero = phi_poly(h), phi0_poly(h)
    assert phi.eval(0) == -8 * (h + 1) / h
    for z in (Fraction(1, 4), 1, 2, 5):
        assert phi.eval(z) < 0
        assert phi_zero.eval(z) > 0
    assert focal_certificate(float(h))['phi_at_zero'] == -1


@pytest.mark.parametrize('factor, count', [('D31', 1), ('D51', 3), ('D61', 3), ('D71', 3)])
def test_isolated_factor_roots_lie_in_brackets(factor, count):
    ivs = isolate_factor(factor)
    brackets = [(br.lo, br.hi) for br in BRACKETS.values() if br.factor == factor]
    assert len(ivs) == count
    for iv in ivs:
        assert iv.width <= Fraction(1, 10 ** 6)
        assert any(lo <= iv.lo and iv.hi <= hi for lo, hi in brackets)
    with pytest.raises(RuntimeError):
        isolate_factor('D99')


def test_bt_cusp():
    cusp = bt_cusp(0.5, 1)
    s = cusp.sigma2
    assert cusp.a[(2, 0)] == pytest.approx(-1.44356, abs=1e-4)
    assert cusp.a[(2, 0)] == pytest.approx(_a20_closed(0.5, 1, s), rel=1e-6)
    assert cusp.B20 == pytest.approx(_b20_closed(0.5, 1, s), rel=1e-6)
    assert cusp.N == pytest.approx(_n_closed(0.5, 1, s), rel=1e-6)
    assert cusp.normal_form['u2'] == pytest.approx(1.0)
    assert cusp.normal_form['uv'] == pytest.approx(-1.0)
    assert cusp.normal_form['v'] == pytest.approx(1.0)
    with pytest.raises(ParameterError):
        bt_cusp(0.5, 3)


def test_unfolding_at_origin():
    d = bt_unfolding(0.5, 1, 0.0, 0.0)
    assert d.beta1 == pytest.approx(0, abs=1e-9)
    assert d.beta2 == pytest.approx(0, abs=1e-9)
    assert d.A != 0 and d.B != 0


@pytest.mark.slow
def test_unfolding_is_nondegenerate():
    jac = unfolding_jacobian(0.5, 1)
    assert jac['mu_det'] != 0
    assert jac['nondegeneracy'] != 0
    assert np.sign(jac['nondegeneracy']) == np.sign(jac['closed_form'])


@pytest.mark.slow
def test_homoclinic_curve_near_cusp():
    h, k = 0.5, 1
    s2, a_star, _ = bt_point(h, k)
    a, _ = hl_coefficients(h, k)
    # all three curves leave the cusp along the saddle-node tangent
    assert a == pytest.approx(-a_star / s2, rel=1e-3)
    assert alpha3(h, k, s2 - 0.01) is None

    eps2 = 1e-3 * s2
    sigma = s2 + eps2
    a1, a2, a3 = alpha1(h, k, sigma), alpha2(h, k, sigma), alpha3(h, k, sigma)
    assert a1 < a2 < a3
    implicit = a_star + hl_curve_implicit(h, k, eps2)
    assert abs(implicit - a3) <= 0.25 * abs(a3 - a2)
    with pytest.raises(ParameterError):
        hl_curve_implicit(h, k, -eps2)


@pytest.mark.slow
def test_bt_curves():
    s2 = bt_point(0.5, 1)[0]
    curves = bt_curves(0.5, 1, (s2 - 0.02, s2 + 0.02), 8)
    below = curves.sigma < s2
    first = int(np.argmax(~below))
    assert np.isnan(curves.alpha_h[below]).all()
    assert np.isnan(curves.alpha_hl[below]).all()
    assert not np.isnan(curves.alpha_sn).any()
    assert not np.isnan(curves.alpha_hl[~below]).any()
    assert curves.alpha_sn[first] < curves.alpha_h[first] < curves.alpha_hl[first]
    assert len(list(curves.rows())) == 8
    with pytest.raises(ParameterError):
        bt_curves(0.5, 1, (0.6, 0.5), 8)


@pytest.mark.parametrize('h', [Fraction(1, 4), Fraction(45, 100)])
def test_nondegeneracy_report(h):
    report = nondegeneracy_report(h)
    assert report['table_match']
    assert report['g2_negative']
    assert report['g3_negative']
    assert report['zeta1_positive']
    assert report['subinterval'] is not None


def test_nondegeneracy_over_samples():
    scan = g2_g3_nondegeneracy([Fraction(1, 4), '45/100'])
    assert scan['samples'] == ['1/4', '9/20']
    assert scan['g2_negative'] and scan['g3_negative'] and scan['zeta1_positive']
    assert scan['table_match']
    assert len(scan['reports']) == 2


def test_locate():
    assert locate(Fraction(1, 4)).hi == 'h2'
    assert locate(Fraction(1, 2)) is None
    with pytest.raises(ParameterError):
        nondegeneracy_report(Fraction(3, 2))
