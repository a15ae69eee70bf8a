import time
from fractions import Fraction

import numpy as np
import pytest

from facilidyn.model import Params, alpha2, bt_point, equilibrium_poly
from facilidyn.polyalg import certified_roots, real_roots
from facilidyn.regions import LABELS, Kind, RegionLabel, Role, bt_region, census_batch, classify, classify_kind, cmp, \
    equilibria, predicted_trace_sign, predict_trace_sign_from_x0, predicted_census, random_params, verify_census


@pytest.mark.parametrize('params, label', [
    ((0.5, 1, 0.62, 14.2), 'P4'),
    ((0.5, 1, 0.62, 14.3), 'P52'),
    ((0.5, 1, 0.62, 14.42), 'P51'),
    ((0.5, 5.5, 1, 0.1), 'P11'),
    ((0.5, 1, 1, 0.5), 'P2'),
    ((1.5, 1, 1, 1), 'H_GE_1'),
])
def test_classify(params, label):
    result = classify(Params(*params))
    assert result == RegionLabel(label, False)
    assert result.name in LABELS


def test_surface_labels_need_exact_construction():
    h, k, sigma = 0.5, 1, 0.62
    assert classify(Params(h, k, sigma, alpha2(h, k, sigma))) == RegionLabel('S51', True)
    # k = k1 exactly
    assert classify(Params(h, 2.0, 1.0, 0.1)).name == 'S1'
    assert classify(Params(h, 2.0, 1.0, 0.1)).on_surface
    assert classify(Params(1.0, 1, 1, 1)) == RegionLabel('H_GE_1', True)


def test_cmp():
    assert cmp(1.0, 1.0 + 1e-12, 1e-9) == 0
    assert cmp(1.0, 2.0, 1e-9) == -1
    assert cmp(2.0, 1.0, 1e-9) == 1


def test_classify_kind():
    assert classify_kind(0.0, -1.0, 1.0, 1e-9) is Kind.Saddle
    assert classify_kind(-3.0, 2.0, 1.0, 1e-9) is Kind.StableNode
    assert classify_kind(-1.0, 2.0, 1.0, 1e-9) is Kind.StableFocus
    assert classify_kind(3.0, 2.0, 1.0, 1e-9) is Kind.UnstableNode
    assert classify_kind(1.0, 2.0, 1.0, 1e-9) is Kind.UnstableFocus
    assert classify_kind(0.0, 2.0, 1.0, 1e-9) is Kind.CenterType
    assert classify_kind(1.0, 0.0, 1.0, 1e-9) is Kind.DegenerateSaddleNode
    assert classify_kind(0.0, 0.0, 1.0, 1e-9) is Kind.Cusp
    assert Kind.Cusp.degenerate and not Kind.Saddle.degenerate


def test_equilibria_four_point_census():
    eqs = {e.role: e for e in equilibria(Params(0.5, 1, 0.62, 14.3))}
    assert set(eqs) == {Role.E0, Role.Ek, Role.E1, Role.E2}
    assert eqs[Role.E0].kind is Kind.Saddle
    assert eqs[Role.Ek].kind is Kind.StableNode
    assert eqs[Role.E1].kind in (Kind.StableFocus, Kind.StableNode)
    assert eqs[Role.E2].kind is Kind.Saddle
    assert eqs[Role.E1].x < eqs[Role.E2].x
    assert eqs[Role.Ek].x == 1.0 and eqs[Role.Ek].y == 0.0


def test_equilibria_below_saddle_node():
    roles = [e.role for e in equilibria(Params(0.5, 1, 0.62, 14.2))]
    assert roles == [Role.E0, Role.Ek]


def test_equilibria_without_interior_for_large_h():
    eqs = equilibria(Params(1.5, 1, 1, 1))
    assert [e.role for e in eqs] == [Role.E0, Role.Ek]
    assert eqs[1].kind is Kind.StableNode


def test_degenerate_equilibrium_on_saddle_node_surface():
    s2, a_star, e = bt_point(0.5, 1)
    eqs = equilibria(Params(0.5, 1, s2, a_star))
    assert eqs[-1].role is Role.Estar
    assert eqs[-1].kind.degenerate
    assert eqs[-1].x == pytest.approx(e.x, abs=1e-4)


@pytest.mark.parametrize('params', [
    (0.5, 1, 0.62, 14.2),
    (0.5, 1, 0.62, 14.3),
    (0.5, 1, 0.62, 14.42),
    (0.5, 5.5, 1, 0.1),
    (0.5, 1, 1, 0.5),
    (0.5, 3, 1, 2),
    (1.5, 1, 1, 1),
])
def test_verify_census(params):
    report = verify_census(Params(*params))
    assert report['match']
    assert not report['boundary']


def test_predicted_census():
    roles = [r for r, _ in predicted_census('P51')]
    assert roles == [Role.E0, Role.Ek, Role.E1, Role.E2]
    with pytest.raises(RuntimeError):
        predicted_census('P99')


def test_trace_sign_from_x0():
    for alpha in (14.3, 14.42):
        p = Params(0.5, 1, 0.62, alpha)
        e1 = next(e for e in equilibria(p) if e.role is Role.E1)
        expected = predicted_trace_sign(classify(p))
        assert predict_trace_sign_from_x0(p) == expected
        assert np.sign(e1.trace) == expected
    assert predict_trace_sign_from_x0(Params(0.5, 1, 0.62, 14.2)) is None
    assert predicted_trace_sign('P4') is None


def test_bt_region():
    s2, a_star, _ = bt_point(0.5, 1)
    assert bt_region(0.5, 1, s2, a_star) == 'BT'
    assert bt_region(0.5, 1, 0.62, 14.2) == 'R1'
    assert bt_region(0.5, 1, 0.62, 14.3) == 'R2'
    assert bt_region(0.5, 1, 0.5, 18.0) == 'R4'


def test_census_batch():
    rng = np.random.default_rng(0)
    result = census_batch(random_params(rng, 40))
    assert result['total'] + result['skipped'] == 40
    assert result['rate'] == 1.0
    assert len(result['labels']) == result['total']


def test_certified_equilibria_match_exact_isolation():
    rng = np.random.default_rng(2)
    for p in random_params(rng, 100):
        F, domain = equilibrium_poly(p), (Fraction(0), Fraction(p.k))
        roots = certified_roots(F, domain)
        if roots is not None:
            assert roots == pytest.approx(real_roots(F, domain), abs=1e-12 * max(1.0, p.k))


@pytest.mark.slow
def test_census_batch_runtime():
    start = time.perf_counter()
    result = census_batch(random_params(np.random.default_rng(0), 1000))
    assert time.perf_counter() - start < 60
    assert result['rate'] == 1.0
