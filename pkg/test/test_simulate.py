import csv
import json
from fractions import Fraction

import numpy as np
import pytest

from facilidyn.localform import BTCurves, alpha3
from facilidyn.model import Params, State, alpha2, sigma2
from facilidyn.regions import Kind, Role, equilibria
from facilidyn.simulate import cycles
from facilidyn.simulate import Axis, Classification, OrbitClass, Stability, amplitude_law, classify_orbit, \
    find_limit_cycle, focus, hausdorff, homoclinic_gap, hopf_onset, integrate, make_section, return_map, \
    saddle_manifolds, sweep, to_json, write_curves_csv, write_equilibria_csv, write_orbit_csv, \
    write_phase_portrait_svg, write_sweep_csv
from facilidyn.utils import ParameterError

QUARTET = Params(0.5, 1, 0.62, 14.3)
LARGE_CAPACITY = Params(0.5, 5.5, 1, 0.1)


def test_predator_axis_is_invariant():
    orbit = integrate(QUARTET, State(0.0, 0.5), 10.0)
    assert orbit.success and not orbit.escaped
    assert np.all(orbit.states[:, 0] == 0)
    assert orbit.final.y == pytest.approx(0.5 * np.exp(-10.0), rel=1e-6)


def test_integrate_rejects_bad_input():
    with pytest.raises(ParameterError):
        integrate(QUARTET, State(-0.1, 0.5), 10.0)
    with pytest.raises(ParameterError):
        integrate(QUARTET, State(0.1, 0.5), 0.0)
    with pytest.raises(ParameterError):
        integrate(Params(0.5, -1, 1, 1), State(0.1, 0.5), 10.0)


def test_predator_dies_out_for_large_handling_time():
    p = Params(1.5, 1, 1, 1)
    orbit = integrate(p, State(0.5, 0.5), 100.0)
    c = classify_orbit(orbit, equilibria(p), window=50.0)
    assert c.kind is OrbitClass.ConvergedTo
    assert c.role is Role.Ek
    assert str(c) == 'converged:Ek'


def test_classification_labels():
    assert str(Classification(OrbitClass.PeriodicCycle, cycle=0)) == 'periodic:0'
    assert str(Classification(OrbitClass.EscapedDomain)) == 'escaped'
    assert str(Classification(OrbitClass.Undetermined)) == 'undetermined'


def test_short_window_is_undetermined():
    orbit = integrate(QUARTET, State(0.5, 0.1), 1.0, t_eval=[0.0, 1.0])
    assert classify_orbit(orbit, equilibria(QUARTET), window=0.5).kind is OrbitClass.Undetermined


def test_section_through_focus():
    center = focus(QUARTET)
    assert center is not None
    section = make_section(QUARTET, center)
    assert np.linalg.norm(section.direction) == pytest.approx(1.0)
    assert section.direction[0] >= 0
    assert section.coordinate(section.point(0.01)) == pytest.approx(0.01)
    # the focus attracts below the Hopf threshold
    s_next, t = return_map(QUARTET, 0.01, section)
    assert 0 < s_next < 0.01
    assert t == pytest.approx(section.period_hint, rel=0.1)
    assert focus(Params(0.5, 1, 0.62, 14.2)) is None


@pytest.mark.slow
def test_cycle_above_hopf_threshold():
    cycle = find_limit_cycle(Params(0.5, 1, 0.62, 14.42))
    assert cycle is not None
    assert cycle.stability is Stability.Stable
    assert abs(cycle.multiplier) < 1
    assert cycle.residual < 1e-6
    assert cycle.amplitude > 0
    assert cycle.points.shape == (400, 2)
    assert set(cycle.to_dict()) >= {'period', 'stability', 'amplitude'}


@pytest.mark.slow
def test_no_cycle_below_hopf_threshold():
    assert find_limit_cycle(QUARTET) is None


@pytest.mark.slow
def test_large_capacity_cycle():
    cycle = find_limit_cycle(LARGE_CAPACITY)
    assert cycle is not None and cycle.stability is Stability.Stable
    orbit = integrate(LARGE_CAPACITY, cycle.points[0], 20 * cycle.period, dense=True)
    c = classify_orbit(orbit, equilibria(LARGE_CAPACITY), window=5 * cycle.period)
    assert c.kind is OrbitClass.PeriodicCycle


@pytest.mark.slow
def test_hopf_onset_matches_threshold():
    a2 = alpha2(0.5, 1, 0.62)
    onset = hopf_onset(0.5, 1, 0.62, a2 - 0.01, a2 + 0.01, resolution=1e-4)
    assert abs(onset - a2) / a2 <= 5e-4
    with pytest.raises(ParameterError):
        hopf_onset(0.5, 1, 0.62, a2 + 0.005, a2 + 0.01)


@pytest.mark.slow
def test_amplitude_law():
    law = amplitude_law(0.5, 1, 0.62)
    assert law['r2'] > 0.99
    assert law['slope'] > 0
    assert len(law['amplitudes']) == 3


def test_saddle_manifolds_of_origin():
    eqs = {e.role: e for e in equilibria(QUARTET)}
    with pytest.raises(ParameterError):
        saddle_manifolds(QUARTET, eqs[Role.Ek], 5.0)
    branches = saddle_manifolds(QUARTET, eqs[Role.E0], 5.0)
    unstable = [b for b in branches.values() if not b.stable]
    stable = [b for b in branches.values() if b.stable]
    assert sum(b.orbit is None for b in unstable) == 1
    assert sum(b.orbit is None for b in stable) == 1
    # the unstable manifold of E0 is the prey axis, the stable one the predator axis
    u = next(b for b in unstable if b.orbit is not None)
    s = next(b for b in stable if b.orbit is not None)
    assert u.eigenvalue > 0 > s.eigenvalue
    assert np.all(u.orbit.states[:, 1] == 0)
    assert np.all(s.orbit.states[:, 0] == 0)


def test_homoclinic_gap_needs_two_interior_equilibria():
    assert homoclinic_gap(Params(0.5, 1, 0.62, 14.2)) is None


def test_hausdorff():
    a = np.array([[0.0, 0.0], [1.0, 0.0]])
    b = np.array([[0.0, 0.5], [1.0, 0.0]])
    assert hausdorff(a, a) == 0
    assert hausdorff(a, b) == pytest.approx(0.5)
    assert hausdorff(a, b) == hausdorff(b, a)


def test_sweep_single_point():
    records = sweep(QUARTET, Axis('sigma', 0.62, 0.62, 1), Axis('alpha', 14.3, 14.3, 1), cycles=False)
    assert len(records) == 1
    r = records[0]
    assert r.label == 'P52'
    assert r.bt_region == 'R2'
    assert r.match and not r.boundary
    assert r.cycle is None
    assert r.row()['kinds'].startswith('E0:saddle')


def test_sweep_axes():
    assert len(Axis('alpha', 1, 2, 5).values()) == 5
    with pytest.raises(ParameterError):
        Axis('alpha', 2, 1, 5).values()
    with pytest.raises(AssertionError):
        Axis('beta', 1, 2, 5).values()
    records = sweep(Params(0.5, 1, 1, 0.5), Axis('alpha', 0.25, 0.5, 2), Axis('sigma', 1, 3, 3), cycles=False)
    assert len(records) == 6
    assert [(r.params.alpha, r.params.sigma) for r in records[:3]] == [(0.25, 1), (0.25, 2), (0.25, 3)]


def test_orbit_csv(tmp_path):
    path = tmp_path / 'orbit.csv'
    orbit = integrate(QUARTET, State(0.5, 0.1), 5.0)
    write_orbit_csv(orbit, str(path))
    assert path.read_text().splitlines()[0] == 't,x,y'
    data = np.loadtxt(path, delimiter=',', skiprows=1)
    assert data.shape == (len(orbit), 3)
    assert data[0, 1:] == pytest.approx([0.5, 0.1])


def test_tables_csv(tmp_path):
    eq_path, sweep_path, curves_path = tmp_path / 'eq.csv', tmp_path / 'sweep.csv', tmp_path / 'curves.csv'
    write_equilibria_csv(equilibria(QUARTET), str(eq_path))
    with open(eq_path, newline='') as f:
        rows = list(csv.DictReader(f))
    assert [r['role'] for r in rows] == ['E0', 'Ek', 'E1', 'E2']
    assert rows[0]['kind'] == Kind.Saddle.value

    records = sweep(QUARTET, Axis('sigma', 0.62, 0.62, 1), Axis('alpha', 14.2, 14.3, 2), cycles=False)
    write_sweep_csv(records, str(sweep_path))
    with open(sweep_path, newline='') as f:
        rows = list(csv.DictReader(f))
    assert [r['label'] for r in rows] == ['P4', 'P52']

    curves = BTCurves(np.array([0.5, 0.6]), np.array([17.6, 14.7]), np.array([np.nan, 14.9]),
                      np.array([np.nan, 15.0]), 0.553, 15.94)
    write_curves_csv(curves, str(curves_path))
    lines = curves_path.read_text().splitlines()
    assert lines[0] == 'sigma,alpha_sn,alpha_h,alpha_hl'
    assert len(lines) == 3
    assert 'nan' in lines[1]


def test_to_json():
    text = to_json({'r': Fraction(1, 3), 'kind': Kind.Saddle, 'v': np.arange(3), 'x': np.float64(0.5),
                    'p': QUARTET})
    data = json.loads(text)
    assert data == {'r': '1/3', 'kind': 'saddle', 'v': [0, 1, 2], 'x': 0.5, 'p': [0.5, 1, 0.62, 14.3]}
    with pytest.raises(TypeError):
        to_json({'s': {1, 2}})


def test_phase_portrait_svg(tmp_path):
    path = tmp_path / 'portrait.svg'
    orbit = integrate(QUARTET, State(0.5, 0.1), 20.0)
    write_phase_portrait_svg(str(path), [orbit.states], equilibria(QUARTET), title='quartet')
    assert '<svg' in path.read_text()


def test_sweep_in_parallel_keeps_grid_order():
    args = Params(0.5, 1, 1, 0.5), Axis('alpha', 0.25, 0.5, 2), Axis('sigma', 1, 3, 3)
    sequential = sweep(*args, cycles=False)
    parallel = sweep(*args, cycles=False, workers=2)
    assert [tuple(r.params) for r in parallel] == [tuple(r.params) for r in sequential]
    assert [r.label for r in parallel] == [r.label for r in sequential]
    with pytest.raises(ParameterError):
        sweep(*args, cycles=False, workers=-1)


def test_cycle_search_stops_when_refined_orbit_does_not_return(monkeypatch):
    target, calls = 0.25, []

    def fake_return_map(p, s, section, **kwargs):
        calls.append(s)
        return None if s == target else (s, 1.0)

    monkeypatch.setattr(cycles, 'newton', lambda *args, **kwargs: target)
    monkeypatch.setattr(cycles, 'return_map', fake_return_map)
    assert find_limit_cycle(Params(0.5, 1, 0.62, 14.42), transient=5.0) is None
    assert target in calls


@pytest.mark.slow
def test_homoclinic_gap_changes_sign():
    s = sigma2(0.5, 1) + 0.05
    a2, a3 = alpha2(0.5, 1, s), alpha3(0.5, 1, s)
    before = homoclinic_gap(Params(0.5, 1, s, a2 + 0.3 * (a3 - a2)))
    after = homoclinic_gap(Params(0.5, 1, s, a3 + 0.5 * (a3 - a2)))
    assert before is not None and after is not None
    assert before * after < 0


@pytest.mark.slow
def test_saddle_unstable_manifold_winds_onto_cycle():
    p = Params(0.5, 1, 0.62, 14.42)
    cycle = find_limit_cycle(p)
    assert cycle is not None and cycle.stability is Stability.Stable
    saddle = next(e for e in equilibria(p) if e.role is Role.E2)
    branches = saddle_manifolds(p, saddle, 3000.0)
    spread = float(np.ptp(cycle.points, axis=0).max())
    gaps = [np.linalg.norm(cycle.points - b.orbit.states[-1], axis=1).min()
            for b in branches.values() if not b.stable and b.orbit is not None and not b.orbit.escaped]
    assert gaps and min(gaps) < 0.02 * spread
