import csv
import json

import pytest

from facilidyn.cli import EXIT_INVALID, EXIT_OK, build_parser, main

QUARTET = ['--h', '0.5', '--k', '1', '--sigma', '0.62']


@pytest.fixture(autouse=True)
def clean_tolerance(monkeypatch):
    monkeypatch.delenv('FACILIDYN_TOL', raising=False)


def run_json(capsys, argv):
    assert main(argv) == EXIT_OK
    return json.loads(capsys.readouterr().out)


def test_classify(capsys):
    report = run_json(capsys, ['classify', *QUARTET, '--alpha', '14.3'])
    assert report['label'] == 'P52'
    assert not report['boundary']
    assert report['interior_equilibria'] == 2
    assert report['census_match']
    assert report['thresholds']['alpha2'] == pytest.approx(14.339, abs=1e-3)


def test_classify_large_handling_time(capsys):
    report = run_json(capsys, ['classify', '--h', '1.5', '--k', '1', '--sigma', '1', '--alpha', '1'])
    assert report['label'] == 'H_GE_1'
    assert report['thresholds'] is None


def test_invalid_parameters():
    assert main(['classify', '--h', '0.5', '--k=-1', '--sigma', '1', '--alpha', '1']) == EXIT_INVALID
    assert main(['classify', *QUARTET, '--alpha', '14.3', '--tol', '0']) == EXIT_INVALID
    assert main(['nondegeneracy', '--h', 'half']) == EXIT_INVALID
    with pytest.raises(SystemExit):
        build_parser().parse_args(['classify', '--h', '0.5'])


def test_thresholds(capsys):
    th = run_json(capsys, ['thresholds', *QUARTET])
    assert th['alpha1'] == pytest.approx(14.223, abs=1e-3)
    assert th['k1'] == pytest.approx(2.0)


def test_nondegeneracy(capsys):
    report = run_json(capsys, ['nondegeneracy', '--h', '1/4'])
    assert report['table_match']


def test_equilibria(tmp_path, capsys):
    data = run_json(capsys, ['equilibria', *QUARTET, '--alpha', '14.3'])
    assert [e['role'] for e in data['equilibria']] == ['E0', 'Ek', 'E1', 'E2']
    assert main(['equilibria', *QUARTET, '--alpha', '14.3', '--format', 'csv']) == EXIT_INVALID
    path = tmp_path / 'eq.csv'
    assert main(['equilibria', *QUARTET, '--alpha', '14.3', '--out', str(path)]) == EXIT_OK
    with open(path, newline='') as f:
        assert len(list(csv.DictReader(f))) == 4


def test_simulate(tmp_path):
    path = tmp_path / 'orbit.csv'
    argv = ['simulate', *QUARTET, '--alpha', '14.3', '--x0', '0.5', '--y0', '0.1', '--t', '10', '--out', str(path)]
    assert main(argv) == EXIT_OK
    assert path.read_text().splitlines()[0] == 't,x,y'
    assert main(['simulate', *QUARTET, '--alpha', '14.3', '--x0', '-0.5', '--y0', '0.1']) == EXIT_INVALID


def test_sweep(tmp_path):
    path = tmp_path / 'sweep.csv'
    argv = ['sweep', '--h', '0.5', '--k', '1', '--sigma-min', '0.62', '--sigma-max', '0.62', '--n-sigma', '1',
            '--alpha-min', '14.2', '--alpha-max', '14.3', '--n-alpha', '2', '--no-cycles', '--out', str(path)]
    assert main(argv) == EXIT_OK
    with open(path, newline='') as f:
        assert [r['label'] for r in csv.DictReader(f)] == ['P4', 'P52']


@pytest.mark.slow
def test_curves(tmp_path):
    path = tmp_path / 'curves.csv'
    argv = ['curves', '--h', '0.5', '--k', '1', '--sigma-min', '0.54', '--sigma-max', '0.57', '--n', '4',
            '--out', str(path)]
    assert main(argv) == EXIT_OK
    lines = path.read_text().splitlines()
    assert lines[0] == 'sigma,alpha_sn,alpha_h,alpha_hl'
    assert len(lines) == 5


def test_verify_quick(tmp_path, capsys):
    path = tmp_path / 'verify.json'
    assert main(['verify', '--quick', '--out', str(path)]) == EXIT_OK
    assert capsys.readouterr().out.startswith('PASS census')
    reports = json.loads(path.read_text())
    assert len(reports) == 1 and reports[0]['passed']
