import pytest

from facilidyn.checks import CensusCheck, Check, ClosedFormCheck, ConstantsCheck, Outcome, RootCountCheck, run_suite, \
    suite
from facilidyn.checks import acceptance
from facilidyn.localform import estar_sn_reduction, mu_taylor


class Failing(Check):
    name = 'failing'

    def run(self) -> Outcome:
        raise ArithmeticError('no convergence')


class Mistyped(Check):
    name = 'mistyped'

    def run(self) -> Outcome:
        raise TypeError('unsupported operand')


class Passing(Check):
    name = 'passing'

    def run(self) -> Outcome:
        return Outcome(True, 1, 1)


def test_check_reports_exceptions():
    report = Failing()()
    assert not report['passed']
    assert report['name'] == 'failing'
    assert 'ArithmeticError' in report['measured']
    assert report['seconds'] >= 0


def test_check_reports_any_error():
    report = Mistyped()()
    assert not report['passed']
    assert 'TypeError' in report['measured']
    reports = run_suite([Mistyped(), Passing()])
    assert [r['name'] for r in reports] == ['mistyped', 'passing']
    assert [r['passed'] for r in reports] == [False, True]


def test_quick_suite():
    checks = suite(quick=True)
    assert len(checks) == 1 and isinstance(checks[0], CensusCheck)
    assert len(suite()) == 10
    assert len({c.name for c in suite()}) == 10


def test_constants_and_closed_forms():
    reports = run_suite([ConstantsCheck(), ClosedFormCheck()])
    assert [r['name'] for r in reports] == ['bt-constants', 'closed-forms']
    assert all(r['passed'] for r in reports)


def test_closed_forms_cover_saddle_node_chain():
    report = ClosedFormCheck()()
    rel = report['measured'][0]['relative']
    assert set(rel) >= {'a100', 'a010', 'a001', 'b100', 'b010', 'b020', 'p001', 'q002', 'c20', 'c11', 'c02',
                        'mu110', 'mu101'}
    assert max(rel.values()) <= 1e-6


def test_saddle_node_manifold_values():
    sn = estar_sn_reduction(0.5, 1, 0.62)
    assert sn.manifold[(1, 1)] == pytest.approx(231.7, rel=1e-3)
    assert sn.manifold[(0, 2)] == pytest.approx(438.1, rel=1e-3)
    mu = mu_taylor(0.5, 1)['mu1']
    assert mu[1, 0] == pytest.approx(0.090233, rel=1e-4)
    assert mu[0, 1] == pytest.approx(2.60037, rel=1e-4)


def test_root_count_check_needs_table_match(monkeypatch):
    def scan(table_match):
        return lambda: {'reports': [{'g2_roots': 0, 'zeta1_roots': 0}], 'table_match': table_match}

    monkeypatch.setattr(acceptance, 'g2_g3_nondegeneracy', scan(True))
    report = RootCountCheck(polys=5)()
    assert report['passed']
    assert report['measured']['bracketed']

    monkeypatch.setattr(acceptance, 'g2_g3_nondegeneracy', scan(False))
    report = RootCountCheck(polys=5)()
    assert not report['passed']
    assert report['measured']['table_match'] is False


def test_census_check():
    report = CensusCheck(draws=50, seed=1)()
    assert report['passed']
    assert report['measured']['total'] + report['measured']['skipped'] == 50
