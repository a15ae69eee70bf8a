"""
The reproduction suite: closed-form constants, equilibrium censuses, cycle existence, the Hopf and
Bogdanov-Takens nondegeneracy conditions and the homoclinic threshold, each measured against the
values derived for the cooperative-hunting model.
"""
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from facilidyn.checks.check import Check, Outcome
from facilidyn.localform import BRACKETS, alpha3, bt_cusp, bt_unfolding, discriminant_factor_roots, \
    estar_sn_reduction, focal_certificate, g2_g3_nondegeneracy, hopf, isolate_factor, mu_taylor, \
    shifted_focal_coefficients, unfolding_jacobian
from facilidyn.model import Params, State, alpha2, bt_point, cusp_poly, sigma2, trace_det, trace_det_closed_form
from facilidyn.polyalg import Poly, count_distinct_real_roots, sturm_isolate
from facilidyn.regions import Kind, Role, census_batch, equilibria, interior_roots, random_params
from facilidyn.simulate import Axis, amplitude_law, find_limit_cycle, hausdorff, homoclinic_alpha, hopf_onset, \
    sweep
from facilidyn.utils import seed_everything

BT_H, BT_K = 0.5, 1.0
QUARTET_SIGMA = 0.62
FAMILY = Params(0.5, 5.5, 1.0, 0.1)


def _close(value: float, target: float, tol: float) -> bool:
    return abs(value - target) <= tol


class ConstantsCheck(Check):
    name = 'bt-constants'

    def run(self) -> Outcome:
        s2, a_star, point = bt_point(BT_H, BT_K)
        measured = {'sigma2': s2, 'alpha_star': a_star, 'x': point.x, 'y': point.y}
        expected = {'sigma2': 0.55, 'alpha_star': 15.94, 'x': 0.72, 'y': 0.11}
        passed = (_close(s2, 0.55, 5e-3) and _close(a_star, 15.94, 1e-2)
                  and _close(point.x, 0.72, 5e-3) and _close(point.y, 0.11, 5e-3))
        return Outcome(passed, measured, expected)


class QuartetCheck(Check):
    """Census and cycle presence at four cooperation levels across the Bogdanov-Takens neighbourhood."""
    name = 'bt-quartet'

    EXPECTED = {
        14.2: (0, None, False),
        14.3: (2, Kind.StableFocus, False),
        14.42: (2, Kind.UnstableFocus, True),
        14.55: (2, Kind.UnstableFocus, False),
    }

    def __init__(self, transient: float = 500.0):
        self.transient = transient

    def run(self) -> Outcome:
        measured, passed = {}, True
        for alpha, (n_interior, e1_kind, has_cycle) in self.EXPECTED.items():
            p = Params(BT_H, BT_K, QUARTET_SIGMA, alpha)
            eqs = equilibria(p)
            interior = [e for e in eqs if e.role in (Role.E1, Role.E2, Role.Estar)]
            e1 = next((e for e in eqs if e.role is Role.E1), None)
            cycle = find_limit_cycle(p, transient=self.transient)
            measured[alpha] = {
                'interior': len(interior),
                'E1': None if e1 is None else e1.kind.value,
                'cycle': None if cycle is None else cycle.stability.value,
            }
            ok = len(interior) == n_interior and (cycle is not None) == has_cycle
            if e1_kind is not None:
                ok = ok and e1 is not None and e1.kind is e1_kind
            passed = passed and ok
        expected = {a: {'interior': n, 'E1': None if k is None else k.value, 'cycle': c}
                    for a, (n, k, c) in self.EXPECTED.items()}
        return Outcome(passed, measured, expected)


class CycleFamilyCheck(Check):
    """A single attracting cycle reached from inside and from outside."""
    name = 'large-capacity-cycle'

    def __init__(self, params: Params = FAMILY):
        self.params = params

    def run(self) -> Outcome:
        eqs = {e.role: e for e in equilibria(self.params)}
        kinds_ok = (eqs[Role.E0].kind is Kind.Saddle and eqs[Role.Ek].kind is Kind.Saddle
                    and Role.E1 in eqs and eqs[Role.E1].kind in (Kind.UnstableFocus, Kind.UnstableNode))
        inner = find_limit_cycle(self.params)
        if inner is None:
            return Outcome(False, {'cycle': None}, {'cycle': 'stable'})
        centroid = inner.points.mean(axis=0)
        far = inner.points[np.argmax(np.linalg.norm(inner.points - centroid, axis=1))]
        seed = np.maximum(centroid + 1.3 * (far - centroid), 1e-3)
        outer = find_limit_cycle(self.params, seed=State(*seed))
        distance = float('inf') if outer is None else hausdorff(inner.points, outer.points)
        measured = {
            'kinds': {r.value: e.kind.value for r, e in eqs.items()},
            'stability': inner.stability.value,
            'period': inner.period,
            'hausdorff': distance,
        }
        passed = kinds_ok and inner.stability.value == 'stable' and distance <= 1e-3
        return Outcome(passed, measured, {'stability': 'stable', 'hausdorff': '<= 1e-3'})


class CensusCheck(Check):
    name = 'census'

    def __init__(self, draws: int = 1000, seed: int = 0):
        self.draws = draws
        self.seed = seed

    def run(self) -> Outcome:
        rng = seed_everything(self.seed)
        batch = census_batch(random_params(rng, self.draws))
        measured = {'matched': batch['matched'], 'total': batch['total'], 'skipped': batch['skipped']}
        return Outcome(batch['matched'] == batch['total'], measured, {'rate': 1.0})


def random_poly(rng: np.random.Generator, max_degree: int = 8) -> Poly:
    degree = int(rng.integers(1, max_degree + 1))
    nums = rng.integers(-9, 10, size=degree + 1)
    dens = rng.integers(1, 5, size=degree + 1)
    if nums[-1] == 0:
        nums[-1] = 1
    return Poly([Fraction(int(n), int(d)) for n, d in zip(nums, dens)])


class RootCountCheck(Check):
    """Discriminant-sequence root counts against Sturm isolation, and the certified root counts."""
    name = 'root-counts'

    FACTOR_ROOTS = {'D31': 1, 'D51': 3, 'D61': 3, 'D71': 3}

    def __init__(self, polys: int = 500, seed: int = 0):
        self.polys = polys
        self.seed = seed

    def run(self) -> Outcome:
        rng = np.random.default_rng(self.seed)
        disagree = 0
        for _ in range(self.polys):
            p = random_poly(rng)
            if count_distinct_real_roots(p) != len(sturm_isolate(p)):
                disagree += 1
        isolated = {name: isolate_factor(name) for name in self.FACTOR_ROOTS}
        factor_counts = {name: len(ivs) for name, ivs in isolated.items()}
        bracketed = all(any(br.factor == name and br.lo <= iv.lo and iv.hi <= br.hi for br in BRACKETS.values())
                        for name, ivs in isolated.items() for iv in ivs)
        # raises when a bracket shows no sign change
        discriminant_factor_roots()
        scan = g2_g3_nondegeneracy()
        g2_free = all(r['g2_roots'] == 0 for r in scan['reports'])
        zeta1_free = all(r['zeta1_roots'] == 0 for r in scan['reports'])
        measured = {'disagreements': disagree, 'factor_roots': factor_counts, 'bracketed': bracketed,
                    'g2_root_free': g2_free, 'zeta1_root_free': zeta1_free, 'table_match': scan['table_match']}
        expected = {'disagreements': 0, 'factor_roots': dict(self.FACTOR_ROOTS), 'bracketed': True,
                    'g2_root_free': True, 'zeta1_root_free': True, 'table_match': True}
        passed = (disagree == 0 and factor_counts == expected['factor_roots'] and bracketed and g2_free and zeta1_free
                  and scan['table_match'])
        return Outcome(passed, measured, expected)


class TraceDetCheck(Check):
    """Closed-form trace and determinant at interior equilibria against the numerical Jacobian."""
    name = 'trace-det'

    def __init__(self, draws: int = 200, seed: int = 0, tol: float = 1e-8):
        self.draws = draws
        self.seed = seed
        self.tol = tol

    def run(self) -> Outcome:
        rng = np.random.default_rng(self.seed)
        worst, checked = 0.0, 0
        for _ in range(100 * self.draws):
            if checked == self.draws:
                break
            p = random_params(rng, 1)[0]
            roots, double = interior_roots(p)
            if double or not roots:
                continue
            for x in roots:
                s = State(x, p.sigma * x * (p.k - x) / p.k)
                t, d = trace_det(p, s)
                tc, dc = trace_det_closed_form(p, x)
                scale = max(abs(t), float(np.sqrt(abs(d))), 1e-12)
                worst = max(worst, abs(tc - t) / scale, abs(dc - d) / scale ** 2)
            checked += 1
        measured = {'max_relative_error': worst, 'draws': checked}
        return Outcome(worst <= self.tol and checked == self.draws, measured, {'max': self.tol})


class HopfCheck(Check):
    """
    Cycle onset against the Hopf threshold, the square-root amplitude law and the focal sign. Close to
    the cusp the law is fitted on small offsets only; on the large-capacity family, which has no saddle
    to collide with, it is fitted on offsets up to 1.6e-2.
    """
    name = 'hopf'

    def __init__(self, sigma: float = QUARTET_SIGMA, resolution: float = 1e-4, family: Optional[Params] = FAMILY,
                 family_deltas: Sequence[float] = (1e-3, 4e-3, 1.6e-2)):
        self.sigma = sigma
        self.resolution = resolution
        self.family = family
        self.family_deltas = family_deltas

    def run(self) -> Outcome:
        a2 = alpha2(BT_H, BT_K, self.sigma)
        onset = hopf_onset(BT_H, BT_K, self.sigma, a2 - 0.01, a2 + 0.01, resolution=self.resolution)
        law = amplitude_law(BT_H, BT_K, self.sigma)
        data = hopf(BT_H, BT_K, self.sigma)
        rel = abs(onset - a2) / a2
        measured = {'alpha2': a2, 'onset': onset, 'relative': rel, 'r2': law['r2'], 'focal_sign': data.focal_sign}
        passed = rel <= 5e-4 and law['r2'] > 0.99 and data.focal_sign == -1
        if self.family is not None:
            h, k, sigma, _ = self.family
            family_law = amplitude_law(h, k, sigma, self.family_deltas)
            measured['family_r2'] = family_law['r2']
            passed = passed and family_law['r2'] > 0.99
        return Outcome(passed, measured, {'relative': '<= 5e-4', 'r2': '> 0.99', 'focal_sign': -1})



class NondegeneracyCheck(Check):
    name = 'bt-nondegeneracy'

    def run(self) -> Outcome:
        base = bt_unfolding(BT_H, BT_K, 0.0, 0.0)
        jac = unfolding_jacobian(BT_H, BT_K)
        m = mu_taylor(BT_H, BT_K)
        m1, m2 = m['mu1'], m['mu2']
        norm = abs(m1[1, 0] * m2[0, 1]) + abs(m1[0, 1] * m2[1, 0])
        cusp = bt_cusp(BT_H, BT_K)
        measured = {'beta1': base.beta1, 'beta2': base.beta2, 'det': jac['det'],
                    'normalized_det': jac['mu_det'] / norm, 'B20': cusp.B20, 'N': cusp.N}
        passed = (abs(base.beta1) <= 1e-8 and abs(base.beta2) <= 1e-8 and abs(jac['mu_det']) / norm > 1e-6
                  and cusp.B20 < 0 < cusp.N)
        return Outcome(passed, measured, {'beta': '<= 1e-8', 'normalized_det': '> 1e-6', 'B20': '< 0', 'N': '> 0'})


class HomoclinicCheck(Check):
    """
    The bisected disappearance of the cycle at ``sigma2 + 0.05`` against the second order homoclinic
    prediction, and a coarse sweep showing the four cells in their order.
    """
    name = 'homoclinic'

    def __init__(self, with_sweep: bool = True, resolution: float = 1e-3):
        self.with_sweep = with_sweep
        self.resolution = resolution

    def _sweep_ok(self) -> Optional[bool]:
        if not self.with_sweep:
            return None
        records = sweep(Params(BT_H, BT_K, 0.6, 14.0), Axis('sigma', 0.58, 0.66, 3), Axis('alpha', 13.6, 15.2, 9))
        regions = {r.bt_region for r in records}
        ok = {'R1', 'R2', 'R3', 'R4'} <= regions
        for r in records:
            if r.bt_region in ('R1', 'R2'):
                ok = ok and not r.cycle
            if r.bt_region == 'R3':
                a2, a3 = alpha2(BT_H, BT_K, r.params.sigma), alpha3(BT_H, BT_K, r.params.sigma)
                if r.params.alpha < (a2 + a3) / 2:
                    ok = ok and bool(r.cycle)
        return ok

    def run(self) -> Outcome:
        s = sigma2(BT_H, BT_K) + 0.05
        a2, a3 = alpha2(BT_H, BT_K, s), alpha3(BT_H, BT_K, s)
        width = a3 - a2
        found = homoclinic_alpha(BT_H, BT_K, s, a2 + 0.1 * width, a3 + width, resolution=self.resolution)
        sweep_ok = self._sweep_ok()
        measured = {'sigma': s, 'alpha2': a2, 'alpha3': a3, 'homoclinic': found, 'sweep': sweep_ok}
        passed = a2 < found <= a3 + 0.2 * width and sweep_ok is not False
        return Outcome(passed, measured, {'homoclinic': f'in ({a2:.6g}, {a3 + 0.2 * width:.6g}]', 'sweep': True})


def _b20_closed(h: float, k: float, s: float) -> float:
    num = -((h + 1) * s + k * (h - 1) ** 2) * (h * (h * k - k + 1) + 1) ** 2 * ((1 - 2 * h) * s + (h - 1) * (h * k - k + 3))
    den = k * ((h - 1) * (h * k - k + 1) + s) ** 3 * (h - 1) * (h * s - h + 1)
    return num / den


def _n_closed(h: float, k: float, s: float) -> float:
    q = k * (1 - h) ** 2 + h + s - 1
    return ((h + 1) * s + k * (h - 1) ** 2) / (k * s * q ** 2 * (1 - h) * (h * s - h + 1)) * float(cusp_poly(h, k)(s))


def _a20_closed(h: float, k: float, s: float) -> float:
    return -s * (h * (h - 1) ** 2 * k - h ** 2 * s + (2 * h + 1) * (h - 1)) / ((h - 1) * (h * s - h + 1))


def _sn_taylor_closed(h: float, k: float, s: float, a1: float, x: float):
    """Taylor coefficients ``a_ijl``, ``b_ijl`` at ``E*`` on ``alpha = alpha1``, with ``eps = alpha - alpha1``."""
    c = a1 * k * s * x - a1 * s * x ** 2 + k
    a = {
        (1, 0, 0): x * s * c * (h * k - h * x - x) / k,
        (0, 1, 0): x * (a1 * h * k * s * x - a1 * h * s * x ** 2 - 2 * a1 * k * s * x + 2 * a1 * s * x ** 2 - k),
        (0, 0, 1): x ** 3 * s ** 2 * (k - x) ** 2 * (h - 1) / k,
        (1, 1, 0): 2 * a1 * h * k * s * x - 3 * a1 * h * s * x ** 2 - 2 * a1 * k * s * x + 2 * a1 * s * x ** 2 - k,
        (1, 0, 1): x ** 2 * s ** 2 * (k - x) * (2 * h * k - 3 * h * x - k + x) / k,
        (2, 0, 0): s * (a1 * h * k ** 2 * s * x - 4 * a1 * h * k * s * x ** 2 + 3 * a1 * h * s * x ** 3
                        + h * k ** 2 - 3 * h * k * x - k) / k,
        (0, 1, 1): x ** 2 * s * (k - x) * (h - 2),
        (0, 2, 0): -x * a1 * k,
    }
    b = {
        (1, 0, 0): -s * (k - x) * x * (h - 1) * c / k,
        (0, 1, 0): -s * (k - x) * x ** 2 * a1 * (h - 1),
        (0, 0, 1): -x ** 3 * s ** 2 * (k - x) ** 2 * (h - 1) / k,
        (0, 2, 0): -k * a1 * x * (h - 1),
        (1, 1, 0): -(h - 1) * (2 * a1 * k * s * x - 2 * a1 * s * x ** 2 + k),
        (1, 0, 1): -s ** 2 * (k - x) ** 2 * x ** 2 * (h - 1) / k,
        (0, 1, 1): -2 * s * (k - x) * x ** 2 * (h - 1),
    }
    return a, b


def _sn_chain_closed(a: dict, b: dict) -> dict:
    """``p001``, ``q002`` and the centre manifold ``c20``, ``c11``, ``c02`` in terms of ``a_ijl``, ``b_ijl``."""
    a100, a011, a020 = a[1, 0, 0], a[0, 1, 1], a[0, 2, 0]
    a101, a110, a200 = a[1, 0, 1], a[1, 1, 0], a[2, 0, 0]
    b001, b010, b020, b100 = b[0, 0, 1], b[0, 1, 0], b[0, 2, 0], b[1, 0, 0]
    b101, b011, b110 = b[1, 0, 1], b[0, 1, 1], b[1, 1, 0]
    q010 = a100 + b010
    p001 = -(a100 + b100) * b001 * b010 / (b100 * q010)
    q002 = -b001 * (b010 - b100) * (
        a100 * a101 * b100 + a100 * b010 * b101 + a101 * b010 * b100 - a200 * b001 * b010
        + a200 * b001 * b100 + b010 ** 2 * b101) / (q010 ** 3 * b100)
    c20 = -b100 * (a020 * b100 ** 2 - a110 * b010 * b100 + a200 * b010 ** 2 - b010 ** 2 * b110
                   + b010 * b020 * b100) / (q010 ** 2 * b010 ** 2)
    c11 = (
        a011 * a100 ** 2 * b100 ** 2 + 2 * a011 * a100 * b010 * b100 ** 2 + a011 * b010 ** 2 * b100 ** 2
        + 2 * a020 * a100 * b001 * b100 ** 2 + 2 * a020 * b001 * b100 ** 3
        - a100 ** 2 * a101 * b010 * b100 - a100 ** 2 * b010 ** 2 * b101 + a100 ** 2 * b010 * b011 * b100
        - 2 * a100 * a101 * b010 ** 2 * b100 - 3 * a100 * a110 * b001 * b010 * b100
        + a100 * a110 * b001 * b100 ** 2 + 4 * a100 * a200 * b001 * b010 ** 2 - 2 * a100 * a200 * b001 * b010 * b100
        - 3 * a100 * b001 * b010 ** 2 * b110 + 2 * a100 * b001 * b010 * b020 * b100
        + a100 * b001 * b010 * b100 * b110 - 2 * a100 * b010 ** 3 * b101 + 2 * a100 * b010 ** 2 * b011 * b100
        - a101 * b010 ** 3 * b100 - a110 * b001 * b010 ** 2 * b100 - a110 * b001 * b010 * b100 ** 2
        + 2 * a200 * b001 * b010 ** 3 - b001 * b010 ** 3 * b110 - b001 * b010 ** 2 * b100 * b110
        + 2 * b001 * b010 * b020 * b100 ** 2 - b010 ** 4 * b101 + b010 ** 3 * b011 * b100
    ) / (q010 ** 4 * b010)
    c02 = -b001 * (
        a011 * a100 ** 3 * b100 ** 2 + 2 * a011 * a100 ** 2 * b010 * b100 ** 2 + a011 * a100 ** 2 * b100 ** 3
        + a011 * a100 * b010 ** 2 * b100 ** 2 + 2 * a011 * a100 * b010 * b100 ** 3 + a011 * b010 ** 2 * b100 ** 3
        + 2 * a020 * a100 ** 2 * b001 * b100 ** 2 + 4 * a020 * a100 * b001 * b100 ** 3 + 2 * a020 * b001 * b100 ** 4
        - 2 * a100 ** 3 * a101 * b010 * b100 + a100 ** 3 * a101 * b100 ** 2 - 2 * a100 ** 3 * b010 ** 2 * b101
        + a100 ** 3 * b010 * b011 * b100 + a100 ** 3 * b010 * b100 * b101 - 5 * a100 ** 2 * a101 * b010 ** 2 * b100
        + 2 * a100 ** 2 * a101 * b010 * b100 ** 2 - 3 * a100 ** 2 * a110 * b001 * b010 * b100
        + a100 ** 2 * a110 * b001 * b100 ** 2 + 5 * a100 ** 2 * a200 * b001 * b010 ** 2
        - 4 * a100 ** 2 * a200 * b001 * b010 * b100 + a100 ** 2 * a200 * b001 * b100 ** 2
        - 3 * a100 ** 2 * b001 * b010 ** 2 * b110 + 2 * a100 ** 2 * b001 * b010 * b020 * b100
        + a100 ** 2 * b001 * b010 * b100 * b110 - 5 * a100 ** 2 * b010 ** 3 * b101
        + 2 * a100 ** 2 * b010 ** 2 * b011 * b100 + 2 * a100 ** 2 * b010 ** 2 * b100 * b101
        + a100 ** 2 * b010 * b011 * b100 ** 2 - 4 * a100 * a101 * b010 ** 3 * b100 + a100 * a101 * b010 ** 2 * b100 ** 2
        - a100 * a110 * b001 * b010 ** 2 * b100 - 4 * a100 * a110 * b001 * b010 * b100 ** 2
        + a100 * a110 * b001 * b100 ** 3 + 4 * a100 * a200 * b001 * b010 ** 3 - a100 * b001 * b010 ** 3 * b110
        - 4 * a100 * b001 * b010 ** 2 * b100 * b110 + 4 * a100 * b001 * b010 * b020 * b100 ** 2
        + a100 * b001 * b010 * b100 ** 2 * b110 - 4 * a100 * b010 ** 4 * b101 + a100 * b010 ** 3 * b011 * b100
        + a100 * b010 ** 3 * b100 * b101 + 2 * a100 * b010 ** 2 * b011 * b100 ** 2
        - a101 * b010 ** 4 * b100 - a110 * b001 * b010 ** 2 * b100 ** 2 - a110 * b001 * b010 * b100 ** 3
        + a200 * b001 * b010 ** 4 + a200 * b001 * b010 ** 2 * b100 ** 2 - b001 * b010 ** 3 * b100 * b110
        - b001 * b010 ** 2 * b100 ** 2 * b110 + 2 * b001 * b010 * b020 * b100 ** 3 - b010 ** 5 * b101
        + b010 ** 3 * b011 * b100 ** 2
    ) / (q010 ** 6 * b100)
    return {'p001': p001, 'q002': q002, 'c20': c20, 'c11': c11, 'c02': c02}


def _mu_closed(h: float, k: float, s: float) -> dict:
    """First order Taylor coefficients of ``mu1`` in ``(eps1, eps2)`` at the Bogdanov-Takens point."""
    zeta = (2 * h ** 4 * (h - 1) ** 3 * k ** 3 + (7 * h ** 4 + 12 * h ** 3 + 6 * h ** 2 - 4 * h + 1) * (h - 1) ** 2 * k ** 2
            + 8 * h * (h - 1) * (h + 1) ** 3 * k + 3 * (h + 1) ** 4)
    d = -h ** 3 * k + 2 * h ** 2 * k - h ** 2 - h * k + h + 2
    w = h ** 2 * k - 2 * h * k + h * s + k + s
    t = h ** 3 * k * s - h ** 2 * k * s + h ** 2 * k + h ** 2 * s - 2 * h * k + 2 * h * s + k + s
    mu110 = (2 * k ** 3 * (h * s - h + 1) ** 3 * (h - 1) ** 3 * (h ** 2 * k - h * k + h + 1)
             * (zeta * s + k * (h - 1) ** 2 * ((h - 1) * (h ** 3 + 3 * h ** 2 - 3 * h + 1) * k + (h + 1) ** 3)
                * (h * k - k + 1))) / (d ** 2 * w ** 4 * (2 * h - 2) * t)
    mu101 = (k * ((h ** 4 * k - h ** 3 * k + h ** 3 + 6 * h - 2) * s
                  - (h - 1) * (h ** 3 * k - 5 * h ** 2 * k + h ** 2 + 6 * h * k - 4 * h - 2 * k + 4)) * d) / (
        (h - 1) ** 2 * (zeta * s + k * (h - 1) ** 2 * (h ** 4 * k + 2 * h ** 3 * k + h ** 3 - 6 * h ** 2 * k
                                                          + 3 * h ** 2 + 4 * h * k + 3 * h - k + 1) * (h * k - k + 1)))
    return {'mu110': mu110, 'mu101': mu101}


def _relative(pairs: dict) -> dict:
    return {n: abs(a - b) / abs(b) for n, (a, b) in pairs.items()}


class ClosedFormCheck(Check):
    """
    Programmatic reduction coefficients against their closed forms: the cusp data, the saddle-node chain
    at ``(h, k, sigma)`` and the first order unfolding coefficients.
    """
    name = 'closed-forms'

    def __init__(self, points: Sequence = ((0.5, 1.0),), sn_sigma: float = QUARTET_SIGMA, rtol: float = 1e-6):
        self.points = points
        self.sn_sigma = sn_sigma
        self.rtol = rtol

    def _saddle_node(self, h: float, k: float) -> dict:
        sn = estar_sn_reduction(h, k, self.sn_sigma)
        details = sn.details
        a, b = _sn_taylor_closed(h, k, self.sn_sigma, details['alpha1'], details['point'].x)
        pairs = {'a' + ''.join(map(str, m)): (details['a'].get(m, 0.0), c) for m, c in a.items()}
        pairs.update({'b' + ''.join(map(str, m)): (details['b'].get(m, 0.0), c) for m, c in b.items()})
        chain = _sn_chain_closed(a, b)
        pairs['p001'] = (details['p'].get((0, 0, 1), 0.0), chain['p001'])
        pairs['q002'] = (details['q'].get((0, 0, 2), 0.0), chain['q002'])
        for key, m in (('c20', (2, 0)), ('c11', (1, 1)), ('c02', (0, 2))):
            pairs[key] = (sn.manifold[m], chain[key])
        return pairs

    def run(self) -> Outcome:
        measured, passed = [], True
        for h, k in self.points:
            cusp = bt_cusp(h, k)
            s = cusp.sigma2
            mu = mu_taylor(h, k)['mu1']
            closed_mu = _mu_closed(h, k, s)
            pairs = {
                'B20': (cusp.B20, _b20_closed(h, k, s)),
                'N': (cusp.N, _n_closed(h, k, s)),
                'a20': (cusp.a[(2, 0)], _a20_closed(h, k, s)),
                'mu110': (mu[1, 0], closed_mu['mu110']),
                'mu101': (mu[0, 1], closed_mu['mu101']),
            }
            pairs.update(self._saddle_node(h, k))
            rel = _relative(pairs)
            shifted = shifted_focal_coefficients(h, k)
            cert = focal_certificate(h)
            ok = (max(rel.values()) <= self.rtol and all(c < 0 for c in shifted)
                  and cert['phi_positive_roots'] == 0 and cert['phi0_positive_roots'] == 0
                  and cert['phi_at_zero'] < 0 < cert['phi0_at_zero'])
            measured.append({'h': h, 'k': k, 'relative': rel, 'shifted_focal': shifted, 'certificate': cert})
            passed = passed and ok
        return Outcome(passed, measured, {'relative': f'<= {self.rtol}', 'shifted_focal': '< 0'})


def suite(quick: bool = False, seed: int = 0) -> List[Check]:
    """All checks; ``quick`` keeps only the census property on 100 draws."""
    if quick:
        return [CensusCheck(draws=100, seed=seed)]
    return [
        ConstantsCheck(),
        QuartetCheck(),
        CycleFamilyCheck(),
        CensusCheck(draws=1000, seed=seed),
        RootCountCheck(polys=500, seed=seed),
        TraceDetCheck(draws=200, seed=seed),
        HopfCheck(),
        NondegeneracyCheck(),
        HomoclinicCheck(),
        ClosedFormCheck(),
    ]


def run_suite(checks: Sequence[Check]) -> List[dict]:
    return [check() for check in checks]
