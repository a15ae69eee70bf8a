"""
Sign certificates for the nondegeneracy of the Bogdanov-Takens unfolding: after the change of
variable ``k = 1/((1-h)(1+x^2))`` the polynomials ``g2``, ``g3`` and ``zeta1`` have no real roots, so
they keep the sign they have at ``k = 0`` on the whole interval ``(0, k1)``.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from tqdm import tqdm

from facilidyn.model import D31, D41, D51, D61, D71, g2_poly, g3_poly, zeta1_poly
from facilidyn.polyalg import Poly, RootInterval, count_distinct_real_roots, refine_root, sign_list, \
    substitute_reciprocal_square, sturm_isolate, to_rat
from facilidyn.utils import BAR_FORMAT, ParameterError, is_verbose

F = Fraction


class Bracket(NamedTuple):
    factor: str
    lo: Fraction
    hi: Fraction


# isolating intervals of the roots in (0, 1) of the discriminant factors
BRACKETS: Dict[str, Bracket] = {
    'h1': Bracket('D31', F(5686495, 16777216), F(177703, 524288)),
    'h2': Bracket('D41', F(5448295, 16777216), F(681037, 2097152)),
    'h3': Bracket('D51', F(3141071, 8388608), F(6282143, 16777216)),
    'h4': Bracket('D51', F(4311003, 8388608), F(1077751, 2097152)),
    'h5': Bracket('D51', F(6104019, 8388608), F(1526005, 2097152)),
    'h6': Bracket('D61', F(6273181, 16777216), F(3136591, 8388608)),
    'h7': Bracket('D61', F(4310379, 8388608), F(1077595, 2097152)),
    'h8': Bracket('D61', F(6129165, 8388608), F(3064583, 4194304)),
    'h9': Bracket('D71', F(3160567, 8388608), F(6321135, 16777216)),
    'h10': Bracket('D71', F(4283093, 8388608), F(2141547, 4194304)),
    'h11': Bracket('D71', F(6960901, 8388608), F(3480451, 4194304)),
}

FACTORS: Dict[str, Poly] = {'D31': D31, 'D41': D41, 'D51': D51, 'D61': D61, 'D71': D71}


class Subinterval(NamedTuple):
    lo: str
    hi: str
    sample: Fraction
    signs: Tuple[int, ...]


_A = (1, -1, 1, 1, 1, -1, -1, 1)
_B = (1, -1, 1, -1, -1, -1, -1, 1)
_C = (1, -1, -1, 1, -1, -1, -1, 1)
_D = (1, -1, -1, 1, -1, 1, 1, 1)
_E = (1, -1, -1, 1, 1, -1, 1, 1)
_G = (1, -1, -1, 1, 1, -1, -1, 1)
_H = (1, -1, -1, 1, 1, 1, -1, 1)

SUBINTERVALS: List[Subinterval] = [
    Subinterval('0', 'h2', F(1, 4), _A),
    Subinterval('h2', 'h1', F(33, 100), _B),
    Subinterval('h1', 'h6', F(35, 100), _C),
    Subinterval('h6', 'h3', F(3742, 10000), _D),
    Subinterval('h3', 'h9', F(3755, 10000), _E),
    Subinterval('h9', '1/2', F(45, 100), _G),
    Subinterval('1/2', 'h10', F(505, 1000), _G),
    Subinterval('h10', 'h7', F(512, 1000), _E),
    Subinterval('h7', 'h4', F(51388, 100000), _H),
    Subinterval('h4', 'h5', F(6, 10), _C),
    Subinterval('h5', 'h8', F(729, 1000), _H),
    Subinterval('h8', 'h11', F(78, 100), _E),
    Subinterval('h11', '1', F(9, 10), _G),
]


def discriminant_factor_roots(width: Fraction = F(1, 2 ** 40)) -> Dict[str, RootInterval]:
    """
    The roots ``h1 ... h11`` refined inside their brackets. Each bracket must show a sign change
    of its factor.
    """
    out = {}
    for name, br in BRACKETS.items():
        p = FACTORS[br.factor]
        assert p.sign_at(br.lo) * p.sign_at(br.hi) < 0, f'{br.factor} does not change sign on the {name} bracket'
        out[name] = refine_root(p, (br.lo, br.hi), width)
    return out


def isolate_factor(factor: str, width: Fraction = F(1, 10 ** 6)) -> List[RootInterval]:
    """
    Roots in ``(0, 1)`` of one discriminant factor, isolated by Sturm bisection to ``width`` and then
    refined until each interval lies inside one of the tabulated brackets of that factor.
    """
    if factor not in FACTORS:
        raise RuntimeError(f'unsupported discriminant factor: {factor}')
    p = FACTORS[factor]
    brackets = [RootInterval(br.lo, br.hi) for br in BRACKETS.values() if br.factor == factor]
    out = []
    for iv in sturm_isolate(p, (0, 1), width):
        tol = min(to_rat(width), iv.width)
        while not any(br.contains(iv) for br in brackets) and tol > F(1, 2 ** 64):
            tol /= 2
            iv = refine_root(p, iv, tol)
        out.append(iv)
    return out


@lru_cache(maxsize=None)
def _points() -> Dict[str, RootInterval]:
    pts = dict(discriminant_factor_roots())
    pts['0'] = RootInterval(F(0), F(0))
    pts['1/2'] = RootInterval(F(1, 2), F(1, 2))
    pts['1'] = RootInterval(F(1), F(1))
    return pts


def locate(h) -> Optional[Subinterval]:
    """The open subinterval containing ``h``, or ``None`` on (or too close to) a boundary point."""
    h = to_rat(h)
    pts = _points()
    for sub in SUBINTERVALS:
        if pts[sub.lo].hi < h < pts[sub.hi].lo:
            return sub
    return None


def _substituted(p: Poly, h: Fraction) -> Poly:
    return substitute_reciprocal_square(p, 1 - h)


def nondegeneracy_report(h) -> dict:
    """
    Root counts of ``g2``, ``g3`` and ``zeta1`` after the substitution, their values at ``k = 0``
    and the discriminant sign list of the substituted ``g2`` next to the tabulated one.
    """
    h = to_rat(h)
    if not 0 < h < 1:
        raise ParameterError(f'nondegeneracy report needs 0 < h < 1, got h={h}')
    g2, g3, z1 = g2_poly(h), g3_poly(h), zeta1_poly(h)
    g2t, g3t, z1t = (_substituted(p, h) for p in (g2, g3, z1))
    sl = sign_list(g2t)
    sub = locate(h)
    report = {
        'h': float(h),
        'g2_roots': count_distinct_real_roots(g2t),
        'g3_roots': count_distinct_real_roots(g3t),
        'zeta1_roots': count_distinct_real_roots(z1t),
        'g2_at_zero': g2.sign_at(0),
        'g3_at_zero': g3.sign_at(0),
        'zeta1_at_zero': z1.sign_at(0),
        'sign_list': list(sl.signs),
        'revised_sign_list': list(sl.revised),
        'subinterval': None if sub is None else f'({sub.lo}, {sub.hi})',
        'expected_sign_list': None if sub is None else list(sub.signs),
    }
    report['g2_negative'] = report['g2_roots'] == 0 and report['g2_at_zero'] < 0
    report['g3_negative'] = report['g3_roots'] == 0 and report['g3_at_zero'] < 0
    report['zeta1_positive'] = report['zeta1_roots'] == 0 and report['zeta1_at_zero'] > 0
    report['table_match'] = sub is None or tuple(sl.signs) == sub.signs
    return report


def g2_g3_nondegeneracy(hs: Optional[Sequence] = None) -> dict:
    """
    ``nondegeneracy_report`` over several handling times, by default one rational sample per
    tabulated subinterval of ``(0, 1)``.

    Returns:
        dict: the per-sample ``reports`` and whether ``g2 < 0``, ``g3 < 0``, ``zeta1 > 0`` and the
        tabulated sign lists hold at every sample.
    """
    hs = [sub.sample for sub in SUBINTERVALS] if hs is None else [to_rat(h) for h in hs]
    reports = []
    with tqdm(total=len(hs), desc='(N)', bar_format=BAR_FORMAT, disable=not is_verbose()) as pbar:
        for h in hs:
            reports.append(nondegeneracy_report(h))
            pbar.update()
    return {
        'samples': [str(h) for h in hs],
        'reports': reports,
        'g2_negative': all(r['g2_negative'] for r in reports),
        'g3_negative': all(r['g3_negative'] for r in reports),
        'zeta1_positive': all(r['zeta1_positive'] for r in reports),
        'table_match': all(r['table_match'] for r in reports),
    }
