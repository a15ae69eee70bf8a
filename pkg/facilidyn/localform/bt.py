"""
Bogdanov-Takens analysis at the cusp ``E*`` on ``sigma = sigma2``, ``alpha = alpha*``.

The cusp part maps the quadratic Taylor coefficients through the nilpotent linear change of
variables to the Kukles form and rescales it to ``du/dt = v``, ``dv/dt = u**2 - u v``. The
unfolding part perturbs to ``(sigma2 + eps2, alpha* + eps1)``, expands at the unperturbed point and
follows the same chain to the versal parameters ``(beta1, beta2)``.
"""
from functools import lru_cache
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import sympy as sp
from scipy.optimize import brentq

from facilidyn.localform.expansion import taylor_coefficients
from facilidyn.model import Params, State, alpha1, alpha2, bt_point, g2_poly, g3_poly
from facilidyn.utils import DegenerateError, ParameterError, logger

Quadratic = Dict[Tuple[int, int], float]

KUKLES_KEYS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
HL_FACTOR = 6 / 25


class BTCusp(NamedTuple):
    """
    Quadratic data of the cusp.

    Attributes:
        point: The cusp ``E*``.
        sigma2, alpha_star: Location of the Bogdanov-Takens point.
        a, b: Quadratic Taylor coefficients of ``dx/dt`` and ``dy/dt`` at ``E*``.
        A20, A11, A02, B20, B11, B02: Coefficients after the nilpotent change of variables.
        N: ``2 A20 + B11``.
        scaling: ``(a, b, c)`` with ``u = a u3``, ``v = b v3``, ``t = c tau``.
        normal_form: Coefficients of ``u3**2`` and ``u3 v3`` after rescaling.
    """
    point: State
    sigma2: float
    alpha_star: float
    a: Quadratic
    b: Quadratic
    A20: float
    A11: float
    A02: float
    B20: float
    B11: float
    B02: float
    N: float
    scaling: Tuple[float, float, float]
    normal_form: Dict[str, float]


class BTUnfolding(NamedTuple):
    eps: Tuple[float, float]
    E: Quadratic
    F: Quadratic
    kukles: Quadratic
    mu1: float
    mu2: float
    A: float
    B: float
    beta1: float
    beta2: float


class BTCurves(NamedTuple):
    """Bifurcation curves ``alpha(sigma)`` sampled near the Bogdanov-Takens point; ``nan`` where absent."""
    sigma: np.ndarray
    alpha_sn: np.ndarray
    alpha_h: np.ndarray
    alpha_hl: np.ndarray
    sigma2: float
    alpha_star: float

    def rows(self):
        for row in zip(self.sigma, self.alpha_sn, self.alpha_h, self.alpha_hl):
            yield tuple(float(c) for c in row)


def _compose(c: Dict, r: float) -> Quadratic:
    """Coefficients in ``(u, v)`` of a quadratic in ``(X, Y)`` after ``X = -r u + v``, ``Y = u``."""
    g = lambda m: float(c.get(m, 0.0))
    return {
        (0, 0): g((0, 0)),
        (1, 0): -r * g((1, 0)) + g((0, 1)),
        (0, 1): g((1, 0)),
        (2, 0): r ** 2 * g((2, 0)) - r * g((1, 1)) + g((0, 2)),
        (1, 1): -2 * r * g((2, 0)) + g((1, 1)),
        (0, 2): g((2, 0)),
    }


def _nilpotent_form(a: Dict, b: Dict, B10: float, B01: float) -> Tuple[Quadratic, Quadratic]:
    """
    ``(du/dt, dv/dt)`` after ``X = -(B01/B10) u + v``, ``Y = u`` and ``tau = B10 t``, so that
    ``u' = Y'/B10`` and ``v' = (X' + (B01/B10) Y')/B10``.
    """
    r = B01 / B10
    pa, pb = _compose(a, r), _compose(b, r)
    du = {m: c / B10 for m, c in pb.items()}
    dv = {m: (pa[m] + r * c) / B10 for m, c in pb.items()}
    return du, dv


@lru_cache(maxsize=None)
def _base(h: float, k: float):
    s2, a_star, point = bt_point(h, k)
    a, b = taylor_coefficients(Params(h, k, s2, a_star), point, order=2)
    B10, B01 = b[(1, 0)], b[(0, 1)]
    if B10 == 0:
        raise DegenerateError(f'linear part at E* does not separate (h={h}, k={k})')
    return s2, a_star, point, a, b, B10, B01


def _check_hk(h: float, k: float):
    if not 0 < h < 1:
        raise ParameterError(f'Bogdanov-Takens analysis needs 0 < h < 1, got h={h}')
    if not 0 < k < 1 / (1 - h):
        raise ParameterError(f'Bogdanov-Takens analysis needs 0 < k < k1, got k={k}')


def bt_cusp(h: float, k: float) -> BTCusp:
    _check_hk(h, k)
    s2, a_star, point, a, b, B10, B01 = _base(h, k)
    du, dv = _nilpotent_form(a, b, B10, B01)
    A20, A11, A02 = du[(2, 0)], du[(1, 1)], du[(0, 2)]
    B20, B11, B02 = dv[(2, 0)], dv[(1, 1)], dv[(0, 2)]
    N = 2 * A20 + B11
    if B20 == 0 or N == 0:
        raise DegenerateError(f'cusp coefficients vanish at h={h}, k={k}')
    sa = B20 / N ** 2
    sb = -B20 ** 2 / N ** 3
    sc = -N / B20
    normal = {'u2': sc * B20 * sa ** 2 / sb, 'uv': sc * N * sa, 'v': sc * sb / sa}
    logger.debug(f'cusp at h={h}, k={k}: B20={B20:.6g}, 2A20+B11={N:.6g}')
    return BTCusp(
        point=point, sigma2=s2, alpha_star=a_star, a=dict(a), b=dict(b),
        A20=A20, A11=A11, A02=A02, B20=B20, B11=B11, B02=B02, N=N,
        scaling=(sa, sb, sc), normal_form=normal,
    )


@lru_cache(maxsize=None)
def _kukles():
    """
    Second order Kukles coefficients of
    ``x' = E00 + E10 x + E01 y + E20 x^2 + E11 x y``,
    ``y' = F00 + F10 x + F01 y + F20 x^2 + F11 x y + F02 y^2``
    in ``(x, Y = x')``, as a lambdified function of the twelve coefficients.
    """
    x, Ys = sp.symbols('x Y')
    E = {m: sp.Symbol(f'E{m[0]}{m[1]}') for m in ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1))}
    F = {m: sp.Symbol(f'F{m[0]}{m[1]}') for m in KUKLES_KEYS}
    r = E[(1, 1)] / E[(0, 1)]
    y = (Ys - E[(0, 0)] - E[(1, 0)] * x - E[(2, 0)] * x ** 2) * (1 - r * x + r ** 2 * x ** 2) / E[(0, 1)]
    Fy = sum(c * x ** m[0] * y ** m[1] for m, c in F.items())
    dY = (E[(1, 0)] + 2 * E[(2, 0)] * x + E[(1, 1)] * y) * Ys + (E[(0, 1)] + E[(1, 1)] * x) * Fy
    poly = sp.Poly(sp.expand(dY), x, Ys)
    terms = dict(poly.terms())
    exprs = [terms.get(m, sp.Integer(0)) for m in KUKLES_KEYS]
    symbols = list(E.values()) + list(F.values())
    return sp.lambdify(symbols, exprs, 'math')


def unfolding_coefficients(h: float, k: float, eps1: float, eps2: float) -> Tuple[Quadratic, Quadratic, Quadratic]:
    """``(E, F, kukles)`` at ``(sigma2 + eps2, alpha* + eps1)``, expanded at the unperturbed ``E*``."""
    _check_hk(h, k)
    s2, a_star, point, _, _, B10, B01 = _base(h, k)
    a, b = taylor_coefficients(Params(h, k, s2 + eps2, a_star + eps1), point, order=2)
    E, F = _nilpotent_form(a, b, B10, B01)
    args = [E[m] for m in ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1))] + [F[m] for m in KUKLES_KEYS]
    kukles = dict(zip(KUKLES_KEYS, map(float, _kukles()(*args))))
    return E, F, kukles


def bt_unfolding(h: float, k: float, eps1: float, eps2: float) -> BTUnfolding:
    """
    Versal parameters ``(beta1, beta2)`` of ``du/dt = v``, ``dv/dt = beta1 + beta2 u + u**2 - u v`` at
    ``(sigma, alpha) = (sigma2 + eps2, alpha* + eps1)``.

    Raises:
        DegenerateError: If the ``u v`` or ``u**2`` coefficient of the Kukles form vanishes.
    """
    E, F, K = unfolding_coefficients(h, k, eps1, eps2)
    F00, F10, F01, F20, F11, F02 = (K[m] for m in KUKLES_KEYS)
    if F11 == 0:
        raise DegenerateError(f'u v coefficient of the Kukles form vanishes at eps=({eps1}, {eps2})')
    mu1 = (F00 * F11 ** 2 + F01 ** 2 * F20 - F01 * F10 * F11) / F11 ** 2
    shift = (2 * F01 * F20 - F10 * F11) / F11
    mu2 = -2 * F02 * mu1 - shift
    A = 2 * F02 ** 2 * mu1 + F20 + 2 * F02 * shift
    B = F11
    if A == 0:
        raise DegenerateError(f'u**2 coefficient of the unfolding vanishes at eps=({eps1}, {eps2})')
    return BTUnfolding(
        eps=(eps1, eps2), E=E, F=F, kukles=K,
        mu1=mu1, mu2=mu2, A=A, B=B,
        beta1=B ** 4 * mu1 / A ** 3,
        beta2=B ** 2 * mu2 / A ** 2,
    )


def _steps(h: float, k: float, rel: float) -> Tuple[float, float]:
    s2, a_star = _base(h, k)[:2]
    return rel * a_star, rel * s2


@lru_cache(maxsize=None)
def mu_taylor(h: float, k: float, rel_step: float = 1e-4) -> Dict[str, Dict[Tuple[int, int], float]]:
    """
    Taylor coefficients of ``mu1`` and ``mu2`` in ``(eps1, eps2)`` up to second order, by central
    differences with one Richardson step. Also returns ``A(0,0)`` and ``B(0,0)``.
    """
    _check_hk(h, k)
    s1, s2 = _steps(h, k, rel_step)

    def mus(e1, e2):
        d = bt_unfolding(h, k, e1, e2)
        return np.array([d.mu1, d.mu2])

    def diffs(d1, d2):
        f = {(i, j): mus(i * d1, j * d2) for i in (-1, 0, 1) for j in (-1, 0, 1)}
        return {
            (1, 0): (f[1, 0] - f[-1, 0]) / (2 * d1),
            (0, 1): (f[0, 1] - f[0, -1]) / (2 * d2),
            (2, 0): (f[1, 0] - 2 * f[0, 0] + f[-1, 0]) / (2 * d1 ** 2),
            (0, 2): (f[0, 1] - 2 * f[0, 0] + f[0, -1]) / (2 * d2 ** 2),
            (1, 1): (f[1, 1] - f[1, -1] - f[-1, 1] + f[-1, -1]) / (4 * d1 * d2),
        }

    coarse, fine = diffs(s1, s2), diffs(s1 / 2, s2 / 2)
    coeffs = {m: (4 * fine[m] - coarse[m]) / 3 for m in coarse}
    base = bt_unfolding(h, k, 0.0, 0.0)
    return {
        'mu1': {m: float(c[0]) for m, c in coeffs.items()},
        'mu2': {m: float(c[1]) for m, c in coeffs.items()},
        'A0': base.A,
        'B0': base.B,
    }


def hl_coefficients(h: float, k: float) -> Tuple[float, float]:
    """
    ``(a, b)`` with ``eps1 = a eps2 + b eps2**2`` on the homoclinic curve, from
    ``beta1 = -(6/25) beta2**2`` and the Taylor coefficients of ``mu1``, ``mu2``.
    """
    t = mu_taylor(h, k)
    m, n, A0 = t['mu1'], t['mu2'], t['A0']
    m10, m01, m20, m11, m02 = m[1, 0], m[0, 1], m[2, 0], m[1, 1], m[0, 2]
    n10, n01 = n[1, 0], n[0, 1]
    if m10 == 0:
        raise DegenerateError(f'mu1 does not depend on alpha at h={h}, k={k}')
    a = -m01 / m10
    quad = m20 * m01 ** 2 - m11 * m01 * m10 + m02 * m10 ** 2
    b = -(quad + 6 * (n01 * m10 - n10 * m01) ** 2 / (25 * A0)) / m10 ** 3
    return a, b


def alpha3(h: float, k: float, sigma: float) -> Optional[float]:
    """Homoclinic threshold from its second order expansion; ``None`` for ``sigma <= sigma2``."""
    _check_hk(h, k)
    s2, a_star = _base(h, k)[:2]
    e2 = sigma - s2
    if e2 <= 0:
        return None
    a, b = hl_coefficients(h, k)
    return a_star + a * e2 + b * e2 ** 2


def unfolding_jacobian(h: float, k: float) -> Dict[str, float]:
    """
    Determinant of ``d(beta1, beta2)/d(eps1, eps2)`` at the origin, and the closed-form
    nondegeneracy expression ``(k (h-1)^2 g2(k) + g3(k) sigma2) / (-h^3 k + 2 h^2 k - h^2 - h k + h + 2)^4``
    that it is proportional to.
    """
    t = mu_taylor(h, k)
    m, n, A0, B0 = t['mu1'], t['mu2'], t['A0'], t['B0']
    mu_det = m[1, 0] * n[0, 1] - m[0, 1] * n[1, 0]
    s2 = _base(h, k)[0]
    factor = k * (h - 1) ** 2 * float(g2_poly(h)(k)) + float(g3_poly(h)(k)) * s2
    closed = factor / (-h ** 3 * k + 2 * h ** 2 * k - h ** 2 - h * k + h + 2) ** 4
    return {
        'det': B0 ** 6 / A0 ** 5 * mu_det,
        'mu_det': mu_det,
        'nondegeneracy': factor,
        'closed_form': closed,
    }


def hl_curve_implicit(h: float, k: float, eps2: float, span: float = 4.0) -> float:
    """
    ``eps1`` solving ``beta1 + (6/25) beta2**2 = 0`` at fixed ``eps2 > 0``, bracketed around the
    linear approximation ``a eps2`` and widened until the sign changes.
    """
    if eps2 <= 0:
        raise ParameterError(f'homoclinic curve needs eps2 > 0, got {eps2}')
    a, b = hl_coefficients(h, k)

    def residual(e1):
        d = bt_unfolding(h, k, e1, eps2)
        return d.beta1 + HL_FACTOR * d.beta2 ** 2

    guess = a * eps2 + b * eps2 ** 2
    width = max(abs(b) * eps2 ** 2, 1e-12 * max(1.0, abs(guess)))
    lo, hi = guess - width, guess + width
    for _ in range(60):
        if np.sign(residual(lo)) != np.sign(residual(hi)):
            return brentq(residual, lo, hi, xtol=1e-15, rtol=1e-13)
        width *= span
        lo, hi = guess - width, guess + width
    raise DegenerateError(f'no sign change of the homoclinic residual near eps1={guess:.6g}')


def bt_curves(h: float, k: float, sigma_range: Sequence[float], n_samples: int = 50) -> BTCurves:
    """
    Saddle-node, Hopf and homoclinic curves over ``sigma_range``. The Hopf and homoclinic curves
    only exist for ``sigma > sigma2``.

    Raises:
        ParameterError: If the range is empty.
    """
    _check_hk(h, k)
    lo, hi = sigma_range
    if not (0 < lo < hi) or n_samples < 1:
        raise ParameterError(f'empty sigma range ({lo}, {hi}) with {n_samples} samples')
    s2, a_star = _base(h, k)[:2]
    sigma = np.linspace(lo, hi, n_samples)
    sn, hopf_, hl = (np.full(n_samples, np.nan) for _ in range(3))
    for i, s in enumerate(sigma):
        a1 = alpha1(h, k, s)
        sn[i] = np.nan if a1 is None else a1
        if s > s2:
            a2 = alpha2(h, k, s)
            hopf_[i] = np.nan if a2 is None else a2
            hl[i] = alpha3(h, k, s)
    return BTCurves(sigma, sn, hopf_, hl, s2, a_star)
