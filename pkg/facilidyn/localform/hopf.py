from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional

import numpy as np
import sympy as sp

from facilidyn.localform.expansion import X, Y, taylor_coefficients, to_expr, truncate
from facilidyn.model import Params, State, alpha2, equilibrium_poly, focal_poly, jacobian, k1, k2, phi0_poly, \
    phi_poly, sigma2, trace_det_closed_form, x0, y1_at_x0
from facilidyn.polyalg import root_bound, sturm_isolate, to_rat
from facilidyn.utils import ParameterError, get_tolerance, logger, sign

u, v = sp.symbols('u v')


class HopfData(NamedTuple):
    """
    Hopf data at the weak focus ``E1`` on ``alpha = alpha2``.

    Attributes:
        alpha2: The Hopf threshold.
        x1, y1: The weak focus.
        beta: Imaginary part of the eigenvalues, from the numerical Jacobian.
        beta_closed_form: The same from the closed-form determinant.
        G_value: ``G(sigma)``; the first focal value has its sign.
        focal_sign: Sign of the first Lyapunov coefficient.
        lyapunov: First Lyapunov coefficient in the time where the eigenvalues are ``+-i``.
        transversality: Total derivative of the trace at ``E1`` in ``alpha``, following ``E1``.
        transversality_partial: Derivative of the trace numerator in ``alpha`` at fixed ``x = x1``.
    """
    alpha2: float
    x1: float
    y1: float
    beta: float
    beta_closed_form: float
    G_value: float
    focal_sign: int
    lyapunov: float
    transversality: float
    transversality_partial: float

    def to_dict(self) -> dict:
        return self._asdict()


def _check_scope(h: float, k: float, sigma: float):
    if not 0 < h < 1:
        raise ParameterError(f'Hopf analysis needs 0 < h < 1, got h={h}')
    if k1(h) <= k < k2(h):
        return
    if k < k1(h):
        s2 = sigma2(h, k)
        if sigma > s2:
            return
        raise ParameterError(f'no Hopf bifurcation for sigma={sigma} <= sigma2={s2} (h={h}, k={k})')
    raise ParameterError(f'no Hopf bifurcation for k={k} >= k2={k2(h)} (h={h})')


def lyapunov_coefficient(p: Params, point: State) -> float:
    """
    First Lyapunov coefficient at a weak focus, from the second and third order Taylor coefficients
    of the field in the eigenbasis where the linear part is the unit rotation.
    """
    a, b = taylor_coefficients(p, point, order=3)
    a10, a01, b10 = a[(1, 0)], a[(0, 1)], b[(1, 0)]
    det = -a10 ** 2 - a01 * b10
    assert det > 0, 'weak focus needs a positive determinant'
    beta = np.sqrt(det)
    change = {X: u / b10 + a10 * v / (b10 * beta), Y: v / beta}
    FX = to_expr(a, (X, Y)).subs(change, simultaneous=True)
    FY = to_expr(b, (X, Y)).subs(change, simultaneous=True)
    f = truncate((b10 * FX - a10 * FY) / beta, (u, v), 3)
    g = truncate(FY, (u, v), 3)

    def c(coeffs, i, j):
        return float(coeffs.get((i, j), 0.0))

    f_uu, f_uv, f_vv = 2 * c(f, 2, 0), c(f, 1, 1), 2 * c(f, 0, 2)
    g_uu, g_uv, g_vv = 2 * c(g, 2, 0), c(g, 1, 1), 2 * c(g, 0, 2)
    f_uuu, f_uvv = 6 * c(f, 3, 0), 2 * c(f, 1, 2)
    g_uuv, g_vvv = 2 * c(g, 2, 1), 6 * c(g, 0, 3)
    return (f_uuu + f_uvv + g_uuv + g_vvv
            + f_uv * (f_uu + f_vv) - g_uv * (g_uu + g_vv) - f_uu * g_uu + f_vv * g_vv) / 16


def hopf(h: float, k: float, sigma: float, tol: Optional[float] = None) -> HopfData:
    """
    Hopf data at ``alpha = alpha2``, for ``k1 <= k < k2`` or for ``k < k1`` with ``sigma > sigma2``.

    Raises:
        ParameterError: Outside that region.
    """
    tol = get_tolerance() if tol is None else tol
    _check_scope(h, k, sigma)
    a2 = alpha2(h, k, sigma)
    if a2 is None:
        raise ParameterError(f'alpha2 is undefined at h={h}, k={k}, sigma={sigma}')
    p = Params(h, k, sigma, a2)
    x1, y1 = x0(h, k, sigma), y1_at_x0(h, k, sigma)
    point = State(x1, y1)

    eig = np.linalg.eigvals(jacobian(p, point))
    beta = float(np.abs(eig.imag).max())
    _, det = trace_det_closed_form(p, x1)
    beta_closed = float(np.sqrt(det)) if det > 0 else 0.0

    G = float(focal_poly(h, k)(sigma))
    l1 = lyapunov_coefficient(p, point)
    focal_sign = sign(l1, tol * max(1.0, abs(G)))
    if focal_sign != sign(G):
        logger.warning(f'Lyapunov coefficient sign {focal_sign} disagrees with G(sigma)={G:.6g}')

    dF = float(equilibrium_poly(p).derivative()(x1))
    w = k * (1 - h) ** 2 + sigma * (1 + h)
    total = sigma * x1 ** 2 * (k - x1) * w / dF
    partial = k * sigma * x1 ** 2 * (k - x1) * (h - 1) ** 2 * (h * sigma - h + 1) / w
    return HopfData(
        alpha2=a2, x1=x1, y1=y1,
        beta=beta, beta_closed_form=beta_closed,
        G_value=G, focal_sign=focal_sign, lyapunov=l1,
        transversality=total, transversality_partial=partial,
    )


def shifted_focal_coefficients(h: float, k: float) -> List[float]:
    """Coefficients of ``G(sigma2 + rho)`` in ``rho``, ascending; all negative for ``k < k1``."""
    s2 = sigma2(h, k)
    if s2 is None:
        raise ParameterError(f'sigma2 is undefined for k >= k1 (h={h}, k={k})')
    return [float(c) for c in focal_poly(h, k).shift(to_rat(s2)).coeffs]


def _positive_roots(p) -> int:
    return len(sturm_isolate(p, (Fraction(0), root_bound(p)), Fraction(1, 2 ** 10)))


def focal_certificate(h: float) -> Dict[str, int]:
    """
    Root counts certifying the sign of ``G`` on ``k1 <= k < k2``: ``Phi`` and ``Phi0`` have no
    positive roots, ``Phi(0) < 0`` and ``Phi0(0) > 0``.
    """
    if not 0 < h < 1:
        raise ParameterError(f'focal certificate needs 0 < h < 1, got h={h}')
    phi, phi_zero = phi_poly(h), phi0_poly(h)
    return {
        'phi_positive_roots': _positive_roots(phi),
        'phi0_positive_roots': _positive_roots(phi_zero),
        'phi_at_zero': phi.sign_at(0),
        'phi0_at_zero': phi_zero.sign_at(0),
    }
