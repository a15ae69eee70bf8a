from __future__ import annotations

import math
from enum import Enum
from typing import Dict, NamedTuple, Optional, Tuple

import sympy as sp

from facilidyn.localform.expansion import E, X, Y, field_expr, taylor_coefficients, to_expr, truncate, coefficient
from facilidyn.model import Params, alpha1, estar, sigma2
from facilidyn.polyalg import to_rat
from facilidyn.utils import DegenerateError, ParameterError, get_tolerance, sign

u, v = sp.symbols('u v')


class Bifurcation(Enum):
    Transcritical = 'transcritical'
    Pitchfork = 'pitchfork'
    SaddleNode = 'saddle-node'


class CenterManifoldReduction(NamedTuple):
    """
    Scalar equation on a centre manifold, ``du/dt = sum c_ij u**i eps**j``.

    Attributes:
        classification: Bifurcation read off the coefficients.
        constant: Coefficient of ``eps``.
        linear: Coefficient of ``u eps``.
        quadratic: Coefficient of ``u**2``.
        cubic: Coefficient of ``u**3``.
        coefficients: All reduced coefficients keyed by ``(i, j)``.
        manifold: The manifold ``v = h(u, eps)`` keyed the same way.
        details: Intermediate coefficients of the reduction chain.
    """
    classification: Bifurcation
    constant: float
    linear: float
    quadratic: float
    cubic: float
    coefficients: Dict[Tuple[int, int], float]
    manifold: Dict[Tuple[int, int], float]
    details: dict


def _rational(value) -> sp.Rational:
    r = to_rat(value)
    return sp.Rational(r.numerator, r.denominator)


def center_manifold(fu: sp.Expr, fv: sp.Expr, order: int = 3) -> Tuple[dict, dict]:
    """
    Quadratic centre manifold ``v = c20 u^2 + c11 u eps + c02 eps^2`` of ``(fu, fv)`` in ``(u, v, E)``
    and the reduced equation up to total degree ``order``.

    ``fu`` must have no linear ``u`` or ``v`` part and ``fv`` a nonzero linear ``v`` part. With a
    quadratic manifold the reduced equation is exact up to degree three because ``fu`` carries no
    linear ``v`` term.
    """
    c20, c11, c02 = sp.symbols('c20 c11 c02')
    h = c20 * u ** 2 + c11 * u * E + c02 * E ** 2
    inv = truncate(fv.subs(v, h) - sp.diff(h, u) * fu.subs(v, h), (u, E), 2)
    eqs = [inv.get(m, 0) for m in ((2, 0), (1, 1), (0, 2))]
    sol = sp.solve(eqs, [c20, c11, c02], dict=True)
    if not sol:
        raise DegenerateError('centre manifold equations are singular')
    sol = sol[0]
    manifold = {(2, 0): sol[c20], (1, 1): sol[c11], (0, 2): sol[c02]}
    reduced = truncate(fu.subs(v, h.subs(sol)), (u, E), order)
    return manifold, reduced


def _classify_ek(reduced: Dict[Tuple[int, int], float], tol: float) -> Bifurcation:
    scale = max((abs(c) for c in reduced.values()), default=0.0)
    if abs(reduced.get((2, 0), 0.0)) <= tol * scale and reduced.get((3, 0), 0.0) != 0:
        return Bifurcation.Pitchfork
    return Bifurcation.Transcritical


def ek_reduction(h, sigma, alpha, tol: Optional[float] = None) -> CenterManifoldReduction:
    """
    Centre-manifold reduction at ``Ek`` with ``eps = k - k1``.

    The system is moved to ``x = u + v + k``, ``y = -sigma u`` and time is rescaled by
    ``-sigma/(h-1)**2`` so that the stable direction has eigenvalue one. Exact rational
    arithmetic is used throughout, so the pitchfork case ``alpha = (1-h)/sigma`` gives an
    exactly vanishing quadratic coefficient for rational inputs.
    """
    tol = get_tolerance() if tol is None else tol
    if not 0 < float(h) < 1:
        raise ParameterError(f'Ek reduction needs 0 < h < 1, got h={h}')
    hr, sr, ar = _rational(h), _rational(sigma), _rational(alpha)
    k = 1 / (1 - hr) + E
    dx, dy = field_expr(hr, k, sr, ar, u + v + k, -sr * u)
    scale = -(hr - 1) ** 2 / sr
    fu = sp.expand(scale * (-dy / sr))
    fv = sp.expand(scale * (dx + dy / sr))
    manifold, reduced = center_manifold(fu, fv, order=3)
    reduced = {m: float(c) for m, c in reduced.items()}
    return CenterManifoldReduction(
        classification=_classify_ek(reduced, tol),
        constant=reduced.get((0, 1), 0.0),
        linear=reduced.get((1, 1), 0.0),
        quadratic=reduced.get((2, 0), 0.0),
        cubic=reduced.get((3, 0), 0.0),
        coefficients=reduced,
        manifold={m: float(c) for m, c in manifold.items()},
        details={'exact': manifold},
    )


def estar_sn_reduction(h: float, k: float, sigma: float, tol: Optional[float] = None) -> CenterManifoldReduction:
    """
    Saddle-node reduction at ``E*`` on ``alpha = alpha1`` with ``eps = alpha - alpha1``.

    The Taylor coefficients ``a_ijl``, ``b_ijl`` of the field are mapped by
    ``x = u + (a100/b100) v + s eps``, ``y = -(b100/b010) u + v`` with ``s`` chosen to clear the
    ``eps`` term of the ``v`` equation, giving ``p_ijl``, ``q_ijl``. The reduced equation is
    ``du/dt = d0(eps) + d1(eps) u + d2(eps) u**2`` and ``zeta'(0) = d0'(0)/d2(0)``.

    Raises:
        DegenerateError: If ``sigma`` is at ``sigma2``, where the trace at ``E*`` vanishes.
    """
    tol = get_tolerance() if tol is None else tol
    a1 = alpha1(h, k, sigma)
    if a1 is None or k * (1 - h) >= 1:
        raise ParameterError(f'saddle-node surface needs k < k1 (h={h}, k={k})')
    s2 = sigma2(h, k)
    if abs(sigma - s2) <= tol * s2:
        raise DegenerateError(f'sigma={sigma} is at sigma2={s2}; the reduction degenerates to a cusp')
    point = estar(h, k, sigma)
    a, b = taylor_coefficients(Params(h, k, sigma, a1), point, order=2, param='alpha')
    a100, a010, a001 = (coefficient(a, m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    b100, b010, b001 = (coefficient(b, m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    q010 = a100 + b010
    r, w = a100 / b100, -b100 / b010
    s = a001 * (b010 - b100) / (b100 * q010)

    change = {X: u + r * v + s * E, Y: w * u + v}
    FX = to_expr(a, (X, Y, E)).subs(change, simultaneous=True)
    FY = to_expr(b, (X, Y, E)).subs(change, simultaneous=True)
    det = 1 - r * w
    fu = sp.expand((FX - r * FY) / det)
    fv = sp.expand((-w * FX + FY) / det)
    p = {m: float(c) for m, c in truncate(fu, (u, v, E), 2).items()}
    q = {m: float(c) for m, c in truncate(fv, (u, v, E), 2).items()}

    # drop rounding residue of the linear terms that vanish by construction
    fu = to_expr({m: c for m, c in p.items() if m not in ((1, 0, 0), (0, 1, 0))}, (u, v, E))
    fv = to_expr({m: c for m, c in q.items() if m not in ((1, 0, 0), (0, 0, 1))}, (u, v, E))
    manifold, reduced = center_manifold(fu, fv, order=2)
    reduced = {m: float(c) for m, c in reduced.items()}
    d0, d1, d2 = reduced.get((0, 1), 0.0), reduced.get((1, 1), 0.0), reduced.get((2, 0), 0.0)
    if d2 == 0:
        raise DegenerateError('quadratic coefficient of the saddle-node reduction vanishes')
    return CenterManifoldReduction(
        classification=Bifurcation.SaddleNode,
        constant=d0,
        linear=d1,
        quadratic=d2,
        cubic=0.0,
        coefficients=reduced,
        manifold={m: float(c) for m, c in manifold.items()},
        details={
            'alpha1': a1, 'point': point, 'a': a, 'b': b, 'p': p, 'q': q, 'shift': s,
            'd0': d0, 'd1': d1, 'd2': d2, 'zeta_prime': d0 / d2,
        },
    )


def trace_estar(h: float, k: float, sigma: float) -> float:
    """Trace at ``E*`` on the saddle-node surface, in closed form."""
    a1 = alpha1(h, k, sigma)
    if a1 is None:
        raise ParameterError(f'saddle-node surface needs k <= k1 (h={h}, k={k})')
    u_ = h * k - k
    bracket = (h * sigma - h + 1) * math.sqrt((u_ + 1) * (u_ + 9)) \
        - (k * h ** 2 - h * k + h + 4) * sigma + 3 * (1 - h) * (u_ + 1)
    return (u_ + 9) / (8 * (1 - h) ** 2 * (a1 * k * sigma + 3)) * bracket


def sign_trace_estar(h: float, k: float, sigma: float, tol: Optional[float] = None) -> int:
    """+1 below ``sigma2``, -1 above it and 0 on it."""
    tol = get_tolerance() if tol is None else tol
    t = trace_estar(h, k, sigma)
    scale = (1 - h) * k + 9
    return sign(t, tol * scale * max(1.0, sigma))
