from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from facilidyn.model.params import Params, State
from facilidyn.model.polys import capacity_poly, equilibrium_poly
from facilidyn.polyalg import certified_roots, root_bound, sturm_isolate, refine_root
from facilidyn.utils import ParameterError, logger


class Thresholds(NamedTuple):
    """
    Closed-form thresholds of the partition at fixed ``(h, k, sigma)``.

    Fields that are undefined at the given point are ``None``: ``alpha1`` and ``sigma2`` need
    ``k < k1``, ``sigma1`` needs ``k1 < k < k3``, ``alpha2`` needs ``k < k2`` and a positive
    denominator, ``x_star`` is the double root on ``alpha = alpha1``.
    """
    h: float
    k: float
    sigma: float
    k1: float
    k2: float
    k3: float
    alpha_crit: float
    alpha1: Optional[float]
    alpha2: Optional[float]
    sigma1: Optional[float]
    sigma2: Optional[float]
    x_star: Optional[float]
    x0: float

    def to_dict(self) -> dict:
        return dict(self._asdict())


def _check_hk(h: float, k: float):
    if not 0 < h < 1:
        raise ParameterError(f'thresholds need 0 < h < 1, got h={h}')
    if not (math.isfinite(k) and k > 0):
        raise ParameterError(f'k must be positive and finite, got {k}')


def k1(h: float) -> float:
    return 1 / (1 - h)


def k2(h: float) -> float:
    return (1 + h) / (h * (1 - h))


def k3(h: float) -> float:
    return (h + 1) ** 3 / (h * (1 - h) * (h ** 2 + 3 * h + 1))


def alpha_crit(k: float, sigma: float) -> float:
    """Cooperation level ``1/(sigma k)`` at which ``Ek`` changes its role."""
    return 1 / (sigma * k)


def alpha1(h: float, k: float, sigma: float) -> Optional[float]:
    """Saddle-node threshold, the larger root of ``F1(alpha)``; defined for ``k <= k1``."""
    u = (1 - h) * k
    if u > 1:
        return None
    num = -u ** 2 - 18 * u + 27 + (9 - u) * math.sqrt((1 - u) * (9 - u))
    return num / (8 * sigma * (1 - h) * k ** 2)


def alpha2(h: float, k: float, sigma: float) -> Optional[float]:
    """Cooperation level at which the trace at ``E1`` vanishes."""
    num = k * h * (h - 1) + h + 1
    last = k * (h - 1) ** 2 + h + sigma - 1
    if num <= 0 or last <= 0:
        return None
    w = k * (h - 1) ** 2 + (h + 1) * sigma
    return num * w ** 2 / (k ** 2 * (1 - h) * (h * sigma + 1 - h) ** 2 * last)


def sigma1(h: float, k: float, tol: float = 1e-12) -> Optional[float]:
    """
    Unique positive root of the capacity polynomial ``f(sigma)`` for ``k1 < k < k3``. A certified float
    root is used when available, otherwise Sturm isolation and exact bisection to relative ``tol``.
    """
    if not k1(h) < k < k3(h):
        return None
    f = capacity_poly(h, k)
    bound = root_bound(f)
    roots = certified_roots(f, (Fraction(0), bound), Fraction(tol))
    if roots is not None and len(roots) == 1:
        return roots[0]
    ivs = sturm_isolate(f, (Fraction(0), bound), Fraction(1, 2 ** 20))
    if len(ivs) != 1:
        logger.warning(f'capacity polynomial has {len(ivs)} positive roots at h={h}, k={k}')
        if not ivs:
            return None
    iv = ivs[0]
    iv = refine_root(f, iv, iv.hi * Fraction(tol))
    return float(iv.midpoint)


def sigma2(h: float, k: float) -> Optional[float]:
    """Positive root of ``f2(sigma)``; defined for ``k < k1``."""
    u = (1 - h) * k
    if u >= 1:
        return None
    root = math.sqrt((9 - u) * (1 - u))
    num = (1 - h) * (h ** 2 * k - h * k + 3 * h + 3) * (1 - u) + (1 - h) * (h ** 2 * k - h * k + h + 1) * root
    den = 2 * (-h * (1 - h) ** 2 * k - h ** 2 + h + 2)
    return num / den


def x_star(p: Params) -> float:
    """Abscissa where ``F'`` vanishes; ``F`` increases before it and decreases after it."""
    _, k, sigma, alpha = p.unfold()
    c = k * alpha * sigma
    return (c + math.sqrt(c * (c + 3))) / (3 * alpha * sigma)


def x_star_alpha1(h: float, k: float, sigma: float) -> Optional[float]:
    """Double root of ``F`` on the ``alpha = alpha1`` surface."""
    a1 = alpha1(h, k, sigma)
    if a1 is None:
        return None
    return (9 - k * (1 - h)) / (2 * (k * a1 * sigma + 3) * (1 - h))


def x0(h: float, k: float, sigma: float) -> float:
    """Unique zero of the trace at an interior equilibrium, seen as a function of its abscissa."""
    return k * (h * sigma - h + 1) / (k * (h - 1) ** 2 + sigma * (h + 1))


def y1_at_x0(h: float, k: float, sigma: float) -> float:
    w = k * (h - 1) ** 2 + sigma * (h + 1)
    return sigma * k * (k * (h - 1) ** 2 + h + sigma - 1) * (h * sigma - h + 1) / w ** 2


def F_at_x0(p: Params) -> float:
    h, k, sigma, _ = p.unfold()
    return float(equilibrium_poly(p)(x0(h, k, sigma)))


def estar(h: float, k: float, sigma: float) -> State:
    """Degenerate equilibrium ``E*`` on the saddle-node surface ``alpha = alpha1``."""
    _check_hk(h, k)
    x = x_star_alpha1(h, k, sigma)
    if x is None:
        raise ParameterError(f'no saddle-node surface for k >= k1 (h={h}, k={k})')
    return State(x, sigma * x * (k - x) / k)


def bt_point(h: float, k: float) -> Tuple[float, float, State]:
    """``(sigma2, alpha*, E*)`` at the Bogdanov-Takens point of the ``(sigma, alpha)`` plane."""
    _check_hk(h, k)
    s2 = sigma2(h, k)
    if s2 is None:
        raise ParameterError(f'Bogdanov-Takens point needs k < k1 (h={h}, k={k})')
    a = alpha1(h, k, s2)
    x = (h * k * s2 + k * (1 - h)) / (k * (1 - h) ** 2 + s2 * (h + 1))
    return s2, a, State(x, s2 * x * (k - x) / k)


def thresholds(h: float, k: float, sigma: float) -> Thresholds:
    _check_hk(h, k)
    if not (math.isfinite(sigma) and sigma > 0):
        raise ParameterError(f'sigma must be positive and finite, got {sigma}')
    return Thresholds(
        h=h, k=k, sigma=sigma,
        k1=k1(h), k2=k2(h), k3=k3(h),
        alpha_crit=alpha_crit(k, sigma),
        alpha1=alpha1(h, k, sigma),
        alpha2=alpha2(h, k, sigma),
        sigma1=sigma1(h, k),
        sigma2=sigma2(h, k),
        x_star=x_star_alpha1(h, k, sigma),
        x0=x0(h, k, sigma),
    )
