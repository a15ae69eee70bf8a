"""
Limit cycles around the interior focus: Poincare sections, the return map, its fixed point, and
the bisections that locate cycle birth and cycle disappearance in ``alpha``.
"""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import newton
from scipy.spatial.distance import directed_hausdorff
from sklearn.linear_model import LinearRegression
from sklearn.metrics import r2_score

from facilidyn.model import Params, State, alpha2, jacobian, rhs
from facilidyn.regions import Role, equilibria
from facilidyn.simulate.integrator import TRANSIENT, integrate
from facilidyn.utils import ParameterError, logger

CYCLE_RTOL = 1e-10
CYCLE_ATOL = 1e-12


class Stability(Enum):
    Stable = 'stable'
    Unstable = 'unstable'


class Section(NamedTuple):
    """Ray ``origin + s * direction``, ``s > 0``, crossed in the rotation sense ``sense``."""
    origin: State
    direction: np.ndarray
    sense: int
    period_hint: float

    def point(self, s: float) -> np.ndarray:
        return np.asarray(self.origin) + s * self.direction

    def coordinate(self, z) -> float:
        return float(np.dot(np.asarray(z) - np.asarray(self.origin), self.direction))


class CycleRecord(NamedTuple):
    """
    A periodic orbit found by iterating the return map.

    Attributes:
        period: Return time, in the time of the quartic system.
        points: ``(n, 2)`` samples over one period, starting on the section.
        stability: From the slope of the return map at the fixed point.
        amplitude: ``max x - min x`` along the cycle.
        section: The section used.
        coordinate: Section coordinate of the fixed point.
        multiplier: Slope of the return map there.
        residual: ``|P(s) - s|`` at the fixed point.
    """
    period: float
    points: np.ndarray
    stability: Stability
    amplitude: float
    section: Section
    coordinate: float
    multiplier: float
    residual: float

    def to_dict(self) -> dict:
        return {
            'period': self.period, 'stability': self.stability.value, 'amplitude': self.amplitude,
            'coordinate': self.coordinate, 'multiplier': self.multiplier, 'residual': self.residual,
        }


def focus(p: Params) -> Optional[State]:
    """The interior equilibrium ``E1`` a cycle would surround, if it exists."""
    for e in equilibria(p):
        if e.role in (Role.E1, Role.Estar):
            return State(e.x, e.y)
    return None


def make_section(p: Params, origin: State) -> Section:
    """
    Section through ``origin`` along the real part of an eigenvector of the Jacobian there; a
    horizontal ray when the eigenvalues are real or nearly defective.
    """
    j = jacobian(p, origin)
    w, vecs = np.linalg.eig(j)
    beta = float(np.abs(w.imag).max())
    scale = float(np.abs(j).max())
    d = np.real(vecs[:, 0])
    if beta <= 1e-8 * max(scale, 1e-300) or np.linalg.norm(d) <= 1e-8:
        d = np.array([1.0, 0.0])
        period = 2 * np.pi / max(scale, 1e-12)
    else:
        period = 2 * np.pi / beta
    d = d / np.linalg.norm(d)
    if d[0] < 0:
        d = -d
    normal = np.array([-d[1], d[0]])
    sense = 1 if np.dot(normal, j @ d) >= 0 else -1
    return Section(origin, d, sense, period)


def _crossing_event(section: Section):
    normal = np.array([-section.direction[1], section.direction[0]])
    origin = np.asarray(section.origin)

    def event(t, z):
        return float(np.dot(normal, z - origin))

    event.terminal = True
    event.direction = section.sense
    return event


def _next_crossing(p: Params, z0: np.ndarray, section: Section, t_max: float,
                   rtol: float, atol: float, guard: float) -> Optional[Tuple[np.ndarray, float]]:
    fun = rhs(p)
    t0 = 0.0
    if guard > 0:
        first = solve_ivp(fun, (0.0, guard), z0, method='RK45', rtol=rtol, atol=atol)
        if first.status < 0:
            return None
        z0, t0 = first.y[:, -1], guard
    sol = solve_ivp(fun, (t0, t_max), z0, method='RK45', rtol=rtol, atol=atol, events=[_crossing_event(section)])
    if sol.status != 1 or len(sol.t_events[0]) == 0:
        return None
    return sol.y_events[0][0], float(sol.t_events[0][0])


def return_map(p: Params, s: float, section: Section, t_max: Optional[float] = None,
               rtol: float = CYCLE_RTOL, atol: float = CYCLE_ATOL) -> Optional[Tuple[float, float]]:
    """
    One Poincare return from the section point at coordinate ``s``.

    Returns:
        (float, float): The coordinate of the next crossing and the return time, or ``None`` if
        the orbit does not come back within ``t_max``.
    """
    t_max = 50 * section.period_hint if t_max is None else t_max
    hit = _next_crossing(p, section.point(s), section, t_max, rtol, atol, guard=1e-3 * section.period_hint)
    if hit is None:
        return None
    z, t = hit
    return section.coordinate(z), t


def find_limit_cycle(p: Params, seed: Optional[State] = None, transient: float = TRANSIENT,
                     max_returns: int = 40, tol: float = 1e-9, min_amplitude: float = 1e-6,
                     n_points: int = 400) -> Optional[CycleRecord]:
    """
    Locate an attracting cycle around ``E1``: integrate past the transient, land on the section
    and solve ``P(s) = s`` for the return map ``P`` by secant iteration.

    Returns ``None`` when ``E1`` does not exist, when the orbit settles on an equilibrium or
    escapes, or when no return happens within the horizon.
    """
    p = Params(*p).validate()
    center = focus(p)
    if center is None:
        return None
    section = make_section(p, center)
    scale = max(1.0, float(np.linalg.norm(center)))
    if seed is None:
        seed = section.point(1e-3 * scale)
    orbit = integrate(p, seed, transient, rtol=1e-9, atol=1e-12)
    if not orbit.success or orbit.escaped:
        return None
    hit = _next_crossing(p, orbit.states[-1], section, 50 * section.period_hint, CYCLE_RTOL, CYCLE_ATOL, guard=0.0)
    if hit is None:
        return None
    s0 = section.coordinate(hit[0])
    if s0 <= min_amplitude * scale:
        return None

    def displacement(s):
        r = return_map(p, s, section)
        if r is None:
            raise ArithmeticError('orbit left the section')
        return r[0] - s

    s = s0
    for _ in range(max_returns):
        r = return_map(p, s, section)
        if r is None:
            return None
        if abs(r[0] - s) <= 1e-6 * scale:
            s = r[0]
            break
        s = r[0]
        if s <= min_amplitude * scale:
            return None
    try:
        s_star = float(newton(displacement, s, x1=s * (1 + 1e-4), tol=tol * scale, maxiter=50))
    except (ArithmeticError, RuntimeError) as e:
        logger.debug(f'secant refinement failed at {tuple(p)}: {e}')
        return None
    if s_star <= min_amplitude * scale:
        return None
    closing = return_map(p, s_star, section)
    if closing is None:
        logger.debug(f'orbit through the refined section point did not return at {tuple(p)}')
        return None
    s_next, period = closing
    ds = 1e-6 * s_star
    up, down = return_map(p, s_star + ds, section), return_map(p, s_star - ds, section)
    slope = (up[0] - down[0]) / (2 * ds) if up and down else float('nan')
    stability = Stability.Stable if abs(slope) < 1 else Stability.Unstable

    t_eval = np.linspace(0.0, period, n_points)
    sol = solve_ivp(rhs(p), (0.0, period), section.point(s_star), method='RK45', rtol=CYCLE_RTOL, atol=CYCLE_ATOL,
                    t_eval=t_eval)
    points = sol.y.T
    return CycleRecord(
        period=period,
        points=points,
        stability=stability,
        amplitude=float(points[:, 0].max() - points[:, 0].min()),
        section=section,
        coordinate=s_star,
        multiplier=float(slope),
        residual=abs(s_next - s_star),
    )


def _focus_repels(p: Params, offset: float) -> bool:
    center = focus(p)
    if center is None:
        return False
    section = make_section(p, center)
    s = offset * max(1.0, float(np.linalg.norm(center)))
    r = return_map(p, s, section)
    return r is not None and r[0] > s


def hopf_onset(h: float, k: float, sigma: float, alpha_lo: float, alpha_hi: float,
               resolution: float = 1e-4, offset: float = 1e-5) -> float:
    """
    Bisection in ``alpha`` for the birth of the cycle. An orbit started at a small distance
    ``offset`` from the focus moves outward after one return exactly when a cycle surrounds it.
    """
    lo = _focus_repels(Params(h, k, sigma, alpha_lo), offset)
    hi = _focus_repels(Params(h, k, sigma, alpha_hi), offset)
    if lo or not hi:
        raise ParameterError(f'cycle onset is not bracketed by alpha in ({alpha_lo}, {alpha_hi})')
    a, b = alpha_lo, alpha_hi
    while b - a > resolution:
        m = (a + b) / 2
        if _focus_repels(Params(h, k, sigma, m), offset):
            b = m
        else:
            a = m
    return (a + b) / 2


def _has_cycle(p: Params, transient: float) -> bool:
    center = focus(p)
    if center is None:
        return False
    section = make_section(p, center)
    seed = section.point(1e-2 * max(1.0, float(np.linalg.norm(center))))
    return find_limit_cycle(p, seed=seed, transient=transient) is not None


def homoclinic_alpha(h: float, k: float, sigma: float, alpha_lo: float, alpha_hi: float,
                     resolution: float = 1e-3, transient: float = TRANSIENT) -> float:
    """Bisection in ``alpha`` between a stable cycle at ``alpha_lo`` and no cycle at ``alpha_hi``."""
    if not _has_cycle(Params(h, k, sigma, alpha_lo), transient):
        raise ParameterError(f'no cycle at alpha_lo={alpha_lo}')
    if _has_cycle(Params(h, k, sigma, alpha_hi), transient):
        raise ParameterError(f'cycle persists at alpha_hi={alpha_hi}')
    a, b = alpha_lo, alpha_hi
    while b - a > resolution:
        m = (a + b) / 2
        if _has_cycle(Params(h, k, sigma, m), transient):
            a = m
        else:
            b = m
    return (a + b) / 2


def amplitude_law(h: float, k: float, sigma: float, deltas: Sequence[float] = (1e-3, 2e-3, 4e-3),
                  transient: float = 4 * TRANSIENT) -> dict:
    """
    Cycle amplitudes at ``alpha = alpha2 (1 + delta)`` and the linear fit of the squared amplitude
    against ``delta``.
    """
    a2 = alpha2(h, k, sigma)
    if a2 is None:
        raise ParameterError(f'alpha2 is undefined at h={h}, k={k}, sigma={sigma}')
    amplitudes = []
    for delta in deltas:
        p = Params(h, k, sigma, a2 * (1 + delta))
        center = focus(p)
        if center is None:
            raise ParameterError(f'no interior focus at alpha={p.alpha}')
        section = make_section(p, center)
        seed = section.point(np.sqrt(delta) * center.x / 2)
        cycle = find_limit_cycle(p, seed=seed, transient=transient)
        if cycle is None:
            raise ArithmeticError(f'no cycle found at delta={delta}')
        amplitudes.append(cycle.amplitude)
    x = np.asarray(deltas, dtype=float).reshape(-1, 1)
    y = np.asarray(amplitudes) ** 2
    model = LinearRegression().fit(x, y)
    return {
        'alpha2': a2,
        'deltas': list(deltas),
        'amplitudes': amplitudes,
        'slope': float(model.coef_[0]),
        'intercept': float(model.intercept_),
        'r2': float(r2_score(y, model.predict(x))),
    }


def hausdorff(a: np.ndarray, b: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two point sets."""
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    return max(directed_hausdorff(a, b)[0], directed_hausdorff(b, a)[0])
