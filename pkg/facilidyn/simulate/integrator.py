from __future__ import annotations

from enum import Enum
from typing import List, NamedTuple, Optional, Sequence

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from facilidyn.model import Params, State, as_state, rhs, rhs_jacobian
from facilidyn.regions import Equilibrium, Role
from facilidyn.utils import ATOL, RTOL, ParameterError, logger

TRANSIENT = 500.0
WINDOW = 200.0
ESCAPE = 1e6


class OrbitClass(Enum):
    ConvergedTo = 'converged'
    PeriodicCycle = 'periodic'
    EscapedDomain = 'escaped'
    Undetermined = 'undetermined'


class Classification(NamedTuple):
    kind: OrbitClass
    role: Optional[Role] = None
    cycle: Optional[int] = None
    detail: str = ''

    def __str__(self):
        if self.kind is OrbitClass.ConvergedTo:
            return f'{self.kind.value}:{self.role.value}'
        if self.kind is OrbitClass.PeriodicCycle:
            return f'{self.kind.value}:{self.cycle}'
        return self.kind.value


class Orbit(NamedTuple):
    """
    A trajectory of the quartic system.

    Attributes:
        params: Model parameters.
        times: Strictly increasing time stamps.
        states: ``(n, 2)`` array of ``(x, y)``.
        success: Whether the integrator reached the final time or a terminal event.
        escaped: Whether the orbit left the box ``max(x, y) < ESCAPE``.
        message: Integrator status message.
        dense: Continuous extension of the solution, when requested.
    """
    params: Params
    times: np.ndarray
    states: np.ndarray
    success: bool
    escaped: bool
    message: str
    dense: Optional[object] = None

    @property
    def final(self) -> State:
        return as_state(self.states[-1])

    def state(self, i: int) -> State:
        return as_state(self.states[i])

    def __len__(self):
        return len(self.times)


def _escape_event(t, z):
    return ESCAPE - max(z[0], z[1])


_escape_event.terminal = True
_escape_event.direction = -1


def _clip(states: np.ndarray, atol: float) -> np.ndarray:
    # the axes are invariant; only round-off may push a coordinate below zero
    out = states.copy()
    near = (out < 0) & (out >= -atol)
    out[near] = 0.0
    return out


def integrate(p: Params, s0, t_end: float, rtol: float = RTOL, atol: float = ATOL, method: str = 'RK45',
              t_eval: Optional[Sequence[float]] = None, max_step: float = np.inf, dense: bool = False,
              backward: bool = False) -> Orbit:
    """
    Integrate from ``s0`` over ``[0, t_end]`` with an adaptive embedded Runge-Kutta pair.

    Args:
        p: Model parameters.
        s0: Initial state in the closed first quadrant.
        t_end: Final time, positive.
        rtol, atol: Integrator tolerances.
        method: Any explicit ``solve_ivp`` method; ``RK45`` is the Dormand-Prince 5(4) pair.
        t_eval: Optional output times.
        max_step: Largest allowed step.
        dense: Keep the continuous extension of the solution.
        backward: Integrate the time-reversed field.
    """
    p = Params(*p).validate()
    s0 = as_state(s0)
    if not t_end > 0:
        raise ParameterError(f't_end must be positive, got {t_end}')
    if s0.x < 0 or s0.y < 0 or not np.isfinite(s0).all():
        raise ParameterError(f'initial state must lie in the closed first quadrant, got {tuple(s0)}')
    f = rhs(p)
    fun = (lambda t, z: -f(t, z)) if backward else f
    kwargs = {}
    if method in ('Radau', 'BDF', 'LSODA'):
        jac = rhs_jacobian(p)
        kwargs['jac'] = (lambda t, z: -jac(t, z)) if backward else jac
    sol = solve_ivp(fun, (0.0, t_end), np.asarray(s0, dtype=float), method=method, rtol=rtol, atol=atol,
                    t_eval=t_eval, max_step=max_step, dense_output=dense, events=[_escape_event], **kwargs)
    escaped = sol.status == 1 and len(sol.t_events[0]) > 0
    if sol.status < 0:
        logger.debug(f'integration failed at {tuple(p)} from {tuple(s0)}: {sol.message}')
    return Orbit(
        params=p,
        times=sol.t,
        states=_clip(sol.y.T, atol),
        success=sol.status >= 0,
        escaped=escaped,
        message=sol.message,
        dense=sol.sol if dense else None,
    )


def _upward_crossings(times: np.ndarray, states: np.ndarray, level: float, dense=None) -> np.ndarray:
    y = states[:, 1] - level
    idx = np.nonzero((y[:-1] < 0) & (y[1:] >= 0))[0]
    if dense is None:
        w = -y[idx] / (y[idx + 1] - y[idx])
        return states[idx, 0] + w * (states[idx + 1, 0] - states[idx, 0])
    out = []
    for i in idx:
        if y[i + 1] == 0:
            out.append(states[i + 1, 0])
            continue
        tc = brentq(lambda t: dense(t)[1] - level, times[i], times[i + 1], xtol=1e-14, rtol=1e-13)
        out.append(dense(tc)[0])
    return np.asarray(out)


def classify_orbit(orbit: Orbit, eqs: List[Equilibrium], window: float = WINDOW, eq_tol: float = 1e-6,
                   cycle_tol: float = 1e-7) -> Classification:
    """
    Classify the tail of an orbit.

    The orbit has converged if its final state lies within ``eq_tol`` (relative to the state scale)
    of an equilibrium and the distance to it has not grown over the window. It is periodic if
    successive upward crossings of the mean ``y`` level in the window move by less than ``cycle_tol``.
    Crossings are located on the continuous extension when the orbit carries one, otherwise by
    linear interpolation between steps.
    """
    if not orbit.success:
        return Classification(OrbitClass.Undetermined, detail=orbit.message)
    if orbit.escaped:
        return Classification(OrbitClass.EscapedDomain)
    t, z = orbit.times, orbit.states
    tail = t >= t[-1] - window
    if tail.sum() < 3:
        return Classification(OrbitClass.Undetermined, detail='window too short')
    final = z[-1]
    scale = max(1.0, float(np.abs(final).max()))
    if eqs:
        points = np.array([[e.x, e.y] for e in eqs])
        dist = np.linalg.norm(points - final, axis=1)
        i = int(np.argmin(dist))
        start = np.linalg.norm(points[i] - z[tail][0])
        if dist[i] <= eq_tol * scale and dist[i] <= start + eq_tol * scale:
            return Classification(OrbitClass.ConvergedTo, role=eqs[i].role)
    zt = z[tail]
    xs = _upward_crossings(t[tail], zt, float(zt[:, 1].mean()), orbit.dense)
    if len(xs) >= 3 and abs(xs[-1] - xs[-2]) <= cycle_tol * scale:
        return Classification(OrbitClass.PeriodicCycle, cycle=0)
    return Classification(OrbitClass.Undetermined)
