import numpy as np

from typing import Callable, Tuple, Union
from facilidyn.model.params import Params, State
from facilidyn.model.polys import equilibrium_poly
from facilidyn.utils import ParameterError


def vector_field(p: Params, s: State) -> Tuple[float, float]:
    """
    Right-hand side of the quartic (polynomial) form of the system,

        dx/dt = x { sigma (k - x) (1 + h (1 + alpha y) x) - k y (1 + alpha y) },
        dy/dt = k y { x (1 + alpha y) (1 - h) - 1 }.

    ``s`` may hold numpy arrays, in which case the field is evaluated elementwise.
    """
    h, k, sigma, alpha = p.unfold()
    x, y = s
    c = 1 + alpha * y
    dx = x * (sigma * (k - x) * (1 + h * c * x) - k * y * c)
    dy = k * y * (x * c * (1 - h) - 1)
    return dx, dy


def vector_field_orbital(p: Params, s: State) -> Tuple[float, float]:
    """Rational form of the system; equals ``vector_field`` divided by ``k (1 + h (1 + alpha y) x)``."""
    h, k, sigma, alpha = p.unfold()
    x, y = s
    c = 1 + alpha * y
    denom = 1 + h * c * x
    if np.any(np.asarray(denom) <= 0):
        raise ParameterError(f'orbital form undefined where 1 + h(1 + alpha y)x <= 0 (x={x}, y={y})')
    dx = x * (sigma * (1 - x / k) - c * y / denom)
    dy = y * (c * x / denom - 1)
    return dx, dy


def time_scale(p: Params, s: State) -> float:
    """Positive factor relating the two time variables, dt = dtau / time_scale."""
    h, k, _, alpha = p.unfold()
    x, y = s
    return k * (1 + h * (1 + alpha * y) * x)


def jacobian(p: Params, s: State) -> np.ndarray:
    h, k, sigma, alpha = p.unfold()
    x, y = s
    ay = alpha * y
    j11 = sigma * (k - 2 * x) * (1 + h * (ay + 1) * x) + (h * sigma * x * (k - x) - y * k) * (ay + 1)
    j12 = x * ((h * x * (k - x) * sigma - 2 * k * y) * alpha - k)
    j21 = -k * y * (h - 1) * (ay + 1)
    j22 = -k * (x * (h - 1) * (2 * ay + 1) + 1)
    return np.array([[j11, j12], [j21, j22]], dtype=float)


def trace_det(p: Params, s: State) -> Tuple[float, float]:
    j = jacobian(p, s)
    return float(j[0, 0] + j[1, 1]), float(j[0, 0] * j[1, 1] - j[0, 1] * j[1, 0])


def nullcline_y(p: Params, x: float) -> float:
    """Prey nullcline on which every interior equilibrium lies."""
    _, k, sigma, _ = p.unfold()
    if not 0 < x < k:
        raise ParameterError(f'nullcline abscissa must lie in (0, k={k}), got {x}')
    return sigma * x * (k - x) / k


def trace_det_closed_form(p: Params, x: float, tol: float = 1e-8) -> Tuple[float, float]:
    """
    Trace and determinant at an interior equilibrium with abscissa ``x``, expressed through
    the equilibrium polynomial ``F`` and its derivative.

    Args:
        p: Model parameters, ``h < 1``.
        x: A root of ``F`` inside ``(0, k)``.
        tol: Relative tolerance on ``|F(x)|`` for accepting ``x`` as a root.

    Returns:
        (float, float): The trace and the determinant of the Jacobian at ``(x, nullcline_y(x))``.
    """
    h, k, sigma, alpha = p.unfold()
    if h >= 1:
        raise ParameterError(f'no interior equilibrium for h >= 1 (h={h})')
    if not 0 < x < k:
        raise ParameterError(f'equilibrium abscissa must lie in (0, k={k}), got {x}')
    F = equilibrium_poly(p)
    scale = max(abs(float(c)) for c in F.coeffs) * max(1.0, abs(x)) ** 3
    if abs(F(float(x))) > tol * scale:
        raise ParameterError(f'x={x} is not a root of the equilibrium polynomial (F(x)={F(float(x)):.3e})')
    dF = F.derivative()(float(x))
    det = sigma * (k - x) * (alpha * sigma * x * (k - x) + k) * x ** 2 * dF / k
    trace = ((-h ** 2 * k + 2 * h * k - h * sigma - k - sigma) * x + k * (h * sigma - h + 1)) / (1 - h)
    return trace, det


def rhs(p: Params) -> Callable[[float, np.ndarray], np.ndarray]:
    """Closure with the ``fun(t, z)`` signature of ``scipy.integrate.solve_ivp``."""
    h, k, sigma, alpha = p.unfold()

    def fun(t, z):
        x, y = z[0], z[1]
        c = 1 + alpha * y
        return np.array([
            x * (sigma * (k - x) * (1 + h * c * x) - k * y * c),
            k * y * (x * c * (1 - h) - 1),
        ])

    return fun


def rhs_jacobian(p: Params) -> Callable[[float, np.ndarray], np.ndarray]:
    def jac(t, z):
        return jacobian(p, State(z[0], z[1]))

    return jac


def ek_trace_det(p: Params) -> Tuple[float, float, float]:
    """Trace, determinant and discriminant ``T**2 - 4 D`` at ``Ek = (k, 0)`` in closed form."""
    h, k, sigma, _ = p.unfold()
    trace = -k * ((sigma + 1) * (h * k + 1) - k)
    det = k ** 2 * sigma * (h * k + 1) * (h * k - k + 1)
    disc = k ** 2 * ((sigma - 1) * (h * k + 1) + k) ** 2
    return trace, det, disc


def as_state(s: Union[State, Tuple[float, float], np.ndarray]) -> State:
    return s if isinstance(s, State) else State(float(s[0]), float(s[1]))
