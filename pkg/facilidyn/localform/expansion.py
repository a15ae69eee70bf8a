"""
Exact polynomial expansion of the quartic vector field around a point, optionally in one
parameter, and the truncated substitutions used by the reduction chains.
"""
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

import sympy as sp

from facilidyn.model import Params, State

Coefficients = Dict[Tuple[int, ...], float]

X, Y, E = sp.symbols('X Y E')
_h, _k, _s, _a, _x0, _y0 = sp.symbols('h k sigma alpha x0 y0')
PARAMS = ('h', 'k', 'sigma', 'alpha')


def field_expr(h, k, sigma, alpha, x, y) -> Tuple[sp.Expr, sp.Expr]:
    """The quartic right-hand side as sympy expressions."""
    c = 1 + alpha * y
    dx = x * (sigma * (k - x) * (1 + h * c * x) - k * y * c)
    dy = k * y * (x * c * (1 - h) - 1)
    return dx, dy


@lru_cache(maxsize=None)
def _expansion(param: Optional[str]) -> List[Tuple[List[Tuple[int, ...]], Callable]]:
    values = {'h': _h, 'k': _k, 'sigma': _s, 'alpha': _a}
    if param is not None:
        if param not in values:
            raise RuntimeError(f'unsupported expansion parameter: {param}')
        values[param] = values[param] + E
    gens = (X, Y, E) if param is not None else (X, Y)
    out = []
    for f in field_expr(values['h'], values['k'], values['sigma'], values['alpha'], _x0 + X, _y0 + Y):
        terms = sp.Poly(sp.expand(f), *gens).terms()
        monoms = [m for m, _ in terms]
        fn = sp.lambdify((_h, _k, _s, _a, _x0, _y0), [c for _, c in terms], 'math')
        out.append((monoms, fn))
    return out


def taylor_coefficients(p: Params, point: State, order: int = 3,
                        param: Optional[str] = None) -> Tuple[Coefficients, Coefficients]:
    """
    Taylor coefficients of the quartic field around ``point``.

    Args:
        p: Parameters at the expansion point.
        point: Expansion point ``(x0, y0)``.
        order: Highest total degree kept.
        param: Optional name of a parameter that is perturbed as ``param + E``.

    Returns:
        (dict, dict): Coefficients of ``dx/dt`` and ``dy/dt`` keyed by exponent tuples
        ``(i, j)`` of ``X**i Y**j``, or ``(i, j, l)`` with ``E**l`` when ``param`` is given.
    """
    h, k, sigma, alpha = Params(*p).unfold()
    out = []
    for monoms, fn in _expansion(param):
        values = fn(h, k, sigma, alpha, float(point[0]), float(point[1]))
        out.append({m: float(v) for m, v in zip(monoms, values) if sum(m) <= order})
    return out[0], out[1]


def to_expr(coeffs: Coefficients, gens) -> sp.Expr:
    return sp.Add(*[c * sp.Mul(*[g ** e for g, e in zip(gens, m)]) for m, c in coeffs.items()])


def truncate(expr: sp.Expr, gens, order: int) -> Dict[Tuple[int, ...], sp.Expr]:
    """Coefficients of a polynomial expression up to total degree ``order``."""
    poly = sp.Poly(sp.expand(expr), *gens)
    return {m: c for m, c in poly.terms() if sum(m) <= order}


def coefficient(coeffs: Dict, monom: Tuple[int, ...]) -> float:
    return float(coeffs.get(monom, 0.0))
