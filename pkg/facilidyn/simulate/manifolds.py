from typing import Dict, NamedTuple, Optional

import numpy as np
from scipy.integrate import solve_ivp

from facilidyn.model import Params, State, jacobian, rhs
from facilidyn.regions import Equilibrium, Kind, Role, equilibria
from facilidyn.simulate.cycles import CYCLE_ATOL, CYCLE_RTOL, Section, focus, make_section
from facilidyn.simulate.integrator import Orbit, integrate
from facilidyn.utils import ParameterError, logger

BRANCHES = ('unstable+', 'unstable-', 'stable+', 'stable-')


class Branch(NamedTuple):
    """One half of the stable or unstable manifold of a saddle; ``orbit`` is ``None`` when the branch
    starts outside the closed quadrant."""
    name: str
    eigenvalue: float
    direction: np.ndarray
    orbit: Optional[Orbit]

    @property
    def stable(self) -> bool:
        return self.name.startswith('stable')


def _eigen_split(p: Params, saddle: Equilibrium):
    w, vecs = np.linalg.eig(jacobian(p, State(saddle.x, saddle.y)))
    w, vecs = np.real(w), np.real(vecs)
    order = np.argsort(w)
    return (w[order[0]], vecs[:, order[0]]), (w[order[1]], vecs[:, order[1]])


def saddle_manifolds(p: Params, saddle: Equilibrium, length: float, delta: float = 1e-6) -> Dict[str, Branch]:
    """
    The four branches of the invariant manifolds of a saddle, integrated for time ``length`` from
    offsets ``+-delta * scale`` along the eigenvectors. Stable branches are integrated backward.
    """
    p = Params(*p).validate()
    if saddle.kind is not Kind.Saddle:
        raise ParameterError(f'{saddle.role.value} is a {saddle.kind.value}, not a saddle')
    (ls, vs), (lu, vu) = _eigen_split(p, saddle)
    origin = np.array([saddle.x, saddle.y])
    offset = delta * max(1.0, float(np.linalg.norm(origin)))
    out = {}
    for name, lam, vec in (('unstable+', lu, vu), ('unstable-', lu, -vu), ('stable+', ls, vs), ('stable-', ls, -vs)):
        start = origin + offset * vec
        if (start < 0).any():
            # a manifold along an axis has its other half outside the quadrant
            out[name] = Branch(name, float(lam), vec, None)
            continue
        orbit = integrate(p, start, length, backward=name.startswith('stable'))
        out[name] = Branch(name, float(lam), vec, orbit)
    return out


def _first_ray_crossing(p: Params, z0: np.ndarray, section: Section, t_max: float, backward: bool) -> Optional[float]:
    f = rhs(p)
    fun = (lambda t, z: -f(t, z)) if backward else f
    normal = np.array([-section.direction[1], section.direction[0]])
    origin = np.asarray(section.origin)

    def event(t, z):
        return float(np.dot(normal, z - origin))

    event.direction = -section.sense if backward else section.sense
    sol = solve_ivp(fun, (0.0, t_max), z0, method='RK45', rtol=CYCLE_RTOL, atol=CYCLE_ATOL, events=[event])
    for z in sol.y_events[0]:
        s = section.coordinate(z)
        if s > 0:
            return s
    return None


def homoclinic_gap(p: Params, length: float = 200.0, delta: float = 1e-6) -> Optional[float]:
    """
    Signed split between the unstable and the stable branch of ``E2`` on the section ray through
    ``E1``: the section coordinate of the first unstable crossing minus that of the first stable
    one. It changes sign where the homoclinic loop forms. ``None`` when ``E1``/``E2`` are missing or
    no branch pair reaches the ray.
    """
    p = Params(*p).validate()
    saddle = next((e for e in equilibria(p) if e.role is Role.E2), None)
    center = focus(p)
    if saddle is None or center is None or saddle.kind is not Kind.Saddle:
        return None
    section = make_section(p, center)
    (_, vs), (_, vu) = _eigen_split(p, saddle)
    origin = np.array([saddle.x, saddle.y])
    offset = delta * max(1.0, float(np.linalg.norm(origin)))
    unstable = [_first_ray_crossing(p, origin + offset * d, section, length, False) for d in (vu, -vu)]
    stable = [_first_ray_crossing(p, origin + offset * d, section, length, True) for d in (vs, -vs)]
    unstable = [s for s in unstable if s is not None]
    stable = [s for s in stable if s is not None]
    if not unstable or not stable:
        logger.debug(f'no branch pair of E2 reaches the section at {tuple(p)}')
        return None
    return min(unstable) - max(stable)
