from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from facilidyn.model import Params, State, jacobian, nullcline_y, equilibrium_poly, x_star
from facilidyn.polyalg import certified_roots, sturm_isolate, refine_root, to_rat
from facilidyn.regions.classify import classify
from facilidyn.regions.labels import Kind, Role, Equilibrium, RegionLabel, predicted_census
from facilidyn.utils import BAR_FORMAT, get_tolerance, is_verbose, batchify_dict, logger

DEFAULT_BOX = ((0.05, 0.95), (0.1, 10.0), (0.1, 5.0), (0.1, 30.0))


def classify_kind(trace: float, det: float, norm: float, tol: float) -> Kind:
    """
    Linear type from trace and determinant. ``tol`` is relative to the Jacobian entry scale
    ``norm``: ``det`` is compared with ``tol * norm**2`` and ``trace`` with ``tol * norm``.
    """
    norm = max(norm, 1e-300)
    tol_d, tol_t = tol * norm ** 2, tol * norm
    if det < -tol_d:
        return Kind.Saddle
    if abs(det) <= tol_d:
        return Kind.Cusp if abs(trace) <= tol_t else Kind.DegenerateSaddleNode
    if abs(trace) <= tol_t:
        return Kind.CenterType
    node = trace ** 2 - 4 * det >= 0
    if trace < 0:
        return Kind.StableNode if node else Kind.StableFocus
    return Kind.UnstableNode if node else Kind.UnstableFocus


def _equilibrium(p: Params, x: float, y: float, role: Role, tol: float, kind: Optional[Kind] = None) -> Equilibrium:
    j = jacobian(p, State(x, y))
    trace = float(j[0, 0] + j[1, 1])
    det = float(j[0, 0] * j[1, 1] - j[0, 1] * j[1, 0])
    norm = float(np.abs(j).max())
    if kind is None:
        kind = classify_kind(trace, det, norm, tol)
    return Equilibrium(x, y, trace, det, kind, role)


def interior_roots(p: Params, tol: Optional[float] = None) -> Tuple[List[float], bool]:
    """
    Roots of the equilibrium polynomial inside ``(0, k)``.

    Returns:
        (List[float], bool): Sorted abscissas, and whether they collapse to one double root.
    """
    tol = get_tolerance() if tol is None else tol
    h, k, _, _ = p.unfold()
    if h >= 1:
        return [], False
    F = equilibrium_poly(p)
    scale = max(abs(float(c)) for c in F.coeffs)
    xs = x_star(p)
    if xs < k and abs(F(xs)) <= tol * scale * max(1.0, xs) ** 3:
        return [xs], True
    kr = to_rat(k)
    roots = certified_roots(F, (Fraction(0), kr))
    if roots is None:
        roots = [float(refine_root(F, iv, max(kr, Fraction(1)) * Fraction(1, 2 ** 52)).midpoint)
                 for iv in sturm_isolate(F, (Fraction(0), kr), Fraction(1, 2 ** 12))]
    found = [x for x in roots if abs(x - k) > tol * k]
    double = len(found) == 1 and abs(F.derivative()(found[0])) <= 1e-7 * scale
    return found, double


def equilibria(p: Params, tol: Optional[float] = None) -> List[Equilibrium]:
    """
    All equilibria with their linear type: ``E0`` and ``Ek`` always, plus the roots of the
    equilibrium polynomial in ``(0, k)`` when ``h < 1``. A double root is reported as ``E*``,
    a cusp if the trace vanishes there too.
    """
    p = Params(*p).validate()
    tol = get_tolerance() if tol is None else tol
    _, k, _, _ = p.unfold()
    out = [_equilibrium(p, 0.0, 0.0, Role.E0, tol), _equilibrium(p, k, 0.0, Role.Ek, tol)]
    roots, double = interior_roots(p, tol)
    if double:
        x = roots[0]
        y = nullcline_y(p, x)
        # the double root is only located to about sqrt(tol)
        norm = float(np.abs(jacobian(p, State(x, y))).max())
        e = _equilibrium(p, x, y, Role.Estar, tol)
        kind = Kind.Cusp if abs(e.trace) <= tol ** 0.5 * norm else Kind.DegenerateSaddleNode
        out.append(e._replace(kind=kind))
        return out
    dF = equilibrium_poly(p).derivative()
    for x in roots:
        role = Role.E1 if dF(x) > 0 else Role.E2
        out.append(_equilibrium(p, x, nullcline_y(p, x), role, tol))
    return out


def _matches(predicted, computed: List[Equilibrium]) -> bool:
    if len(predicted) != len(computed):
        return False
    by_role = {e.role: e for e in computed}
    if len(by_role) != len(computed):
        return False
    return all(role in by_role and by_role[role].kind in kinds for role, kinds in predicted)


def verify_census(p: Params, band: Optional[float] = None) -> dict:
    """
    Compare the computed equilibria with the census predicted for the cell of ``p``.
    For points flagged as boundary the comparison is advisory.
    """
    label = classify(p, band)
    predicted = predicted_census(label)
    computed = equilibria(p, band)
    match = _matches(predicted, computed)
    if not match:
        logger.debug(f'census mismatch at {tuple(p)}: {label.name} vs {[e.kind.value for e in computed]}')
    return {
        'params': Params(*p).to_dict(),
        'label': label.name,
        'boundary': label.boundary,
        'predicted': [(r.value, sorted(k.value for k in kinds)) for r, kinds in predicted],
        'computed': [e.to_dict() for e in computed],
        'match': match,
    }


def random_params(rng: np.random.Generator, n: int, box: Sequence[Tuple[float, float]] = DEFAULT_BOX) -> List[Params]:
    """Uniform draws over a box of ``(h, k, sigma, alpha)``."""
    assert len(box) == 4
    lo = np.array([b[0] for b in box])
    hi = np.array([b[1] for b in box])
    draws = rng.uniform(lo, hi, size=(n, 4))
    return [Params(*map(float, row)) for row in draws]


def census_batch(draws: Sequence[Params], band: Optional[float] = None, skip_boundary: bool = True) -> dict:
    """
    Run ``verify_census`` over many draws.

    Returns:
        dict: ``reports`` (the per-draw reports, boundary draws dropped when ``skip_boundary``),
        ``skipped``, ``matched``, ``total`` and ``rate``.
    """
    reports = []
    skipped = 0
    with tqdm(total=len(draws), desc='(C)', bar_format=BAR_FORMAT, disable=not is_verbose()) as pbar:
        for p in draws:
            report = verify_census(p, band)
            if skip_boundary and report['boundary']:
                skipped += 1
            else:
                reports.append(report)
            matched = sum(r['match'] for r in reports)
            pbar.set_postfix({'match': f'{matched}/{len(reports)}'})
            pbar.update()
    batch = batchify_dict(reports) if reports else {'match': []}
    matched = sum(batch['match'])
    total = len(reports)
    return {
        'reports': reports,
        'labels': batch.get('label', []),
        'skipped': skipped,
        'matched': matched,
        'total': total,
        'rate': matched / total if total else 1.0,
    }
