"""
Writers for orbits, sweeps and bifurcation curves (CSV with a header row), JSON reports and SVG
phase portraits.
"""
import csv
import json
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from facilidyn.localform import BTCurves  # noqa: E402
from facilidyn.regions import Equilibrium, Kind  # noqa: E402
from facilidyn.simulate.integrator import Orbit  # noqa: E402
from facilidyn.simulate.sweep import SweepRecord  # noqa: E402

SVG_SIZE = (8, 6)
SVG_DPI = 100

_GLYPHS = {
    Kind.Saddle: ('x', 'tab:red'),
    Kind.StableNode: ('o', 'tab:blue'),
    Kind.StableFocus: ('o', 'tab:blue'),
    Kind.UnstableNode: ('o', 'white'),
    Kind.UnstableFocus: ('o', 'white'),
    Kind.CenterType: ('D', 'tab:green'),
    Kind.DegenerateSaddleNode: ('s', 'tab:orange'),
    Kind.Cusp: ('^', 'tab:purple'),
}


def write_orbit_csv(orbit: Orbit, path: str):
    data = np.column_stack([orbit.times, orbit.states])
    np.savetxt(path, data, delimiter=',', header='t,x,y', comments='', fmt='%.12g', encoding='utf-8')


def write_sweep_csv(records: Sequence[SweepRecord], path: str):
    rows = [r.row() for r in records]
    fields = list(rows[0].keys()) if rows else list(SweepRecord._fields)
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)


def write_equilibria_csv(equilibria: Sequence[Equilibrium], path: str):
    fields = ['role', 'x', 'y', 'trace', 'det', 'kind']
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=fields)
        writer.writeheader()
        writer.writerows(e.to_dict() for e in equilibria)


def write_curves_csv(curves: BTCurves, path: str):
    data = np.array(list(curves.rows()), dtype=float).reshape(-1, 4)
    np.savetxt(path, data, delimiter=',', header='sigma,alpha_sn,alpha_h,alpha_hl', comments='', fmt='%.12g',
               encoding='utf-8')


def _default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return f'{obj.numerator}/{obj.denominator}'
    if hasattr(obj, 'to_dict'):
        return obj.to_dict()
    if hasattr(obj, '_asdict'):
        return obj._asdict()
    raise TypeError(f'unsupported type for JSON: {type(obj).__name__}')


def to_json(obj, indent: Optional[int] = 2) -> str:
    return json.dumps(obj, default=_default, indent=indent, allow_nan=True)


def write_json(obj, path: str):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(to_json(obj))
        f.write('\n')


def write_phase_portrait_svg(path: str, orbits: Iterable[np.ndarray], equilibria: List[Equilibrium] = (),
                             cycles: Iterable[np.ndarray] = (), title: str = ''):
    """
    Polylines of the given ``(n, 2)`` state arrays and one glyph per equilibrium, as an SVG of
    800 x 600 px.
    """
    fig, ax = plt.subplots(figsize=SVG_SIZE, dpi=SVG_DPI)
    for states in orbits:
        states = np.asarray(states)
        ax.plot(states[:, 0], states[:, 1], lw=0.8, color='tab:gray')
    for points in cycles:
        points = np.asarray(points)
        ax.plot(points[:, 0], points[:, 1], lw=1.6, color='tab:blue')
    for e in equilibria:
        marker, color = _GLYPHS[e.kind]
        ax.plot([e.x], [e.y], marker=marker, color=color, markeredgecolor='black', ms=7, ls='none',
                label=f'{e.role.value} ({e.kind.value})')
    ax.set_xlabel('x')
    ax.set_ylabel('y')
    ax.set_xlim(left=0)
    ax.set_ylim(bottom=0)
    if title:
        ax.set_title(title)
    if equilibria:
        ax.legend(loc='upper right', fontsize='small')
    fig.savefig(path, format='svg')
    plt.close(fig)
