from .integrator import TRANSIENT, WINDOW, OrbitClass, Classification, Orbit, integrate, classify_orbit
from .cycles import Stability, Section, CycleRecord, focus, make_section, return_map, find_limit_cycle, \
    hopf_onset, homoclinic_alpha, amplitude_law, hausdorff
from .manifolds import Branch, saddle_manifolds, homoclinic_gap
from .sweep import Axis, SweepRecord, sweep_point, sweep
from .io import write_orbit_csv, write_sweep_csv, write_equilibria_csv, write_curves_csv, to_json, write_json, \
    write_phase_portrait_svg

__all__ = [
    'TRANSIENT',
    'WINDOW',
    'OrbitClass',
    'Classification',
    'Orbit',
    'integrate',
    'classify_orbit',
    'Stability',
    'Section',
    'CycleRecord',
    'focus',
    'make_section',
    'return_map',
    'find_limit_cycle',
    'hopf_onset',
    'homoclinic_alpha',
    'amplitude_law',
    'hausdorff',
    'Branch',
    'saddle_manifolds',
    'homoclinic_gap',
    'Axis',
    'SweepRecord',
    'sweep_point',
    'sweep',
    'write_orbit_csv',
    'write_sweep_csv',
    'write_equilibria_csv',
    'write_curves_csv',
    'to_json',
    'write_json',
    'write_phase_portrait_svg'
]

classes = __all__
