from .labels import Kind, Role, Equilibrium, RegionLabel, LABELS, predicted_census, predicted_trace_sign
from .classify import cmp, classify, predict_trace_sign_from_x0, bt_region
from .census import classify_kind, interior_roots, equilibria, verify_census, random_params, census_batch

__all__ = [
    'Kind',
    'Role',
    'Equilibrium',
    'RegionLabel',
    'LABELS',
    'predicted_census',
    'predicted_trace_sign',
    'cmp',
    'classify',
    'predict_trace_sign_from_x0',
    'bt_region',
    'classify_kind',
    'interior_roots',
    'equilibria',
    'verify_census',
    'random_params',
    'census_batch'
]

classes = __all__
