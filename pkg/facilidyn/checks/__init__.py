from .check import Outcome, Check
from .acceptance import ConstantsCheck, QuartetCheck, CycleFamilyCheck, CensusCheck, RootCountCheck, TraceDetCheck, \
    HopfCheck, NondegeneracyCheck, HomoclinicCheck, ClosedFormCheck, random_poly, suite, run_suite

__all__ = [
    'Outcome',
    'Check',
    'ConstantsCheck',
    'QuartetCheck',
    'CycleFamilyCheck',
    'CensusCheck',
    'RootCountCheck',
    'TraceDetCheck',
    'HopfCheck',
    'NondegeneracyCheck',
    'HomoclinicCheck',
    'ClosedFormCheck',
    'random_poly',
    'suite',
    'run_suite'
]

classes = __all__
