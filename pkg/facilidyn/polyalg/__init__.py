from .poly import Rat, Poly, RootInterval, SignList, to_rat, rat_to_str
from .functional import prem, gcd, squarefree, sturm_sequence, sign_variations, root_bound, sturm_isolate, \
    refine_root, real_roots, certified_roots, discriminant_sequence, revise, sign_list, count_distinct_real_roots, \
    substitute_reciprocal_square

__all__ = [
    'Rat',
    'Poly',
    'RootInterval',
    'SignList',
    'to_rat',
    'rat_to_str',
    'prem',
    'gcd',
    'squarefree',
    'sturm_sequence',
    'sign_variations',
    'root_bound',
    'sturm_isolate',
    'refine_root',
    'real_roots',
    'certified_roots',
    'discriminant_sequence',
    'revise',
    'sign_list',
    'count_distinct_real_roots',
    'substitute_reciprocal_square'
]

classes = __all__
