from .expansion import taylor_coefficients, field_expr, to_expr, truncate
from .reduction import Bifurcation, CenterManifoldReduction, center_manifold, ek_reduction, estar_sn_reduction, \
    trace_estar, sign_trace_estar
from .hopf import HopfData, hopf, lyapunov_coefficient, shifted_focal_coefficients, focal_certificate
from .bt import BTCusp, BTUnfolding, BTCurves, bt_cusp, unfolding_coefficients, bt_unfolding, mu_taylor, \
    hl_coefficients, alpha3, unfolding_jacobian, hl_curve_implicit, bt_curves
from .discrimination import BRACKETS, SUBINTERVALS, discriminant_factor_roots, isolate_factor, locate, \
    nondegeneracy_report, g2_g3_nondegeneracy

__all__ = [
    'taylor_coefficients',
    'field_expr',
    'to_expr',
    'truncate',
    'Bifurcation',
    'CenterManifoldReduction',
    'center_manifold',
    'ek_reduction',
    'estar_sn_reduction',
    'trace_estar',
    'sign_trace_estar',
    'HopfData',
    'hopf',
    'lyapunov_coefficient',
    'shifted_focal_coefficients',
    'focal_certificate',
    'BTCusp',
    'BTUnfolding',
    'BTCurves',
    'bt_cusp',
    'unfolding_coefficients',
    'bt_unfolding',
    'mu_taylor',
    'hl_coefficients',
    'alpha3',
    'unfolding_jacobian',
    'hl_curve_implicit',
    'bt_curves',
    'BRACKETS',
    'SUBINTERVALS',
    'discriminant_factor_roots',
    'isolate_factor',
    'locate',
    'nondegeneracy_report',
    'g2_g3_nondegeneracy'
]

classes = __all__
