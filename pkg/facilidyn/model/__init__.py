from .params import Params, State, DimensionalParams, from_dimensional
from .system import vector_field, vector_field_orbital, time_scale, jacobian, trace_det, nullcline_y, \
    trace_det_closed_form, rhs, rhs_jacobian, ek_trace_det, as_state
from .polys import equilibrium_poly, equilibrium_poly_remainder, trace_numerator, saddle_node_poly, capacity_poly, \
    f1_poly, f2_poly, f3_poly, focal_poly, cusp_poly, g2_poly, g3_poly, zeta1_poly, zeta2_poly, phi_poly, phi0_poly, \
    D31, D41, D51, D61, D71
from .thresholds import Thresholds, thresholds, k1, k2, k3, alpha_crit, alpha1, alpha2, sigma1, sigma2, x_star, \
    x_star_alpha1, x0, y1_at_x0, F_at_x0, estar, bt_point

__all__ = [
    'Params',
    'State',
    'DimensionalParams',
    'from_dimensional',
    'vector_field',
    'vector_field_orbital',
    'time_scale',
    'jacobian',
    'trace_det',
    'nullcline_y',
    'trace_det_closed_form',
    'rhs',
    'rhs_jacobian',
    'ek_trace_det',
    'as_state',
    'equilibrium_poly',
    'equilibrium_poly_remainder',
    'trace_numerator',
    'saddle_node_poly',
    'capacity_poly',
    'f1_poly',
    'f2_poly',
    'f3_poly',
    'focal_poly',
    'cusp_poly',
    'g2_poly',
    'g3_poly',
    'zeta1_poly',
    'zeta2_poly',
    'phi_poly',
    'phi0_poly',
    'D31',
    'D41',
    'D51',
    'D61',
    'D71',
    'Thresholds',
    'thresholds',
    'k1',
    'k2',
    'k3',
    'alpha_crit',
    'alpha1',
    'alpha2',
    'sigma1',
    'sigma2',
    'x_star',
    'x_star_alpha1',
    'x0',
    'y1_at_x0',
    'F_at_x0',
    'estar',
    'bt_point'
]

classes = __all__
