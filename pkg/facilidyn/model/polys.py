"""
Auxiliary polynomials of the equilibrium and bifurcation analysis, built with exact
rational coefficients from (rational approximations of) the parameters.
"""
from fractions import Fraction
from typing import Tuple

from facilidyn.polyalg import Poly, to_rat
from facilidyn.model.params import Params


def _rats(*values) -> Tuple[Fraction, ...]:
    return tuple(to_rat(v) for v in values)


def equilibrium_poly(p: Params) -> Poly:
    """F(x) = alpha sigma (h-1) x^3 + alpha sigma k (1-h) x^2 + k (1-h) x - k."""
    h, k, s, a = _rats(*p)
    return Poly([-k, k * (1 - h), a * s * k * (1 - h), a * s * (h - 1)])


def equilibrium_poly_remainder(p: Params) -> Poly:
    """Linear factor of the pseudo-remainder of F by F', 2 (k alpha sigma + 3)(1-h) x + k (1-h) - 9."""
    h, k, s, a = _rats(*p)
    return Poly([k * (1 - h) - 9, 2 * (k * a * s + 3) * (1 - h)])


def trace_numerator(p: Params) -> Poly:
    """Trace at an interior equilibrium before reduction by F; agrees with the trace on roots of F."""
    h, k, s, a = _rats(*p)
    inner = Poly([
        h * k ** 2,
        k * (a * h * k * s - a * h * k + a * k - h - 1),
        -a * k * (2 * h * s - h + s + 1),
        a * s * (h + 1),
    ])
    return inner * Poly([0, s / k])


def saddle_node_poly(h, k, sigma) -> Poly:
    """F1(alpha): its larger root is the saddle-node threshold alpha1."""
    h, k, s = _rats(h, k, sigma)
    u = (1 - h) * k
    return Poly([4 * k * (1 - h) ** 2, s * (u ** 2 + 18 * u - 27), 4 * k ** 2 * s ** 2 * (1 - h)])


def capacity_poly(h, k) -> Poly:
    """
    f(sigma), the numerator of alpha2 - 1/(sigma k) up to a positive factor. Its unique positive
    root sigma1 separates the two Hopf branches for k1 < k < k3.
    """
    h, k = _rats(h, k)
    return Poly([
        k * (h - 1) ** 4 * (h * k - k + 1),
        k * (h - 1) ** 3 * (k * h - k + 1) * (h ** 2 * k - h * k - 2 * h + 1),
        k * (h - 1) ** 2 * (h * (3 * h + 2) * (h - 1) * k + 3 * h ** 2 + 2 * h + 2),
        h * k * (h - 1) * (h ** 2 + 3 * h + 1) + (h + 1) ** 3,
    ])


def f1_poly(h, k) -> Poly:
    h, k = _rats(h, k)
    return Poly([
        -4 * k * (h - 1) ** 3,
        (h - 1) * ((h - 1) ** 2 * h * k ** 2 + (6 * h ** 2 - 5 * h - 1) * k - 3 * h - 3),
        h * k * (h - 1) + 4 * h ** 2 + 5 * h + 1,
    ])


def f2_poly(h, k) -> Poly:
    """f2(sigma): its positive root sigma2 is where the trace at the double equilibrium vanishes."""
    h, k = _rats(h, k)
    return Poly([
        k * (h - 1) ** 3 * (h * k - k + 1),
        (h - 1) * (h ** 2 * k - h * k + 3 * h + 3) * (h * k - k + 1),
        -h * (h - 1) ** 2 * k - h ** 2 + h + 2,
    ])


def f3_poly(h, k, sigma, alpha1) -> Poly:
    h, k, s, a = _rats(h, k, sigma, alpha1)
    return Poly([
        -k * (k - 1),
        -k * (a * k * s - h - 2),
        a * k * s * (h + 3),
        -a * s * (h + 2),
    ])


def focal_poly(h, k) -> Poly:
    """G(sigma); the first focal value at the weak focus has the sign of G."""
    h, k = _rats(h, k)
    L4 = h * (h * (h - 1) * (h ** 2 - h + 2) * k + h ** 3 + 3 * h + 4) * (h * (h - 1) ** 2 * k + h ** 2 - h - 2)
    L3 = (h - 1) * (
        3 * h ** 3 * (h - 1) ** 4 * k ** 3
        - h ** 2 * (h - 3) * (4 * h ** 2 - 3 * h - 5) * (h - 1) ** 2 * k ** 2
        - h * (h - 1) * (h + 1) * (8 * h ** 3 - 25 * h ** 2 + 20 * h + 17) * k
        - (4 * h ** 3 - 13 * h ** 2 + 16 * h - 3) * (h + 1) ** 2
    )
    L2 = (h - 1) ** 3 * (
        h ** 2 * (3 * h - 4) * (h - 1) ** 2 * k ** 3
        + h * (h - 1) * (6 * h ** 3 + 3 * h ** 2 - 17 * h - 8) * k ** 2
        + (12 * h ** 2 - 21 * h + 8) * (h + 1) ** 2 * k
        + 3 * (2 * h - 1) * (h + 1) ** 2
    )
    L1 = k * (h - 1) ** 4 * (
        h ** 3 * (h - 1) ** 4 * k ** 4
        + h ** 2 * (8 * h + 5) * (h - 1) ** 3 * k ** 3
        + h * (2 * h + 1) * (11 * h + 3) * (h - 1) ** 2 * k ** 2
        + (h - 1) * (24 * h ** 3 + 23 * h ** 2 + 10 * h + 7) * k
        + (h + 1) * (9 * h ** 2 + 2 * h + 5)
    )
    L0 = k ** 2 * (h - 1) ** 6 * (h * k - k + 1) * (
        2 * h ** 2 * (h - 1) ** 2 * k ** 2 + h * (5 * h + 2) * (h - 1) * k + 3 * h ** 2 + 3 * h + 2
    )
    return Poly([L0, L1, L2, L3, L4])


def cusp_poly(h, k) -> Poly:
    """g1(sigma); the coefficient 2 A20 + B11 of the cusp normal form is a positive multiple of g1(sigma2)."""
    h, k = _rats(h, k)
    return Poly([
        -k * (h - 1) ** 3 * (h ** 2 * k + h - k + 2),
        (h - 1) * (h * (h - 1) ** 3 * k ** 2 - (4 * h + 3) * (h - 1) * k - (h + 4) * (h + 1)),
        h * (h - 1) * (h ** 2 + 2 * h - 1) * k + (h + 1) * (h ** 2 + 2 * h - 2),
    ])


def g2_poly(h) -> Poly:
    h = to_rat(h)
    return Poly([
        3 * (h - 2) * (h + 2) * (h + 1) ** 4,
        (h - 1) * (11 * h ** 3 - 34 * h + 1) * (h + 1) ** 3,
        (15 * h ** 6 + 28 * h ** 5 - 20 * h ** 4 - 60 * h ** 3 - 31 * h ** 2 + 24 * h - 8) * (h - 1) ** 2,
        (9 * h ** 6 + 5 * h ** 5 - 13 * h ** 4 - 6 * h ** 3 - h ** 2 + 3 * h - 1) * (h - 1) ** 3,
        2 * h ** 5 * (h - 1) ** 5,
    ])


def g3_poly(h) -> Poly:
    h = to_rat(h)
    return Poly([
        9 * (h - 2) * (h + 2) * (h + 1) ** 5,
        (h - 1) * (37 * h ** 3 - 2 * h ** 2 - 118 * h + 11) * (h + 1) ** 4,
        (59 * h ** 4 - 10 * h ** 3 - 143 * h ** 2 + 40 * h - 6) * (h - 1) ** 2 * (h + 1) ** 3,
        (45 * h ** 7 + 74 * h ** 6 - 64 * h ** 5 - 125 * h ** 4 - 5 * h ** 3 - 4 * h ** 2 + 4 * h - 1) * (h - 1) ** 3,
        2 * h ** 5 * (8 * h ** 2 + 3 * h - 13) * (h - 1) ** 4,
        2 * h ** 6 * (h - 1) ** 6,
    ])


def zeta1_poly(h) -> Poly:
    h = to_rat(h)
    return Poly([
        3 * (h + 1) ** 4,
        8 * h * (h - 1) * (h + 1) ** 3,
        (7 * h ** 4 + 12 * h ** 3 + 6 * h ** 2 - 4 * h + 1) * (h - 1) ** 2,
        2 * h ** 4 * (h - 1) ** 3,
    ])


def zeta2_poly(h) -> Poly:
    h = to_rat(h)
    inner = Poly([(h + 1) ** 3, (h - 1) * (h ** 3 + 3 * h ** 2 - 3 * h + 1)])
    return Poly([0, (h - 1) ** 2]) * inner * Poly([1, h - 1])


def phi_poly(h) -> Poly:
    """Phi(z), whose lack of positive roots shows the last factor of L1 keeps its sign on [k1, k2)."""
    h = to_rat(h)
    return Poly([
        8 * (h + 1),
        4 * (h ** 2 + 5 * h + 5),
        2 * (4 * h ** 2 + 11 * h + 9),
        4 * h ** 2 + 12 * h + 7,
        2 * h,
    ]) * (Fraction(-1) / h)


def phi0_poly(h) -> Poly:
    h = to_rat(h)
    return Poly([
        8,
        2 * (6 * h ** 2 + 15 * h + 12),
        (7 * h + 25) * (h + 1) ** 2,
        9 * (h + 1) ** 3,
    ])


# Factors of the discriminant sequence of the substituted g2, as polynomials in h.
D31 = Poly.from_descending([1, 18, 13, -98, 60, 154, 93, 702, -255])
D41 = Poly.from_descending([1, 33, 305, -227, -5629, -1655, 16622, -21154, -43339, 33581, 17581, -31623, -38277,
                            14965])
D51 = Poly.from_descending([1, 16, -34, 1496, 3051, -18274, 239, 298960, 160771, -960080, 325619, 2233144, -857259,
                            -2020738, 675405, 1195888, -957364, 271188, -28445])
D61 = Poly.from_descending([6, 10, -1901, 13365, 43756, -122354, -1053075, -202967, 4549769, -695287, -14495889,
                            -2284869, 29927221, -1756299, -58026517, 16372127, 44351321, -9554651, -29330922,
                            21456856, -5879673, 605877])
D71 = Poly.from_descending([8, -28, -2731, 29614, -7745, -521638, -839519, 6657768, 12874736, -21638968, -29546678,
                            38082396, 22852074, -32346916, -11283238, 24860424, -8757992, -717148, 354673, 621190,
                            -382169, 87034, -7531])
