from typing import List, Optional

from facilidyn.model import Params, thresholds, x0, x_star, F_at_x0, alpha1, alpha2, sigma2, bt_point
from facilidyn.regions.labels import RegionLabel
from facilidyn.utils import ParameterError, get_tolerance, sign


def cmp(a: float, b: float, band: float) -> int:
    """Three-way comparison that reports equality inside a relative band."""
    if abs(a - b) <= band * max(abs(a), abs(b)):
        return 0
    return 1 if a > b else -1


class _Comparator:
    def __init__(self, band: float):
        self.band = band
        self.hits: List[str] = []

    def __call__(self, name: str, a: float, b: float) -> int:
        c = cmp(a, b, self.band)
        if c == 0:
            self.hits.append(name)
        return c


def classify(p: Params, band: Optional[float] = None) -> RegionLabel:
    """
    Locate ``p`` in the partition of parameter space.

    Every defining equality is tested with a relative ``band``; a surface label (``S*``/``L*``)
    is only returned for points inside the band of its surface. The ``boundary`` flag of the
    result is set whenever any comparison landed in a band, including the sub-branch
    comparisons that do not produce a surface label.
    """
    p = Params(*p).validate()
    band = get_tolerance() if band is None else band
    h, k, sigma, alpha = p.unfold()
    c = _Comparator(band)

    if c('h=1', h, 1) == 0 or h >= 1:
        return RegionLabel('H_GE_1', bool(c.hits))

    th = thresholds(h, k, sigma)
    ck = c('k=k1', k, th.k1)
    ca = c('alpha=1/(sigma k)', alpha, th.alpha_crit)

    if ck > 0:
        if ca < 0:
            if c('k=k2', k, th.k2) >= 0:
                name = 'P11'
            elif c('k=k3', k, th.k3) >= 0 or c('sigma=sigma1', sigma, th.sigma1) < 0:
                name = {1: 'P11', -1: 'P12', 0: 'S11'}[c('alpha=alpha2', alpha, th.alpha2)]
            else:
                name = 'P12'
        elif ca == 0:
            if c('k=k3', k, th.k3) >= 0:
                name = 'S21'
            else:
                name = {-1: 'S21', 1: 'S22', 0: 'L21'}[c('sigma=sigma1', sigma, th.sigma1)]
        else:
            if c('k=k3', k, th.k3) >= 0 or c('sigma=sigma1', sigma, th.sigma1) <= 0:
                name = 'P31'
            else:
                name = {1: 'P31', -1: 'P32', 0: 'S31'}[c('alpha=alpha2', alpha, th.alpha2)]
    elif ck == 0:
        if ca < 0:
            name = 'S1'
        elif ca == 0:
            name = 'L1'
        else:
            name = {-1: 'S41', 0: 'L41', 1: 'S42'}[c('alpha=alpha2', alpha, th.alpha2)]
    else:
        if ca < 0:
            name = 'P2'
        elif ca == 0:
            name = 'S3'
        else:
            c1 = c('alpha=alpha1', alpha, th.alpha1)
            if c1 < 0:
                name = 'P4'
            elif c1 == 0:
                name = 'S5'
            elif c('sigma=sigma2', sigma, th.sigma2) <= 0:
                name = 'P51'
            else:
                name = {1: 'P51', -1: 'P52', 0: 'S51'}[c('alpha=alpha2', alpha, th.alpha2)]
    return RegionLabel(name, bool(c.hits))


def predict_trace_sign_from_x0(p: Params, tol: float = 1e-12) -> Optional[int]:
    """
    Sign of the trace at ``E1`` read off ``F(x0)``: with one interior root the trace is negative
    iff ``F(x0) < 0``; with two roots it is negative iff ``F(x0) < 0`` and ``x0 < x*``.
    Returns ``None`` when ``E1`` does not exist.
    """
    h, k, sigma, alpha = p.unfold()
    if h >= 1:
        return None
    th = thresholds(h, k, sigma)
    xz = x0(h, k, sigma)
    s = sign(F_at_x0(p), tol * max(1.0, k ** 3 * alpha * sigma))
    if k >= th.k1:
        if alpha <= th.alpha_crit and k == th.k1:
            return None
        return -1 if s < 0 else (0 if s == 0 else 1)
    if th.alpha1 is None or alpha <= th.alpha1:
        return None
    if xz >= x_star(p):
        return 1
    return -1 if s < 0 else (0 if s == 0 else 1)


def bt_region(h: float, k: float, sigma: float, alpha: float, band: Optional[float] = None) -> str:
    """
    Cell of the ``(sigma, alpha)`` plane around the Bogdanov-Takens point: ``R1`` to ``R4``, or the
    curve labels ``SN+``, ``SN-``, ``H``, ``HL`` and ``BT``.
    """
    from facilidyn.localform.bt import alpha3

    band = get_tolerance() if band is None else band
    s2, a_star, _ = bt_point(h, k)
    a1 = alpha1(h, k, sigma)
    if a1 is None:
        raise ParameterError(f'no saddle-node curve at k={k} >= k1')
    cs = cmp(sigma, s2, band)
    if cs == 0 and cmp(alpha, a_star, band) == 0:
        return 'BT'
    c1 = cmp(alpha, a1, band)
    if c1 < 0:
        return 'R1'
    if c1 == 0:
        return 'SN+' if cs > 0 else 'SN-'
    if cs <= 0:
        return 'R4'
    c2 = cmp(alpha, alpha2(h, k, sigma), band)
    if c2 < 0:
        return 'R2'
    if c2 == 0:
        return 'H'
    c3 = cmp(alpha, alpha3(h, k, sigma), band)
    if c3 < 0:
        return 'R3'
    return 'HL' if c3 == 0 else 'R4'
