from typing import List, Optional, Sequence, Tuple, Union

from fractions import Fraction

import numpy as np

from facilidyn.polyalg.poly import Poly, RootInterval, SignList, RatLike, to_rat, as_interval


def prem(f: Poly, g: Poly) -> Tuple[Fraction, Poly, Poly]:
    """
    Pseudo-division of ``f`` by ``g``.

    Args:
        f: The dividend.
        g: The divisor, nonzero.

    Returns:
        (Fraction, Poly, Poly): Multiplier ``m``, pseudo-quotient ``q`` and pseudo-remainder
        ``r`` with ``m*f == q*g + r`` and ``deg r < deg g``; ``m = lc(g)**(deg f - deg g + 1)``
        when ``deg f >= deg g``, otherwise ``m = 1``, ``q = 0``, ``r = f``.
    """
    if g.is_zero:
        raise ZeroDivisionError('pseudo-division by the zero polynomial')
    if f.degree < g.degree:
        return Fraction(1), Poly(), f
    m = g.lc ** (f.degree - g.degree + 1)
    q, r = divmod(f * m, g)
    return m, q, r


def gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero:
        f, g = g, f % g
    return f.monic() if not f.is_zero else f


def squarefree(p: Poly) -> Poly:
    if p.degree < 1:
        return p
    return (p // gcd(p, p.derivative())).primitive()


def sturm_sequence(p: Poly) -> List[Poly]:
    """Sturm chain of ``p``; every member is scaled by a positive constant to keep coefficients small."""
    if p.is_zero:
        raise ValueError('Sturm sequence of the zero polynomial')
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero:
        r = -(chain[-2] % chain[-1])
        chain.append(r.primitive())
    return chain[:-1]


def sign_variations(chain: Sequence[Poly], x: Union[RatLike, float]) -> int:
    if isinstance(x, float) and x in (float('inf'), float('-inf')):
        signs = [q.sign_at_infinity(1 if x > 0 else -1) for q in chain]
    else:
        signs = [q.sign_at(x) for q in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every complex root of ``p`` has modulus below the returned rational."""
    if p.is_zero:
        raise ValueError('root bound of the zero polynomial')
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def _count_open(chain: List[Poly], q: Poly, a: Fraction, b: Fraction) -> int:
    n = sign_variations(chain, a) - sign_variations(chain, b)
    if q.eval(b) == 0:
        n -= 1
    return n


def sturm_isolate(p: Poly, domain: Optional[Union[RootInterval, Tuple[RatLike, RatLike]]] = None,
                  width: RatLike = Fraction(1, 10 ** 6)) -> List[RootInterval]:
    """
    Isolate the distinct real roots of ``p`` inside the open interval ``domain``.

    Args:
        p: Nonzero polynomial.
        domain: Search interval; the whole real line (through a Cauchy bound) when omitted.
        width: Maximal width of each returned interval.

    Returns:
        List[RootInterval]: Disjoint intervals sorted by position. Each one either shows a
        sign change of the square-free part of ``p`` across its endpoints or is a degenerate
        ``lo == hi`` interval holding an exact rational root.
    """
    if p.is_zero:
        raise ValueError('cannot isolate the roots of the zero polynomial')
    width = to_rat(width)
    assert width > 0
    q = squarefree(p)
    if q.degree < 1:
        return []
    if domain is None:
        bound = root_bound(q)
        domain = RootInterval(-bound, bound)
    domain = as_interval(domain)
    chain = sturm_sequence(q)

    found = []
    stack = [(domain.lo, domain.hi)]
    while stack:
        a, b = stack.pop()
        n = _count_open(chain, q, a, b)
        if n == 0:
            continue
        if n == 1 and b - a <= width and q.eval(a) != 0 and q.eval(b) != 0:
            found.append(RootInterval(a, b))
            continue
        m = (a + b) / 2
        if q.eval(m) == 0:
            found.append(RootInterval(m, m))
        stack.append((a, m))
        stack.append((m, b))
    return sorted(found, key=lambda iv: iv.lo)


def refine_root(p: Poly, iv: Union[RootInterval, Tuple[RatLike, RatLike]], tol: RatLike) -> RootInterval:
    """Bisect ``iv`` on exact signs until it is at most ``tol`` wide."""
    iv = as_interval(iv)
    tol = to_rat(tol)
    if iv.exact:
        return iv
    q = squarefree(p)
    sa, sb = q.sign_at(iv.lo), q.sign_at(iv.hi)
    if sa == 0:
        return RootInterval(iv.lo, iv.lo)
    if sb == 0:
        return RootInterval(iv.hi, iv.hi)
    if sa == sb:
        raise ValueError(f'no sign change of the polynomial on [{iv.lo}, {iv.hi}]')
    a, b = iv.lo, iv.hi
    while b - a > tol:
        m = (a + b) / 2
        sm = q.sign_at(m)
        if sm == 0:
            return RootInterval(m, m)
        if sm == sa:
            a = m
        else:
            b = m
    return RootInterval(a, b)


def real_roots(p: Poly, domain=None, tol: RatLike = Fraction(1, 2 ** 60)) -> List[float]:
    """Float approximations of the distinct real roots of ``p`` in ``domain``."""
    return [float(refine_root(p, iv, tol).midpoint) for iv in sturm_isolate(p, domain, Fraction(1, 2 ** 10))]


def certified_roots(p: Poly, domain: Union[RootInterval, Tuple[RatLike, RatLike]],
                    rel: RatLike = Fraction(1, 2 ** 44)) -> Optional[List[float]]:
    """
    Roots of ``p`` inside the open interval ``domain``, located in floating point and certified in
    exact arithmetic: the Sturm count over ``domain`` has to equal the number of float candidates and
    every candidate ``c`` has to show an exact sign change across ``c -+ rel * max(|c|, 1)``.

    Returns:
        Optional[List[float]]: The sorted roots, or ``None`` when the certificate fails (close or
        multiple roots, ill-conditioned coefficients). Callers then fall back to ``sturm_isolate``.
    """
    if p.is_zero:
        raise ValueError('cannot isolate the roots of the zero polynomial')
    domain = as_interval(domain)
    if p.degree < 1:
        return []
    lo, hi = float(domain.lo), float(domain.hi)
    coeffs = p.to_numpy()
    dcoeffs = np.polyder(coeffs)
    candidates = []
    for z in np.roots(coeffs):
        if abs(z.imag) > 1e-6 * max(1.0, abs(z.real)):
            continue
        x = float(z.real)
        # two Newton steps against the rounding of the companion eigenvalues
        for _ in range(2):
            d = np.polyval(dcoeffs, x)
            if d == 0:
                break
            x -= np.polyval(coeffs, x) / d
        if lo < x < hi:
            candidates.append(float(x))
    candidates.sort()
    if _count_open(sturm_sequence(p), p, domain.lo, domain.hi) != len(candidates):
        return None
    rel = to_rat(rel)
    prev = domain.lo
    for x in candidates:
        c = to_rat(x)
        d = rel * max(abs(c), Fraction(1))
        a, b = c - d, c + d
        if a <= prev or b >= domain.hi or p.sign_at(a) * p.sign_at(b) >= 0:
            return None
        prev = b
    return candidates


def _bareiss_det(rows: List[List[int]]) -> int:
    m = [row[:] for row in rows]
    n = len(m)
    sgn, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sgn = -sgn
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sgn * m[n - 1][n - 1]


def discrimination_matrix(p: Poly) -> List[List[int]]:
    """2n x 2n discrimination matrix of the primitive integer version of ``p``."""
    n = p.degree
    a = p.integer_coeffs()[::-1]
    da = [(n - j) * a[j] for j in range(n)]
    rows = []
    for i in range(n):
        row = [0] * (2 * n)
        for j, c in enumerate(a):
            row[i + j] = c
        rows.append(row)
        row = [0] * (2 * n)
        for j, c in enumerate(da):
            row[i + 1 + j] = c
        rows.append(row)
    return rows


def discriminant_sequence(p: Poly) -> List[Fraction]:
    """
    Discriminant sequence D_1 ... D_n: the leading principal minors of order 2k of the
    discrimination matrix. The content of ``p`` is removed first, which rescales each
    D_k by a positive factor and leaves its sign unchanged.
    """
    if p.is_zero:
        raise ValueError('discriminant sequence of the zero polynomial')
    n = p.degree
    assert n >= 1, 'discriminant sequence needs degree >= 1'
    m = discrimination_matrix(p)
    return [Fraction(_bareiss_det([row[:2 * k] for row in m[:2 * k]])) for k in range(1, n + 1)]


def revise(signs: Sequence[int]) -> Tuple[int, ...]:
    """
    Revision rule for sign lists: a run of zeros between two nonzero members, preceded
    by the member ``s``, becomes ``-s, -s, s, s, -s, -s, ...``. Leading and trailing zeros
    are left as they are.
    """
    out = list(signs)
    n = len(out)
    i = 0
    while i < n:
        if out[i] != 0 or i == 0 or out[i - 1] == 0:
            i += 1
            continue
        j = i
        while j < n and out[j] == 0:
            j += 1
        if j == n:
            break
        s = out[i - 1]
        for r in range(1, j - i + 1):
            out[i + r - 1] = s * (-1) ** ((r + 1) // 2)
        i = j
    return tuple(out)


def sign_list(p: Poly) -> SignList:
    signs = tuple((d > 0) - (d < 0) for d in discriminant_sequence(p))
    return SignList(signs, revise(signs))


def count_distinct_real_roots(p: Poly) -> int:
    """Number of distinct real roots from the revised sign list of the discriminant sequence."""
    if p.is_zero:
        raise ValueError('root count of the zero polynomial')
    if p.degree == 0:
        return 0
    return sign_list(p).num_real_roots


def substitute_reciprocal_square(p: Poly, scale: RatLike) -> Poly:
    """
    Returns ``(1 + x**2)**n * p(1 / (scale * (1 + x**2)))`` for ``n = deg p``. For
    ``scale > 0`` the map x -> 1/(scale (1 + x**2)) sends the real line two-to-one onto
    (0, 1/scale], so the roots of ``p`` in (0, 1/scale) are half of the nonzero real roots
    of the result.
    """
    scale = to_rat(scale)
    n = p.degree
    s = Poly([1, 0, 1])
    out = Poly()
    for i, c in enumerate(p.coeffs):
        out = out + (s ** (n - i)) * (c / scale ** i)
    return out
