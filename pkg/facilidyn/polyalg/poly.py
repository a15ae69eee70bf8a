from __future__ import annotations

import math
import numbers
import numpy as np

from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

Rat = Fraction
RatLike = Union[int, Fraction, str, float, numbers.Rational]


def to_rat(value) -> Fraction:
    """
    Convert a number to an exact rational.

    Args:
        value: An int, Fraction, "num/den" string, float (converted exactly from its
            binary value) or any object exposing integer ``p``/``q`` attributes
            (sympy Rational).

    Returns:
        Fraction: The exact rational in lowest terms.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError('booleans are not coefficients')
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (float, np.floating)):
        assert math.isfinite(value), f'non-finite coefficient {value}'
        return Fraction(float(value))
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f'cannot convert {type(value).__name__} to a rational')


def rat_to_str(r: Fraction) -> str:
    return f'{r.numerator}/{r.denominator}'


class Poly:
    """Univariate polynomial with exact rational coefficients in ascending order."""
    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: RatLike) -> Poly:
        return cls([c])

    @classmethod
    def from_descending(cls, coeffs: Sequence[RatLike]) -> Poly:
        return cls(list(coeffs)[::-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        assert not self.is_zero, 'zero polynomial has no leading coefficient'
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def descending(self) -> List[Fraction]:
        return list(self.coeffs[::-1])

    @staticmethod
    def _lift(other) -> Poly:
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.degree > 0:
                raise TypeError('true division is only defined by scalars; use divmod for polynomials')
            other = other[0]
        other = to_rat(other)
        if other == 0:
            raise ZeroDivisionError('polynomial division by zero')
        return Poly([c / other for c in self.coeffs])

    def __pow__(self, n: int) -> Poly:
        assert isinstance(n, int) and n >= 0
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> Tuple[Poly, Poly]:
        other = self._lift(other)
        if other.is_zero:
            raise ZeroDivisionError('polynomial division by zero')
        r = list(self.coeffs)
        dg = other.degree
        if len(r) - 1 < dg:
            return Poly(), Poly(r)
        q = [Fraction(0)] * (len(r) - dg)
        inv = 1 / other.lc
        for i in range(len(r) - 1 - dg, -1, -1):
            coef = r[i + dg] * inv
            q[i] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    r[i + j] -= coef * b
        return Poly(q), Poly(r[:dg])

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return self.eval(x)
        return self.evalf(x)

    def eval(self, x: RatLike) -> Fraction:
        x = to_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evalf(self, x):
        acc = 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def sign_at(self, x: RatLike) -> int:
        v = self.eval(x)
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, direction: int) -> int:
        if self.is_zero:
            return 0
        s = 1 if self.lc > 0 else -1
        if direction < 0 and self.degree % 2 == 1:
            s = -s
        return s

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: Poly) -> Poly:
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a: RatLike) -> Poly:
        """Taylor shift: returns p(x + a)."""
        return self.compose(Poly([a, 1]))

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if self.is_zero:
            return Fraction(0)
        num, den = 0, 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> Poly:
        if self.is_zero:
            return self
        return Poly([c / self.content() for c in self.coeffs])

    def integer_coeffs(self) -> List[int]:
        p = self.primitive()
        return [int(c) for c in p.coeffs]

    def monic(self) -> Poly:
        return Poly([c / self.lc for c in self.coeffs])

    def to_numpy(self) -> np.ndarray:
        """Float coefficients in descending order (numpy.polyval convention)."""
        return np.array([float(c) for c in self.coeffs[::-1]])

    def to_json(self) -> List[str]:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        return cls([Fraction(s) for s in data])

    def __repr__(self):
        if self.is_zero:
            return 'Poly(0)'
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f'{c}' if i == 0 else f'{c}*x' if i == 1 else f'{c}*x^{i}')
        return 'Poly(' + ' + '.join(terms) + ')'


class RootInterval(NamedTuple):
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def contains(self, other: RootInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @classmethod
    def of(cls, lo: RatLike, hi: RatLike) -> RootInterval:
        lo, hi = to_rat(lo), to_rat(hi)
        assert lo <= hi, f'malformed interval ({lo}, {hi})'
        return cls(lo, hi)


class SignList(NamedTuple):
    signs: Tuple[int, ...]
    revised: Tuple[int, ...]

    @property
    def nonvanishing(self) -> int:
        return sum(1 for s in self.revised if s != 0)

    @property
    def changes(self) -> int:
        nz = [s for s in self.revised if s != 0]
        return sum(1 for a, b in zip(nz, nz[1:]) if a != b)

    @property
    def num_real_roots(self) -> int:
        return self.nonvanishing - 2 * self.changes


def as_interval(domain: Optional[Union[RootInterval, Tuple[RatLike, RatLike]]]) -> Optional[RootInterval]:
    if domain is None or isinstance(domain, RootInterval):
        return domain
    lo, hi = domain
    return RootInterval.of(lo, hi)
