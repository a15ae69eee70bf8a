from __future__ import annotations

import json
import math
from typing import NamedTuple, Tuple, Union

from facilidyn.utils import ParameterError


Number = Union[int, float]


class Params(NamedTuple):
    """
    The four dimensionless parameters of the cooperative-hunting predator-prey system.

    Attributes:
        h: Handling time.
        k: Carrying capacity of the prey.
        sigma: Prey growth rate relative to predator mortality.
        alpha: Intensity of predator cooperation in hunting.
    """
    h: Number
    k: Number
    sigma: Number
    alpha: Number

    def validate(self) -> Params:
        for name, value in zip(self._fields, self):
            try:
                v = float(value)
            except (TypeError, ValueError):
                raise ParameterError(f'{name} must be a number, got {value!r}')
            if not math.isfinite(v) or v <= 0:
                raise ParameterError(f'{name} must be positive and finite, got {value!r}')
        return self

    def unfold(self) -> Tuple[float, float, float, float]:
        return float(self.h), float(self.k), float(self.sigma), float(self.alpha)

    def to_dict(self) -> dict:
        return {'h': float(self.h), 'k': float(self.k), 'sigma': float(self.sigma), 'alpha': float(self.alpha)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Params:
        missing = [f for f in cls._fields if f not in data]
        if missing:
            raise ParameterError(f'missing parameters: {", ".join(missing)}')
        return cls(*(data[f] for f in cls._fields)).validate()

    @classmethod
    def from_json(cls, text: str) -> Params:
        return cls.from_dict(json.loads(text))


class State(NamedTuple):
    x: float
    y: float

    def validate(self) -> State:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ParameterError(f'state must be finite, got ({self.x}, {self.y})')
        if self.x < 0 or self.y < 0:
            raise ParameterError(f'state must lie in the closed first quadrant, got ({self.x}, {self.y})')
        return self


class DimensionalParams(NamedTuple):
    """
    Parameters of the dimensional model with encounter-driven functional response.

    Attributes:
        r: Intrinsic prey growth rate.
        K: Prey carrying capacity.
        e: Conversion efficiency.
        m: Predator mortality.
        e1: Encounter-rate scale.
        e2: Half-saturation predator density of the cooperative encounter rate.
        H: Handling time.
    """
    r: float
    K: float
    e: float
    m: float
    e1: float
    e2: float
    H: float


def from_dimensional(d: DimensionalParams) -> Params:
    """
    Map dimensional parameters to (h, k, sigma, alpha).

    No validation happens here: ``H = 0`` yields ``h = 0``, which ``Params.validate``
    rejects.
    """
    for name, value in zip(d._fields, d):
        if name != 'H' and value <= 0:
            raise ParameterError(f'{name} must be positive, got {value!r}')
    return Params(
        h=d.m * d.H / d.e,
        k=d.e * d.e1 * d.e2 * d.K / d.m,
        sigma=d.r / d.m,
        alpha=d.m / (d.e1 * d.e2 ** 2),
    )
