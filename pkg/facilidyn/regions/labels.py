from __future__ import annotations

from enum import Enum
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple


class Kind(Enum):
    Saddle = 'saddle'
    StableNode = 'stable node'
    StableFocus = 'stable focus'
    UnstableNode = 'unstable node'
    UnstableFocus = 'unstable focus'
    CenterType = 'center type'
    DegenerateSaddleNode = 'degenerate saddle-node'
    Cusp = 'cusp'

    @property
    def degenerate(self) -> bool:
        return self in (Kind.DegenerateSaddleNode, Kind.Cusp)


class Role(Enum):
    E0 = 'E0'
    Ek = 'Ek'
    E1 = 'E1'
    E2 = 'E2'
    Estar = 'E*'


class Equilibrium(NamedTuple):
    x: float
    y: float
    trace: float
    det: float
    kind: Kind
    role: Role

    @property
    def disc(self) -> float:
        return self.trace ** 2 - 4 * self.det

    def to_dict(self) -> dict:
        return {
            'role': self.role.value, 'x': self.x, 'y': self.y,
            'trace': self.trace, 'det': self.det, 'kind': self.kind.value,
        }


class RegionLabel(NamedTuple):
    """
    Cell of the parameter partition.

    Attributes:
        name: Cell name, e.g. ``'P11'`` or ``'S5'``.
        boundary: Whether some defining comparison fell inside the tolerance band.
    """
    name: str
    boundary: bool = False

    @property
    def on_surface(self) -> bool:
        return self.name[0] in 'SL'


LABELS = (
    'P11', 'P12', 'S11', 'P2', 'S1', 'S21', 'S22', 'L21', 'L1', 'S3', 'P31', 'P32', 'S31',
    'S41', 'L41', 'S42', 'P4', 'P51', 'P52', 'S51', 'S5', 'H_GE_1',
)

SADDLE = frozenset({Kind.Saddle})
STABLE_NODE = frozenset({Kind.StableNode})
STABLE = frozenset({Kind.StableNode, Kind.StableFocus})
UNSTABLE = frozenset({Kind.UnstableNode, Kind.UnstableFocus})
CENTER = frozenset({Kind.CenterType})
DEGENERATE = frozenset({Kind.DegenerateSaddleNode, Kind.Cusp})

KindClass = FrozenSet[Kind]
Prediction = List[Tuple[Role, KindClass]]

_E0 = (Role.E0, SADDLE)
_ROWS: Dict[Tuple[str, ...], Prediction] = {
    ('P11', 'S21', 'P31'): [_E0, (Role.Ek, SADDLE), (Role.E1, UNSTABLE)],
    ('S11', 'L21', 'S31'): [_E0, (Role.Ek, SADDLE), (Role.E1, CENTER)],
    ('P12', 'S22', 'P32'): [_E0, (Role.Ek, SADDLE), (Role.E1, STABLE)],
    ('S1', 'L1'): [_E0, (Role.Ek, DEGENERATE)],
    ('P2', 'S3', 'P4', 'H_GE_1'): [_E0, (Role.Ek, STABLE_NODE)],
    ('S41',): [_E0, (Role.Ek, DEGENERATE), (Role.E1, STABLE)],
    ('L41',): [_E0, (Role.Ek, DEGENERATE), (Role.E1, CENTER)],
    ('S42',): [_E0, (Role.Ek, DEGENERATE), (Role.E1, UNSTABLE)],
    ('P51',): [_E0, (Role.Ek, STABLE_NODE), (Role.E1, UNSTABLE), (Role.E2, SADDLE)],
    ('S51',): [_E0, (Role.Ek, STABLE_NODE), (Role.E1, CENTER), (Role.E2, SADDLE)],
    ('P52',): [_E0, (Role.Ek, STABLE_NODE), (Role.E1, STABLE), (Role.E2, SADDLE)],
    ('S5',): [_E0, (Role.Ek, STABLE_NODE), (Role.Estar, DEGENERATE)],
}
TABLE = {name: row for names, row in _ROWS.items() for name in names}

_TRACE_SIGNS = {
    1: ('P11', 'S21', 'P31', 'S42', 'P51'),
    -1: ('P12', 'S22', 'P32', 'S41', 'P52'),
    0: ('S11', 'L21', 'S31', 'L41', 'S51'),
}


def _name(label) -> str:
    return label.name if isinstance(label, RegionLabel) else str(label)


def predicted_census(label) -> Prediction:
    """Roles and admissible kinds of all equilibria in a partition cell."""
    name = _name(label)
    if name not in TABLE:
        raise RuntimeError(f'unsupported region label: {name}')
    return list(TABLE[name])


def predicted_trace_sign(label) -> Optional[int]:
    """Sign of the trace at ``E1`` throughout a cell, ``None`` where there is no ``E1``."""
    name = _name(label)
    if name not in TABLE:
        raise RuntimeError(f'unsupported region label: {name}')
    for s, names in _TRACE_SIGNS.items():
        if name in names:
            return s
    return None
