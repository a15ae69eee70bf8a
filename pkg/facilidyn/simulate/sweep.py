import functools as ft
import multiprocessing as mp
import os
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
from tqdm import tqdm

from facilidyn.model import Params
from facilidyn.regions import bt_region, verify_census
from facilidyn.simulate.cycles import find_limit_cycle
from facilidyn.simulate.integrator import TRANSIENT
from facilidyn.utils import BAR_FORMAT, ParameterError, is_verbose, logger


class Axis(NamedTuple):
    """A swept parameter: ``n`` equispaced values of ``name`` on ``[lo, hi]``."""
    name: str
    lo: float
    hi: float
    n: int

    def values(self) -> np.ndarray:
        assert self.name in Params._fields, f'unknown parameter: {self.name}'
        if self.n < 1 or self.lo > self.hi:
            raise ParameterError(f'bad grid axis {tuple(self)}')
        return np.linspace(self.lo, self.hi, self.n)


class SweepRecord(NamedTuple):
    params: Params
    label: str
    boundary: bool
    bt_region: Optional[str]
    match: bool
    kinds: Tuple[str, ...]
    cycle: Optional[bool]
    amplitude: Optional[float]
    period: Optional[float]

    def row(self) -> dict:
        out = self.params.to_dict()
        out.update({
            'label': self.label, 'boundary': self.boundary, 'bt_region': self.bt_region or '',
            'match': self.match, 'kinds': ';'.join(self.kinds),
            'cycle': '' if self.cycle is None else self.cycle,
            'amplitude': '' if self.amplitude is None else self.amplitude,
            'period': '' if self.period is None else self.period,
        })
        return out


def _region(p: Params) -> Optional[str]:
    if p.h >= 1:
        return None
    try:
        return bt_region(*p)
    except ParameterError:
        return None


def sweep_point(p: Params, cycles: bool = True, transient: float = TRANSIENT) -> SweepRecord:
    report = verify_census(p)
    kinds = tuple(f"{e['role']}:{e['kind']}" for e in report['computed'])
    cycle = amplitude = period = None
    if cycles:
        record = find_limit_cycle(p, transient=transient)
        cycle = record is not None
        if record is not None:
            amplitude, period = record.amplitude, record.period
    return SweepRecord(
        params=Params(*p), label=report['label'], boundary=report['boundary'], bt_region=_region(p),
        match=report['match'], kinds=kinds, cycle=cycle, amplitude=amplitude, period=period,
    )


def sweep(base: Params, first: Axis, second: Axis, cycles: bool = True,
          transient: float = TRANSIENT, workers: int = 1) -> List[SweepRecord]:
    """
    Census, Bogdanov-Takens cell and cycle detection on a two-parameter grid, the other two parameters
    taken from ``base``. Records are ordered with ``second`` varying fastest.

    Args:
        workers: Number of processes the grid points are spread over; ``0`` uses every core. Results
            are collected in grid order whatever the number of workers.
    """
    base = Params(*base)
    assert first.name != second.name, 'sweep axes must differ'
    if workers < 0:
        raise ParameterError(f'workers must be non-negative, got {workers}')
    if workers == 0:
        workers = os.cpu_count() or 1
    grid = [base._replace(**{first.name: float(a), second.name: float(b)}).validate()
            for a in first.values() for b in second.values()]
    task = ft.partial(sweep_point, cycles=cycles, transient=transient)
    records = []
    with tqdm(total=len(grid), desc='(S)', bar_format=BAR_FORMAT, disable=not is_verbose()) as pbar:
        pool = None
        results = map(task, grid)
        if workers > 1 and len(grid) > 1:
            logger.debug(f'sweeping {len(grid)} grid points on {workers} processes')
            pool = mp.Pool(min(workers, len(grid)))
            results = pool.imap(task, grid)
        try:
            for record in results:
                records.append(record)
                pbar.set_postfix({'cycles': sum(bool(r.cycle) for r in records)})
                pbar.update()
        finally:
            if pool is not None:
                pool.terminate()
    return records
