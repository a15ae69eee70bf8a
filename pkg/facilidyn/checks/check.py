import time
from abc import ABC, abstractmethod
from typing import Any, NamedTuple

from facilidyn.utils import logger


class Outcome(NamedTuple):
    passed: bool
    measured: Any
    expected: Any


class Check(ABC):
    """
    A reproducible numerical claim. Subclasses implement ``run``; calling the check times the run and
    turns an exception into a failed result.
    """
    name: str = 'check'

    @abstractmethod
    def run(self) -> Outcome:
        pass

    def __call__(self) -> dict:
        start = time.perf_counter()
        try:
            outcome = self.run()
        except Exception as e:
            logger.exception(f'{self.name} raised {type(e).__name__}: {e}')
            outcome = Outcome(False, f'{type(e).__name__}: {e}', None)
        seconds = time.perf_counter() - start
        logger.debug(f'{self.name}: {"passed" if outcome.passed else "FAILED"} in {seconds:.2f}s')
        return {
            'name': self.name,
            'passed': bool(outcome.passed),
            'measured': outcome.measured,
            'expected': outcome.expected,
            'seconds': seconds,
        }
