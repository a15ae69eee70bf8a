from typing import *
import os
import random
import logging
import numpy as np


logger = logging.getLogger('facilidyn')
if not logger.handlers:
    _handler = logging.StreamHandler()
    _handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s', '%H:%M:%S'))
    logger.addHandler(_handler)
logger.setLevel(logging.WARNING)

BAR_FORMAT = '{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}{postfix}]'

DEFAULT_TOL = 1e-9
ROOT_TOL = 1e-13
RTOL = 1e-9
ATOL = 1e-12


class ParameterError(ValueError):
    """Invalid or out-of-scope model parameters."""


class DegenerateError(ArithmeticError):
    """A reduction divides by a quantity that vanishes at the given point."""


def get_tolerance(default: float = DEFAULT_TOL) -> float:
    value = os.environ.get('FACILIDYN_TOL')
    if value is None:
        return default
    try:
        tol = float(value)
    except ValueError:
        logger.warning(f'ignoring malformed FACILIDYN_TOL={value!r}')
        return default
    if not np.isfinite(tol) or tol <= 0:
        logger.warning(f'ignoring non-positive FACILIDYN_TOL={value!r}')
        return default
    return tol


def set_verbosity(verbose: bool):
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def is_verbose() -> bool:
    return logger.isEnabledFor(logging.DEBUG)


def seed_everything(seed):
    random.seed(seed)
    os.environ['PYTHONHASHSEED'] = str(seed)
    np.random.seed(seed)
    return np.random.default_rng(seed)


def sign(value: float, tol: float = 0.0) -> int:
    if value > tol:
        return 1
    if value < -tol:
        return -1
    return 0


def batchify_dict(dicts: List[dict], aggr_func=lambda x: x):
    res = dict()
    for d in dicts:
        for k, v in d.items():
            if k not in res:
                res[k] = [v]
            else:
                res[k].append(v)
    res = {k: aggr_func(v) for k, v in res.items()}
    return res
