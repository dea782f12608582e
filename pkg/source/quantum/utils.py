import os
import numpy as np
from source.settings import CSV_DIGITS


def performance_workers(level: int) -> int:
    """
    Maximum number of worker threads for a performance level.

    HIGH (1): all available CPU cores.
    MEDIUM (2): half the cores, but at least 2.
    LOW (3): a single worker.
    """
    total_cores = os.cpu_count()
    if total_cores is None:
        return 2

    if level == 1:
        max_workers = total_cores
    elif level == 2:
        max_workers = max(2, total_cores // 2)
    else:
        max_workers = 1
    return max(1, max_workers)


def format_float(value: float) -> str:
    return format(float(value), f".{CSV_DIGITS}g")


def frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, copy=True)
    out.setflags(write=False)
    return out


def make_rng(seed=None) -> np.random.Generator:
    return np.random.default_rng(seed)
