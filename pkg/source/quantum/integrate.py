import math
import numpy as np
from .errors import QuantumError


def rk4_step(f, y, t, h):
    """
    Propagate y' = f(t, y) for one time step from t to t + h with the
    classical 4th order Runge-Kutta method.
    """
    k1 = f(t, y)
    k2 = f(t + h / 2, y + h / 2 * k1)
    k3 = f(t + h / 2, y + h / 2 * k2)
    k4 = f(t + h, y + h * k3)
    return y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def rk4(f, y0, t_final: float, steps: int):
    """
    Fixed-step RK4 from 0 to t_final.

    Returns (times, ys) with steps + 1 rows, the first being the initial
    condition.
    """
    if isinstance(steps, bool) or not isinstance(steps, (int, np.integer)) or steps < 1:
        raise QuantumError(f"steps must be a positive integer, got {steps!r}")
    if not math.isfinite(t_final):
        raise QuantumError(f"integration time must be finite, got {t_final!r}")
    h = t_final / steps
    y = np.array(y0, dtype=float)
    times = np.linspace(0.0, t_final, steps + 1)
    ys = np.empty((steps + 1, y.size))
    ys[0] = y
    for i in range(steps):
        y = rk4_step(f, y, times[i], h)
        ys[i + 1] = y
    return times, ys
