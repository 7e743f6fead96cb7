"""Power mean of two positive numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DomainError

# below this |a| the geometric mean is returned
ZERO_ORDER = 1e-13


@dataclass(frozen=True)
class MeanOrder:
    a: float

    def __post_init__(self):
        if not math.isfinite(self.a):
            raise ValueError(f"mean order must be finite (got {self.a})")


def _log_cosh(t: float) -> float:
    t = abs(t)
    if t < 1.0:
        # cosh t - 1 = 2 sinh(t/2)^2 keeps every digit for small t
        return math.log1p(2.0 * math.sinh(0.5 * t) ** 2)
    return t + math.log1p(math.exp(-2.0 * t)) - math.log(2.0)


def power_mean(a: float | MeanOrder, x: float, y: float) -> float:
    """M_a(x, y) = ((x^a + y^a)/2)^(1/a), or sqrt(xy) at a = 0.

    With m, h the half-sum and half-difference of log x and log y,
    x^a + y^a = 2 e^(a m) cosh(a h), so log M = m + log(cosh(a h))/a.
    This neither overflows for large |a| nor cancels for small |a|.
    """
    if isinstance(a, MeanOrder):
        a = a.a
    if not (x > 0 and y > 0):
        raise DomainError(f"power mean needs positive arguments (got {x}, {y})")
    lx, ly = math.log(x), math.log(y)
    m, h = 0.5 * (lx + ly), 0.5 * (lx - ly)
    log_mean = m if abs(a) < ZERO_ORDER else m + _log_cosh(a * h) / a
    # rounding in exp/log can push the result a hair outside [min, max]
    return min(max(math.exp(log_mean), min(x, y)), max(x, y))
