"""Numerical (a,b)-convexity, the derivative criterion, and monotonicity checks.

f is (a,b)-convex on I when f(M_a(r, s)) <= M_b(f(r), f(s)) for all r, s in I,
and (a,b)-concave when the inequality is reversed.  For differentiable positive
f this holds iff x -> x^(1-a) f'(x) f(x)^(b-1) is increasing (decreasing).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import pqfunctions as pq
from .config import DEFAULT_CONFIG, DomainError, NumericConfig
from .pqfunctions import PQParams
from .powermean import power_mean

FUNCTION_TAGS = (
    "arcsin_pq",
    "arccos_pq",
    "arsinh_pq",
    "arctan_pq",
    "sin_pq",
    "cos_pq",
    "tan_pq",
    "sinh_pq",
    "pi_half_minus_arccos_pq",
)

X_MAX = 50.0


@dataclass(frozen=True)
class TargetFunction:
    """A scalar function together with its derivative and natural domain."""

    tag: str
    value: Callable[[float], float]
    derivative: Callable[[float], float] | None
    domain: tuple[float, float]
    P: PQParams | None = None

    def __call__(self, x: float) -> float:
        return self.value(x)

    def deriv(self, x: float) -> float:
        if self.derivative is not None:
            return self.derivative(x)
        h = 1e-6 * max(1.0, abs(x))
        return (self.value(x + h) - self.value(x - h)) / (2 * h)


_TABLE = {
    "arcsin_pq": (pq.arcsin_pq, pq.d_arcsin_pq),
    "arccos_pq": (pq.arccos_pq, pq.d_arccos_pq),
    "arsinh_pq": (pq.arsinh_pq, pq.d_arsinh_pq),
    "arctan_pq": (pq.arctan_pq, pq.d_arctan_pq),
    "sin_pq": (pq.sin_pq, pq.d_sin_pq),
    "cos_pq": (pq.cos_pq, pq.d_cos_pq),
    "tan_pq": (pq.tan_pq, pq.d_tan_pq),
    "sinh_pq": (pq.sinh_pq, pq.d_sinh_pq),
    "pi_half_minus_arccos_pq": (pq.pi_half_minus_arccos_pq, pq.d_pi_half_minus_arccos_pq),
}


def natural_domain(tag: str, P: PQParams, cfg: NumericConfig = DEFAULT_CONFIG, x_max: float = X_MAX):
    """Open interval on which the tagged function is tabulated by default.

    Unbounded domains are truncated: arsinh to (0, x_max], sinh to the image
    of that interval under arsinh.
    """
    if tag in ("arcsin_pq", "arccos_pq", "arctan_pq", "pi_half_minus_arccos_pq"):
        return (0.0, 1.0)
    if tag in ("sin_pq", "cos_pq", "tan_pq"):
        return (0.0, pq.pi_pq_half(P, cfg))
    if tag == "arsinh_pq":
        return (0.0, x_max)
    if tag == "sinh_pq":
        return (0.0, pq.arsinh_pq(P, x_max, cfg))
    raise ValueError(f"unknown function tag {tag!r}")


def target(tag: str, P: PQParams, cfg: NumericConfig = DEFAULT_CONFIG) -> TargetFunction:
    if tag not in _TABLE:
        raise ValueError(f"unknown function tag {tag!r}; expected one of {', '.join(FUNCTION_TAGS)}")
    fn, dfn = _TABLE[tag]
    return TargetFunction(
        tag=tag,
        value=lambda x: fn(P, x, cfg),
        derivative=lambda x: dfn(P, x, cfg),
        domain=natural_domain(tag, P, cfg),
        P=P,
    )


def custom(
    f: Callable[[float], float],
    df: Callable[[float], float] | None = None,
    domain: tuple[float, float] = (0.0, math.inf),
    tag: str = "custom",
) -> TargetFunction:
    return TargetFunction(tag=tag, value=f, derivative=df, domain=domain)


@dataclass(frozen=True)
class GridSpec:
    """Sample points in [lo + margin, hi - margin].

    ``edge_margin`` defaults to 1e-4 (hi - lo).  With ``random_pairs`` set,
    the pairwise check draws that many (r, s) pairs uniformly (in log space
    for log spacing) from a seeded generator instead of using all grid pairs.
    """

    lo: float
    hi: float
    n_points: int = 40
    edge_margin: float | None = None
    spacing: str = "linear"
    random_pairs: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n_points < 2:
            raise ValueError("n_points must be at least 2")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"unknown spacing {self.spacing!r}")
        lo, hi = self.bounds
        if not lo < hi:
            raise ValueError(f"empty grid interval after edge margin: [{lo}, {hi}]")
        if self.spacing == "log" and lo <= 0:
            raise ValueError("log spacing needs a positive lower bound")

    @property
    def margin(self) -> float:
        return 1e-4 * (self.hi - self.lo) if self.edge_margin is None else self.edge_margin

    @property
    def bounds(self) -> tuple[float, float]:
        return self.lo + self.margin, self.hi - self.margin

    def points(self) -> np.ndarray:
        lo, hi = self.bounds
        if self.spacing == "log":
            return np.geomspace(lo, hi, self.n_points)
        return np.linspace(lo, hi, self.n_points)

    def pairs(self) -> list[tuple[float, float]]:
        if self.random_pairs is None:
            pts = self.points()
            n = len(pts)
            return [(float(pts[i]), float(pts[j])) for i in range(n) for j in range(i + 1, n)]
        rng = np.random.default_rng(self.seed)
        lo, hi = self.bounds
        draws = rng.random((self.random_pairs, 2))
        if self.spacing == "log":
            vals = np.exp(math.log(lo) + draws * (math.log(hi) - math.log(lo)))
        else:
            vals = lo + draws * (hi - lo)
        return [(float(r), float(s)) for r, s in vals]


@dataclass(frozen=True)
class Witness:
    r: float
    s: float
    lhs: float
    rhs: float
    gap: float


@dataclass(frozen=True)
class ConvexityVerdict:
    """Outcome of a grid check.

    ``worst_gap`` is the largest scaled gap seen (positive means the checked
    inequality was violated by that much before tolerance); ``witness`` is the
    pair attaining it and is set only when the check fails.
    """

    holds: bool
    witness: Witness | None
    samples_checked: int
    worst_gap: float
    trend: str | None = None


def _scale(x: float) -> float:
    return max(1.0, abs(x))


def check_ab_convex(
    f: TargetFunction,
    a: float,
    b: float,
    grid: GridSpec,
    tol: float = 1e-9,
    direction: str = "convex",
) -> ConvexityVerdict:
    """Test f(M_a(r,s)) <= M_b(f(r), f(s)) (convex) or >= (concave) on grid pairs."""
    if direction not in ("convex", "concave"):
        raise ValueError(f"direction must be 'convex' or 'concave' (got {direction!r})")
    sign = 1.0 if direction == "convex" else -1.0
    cache: dict[float, float] = {}

    def fv(x: float) -> float:
        if x not in cache:
            y = f(x)
            if not y > 0:
                raise DomainError(f"{f.tag} is not positive at x={x} (value {y})")
            cache[x] = y
        return cache[x]

    worst: Witness | None = None
    worst_scaled = -math.inf
    pairs = grid.pairs()
    for r, s in pairs:
        lhs = fv(power_mean(a, r, s))
        rhs = power_mean(b, fv(r), fv(s))
        gap = sign * (lhs - rhs)
        scaled = gap / _scale(rhs)
        if scaled > worst_scaled:
            worst_scaled = scaled
            worst = Witness(r, s, lhs, rhs, gap)
    holds = worst_scaled <= tol
    return ConvexityVerdict(holds, None if holds else worst, len(pairs), worst_scaled)


@dataclass(frozen=True)
class MonotoneResult:
    """Classification of a sampled function by its successive differences.

    ``increasing``/``decreasing`` are judged within the tolerance band, so a
    constant sequence is both.  ``witness`` holds the worst offending step as
    (x_i, x_{i+1}, g_i, g_{i+1}, scaled violation) when neither holds.
    """

    increasing: bool
    decreasing: bool
    witness: Witness | None
    worst_rise: float
    worst_drop: float

    @property
    def kind(self) -> str:
        if self.increasing and self.decreasing:
            return "constant"
        if self.increasing:
            return "increasing"
        if self.decreasing:
            return "decreasing"
        return "non_monotone"


def classify_sequence(xs: Sequence[float], values: Sequence[float], tol: float = 1e-9) -> MonotoneResult:
    """Classify values sampled at increasing xs as increasing, decreasing or neither."""
    worst_rise = -math.inf  # largest scaled upward step
    worst_drop = -math.inf  # largest scaled downward step
    rise_at = drop_at = 0
    for i in range(len(values) - 1):
        g0, g1 = values[i], values[i + 1]
        if not (math.isfinite(g0) and math.isfinite(g1)):
            raise DomainError(f"non-finite sample near x={xs[i]}")
        scale = max(1.0, abs(g0), abs(g1))
        step = (g1 - g0) / scale
        if step > worst_rise:
            worst_rise, rise_at = step, i
        if -step > worst_drop:
            worst_drop, drop_at = -step, i
    increasing = worst_drop <= tol
    decreasing = worst_rise <= tol
    witness = None
    if not (increasing or decreasing):
        # report the smaller of the two offences: the direction it most nearly fails
        i, v = (drop_at, worst_drop) if worst_drop <= worst_rise else (rise_at, worst_rise)
        witness = Witness(float(xs[i]), float(xs[i + 1]), float(values[i]), float(values[i + 1]), v)
    return MonotoneResult(increasing, decreasing, witness, worst_rise, worst_drop)


def check_monotone(g: Callable[[float], float], grid: GridSpec, tol: float = 1e-9) -> MonotoneResult:
    xs = grid.points()
    return classify_sequence(xs, [g(float(x)) for x in xs], tol)


def criterion_function(f: TargetFunction, a: float, b: float) -> Callable[[float], float]:
    """x -> x^(1-a) f'(x) f(x)^(b-1)."""

    def g(x: float) -> float:
        fx = f(x)
        if not fx > 0:
            raise DomainError(f"{f.tag} is not positive at x={x} (value {fx})")
        return x ** (1 - a) * f.deriv(x) * fx ** (b - 1)

    return g


def check_derivative_criterion(
    f: TargetFunction,
    a: float,
    b: float,
    grid: GridSpec,
    tol: float = 1e-9,
    direction: str = "convex",
) -> ConvexityVerdict:
    """(a,b)-convexity (concavity) via monotonicity of x^(1-a) f'(x) f(x)^(b-1).

    The verdict holds when the criterion function increases (convex) or
    decreases (concave) across the grid; ``trend`` records the classification.
    """
    if direction not in ("convex", "concave"):
        raise ValueError(f"direction must be 'convex' or 'concave' (got {direction!r})")
    xs = grid.points()
    g = criterion_function(f, a, b)
    vals = [g(float(x)) for x in xs]
    res = classify_sequence(xs, vals, tol)
    holds = res.increasing if direction == "convex" else res.decreasing
    worst = res.worst_drop if direction == "convex" else res.worst_rise
    witness = None
    if not holds:
        witness = res.witness or _step_witness(xs, vals, direction)
    return ConvexityVerdict(holds, witness, len(xs), worst, trend=res.kind)


def _step_witness(xs, vals, direction: str) -> Witness:
    """Worst step against the requested direction (used when the sequence is monotone the other way)."""
    sign = 1.0 if direction == "convex" else -1.0
    best = None
    for i in range(len(vals) - 1):
        v = -sign * (vals[i + 1] - vals[i]) / max(1.0, abs(vals[i]), abs(vals[i + 1]))
        if best is None or v > best.gap:
            best = Witness(float(xs[i]), float(xs[i + 1]), vals[i], vals[i + 1], v)
    return best
