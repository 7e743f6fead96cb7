"""The (p,q)-trigonometric and hyperbolic functions.

Two independent evaluation routes are provided:

* the series route, built on :func:`pqtrig.hypergeom.gauss_2f1`, used by the
  public functions below;
* :func:`quad_oracle`, tanh-sinh quadrature of the defining integrals, which
  shares no code with the series route and exists for cross-validation.

Every series is kept at an argument of magnitude at most 1/2 (or 8/9 for the
transformed arsinh form) so convergence is fast.  Near the right end of
(0, 1) arcsin is evaluated through its complement

    pi_pq/2 - arcsin(x) = pi_pq/2 - arccos(c) = Lambda(c),   c = (1 - x^q)^(1/p)
    Lambda(c) = (p/q) c^(p-1)/(p-1) * F(1 - 1/q, 1 - 1/p; 2 - 1/p; c^p)

which is also the function x -> pi_pq/2 - arccos_pq(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .config import DEFAULT_CONFIG, DomainError, NonConvergent, NumericConfig, Overflow
from .hypergeom import hyp2f1
from .quadrature import tanh_sinh

# series switch points: x^q <= 1/2 for arcsin and direct arsinh, x^q <= 8 for transformed arsinh
SPLIT = 0.5
ARSINH_TAIL_SPLIT = 8.0
# Newton brackets reach a little past the split so a root sitting on it can still be polished
BRACKET_TOP = 0.55


@dataclass(frozen=True)
class PQParams:
    """The parameter pair (p, q), both > 1, with lazily cached constants."""

    p: float
    q: float
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p > 1):
            raise DomainError(f"p must be > 1 (got p={self.p})")
        if not (math.isfinite(self.q) and self.q > 1):
            raise DomainError(f"q must be > 1 (got q={self.q})")

    @property
    def half_pi_pq(self) -> float | None:
        """pi_pq/2 if it has been computed, else None."""
        return self._cache.get("half_pi")


def _pow_complement(x: float, e: float) -> float:
    """1 - x^e for 0 <= x <= 1, accurate when x is close to 1."""
    if x == 0.0:
        return 1.0
    return -math.expm1(e * math.log(x))


# ---------------------------------------------------------------- series route


def _arcsin_series(P: PQParams, x: float, cfg: NumericConfig) -> float:
    if x == 0.0:
        return 0.0
    return x * hyp2f1(1 / P.p, 1 / P.q, 1 + 1 / P.q, x**P.q, cfg)


def _complement_series(P: PQParams, c: float, cfg: NumericConfig) -> float:
    """Lambda(c) = pi_pq/2 - arccos_pq(c) by its own power series in c^p."""
    p, q = P.p, P.q
    if c == 0.0:
        return 0.0
    lead = (p / q) * c ** (p - 1) / (p - 1)
    return lead * hyp2f1(1 - 1 / q, 1 - 1 / p, 2 - 1 / p, c**p, cfg)


def pi_pq_half(P: PQParams, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """pi_pq/2 = integral of (1 - t^q)^(-1/p) over [0, 1], by tanh-sinh quadrature."""
    cached = P._cache.get("half_pi")
    if cached is not None:
        return cached
    value = _integrate("arcsin", P, 1.0, cfg)
    P._cache["half_pi"] = value
    return value


def _split_point(P: PQParams, cfg: NumericConfig) -> float:
    """arcsin_pq(2^(-1/q)): the t at which sin_pq(t)^q = 1/2."""
    cached = P._cache.get("split")
    if cached is None:
        cached = _arcsin_series(P, SPLIT ** (1 / P.q), cfg)
        P._cache["split"] = cached
    return cached


def arcsin_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """Integral of (1 - t^q)^(-1/p) over [0, x] for 0 <= x <= 1; equals pi_pq/2 at x = 1."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"arcsin_pq needs 0 <= x <= 1 (got {x})")
    xq = x**P.q
    if xq <= SPLIT:
        return _arcsin_series(P, x, cfg)
    c = _pow_complement(x, P.q) ** (1 / P.p)
    return pi_pq_half(P, cfg) - _complement_series(P, c, cfg)


def arccos_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """arcsin_pq((1 - x^p)^(1/q)) for 0 <= x <= 1."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"arccos_pq needs 0 <= x <= 1 (got {x})")
    if x**P.p < SPLIT:
        return pi_pq_half(P, cfg) - _complement_series(P, x, cfg)
    y = _pow_complement(x, P.p) ** (1 / P.q)
    return _arcsin_series(P, y, cfg)


def pi_half_minus_arccos_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """x -> pi_pq/2 - arccos_pq(x) on [0, 1], without cancellation near 0."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"pi_half_minus_arccos_pq needs 0 <= x <= 1 (got {x})")
    if x**P.p <= SPLIT:
        return _complement_series(P, x, cfg)
    y = _pow_complement(x, P.p) ** (1 / P.q)
    return pi_pq_half(P, cfg) - _arcsin_series(P, y, cfg)


def _arsinh_direct(P: PQParams, x: float, cfg: NumericConfig) -> float:
    if x == 0.0:
        return 0.0
    return x * hyp2f1(1 / P.p, 1 / P.q, 1 + 1 / P.q, -(x**P.q), cfg)


def _arsinh_transformed(P: PQParams, x: float, cfg: NumericConfig) -> float:
    if x == 0.0:
        return 0.0
    xq = x**P.q
    w = xq / (1 + xq)
    return x * math.exp(-math.log1p(xq) / P.p) * hyp2f1(1, 1 / P.p, 1 + 1 / P.q, w, cfg)


def _arsinh_tail(P: PQParams, x: float, cfg: NumericConfig) -> float:
    """arsinh_pq(x) for large x via the expansion of (1 + t^q)^(-1/p) in t^-q.

    arsinh(x) = arsinh(x0) + sum_n binom(-1/p, n) int_{x0}^x t^(e_n - 1) dt
    with e_n = 1 - q/p - q n and x0^q = 8, so successive terms shrink by ~1/8.
    """
    p, q = P.p, P.q
    x0 = ARSINH_TAIL_SPLIT ** (1 / q)
    base = P._cache.get("arsinh_x0")
    if base is None:
        base = P._cache["arsinh_x0"] = _arsinh_transformed(P, x0, cfg)
    log_ratio = math.log(x / x0)
    coef = 1.0
    total = 0.0
    for n in range(cfg.series_max_terms):
        e = 1 - q / p - q * n
        if e == 0.0:
            integral = log_ratio
        else:
            integral = x0**e * math.expm1(e * log_ratio) / e
        term = coef * integral
        total += term
        if n > 0 and abs(term) <= cfg.series_tol * abs(base + total):
            return base + total
        coef *= -(1 / p + n) / (n + 1)
    raise NonConvergent(f"arsinh tail expansion did not converge at x={x}")


def arsinh_pq(
    P: PQParams,
    x: float,
    cfg: NumericConfig = DEFAULT_CONFIG,
    representation: str = "auto",
) -> float:
    """Integral of (1 + t^q)^(-1/p) over [0, x].

    ``representation`` selects the formula: "direct" (series at -x^q, needs
    x^q < 1), "transformed" (series at x^q/(1+x^q), any x >= 0), "tail"
    (large-x expansion), or "auto", which picks direct up to x^q = 1/2,
    transformed up to x^q = 8 and the tail expansion beyond.
    """
    if not (x >= 0.0 and math.isfinite(x)):
        raise DomainError(f"arsinh_pq needs finite x >= 0 (got {x})")
    # compare q log x rather than x^q, which overflows for huge x
    qlog = P.q * math.log(x) if x > 0 else -math.inf
    if representation == "auto":
        if qlog <= math.log(SPLIT):
            representation = "direct"
        elif qlog <= math.log(ARSINH_TAIL_SPLIT):
            representation = "transformed"
        else:
            representation = "tail"
    if representation == "direct":
        if qlog >= 0.0:
            raise DomainError("direct arsinh series needs x^q < 1")
        return _arsinh_direct(P, x, cfg)
    if representation == "transformed":
        return _arsinh_transformed(P, x, cfg)
    if representation == "tail":
        if x == 0.0:
            return 0.0
        return _arsinh_tail(P, x, cfg)
    raise ValueError(f"unknown representation {representation!r}")


# ------------------------------------------------------------- root finding


def safeguarded_newton(
    F: Callable[[float], float],
    dF: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    y0: float,
    tol: float,
    max_iter: int,
) -> float:
    """Solve F(y) = target for increasing F with F(lo) <= target <= F(hi).

    Newton steps that leave the current bracket are replaced by bisection.
    Once the residual is within ``tol`` a final Newton step polishes the root.
    """
    y = y0 if lo < y0 < hi else 0.5 * (lo + hi)
    for _ in range(max_iter):
        r = F(y) - target
        d = dF(y)
        step = r / d if (d > 0 and math.isfinite(d)) else math.nan
        if abs(r) <= tol:
            polished = y - step
            return polished if lo <= polished <= hi else y
        if r > 0:
            hi = y
        else:
            lo = y
        y_new = y - step
        if not (lo < y_new < hi):
            y_new = 0.5 * (lo + hi)
        if y_new == y or hi - lo <= 4 * np.finfo(float).eps * max(abs(hi), 1e-300):
            return y_new
        y = y_new
    raise NonConvergent(f"root finder exceeded {max_iter} iterations (target {target})")


def _check_forward_domain(P: PQParams, x: float, cfg: NumericConfig) -> float:
    half_pi = pi_pq_half(P, cfg)
    if not 0.0 < x < half_pi:
        raise DomainError(f"x must lie in (0, pi_pq/2) = (0, {half_pi:.17g}) (got {x})")
    return half_pi


def sin_cos_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """(sin_pq(x), cos_pq(x)) for 0 < x < pi_pq/2.

    Left of the point where sin^q = 1/2 the sine is found by inverting the
    arcsin series; right of it the cosine is found by inverting the complement
    series, so whichever coordinate is small is obtained to full relative
    precision.  The other follows from |sin|^q + |cos|^p = 1.
    """
    p, q = P.p, P.q
    half_pi = _check_forward_domain(P, x, cfg)
    split = _split_point(P, cfg)
    if x <= split:
        s = safeguarded_newton(
            lambda y: _arcsin_series(P, y, cfg),
            lambda y: math.exp(-math.log1p(-(y**q)) / p),
            x,
            0.0,
            BRACKET_TOP ** (1 / q),
            x,
            cfg.root_tol * min(1.0, x),
            cfg.root_max_iter,
        )
        c = (1 - s**q) ** (1 / p)
        return s, c
    d = half_pi - x
    c_top = BRACKET_TOP ** (1 / p)
    guess = ((p - 1) * q * d / p) ** (1 / (p - 1))
    c = safeguarded_newton(
        lambda y: _complement_series(P, y, cfg),
        lambda y: (p / q) * y ** (p - 2) * (1 - y**p) ** (1 / q - 1) if y > 0 else math.inf,
        d,
        0.0,
        c_top,
        guess,
        cfg.root_tol * min(1.0, d),
        cfg.root_max_iter,
    )
    s = (1 - c**p) ** (1 / q)
    return s, c


def sin_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return sin_cos_pq(P, x, cfg)[0]


def cos_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return sin_cos_pq(P, x, cfg)[1]


def tan_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    s, c = sin_cos_pq(P, x, cfg)
    if c == 0.0:
        raise Overflow(f"cos_pq underflowed to 0 at x={x}")
    return s / c


def arctan_pq(P: PQParams, y: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """The t in (0, pi_pq/2) with tan_pq(t) = y, for y > 0.

    Rather than inverting tan_pq numerically, solve s/c = y on the curve
    s^q + c^p = 1 for the smaller of (s, c) and map back through the arcsin
    or complement series.
    """
    if not (y > 0 and math.isfinite(y)):
        raise DomainError(f"arctan_pq needs finite y > 0 (got {y})")
    p, q = P.p, P.q
    tol = cfg.root_tol * 1e-2
    if y <= 1.0:
        s = safeguarded_newton(
            lambda u: u - y * _pow_complement(u, q) ** (1 / p),
            lambda u: 1 + y * (q / p) * u ** (q - 1) * _pow_complement(u, q) ** (1 / p - 1),
            0.0,
            0.0,
            1.0,
            y / (1 + y),
            tol * y,
            cfg.root_max_iter,
        )
        c = _pow_complement(s, q) ** (1 / p)
    else:
        c = safeguarded_newton(
            lambda u: u - _pow_complement(u, p) ** (1 / q) / y,
            lambda u: 1 + (p / q) * u ** (p - 1) * _pow_complement(u, p) ** (1 / q - 1) / y,
            0.0,
            0.0,
            1.0,
            1 / (1 + y),
            tol / y,
            cfg.root_max_iter,
        )
        s = _pow_complement(c, p) ** (1 / q)
    if s**q <= SPLIT:
        return _arcsin_series(P, s, cfg)
    return pi_pq_half(P, cfg) - _complement_series(P, c, cfg)


def sinh_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """The y > 0 with arsinh_pq(y) = x.

    For q > p arsinh_pq is bounded, so x beyond its supremum raises DomainError
    once the bracket expansion passes 1e300.
    """
    if not (x > 0 and math.isfinite(x)):
        raise DomainError(f"sinh_pq needs finite x > 0 (got {x})")
    p, q = P.p, P.q
    lo = x  # arsinh_pq(y) <= y
    hi = 2.0 * x
    while arsinh_pq(P, hi, cfg) <= x:
        lo = hi
        hi *= 2.0
        if hi > 1e300:
            raise DomainError(f"x={x} is outside the range of arsinh_pq for p={p}, q={q}")
    return safeguarded_newton(
        lambda y: arsinh_pq(P, y, cfg),
        lambda y: math.exp(-_log1p_pow(y, q) / p),
        x,
        lo,
        hi,
        lo,
        cfg.root_tol * max(1.0, x),
        cfg.root_max_iter,
    )


def _log1p_pow(y: float, q: float) -> float:
    """log(1 + y^q) without overflow for huge y."""
    ly = q * math.log(y) if y > 0 else -math.inf
    if ly > 30:
        return ly + math.log1p(math.exp(-ly))
    return math.log1p(math.exp(ly))


# --------------------------------------------------------------- derivatives


def d_sin_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return sin_cos_pq(P, x, cfg)[1]


def d_cos_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    # from differentiating sin^q + cos^p = 1 with sin' = cos; the factor is q/p
    s, c = sin_cos_pq(P, x, cfg)
    return -(P.q / P.p) * c ** (2 - P.p) * s ** (P.q - 1)


def d_tan_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    s, c = sin_cos_pq(P, x, cfg)
    return 1 + P.q * s**P.q / (P.p * c**P.p)


def d_arcsin_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1) (got {x})")
    return _pow_complement(x, P.q) ** (-1 / P.p)


def d_arccos_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1) (got {x})")
    p, q = P.p, P.q
    return -(p / q) * x ** (p - 2) * _pow_complement(x, p) ** (1 / q - 1)


def d_pi_half_minus_arccos_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return -d_arccos_pq(P, x, cfg)


def d_arsinh_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    if not x >= 0.0:
        raise DomainError(f"x must be >= 0 (got {x})")
    return math.exp(-_log1p_pow(x, P.q) / P.p) if x > 0 else 1.0


def d_arctan_pq(P: PQParams, y: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return 1.0 / d_tan_pq(P, arctan_pq(P, y, cfg), cfg)


def d_sinh_pq(P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    y = sinh_pq(P, x, cfg)
    return math.exp(_log1p_pow(y, P.q) / P.p)


# ------------------------------------------------------------ quadrature route


def _integrate(kind: str, P: PQParams, x: float, cfg: NumericConfig) -> float:
    p, q = P.p, P.q
    if kind == "arcsin":
        # distance from t to 1 is (1 - x) + (x - t), exact when x == 1
        gap = 1.0 - x

        def f(t, da, db):
            return np.exp(-np.log(-np.expm1(q * np.log1p(-(gap + db)))) / p)

        return tanh_sinh(f, 0.0, x, cfg.quad_tol, cfg.quad_levels).value
    if kind == "arsinh":

        def f(t, da, db):
            return np.exp(-np.log1p(t**q) / p)

        return tanh_sinh(f, 0.0, x, cfg.quad_tol, cfg.quad_levels).value
    if kind in ("arccos", "arccos_complement"):
        # f(u) = (1 - u^p)^(1/q - 1) u^(p - 2), integrated over [x, 1] or [0, x]
        if kind == "arccos":
            lo, hi, gap = x, 1.0, 0.0
        else:
            lo, hi, gap = 0.0, x, 1.0 - x

        def f(u, da, db):
            one_minus = -np.expm1(p * np.log1p(-(gap + db)))
            return one_minus ** (1 / q - 1) * (lo + da) ** (p - 2)

        return (p / q) * tanh_sinh(f, lo, hi, cfg.quad_tol, cfg.quad_levels).value
    raise ValueError(f"unknown quadrature kind {kind!r}")


def quad_oracle(kind: str, P: PQParams, x: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    """Evaluate a defining integral by tanh-sinh quadrature.

    kind:
      "arcsin"             int_0^x (1 - t^q)^(-1/p) dt,           0 <= x <= 1
      "arsinh"             int_0^x (1 + t^q)^(-1/p) dt,           x >= 0
      "arccos"             (p/q) int_x^1 f(u) du  = arccos_pq(x),  0 <= x <= 1
      "arccos_complement"  (p/q) int_0^x f(u) du  = pi_pq/2 - arccos_pq(x)
    with f(u) = (1 - u^p)^(1/q - 1) u^(p - 2).
    """
    if kind in ("arcsin", "arccos", "arccos_complement"):
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"{kind} quadrature needs 0 <= x <= 1 (got {x})")
    elif kind == "arsinh":
        if not (x >= 0.0 and math.isfinite(x)):
            raise DomainError(f"arsinh quadrature needs finite x >= 0 (got {x})")
    return _integrate(kind, P, x, cfg)
