"""Shifted factorial and the Gauss hypergeometric series on the real interval (-1, 1)."""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CONFIG, DomainError, InvalidC, NonConvergent, NumericConfig


@dataclass(frozen=True)
class HypergeomArgs:
    a: float
    b: float
    c: float
    z: float

    def __post_init__(self):
        if self.c <= 0 and float(self.c).is_integer():
            raise InvalidC(f"c = {self.c} is zero or a negative integer")
        if not -1.0 < self.z < 1.0:
            raise DomainError(f"series argument z = {self.z} is outside (-1, 1)")


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_bound: float


def pochhammer(a: float, n: int) -> float:
    """Rising product a(a+1)...(a+n-1), equal to 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def gauss_2f1(args: HypergeomArgs, cfg: NumericConfig = DEFAULT_CONFIG) -> SeriesResult:
    """Sum the 2F1 power series term by term.

    Terms follow t_{n+1} = t_n (a+n)(b+n) z / ((c+n)(n+1)).  Summation stops
    once the current term is relatively below ``cfg.series_tol``, the term
    ratio is below one, and a geometric estimate of the remaining tail is
    also below tolerance.  The tail estimate uses max(ratio, |z|) as the
    decay rate since the ratio tends to |z|.
    """
    a, b, c, z = args.a, args.b, args.c, args.z
    total = 1.0
    term = 1.0
    tol = cfg.series_tol
    az = abs(z)
    n = 0
    while True:
        ratio = (a + n) * (b + n) * z / ((c + n) * (n + 1))
        if ratio == 0.0:
            return SeriesResult(total, n + 1, 0.0)
        term *= ratio
        n += 1
        total += term
        r_next = abs((a + n) * (b + n) * z / ((c + n) * (n + 1)))
        if r_next < 1.0 and abs(term) < tol * abs(total):
            decay = max(r_next, az)
            tail = abs(term) * decay / (1.0 - decay)
            if tail <= tol * abs(total):
                return SeriesResult(total, n + 1, tail)
        if n + 1 >= cfg.series_max_terms:
            raise NonConvergent(
                f"2F1({a}, {b}; {c}; {z}) did not converge in {cfg.series_max_terms} terms"
            )


def hyp2f1(a: float, b: float, c: float, z: float, cfg: NumericConfig = DEFAULT_CONFIG) -> float:
    return gauss_2f1(HypergeomArgs(a, b, c, z), cfg).value
