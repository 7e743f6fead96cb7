"""Shared numeric configuration and error types."""

from __future__ import annotations

from dataclasses import dataclass


class PQError(Exception):
    """Base class for errors raised by this package."""


class DomainError(PQError, ValueError):
    """An argument lies outside the domain of the requested function."""


class InvalidC(DomainError):
    """Hypergeometric lower parameter is zero or a negative integer."""


class NonConvergent(PQError, ArithmeticError):
    """An iterative method hit its cap before meeting its tolerance."""


class Overflow(PQError, OverflowError):
    """A result is not representable (e.g. tan_pq at the right endpoint)."""


@dataclass(frozen=True)
class NumericConfig:
    """Tolerances and iteration caps shared by the series, quadrature and root finders."""

    series_tol: float = 1e-14
    series_max_terms: int = 1_000_000
    quad_levels: int = 12
    quad_tol: float = 1e-12
    root_tol: float = 1e-12
    root_max_iter: int = 200

    def __post_init__(self):
        for name in ("series_tol", "quad_tol", "root_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        for name in ("series_max_terms", "quad_levels", "root_max_iter"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


DEFAULT_CONFIG = NumericConfig()
