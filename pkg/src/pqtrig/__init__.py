"""Generalized (p,q)-trigonometric functions and power-mean convexity checks."""

from .config import (
    DEFAULT_CONFIG,
    DomainError,
    InvalidC,
    NonConvergent,
    NumericConfig,
    Overflow,
    PQError,
)
from .convexity import (
    ConvexityVerdict,
    GridSpec,
    check_ab_convex,
    check_derivative_criterion,
    check_monotone,
    target,
)
from .hypergeom import HypergeomArgs, gauss_2f1, hyp2f1, pochhammer
from .lame import CurveSample, extend_four_quadrants, sample_curve_C, sample_curve_D
from .powermean import MeanOrder, power_mean
from .pqfunctions import (
    PQParams,
    arccos_pq,
    arcsin_pq,
    arctan_pq,
    arsinh_pq,
    cos_pq,
    pi_half_minus_arccos_pq,
    pi_pq_half,
    quad_oracle,
    sin_cos_pq,
    sin_pq,
    sinh_pq,
    tan_pq,
)
from .suites import SUITES, SuiteConfig, SuiteReport, run_theorem_suite

__version__ = "0.1.0"
