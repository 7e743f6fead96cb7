import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqtrig import pqfunctions as pq
from pqtrig.config import DEFAULT_CONFIG, DomainError, NonConvergent
from pqtrig.pqfunctions import PQParams

P22 = PQParams(2, 2)
P43 = PQParams(4, 3)
P35 = PQParams(3, 5)

# Reference values: mpmath quad / findroot at 30 digits on the defining
# integrals, independent of the series and Newton code paths.
ARCSIN_43_HALF = 0.504093059375869366888988086414
HALF_PI_35 = 1.13331544165789042618203439094
HALF_PI_43 = 1.14190583120785458695924449052
ARSINH_35_2 = 1.4692647156416219847395275978
SIN_43_1 = 0.928008707049903269038814466069
COS_43_1 = 0.669407004947291459126276740044
ARCTAN_43_07 = 0.659066820455428985092089111182
SINH_35_08 = 0.81443109035378476908258599344
ARSINH_43_50 = 7.51684897949210414511397535252


def bisect(F, target, lo, hi, tol=1e-13):
    """Plain bisection for an increasing F; the oracle for the inverse functions."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if F(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_params_validation():
    with pytest.raises(DomainError, match="p must be > 1"):
        PQParams(1.0, 2.0)
    with pytest.raises(DomainError, match="q must be > 1"):
        PQParams(2.0, 0.5)
    assert PQParams(3, 4) == PQParams(3, 4)


def test_half_pi_cached_and_above_one():
    P = PQParams(2.5, 1.7)
    assert P.half_pi_pq is None
    v = pq.pi_pq_half(P)
    assert P.half_pi_pq == v > 1


class TestArcsin:
    def test_classical(self):
        assert pq.arcsin_pq(P22, 0.5) == pytest.approx(math.pi / 6, abs=1e-15)

    def test_zero(self):
        assert pq.arcsin_pq(P43, 0.0) == 0.0

    def test_pinned_value(self):
        assert pq.arcsin_pq(P43, 0.5) == pytest.approx(ARCSIN_43_HALF, abs=1e-14)
        assert pq.quad_oracle("arcsin", P43, 0.5) == pytest.approx(ARCSIN_43_HALF, abs=1e-14)

    def test_near_one_matches_quadrature(self):
        P = PQParams(1.2, 5)
        s = pq.arcsin_pq(P, 0.999)
        assert s == pytest.approx(1.61020240748941890040069329217, abs=1e-13)
        assert abs(s - pq.quad_oracle("arcsin", P, 0.999)) < 1e-9
        assert abs(pq.arcsin_pq(P43, 0.999) - pq.quad_oracle("arcsin", P43, 0.999)) < 1e-9

    def test_closed_right_end(self):
        assert pq.arcsin_pq(P43, 1.0) == pq.pi_pq_half(P43)
        assert pq.arccos_pq(P43, 0.0) == pq.pi_pq_half(P43)

    @pytest.mark.parametrize("x", [-0.1, 1.0 + 1e-12, 1.5, math.nan])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            pq.arcsin_pq(P43, x)


class TestPiHalf:
    def test_classical(self):
        assert pq.pi_pq_half(P22) == pytest.approx(math.pi / 2, abs=1e-14)

    @pytest.mark.parametrize("p", [1.5, 2, 3, 4, 10])
    def test_beta_identity(self, p):
        assert pq.pi_pq_half(PQParams(p, p)) == pytest.approx(math.pi / (p * math.sin(math.pi / p)), abs=1e-12)

    def test_pinned(self):
        assert pq.pi_pq_half(P35) == pytest.approx(HALF_PI_35, abs=1e-14)
        assert pq.pi_pq_half(P43) == pytest.approx(HALF_PI_43, abs=1e-14)


class TestArccos:
    def test_classical(self):
        assert pq.arccos_pq(P22, 0.5) == pytest.approx(math.pi / 3, abs=1e-14)

    def test_one(self):
        assert pq.arccos_pq(P43, 1.0) == 0.0

    def test_small_argument_limit(self):
        assert abs(pq.arccos_pq(P43, 1e-8) - pq.pi_pq_half(P43)) < 1e-6

    def test_is_arcsin_of_complement(self):
        for x in (0.1, 0.5, 0.9):
            y = (1 - x**4) ** (1 / 3)
            assert pq.arccos_pq(P43, x) == pytest.approx(pq.arcsin_pq(P43, y), abs=1e-13)

    def test_quadrature_forms(self):
        P = PQParams(3, 2)
        # (q/p) times the full integral of f is (q/p) pi_pq/2
        full = pq.quad_oracle("arccos_complement", P, 1.0)
        assert full * (P.q / P.p) == pytest.approx((P.q / P.p) * pq.pi_pq_half(P), abs=1e-10)
        for x in (0.2, 0.6, 0.95):
            assert pq.quad_oracle("arccos", P, x) == pytest.approx(pq.arccos_pq(P, x), abs=1e-11)
            assert pq.quad_oracle("arccos_complement", P, x) == pytest.approx(
                pq.pi_half_minus_arccos_pq(P, x), abs=1e-11
            )

    def test_complement_keeps_small_values(self):
        # pi/2 - arccos(x) ~ x for classical p = q = 2, no cancellation at small x
        assert pq.pi_half_minus_arccos_pq(P22, 1e-9) == pytest.approx(1e-9, rel=1e-12)


class TestArsinh:
    def test_classical(self):
        assert pq.arsinh_pq(P22, 1.0) == pytest.approx(math.log(1 + math.sqrt(2)), abs=1e-14)
        for x in (0.01, 0.7, 2.0, 10.0, 50.0):
            assert pq.arsinh_pq(P22, x) == pytest.approx(math.asinh(x), abs=1e-13)

    def test_zero(self):
        assert pq.arsinh_pq(P35, 0.0) == 0.0

    def test_pinned(self):
        assert pq.arsinh_pq(P35, 2.0) == pytest.approx(ARSINH_35_2, abs=1e-13)
        assert pq.arsinh_pq(P43, 50.0) == pytest.approx(ARSINH_43_50, abs=1e-12)

    @pytest.mark.parametrize("x", np.linspace(0.3, 0.99, 8))
    def test_representations_agree(self, x):
        P = PQParams(3, 2.5)
        direct = pq.arsinh_pq(P, x, representation="direct")
        transformed = pq.arsinh_pq(P, x, representation="transformed")
        assert abs(direct - transformed) < 1e-10

    def test_tail_agrees_with_transformed(self):
        for x in (2.5, 4.0, 10.0):
            assert pq.arsinh_pq(P43, x, representation="tail") == pytest.approx(
                pq.arsinh_pq(P43, x, representation="transformed"), abs=1e-11
            )

    def test_direct_needs_small_argument(self):
        with pytest.raises(DomainError):
            pq.arsinh_pq(P43, 1.0, representation="direct")

    def test_bounded_when_q_exceeds_p(self):
        # the integrand decays like t^(-q/p); integrable at infinity when q > p
        P = PQParams(1.5, 3)
        assert pq.arsinh_pq(P, 100.0) == pytest.approx(1.75663875195211583033005634233, abs=1e-12)


class TestForward:
    def test_classical(self):
        assert pq.sin_pq(P22, math.pi / 6) == pytest.approx(0.5, abs=1e-14)
        assert pq.cos_pq(P22, math.pi / 3) == pytest.approx(0.5, abs=1e-14)
        assert pq.tan_pq(P22, math.pi / 4) == pytest.approx(1.0, abs=1e-13)

    def test_round_trip_by_construction(self):
        assert pq.sin_pq(P43, pq.arcsin_pq(P43, 0.37)) == pytest.approx(0.37, abs=1e-14)

    def test_bisection_oracle(self):
        s = bisect(lambda y: pq.quad_oracle("arcsin", P43, y), 1.0, 0.0, 1.0)
        assert abs(s - SIN_43_1) < 1e-12
        assert pq.sin_pq(P43, 1.0) == pytest.approx(SIN_43_1, abs=1e-14)
        assert pq.cos_pq(P43, 1.0) == pytest.approx(COS_43_1, abs=1e-14)
        assert pq.tan_pq(P43, 1.0) == pytest.approx(SIN_43_1 / COS_43_1, rel=1e-14)

    def test_identity_at_point(self):
        s, c = pq.sin_cos_pq(P43, 0.9)
        assert abs(c**4 + s**3 - 1) < 1e-10

    def test_small_argument(self):
        assert pq.cos_pq(P43, 1e-8) == pytest.approx(1.0, abs=1e-6)
        assert pq.tan_pq(P43, 1e-8) == pytest.approx(1e-8, rel=1e-6)
        assert pq.sin_pq(P43, 1e-8) == pytest.approx(1e-8, rel=1e-12)

    def test_near_right_endpoint(self):
        h = pq.pi_pq_half(P43)
        s, c = pq.sin_cos_pq(P43, h - 1e-9)
        assert s == pytest.approx(1.0, abs=1e-8)
        assert 0 < c < 1e-2
        # the complement is recovered to full relative precision
        assert pq.pi_half_minus_arccos_pq(P43, c) == pytest.approx(1e-9, rel=1e-6)

    @pytest.mark.parametrize("x", [0.0, -0.5, "end"])
    def test_domain(self, x):
        x = pq.pi_pq_half(P43) if x == "end" else x
        with pytest.raises(DomainError):
            pq.sin_pq(P43, x)

    def test_monotone(self):
        xs = np.linspace(1e-3, pq.pi_pq_half(P43) - 1e-3, 60)
        assert np.all(np.diff([pq.sin_pq(P43, x) for x in xs]) > 0)
        assert np.all(np.diff([pq.cos_pq(P43, x) for x in xs]) < 0)
        assert np.all(np.diff([pq.tan_pq(P43, x) for x in xs]) > 0)


class TestArctan:
    def test_classical_limit(self):
        assert pq.arctan_pq(P22, 1 - 1e-10) == pytest.approx(math.pi / 4, abs=1e-5)
        for y in (0.1, 0.5, 1.0, 3.0, 40.0):
            assert pq.arctan_pq(P22, y) == pytest.approx(math.atan(y), abs=1e-14)

    def test_small_argument(self):
        assert pq.arctan_pq(P43, 1e-8) == pytest.approx(1e-8, rel=1e-6)

    def test_bisection_oracle(self):
        t = bisect(lambda x: pq.tan_pq(P43, x), 0.7, 1e-6, pq.pi_pq_half(P43) - 1e-6)
        assert abs(t - ARCTAN_43_07) < 1e-12
        assert pq.arctan_pq(P43, 0.7) == pytest.approx(ARCTAN_43_07, abs=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            pq.arctan_pq(P43, 0.0)


class TestSinh:
    def test_classical(self):
        assert pq.sinh_pq(P22, math.log(1 + math.sqrt(2))) == pytest.approx(1.0, abs=1e-13)
        for x in (0.1, 1.0, 3.0):
            assert pq.sinh_pq(P22, x) == pytest.approx(math.sinh(x), rel=1e-13)

    def test_small_argument(self):
        assert pq.sinh_pq(P35, 1e-8) == pytest.approx(1e-8, rel=1e-6)

    def test_bisection_oracle(self):
        y = bisect(lambda y: pq.quad_oracle("arsinh", P35, y), 0.8, 0.8, 2.0)
        assert abs(y - SINH_35_08) < 1e-12
        assert pq.sinh_pq(P35, 0.8) == pytest.approx(SINH_35_08, abs=1e-14)

    def test_outside_bounded_range(self):
        P = PQParams(1.5, 3)
        with pytest.raises(DomainError, match="outside the range"):
            pq.sinh_pq(P, 5.0)


class TestDerivatives:
    def test_classical(self):
        assert pq.d_sin_pq(P22, 0.7) == pytest.approx(math.cos(0.7), abs=1e-14)
        assert pq.d_cos_pq(P22, 0.7) == pytest.approx(-math.sin(0.7), abs=1e-14)
        assert pq.d_tan_pq(P22, 0.7) == pytest.approx(1 / math.cos(0.7) ** 2, abs=1e-13)

    def test_tan_slope_at_zero(self):
        assert pq.d_tan_pq(P43, 1e-8) == pytest.approx(1.0, abs=1e-6)

    def test_cos_against_finite_difference(self):
        h = 1e-6
        fd = (pq.cos_pq(P43, 0.6 + h) - pq.cos_pq(P43, 0.6 - h)) / (2 * h)
        assert abs(pq.d_cos_pq(P43, 0.6) - fd) < 1e-6

    @pytest.mark.parametrize(
        "value,deriv,lo,hi",
        [
            (pq.sin_pq, pq.d_sin_pq, 0.05, "end"),
            (pq.cos_pq, pq.d_cos_pq, 0.05, "end"),
            (pq.tan_pq, pq.d_tan_pq, 0.05, "end"),
            (pq.arcsin_pq, pq.d_arcsin_pq, 0.05, 0.95),
            (pq.arccos_pq, pq.d_arccos_pq, 0.05, 0.95),
            (pq.arctan_pq, pq.d_arctan_pq, 0.05, 3.0),
            (pq.arsinh_pq, pq.d_arsinh_pq, 0.05, 5.0),
            (pq.sinh_pq, pq.d_sinh_pq, 0.05, 1.5),
            (pq.pi_half_minus_arccos_pq, pq.d_pi_half_minus_arccos_pq, 0.05, 0.95),
        ],
    )
    @pytest.mark.parametrize("p,q", [(4, 3), (1.5, 3), (3, 1.5)])
    def test_against_finite_differences(self, value, deriv, lo, hi, p, q):
        P = PQParams(p, q)
        hi = pq.pi_pq_half(P) - 0.05 if hi == "end" else hi
        h = 1e-6
        for x in np.linspace(lo, hi, 12):
            fd = (value(P, x + h) - value(P, x - h)) / (2 * h)
            assert abs(deriv(P, x) - fd) < 1e-5 * max(1.0, abs(fd))


class TestClassicalReduction:
    xs = np.linspace(0.02, 0.98, 50)

    @pytest.mark.parametrize(
        "fn,ref",
        [
            (pq.arcsin_pq, math.asin),
            (pq.arccos_pq, math.acos),
            (pq.arsinh_pq, math.asinh),
            (pq.arctan_pq, math.atan),
            (pq.sin_pq, math.sin),
            (pq.cos_pq, math.cos),
            (pq.tan_pq, math.tan),
            (pq.sinh_pq, math.sinh),
        ],
    )
    def test_matches_math_module(self, fn, ref):
        for x in self.xs:
            assert abs(fn(P22, x) - ref(x)) < 1e-10


exponents = st.floats(1.1, 6.0)


@settings(max_examples=60, deadline=None)
@given(exponents, exponents, st.floats(0.01, 0.99))
def test_identity_holds(p, q, u):
    P = PQParams(p, q)
    x = u * pq.pi_pq_half(P)
    s, c = pq.sin_cos_pq(P, x)
    assert abs(s**q + c**p - 1) < 1e-9


@settings(max_examples=60, deadline=None)
@given(exponents, exponents, st.floats(0.01, 0.99))
def test_round_trips(p, q, u):
    # arcsin is ill-conditioned where sin is near 1 (its slope is 1/cos) and
    # arccos where cos is near 1, so each is checked on its well-conditioned half
    P = PQParams(p, q)
    x = u * pq.pi_pq_half(P)
    tol = 10 * DEFAULT_CONFIG.root_tol
    if u <= 0.5:
        assert abs(pq.arcsin_pq(P, pq.sin_pq(P, x)) - x) < tol * max(1, x)
    else:
        assert abs(pq.arccos_pq(P, pq.cos_pq(P, x)) - x) < tol * max(1, x)
    assert abs(pq.arctan_pq(P, pq.tan_pq(P, x)) - x) < tol * max(1, x)
    y = 3 * u
    assert abs(pq.tan_pq(P, pq.arctan_pq(P, y)) - y) < tol * max(1, y)
    v = 0.99 * u
    assert abs(pq.sin_pq(P, pq.arcsin_pq(P, v)) - v) < tol


@settings(max_examples=60, deadline=None)
@given(exponents, exponents, st.floats(0.01, 3.0))
def test_sinh_round_trip(p, q, x):
    P = PQParams(p, q)
    try:
        y = pq.sinh_pq(P, x)
    except DomainError:
        # only possible when arsinh is bounded
        assert q > p
        return
    assert abs(pq.arsinh_pq(P, y) - x) < 10 * DEFAULT_CONFIG.root_tol * max(1, x)


@settings(max_examples=40, deadline=None)
@given(exponents, exponents, st.floats(0.002, 0.998))
def test_series_matches_quadrature(p, q, x):
    P = PQParams(p, q)
    assert abs(pq.arcsin_pq(P, x) - pq.quad_oracle("arcsin", P, x)) < 1e-10
    assert abs(pq.arsinh_pq(P, 20 * x) - pq.quad_oracle("arsinh", P, 20 * x)) < 1e-10
