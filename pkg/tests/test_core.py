import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from imbessel.core import (ExponentKind, Family, GuardStatus, OrderArg,
                           RangeGuardConfig, Region, ScalingMode,
                           dominant_exponent, range_guard, scale_factor_log,
                           stable_kernels)
from imbessel.errors import DomainError

from conftest import rel_err, ulp_err


class TestOrderArg:
    def test_positive_x_required(self):
        for bad in (0.0, -1.0, math.nan, math.inf):
            with pytest.raises(DomainError):
                OrderArg(1.0, bad)

    def test_abs_a_taken(self):
        assert OrderArg(-3.0, 1.0).a == 3.0

    @pytest.mark.parametrize("a,x,region", [
        (10.0, 11.01, Region.MONOTONIC),
        (10.0, 8.99, Region.OSCILLATORY),
        (10.0, 10.0, Region.TURNING_POINT),
        (10.0, 10.99, Region.TURNING_POINT),
        (0.0, 0.001, Region.MONOTONIC),
    ])
    def test_region(self, a, x, region):
        assert OrderArg(a, x).region is region


class TestDominantExponent:
    def test_trivial_pins(self):
        # lambda(0, 1) = 1; lambda(2, 2) = pi; ltilde(2, 2) = 0; lbar(0,5) = 0
        assert dominant_exponent(OrderArg(0, 1), ExponentKind.LAMBDA_MON) == 1.0
        assert dominant_exponent(OrderArg(2, 2), ExponentKind.LAMBDA_MON) == math.pi
        assert dominant_exponent(OrderArg(2, 2), ExponentKind.LAMBDA_TILDE) == 0.0
        assert dominant_exponent(OrderArg(0, 5), ExponentKind.LAMBDA_BAR) == 0.0
        assert dominant_exponent(OrderArg(3, 1), ExponentKind.HALF_PI_A) == pytest.approx(
            1.5 * math.pi, abs=0)

    def test_domain_error_below_turning(self):
        with pytest.raises(DomainError):
            dominant_exponent(OrderArg(2, 1), ExponentKind.LAMBDA_MON)

    @pytest.mark.parametrize("kind", [ExponentKind.LAMBDA_MON,
                                      ExponentKind.LAMBDA_TILDE,
                                      ExponentKind.LAMBDA_BAR])
    def test_two_ulp_vs_oracle(self, kind):
        mp.mp.dps = 60
        worst = 0.0
        for a in (0.0, 1e-8, 0.3, 1.0, 7.7, 30.0, 150.0, 439.0):
            for f in (1.0, 1.0 + 1e-12, 1.0001, 1.01, 1.05, 1.11, 1.5, 3.0,
                      20.0, 1e6):
                x = a * f if a > 0 else f
                am, xm = mp.mpf(a), mp.mpf(x)
                lam = mp.sqrt(xm * xm - am * am) + am * mp.asin(am / xm)
                exact = {
                    ExponentKind.LAMBDA_MON: lam,
                    ExponentKind.LAMBDA_TILDE: lam - am * mp.pi / 2,
                    ExponentKind.LAMBDA_BAR: lam - xm,
                }[kind]
                got = dominant_exponent(OrderArg(a, x), kind)
                if exact == 0:
                    assert got == 0.0
                    continue
                worst = max(worst, ulp_err(got, float(exact)))
        assert worst <= 2.0

    def test_branch_continuity_at_turning(self):
        # lambda(a, a) = a pi/2 so the scale factor is continuous across x=a
        for a in (0.5, 2.0, 10.0, 100.0, 439.0):
            lam = dominant_exponent(OrderArg(a, a), ExponentKind.LAMBDA_MON)
            assert ulp_err(lam, 0.5 * math.pi * a) <= 2.0

    @given(st.floats(1e-6, 400.0), st.floats(1.0 + 1e-9, 50.0))
    @settings(max_examples=200, deadline=None)
    def test_signs(self, a, f):
        p = OrderArg(a, a * f)
        assert dominant_exponent(p, ExponentKind.LAMBDA_TILDE) > 0.0
        assert dominant_exponent(p, ExponentKind.LAMBDA_BAR) >= 0.0


class TestStableKernels:
    def test_limits_at_zero(self):
        assert stable_kernels(0.0) == (0.0, 0.0)

    def test_small_tau_leading_terms(self):
        c, r = stable_kernels(1e-8)
        assert rel_err(c, 5e-17) < 1e-12
        assert rel_err(r, 1e-16 / 3.0) < 1e-12

    def test_negative_tau_rejected(self):
        with pytest.raises(DomainError):
            stable_kernels(-1.0)

    def test_four_ulp_vs_oracle(self):
        mp.mp.dps = 60
        for t in (1e-300, 1e-12, 1e-4, 0.01, 0.3, 0.9, 1.0, 1.49, 1.51,
                  2.0, 5.0, 20.0, 100.0, 400.0):
            c, r = stable_kernels(t)
            tm = mp.mpf(t)
            assert ulp_err(c, float(mp.cosh(tm) - 1)) <= 4.0
            assert ulp_err(r, float(1 - tm * tm / mp.sinh(tm) ** 2)) <= 4.0


class TestRangeGuard:
    def test_a_limit_matches_figure(self):
        cfg = RangeGuardConfig()
        assert abs(cfg.a_limit - 439.7) < 0.1

    def test_oscillatory_guard(self):
        cfg = RangeGuardConfig()
        assert range_guard(OrderArg(439, 1), cfg,
                           ScalingMode.UNSCALED) is GuardStatus.OK
        assert range_guard(OrderArg(441, 1), cfg,
                           ScalingMode.UNSCALED) is not GuardStatus.OK

    def test_monotonic_guard_at_a0(self):
        cfg = RangeGuardConfig()
        lim = cfg.log_limit
        assert range_guard(OrderArg(0, lim - 1), cfg,
                           ScalingMode.UNSCALED) is GuardStatus.OK
        assert range_guard(OrderArg(0, lim + 1), cfg,
                           ScalingMode.UNSCALED) is not GuardStatus.OK
        assert abs(lim - math.log(10.0 ** 300)) < 1e-9

    def test_scaled_always_ok(self):
        cfg = RangeGuardConfig()
        assert range_guard(OrderArg(1000, 1), cfg,
                           ScalingMode.SCALED) is GuardStatus.OK

    def test_family_classification(self):
        cfg = RangeGuardConfig()
        p = OrderArg(500, 1)
        assert range_guard(p, cfg, ScalingMode.UNSCALED,
                           Family.K_FAMILY) is GuardStatus.UNDERFLOW_RISK
        assert range_guard(p, cfg, ScalingMode.UNSCALED,
                           Family.L_FAMILY) is GuardStatus.OVERFLOW_RISK

    @given(st.floats(1e-3, 439.0))
    @settings(max_examples=100, deadline=None)
    def test_guard_monotone_in_a(self, a):
        # oscillatory branch: Ok at a implies Ok at any smaller order
        cfg = RangeGuardConfig()
        x = 0.5 * a
        if x <= 0:
            return
        if range_guard(OrderArg(a, x), cfg,
                       ScalingMode.UNSCALED) is GuardStatus.OK:
            assert range_guard(OrderArg(0.25 * a, x), cfg,
                               ScalingMode.UNSCALED) is GuardStatus.OK


class TestScaleFactor:
    def test_branches(self):
        assert scale_factor_log(OrderArg(3, 1), Family.K_FAMILY) == pytest.approx(
            1.5 * math.pi, rel=1e-15)
        assert scale_factor_log(OrderArg(3, 1), Family.L_FAMILY) == pytest.approx(
            -1.5 * math.pi, rel=1e-15)

    def test_continuity_across_turning(self):
        a = 7.0
        below = scale_factor_log(OrderArg(a, a * (1 - 1e-14)), Family.K_FAMILY)
        above = scale_factor_log(OrderArg(a, a * (1 + 1e-14)), Family.K_FAMILY)
        assert abs(below - above) <= 8 * math.ulp(above)

    @given(st.floats(-100.0, 100.0), st.floats(1e-3, 1e3))
    @settings(max_examples=150, deadline=None)
    def test_evenness_bitwise(self, a, x):
        for kind in ExponentKind:
            if x < abs(a) and kind is not ExponentKind.HALF_PI_A:
                continue
            assert dominant_exponent(OrderArg(a, x), kind) == \
                dominant_exponent(OrderArg(-a, x), kind)
