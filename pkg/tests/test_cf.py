import math

import pytest

from imbessel.cf import CFConfig, cf_eval
from imbessel.core import OrderArg, ScalingMode
from imbessel.errors import OutOfValidityError
from imbessel.largex import largex_eval

from conftest import rel_err


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            CFConfig(tol=1e-20)
        with pytest.raises(ValueError):
            CFConfig(max_iter=10)


class TestCFEval:
    def test_k0_k1_at_x10(self, pins):
        ref = pins["a0"]["10"]
        k, kp = cf_eval(OrderArg(0.0, 10.0), ScalingMode.UNSCALED)
        assert rel_err(k, float(ref["K0"])) < 1e-13
        assert rel_err(kp, float(ref["mK1"])) < 1e-13

    @pytest.mark.parametrize("a,x", [(1.0, 2.0), (1.0, 8.0), (5.0, 20.0),
                                     (12.0, 30.0), (60.0, 180.0),
                                     (100.0, 130.0)])
    def test_vs_oracle_pins(self, a, x, pins):
        ref = next(r for r in pins["general"]
                   if float(r["a"]) == a and float(r["x"]) == x)
        kl = [float(v) for v in ref["kl"]]
        k, kp = cf_eval(OrderArg(a, x), ScalingMode.UNSCALED)
        assert rel_err(k, kl[0]) < 1e-12
        assert rel_err(kp, kl[1]) < 1e-12

    def test_series_crosscheck_small_x(self):
        from imbessel.series import series_eval
        p = OrderArg(1.0, 5.0)
        k, kp = cf_eval(p, ScalingMode.SCALED)
        # cross-method: monotonic integrals at the same point
        from imbessel.integrals import mon_eval
        q = mon_eval(p, ScalingMode.SCALED, tol=1e-13)
        assert rel_err(k, q.k) < 1e-12
        assert rel_err(kp, q.kp) < 1e-12

    def test_wronskian_with_largex_L(self):
        for a, x in [(1.0, 25.0), (5.0, 30.0), (10.0, 60.0)]:
            p = OrderArg(a, x)
            k, kp = cf_eval(p, ScalingMode.SCALED)
            q = largex_eval(p, ScalingMode.SCALED)
            assert abs(x * (k * q.lp - kp * q.l) - 1.0) < 1e-11

    def test_refused_outside_validity(self):
        with pytest.raises(OutOfValidityError):
            cf_eval(OrderArg(5.0, 5.2), ScalingMode.SCALED)    # in the band
        with pytest.raises(OutOfValidityError):
            cf_eval(OrderArg(0.0, 1.0), ScalingMode.SCALED)    # x too small
        with pytest.raises(OutOfValidityError):
            cf_eval(OrderArg(200.0, 400.0), ScalingMode.SCALED)  # a too large

    def test_iteration_count_bounded(self):
        # stress grid: report-style bound on the iteration count
        from imbessel._backend import kernels
        worst = 0
        for a in (0.0, 1.0, 5.0, 20.0, 100.0):
            for f in (1.3, 2.0, 5.0, 20.0):
                x = max(1.4, a * f)
                _, _, iters, ok = kernels.cf2_kernel(-a * a, x, 1e-15, 30000)
                assert ok
                worst = max(worst, iters)
        assert worst <= 30000

    def test_wider_range_than_largex_K(self):
        # accepted x extends below the large-x K admission at 1e-13 accuracy
        import mpmath as mp
        from imbessel.errors import AccuracyLossError
        mp.mp.dps = 40
        for a in (1.0, 5.0, 10.0):
            x = max(1.4, a * 1.2)
            k, _ = cf_eval(OrderArg(a, x), ScalingMode.UNSCALED)
            exact = float(mp.besselk(1j * mp.mpf(a), mp.mpf(x)).real)
            assert rel_err(k, exact) < 1e-12
            with pytest.raises(AccuracyLossError):
                largex_eval(OrderArg(a, x), ScalingMode.UNSCALED)
