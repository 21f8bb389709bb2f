import math

import mpmath as mp
import pytest

from imbessel.core import OrderArg, Region, ScalingMode
from imbessel.errors import DomainError
from imbessel.integrals import (MonPath, OscMode, OscPath, mon_eval,
                                mon_sigma, osc_eval, osc_invert_sigma,
                                osc_sigma_tau)

from conftest import rel_err


def _oracle_scaled(a, x):
    mp.mp.dps = 50
    am, xm = mp.mpf(a), mp.mpf(x)
    if xm >= am:
        s = mp.sqrt(xm * xm - am * am) + am * mp.asin(am / xm)
    else:
        s = am * mp.pi / 2
    es = mp.exp(s)
    k = (mp.besselk(1j * am, xm) * es).real
    kp = (mp.diff(lambda t: mp.besselk(1j * am, t), xm) * es).real
    lf = lambda t: (mp.besseli(-1j * am, t) + mp.besseli(1j * am, t)) / 2
    l = (lf(xm) / es).real
    lp = (mp.diff(lf, xm) / es).real
    return float(k), float(kp), float(l), float(lp)


class TestMonSigma:
    def test_tau_zero_limits(self):
        sig, d, ds = mon_sigma(0.7, 0.0)
        assert sig == 0.7 and d == 0.0 and ds == 0.0

    def test_theta_zero(self):
        sig, d, ds = mon_sigma(0.0, 2.0)
        assert sig == 0.0 and ds == 0.0

    def test_quarter_pi_pin(self):
        sig, d, ds = mon_sigma(math.pi / 4, 1.0)
        # sin(sigma) = (sqrt2/2)/sinh(1)
        exact = math.asin(math.sqrt(0.5) / math.sinh(1.0))
        assert rel_err(sig, exact) < 1e-14

    def test_stable_difference_small_tau(self):
        # theta - sigma ~ tan(theta) tau^2/6 as tau -> 0
        th = 1.1
        for tau in (1e-4, 1e-6, 1e-8):
            _, d, _ = mon_sigma(th, tau)
            assert rel_err(d, math.tan(th) * tau * tau / 6.0) < 1e-3

    def test_domain(self):
        with pytest.raises(DomainError):
            mon_sigma(2.0, 1.0)
        with pytest.raises(DomainError):
            mon_sigma(0.5, -1.0)


class TestMonEval:
    def test_a0_reduction(self, pins):
        # theta = 0 collapses to the classical K_0/I_0 integrals
        ref = pins["a0"]["1"]
        q = mon_eval(OrderArg(0.0, 1.0), ScalingMode.UNSCALED, tol=1e-13)
        assert rel_err(q.k, float(ref["K0"])) < 1e-13
        assert rel_err(q.l, float(ref["I0"])) < 1e-13
        assert rel_err(q.kp, float(ref["mK1"])) < 1e-13
        assert rel_err(q.lp, float(ref["I1"])) < 1e-13

    @pytest.mark.parametrize("a,x", [(0.5, 1.1), (1.0, 2.0), (5.0, 20.0),
                                     (10.0, 30.0), (100.0, 130.0)])
    def test_vs_oracle(self, a, x):
        q = mon_eval(OrderArg(a, x), ScalingMode.SCALED, tol=1e-13)
        exact = _oracle_scaled(a, x)
        for got, ex in zip((q.k, q.kp, q.l, q.lp), exact):
            assert rel_err(got, ex) < 1e-12

    def test_wronskian(self):
        q = mon_eval(OrderArg(5.0, 10.0), ScalingMode.SCALED, tol=1e-12)
        assert abs(q.wronskian_residual(10.0)) < 1e-11

    def test_refused_in_band(self):
        with pytest.raises(DomainError):
            mon_eval(OrderArg(10.0, 10.5), ScalingMode.SCALED)


class TestOscPathOps:
    def test_path_record(self):
        pa = OscPath.from_point(OrderArg(2.0, 1.0))
        assert rel_err(pa.mu, math.acosh(2.0)) < 1e-15
        assert rel_err(pa.tau0, pa.mu - math.tanh(pa.mu)) < 1e-15
        assert rel_err(pa.chi, math.sqrt(3.0) - 2.0 * math.log(2.0 + math.sqrt(3.0))) < 1e-14

    def test_sigma_at_mu(self):
        pa = OscPath.from_point(OrderArg(2.0, 1.0))
        sig, ds = osc_sigma_tau(pa, pa.mu)
        assert sig == 0.5 * math.pi
        assert ds == -1.0

    def test_sigma_at_tau0(self):
        pa = OscPath.from_point(OrderArg(2.0, 1.0))
        sig, _ = osc_sigma_tau(pa, pa.tau0)
        assert abs(sig - math.pi) < 1e-12

    def test_invert_endpoints(self):
        pa = OscPath.from_point(OrderArg(2.0, 1.0))
        tau, _ = osc_invert_sigma(pa, math.pi)
        assert rel_err(tau, pa.tau0) < 1e-12
        tau, dts = osc_invert_sigma(pa, 1.5 * math.pi)
        assert 0.0 < tau < pa.tau0
        assert abs(dts) < 1e-12   # dsigma/dtau is singular there

    def test_invert_residual(self):
        pa = OscPath.from_point(OrderArg(2.0, 1.0))
        for f in (1.05, 1.1, 1.25, 1.4):
            sig = f * math.pi
            tau, _ = osc_invert_sigma(pa, sig)
            resid = abs(math.sin(sig)
                        - ((tau - pa.mu) * math.cosh(pa.mu) + math.sinh(pa.mu))
                        / math.sinh(tau))
            assert resid < 1e-14

    def test_branch_consistency(self):
        # osc_sigma_tau and osc_invert_sigma are mutual inverses at sigma=pi
        pa = OscPath.from_point(OrderArg(3.0, 1.7))
        tau, _ = osc_invert_sigma(pa, math.pi)
        sig, _ = osc_sigma_tau(pa, tau)
        assert abs(sig - math.pi) < 1e-10


class TestOscEval:
    @pytest.mark.parametrize("a,x", [(0.1, 0.05), (1.0, 0.5), (2.0, 1.0),
                                     (10.0, 4.0), (20.0, 11.0),
                                     (100.0, 50.0)])
    def test_full_vs_oracle(self, a, x):
        q = osc_eval(OrderArg(a, x), ScalingMode.SCALED, tol=1e-13)
        exact = _oracle_scaled(a, x)
        for got, ex in zip((q.k, q.kp, q.l, q.lp), exact):
            assert rel_err(got, ex) < 1e-12

    @pytest.mark.parametrize("a,x", [(30.0, 14.0), (100.0, 50.0)])
    def test_simplified_vs_oracle(self, a, x):
        q = osc_eval(OrderArg(a, x), ScalingMode.SCALED, tol=1e-13,
                     mode=OscMode.SIMPLIFIED)
        exact = _oracle_scaled(a, x)
        for got, ex in zip((q.k, q.kp, q.l, q.lp), exact):
            assert rel_err(got, ex) < 1e-11

    def test_simplified_refused_small_a(self):
        with pytest.raises(DomainError):
            osc_eval(OrderArg(10.0, 5.0), ScalingMode.SCALED,
                     mode=OscMode.SIMPLIFIED)

    def test_refused_in_band_and_monotonic(self):
        with pytest.raises(DomainError):
            osc_eval(OrderArg(10.0, 9.5), ScalingMode.SCALED)
        with pytest.raises(DomainError):
            osc_eval(OrderArg(1.0, 2.0), ScalingMode.SCALED)

    def test_wronskian(self):
        q = osc_eval(OrderArg(10.0, 5.0), ScalingMode.SCALED, tol=1e-12)
        assert abs(q.wronskian_residual(5.0)) < 1e-11

    def test_scaled_integrands_finite_large_a(self):
        # no overflow anywhere in scaled mode up to a = 1e4
        for a in (1e3, 1e4):
            q = osc_eval(OrderArg(a, 0.4 * a), ScalingMode.SCALED,
                         tol=1e-11, mode=OscMode.SIMPLIFIED)
            assert all(math.isfinite(v) for v in (q.k, q.kp, q.l, q.lp))
            assert abs(q.wronskian_residual(0.4 * a)) < 1e-10

    def test_simplified_error_decays_like_dropped_integral(self):
        # the full-vs-simplified gap tracks e^{-(a pi/2 - x cosh tau0)}
        gaps = []
        preds = []
        for a in (16.0, 20.0, 24.0):
            x = 0.5 * a
            pa = OscPath.from_point(OrderArg(a, x))
            qf = osc_eval(OrderArg(a, x), ScalingMode.SCALED, tol=1e-14)
            from imbessel._backend import kernels
            p1, _, _, _, _, ok = kernels.osc_quad(pa.mu, x, a, 1e-14, True)
            assert ok
            gaps.append(max(abs(p1[0] - qf.k) / abs(qf.k),
                            abs(p1[2] / (2 * math.pi) - qf.l) / abs(qf.l)))
            preds.append(a * math.pi / 2 - x * math.cosh(pa.tau0))
        for g, p in zip(gaps, preds):
            assert -math.log(g) == pytest.approx(p, abs=3.5)
