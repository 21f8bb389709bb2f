import math

import pytest

from imbessel.core import OrderArg, ScalingMode
from imbessel.errors import AccuracyLossError
from imbessel.largex import HankelSeq, hankel_symbols, largex_eval

from conftest import rel_err


class TestHankelSymbols:
    def test_first_terms_a1(self):
        seq = hankel_symbols(1.0, 3)
        assert seq.terms == (1.0, -1.25, 2.03125)

    def test_first_terms_a0(self):
        assert hankel_symbols(0.0, 2).terms == (1.0, -0.25)

    def test_invalid_n(self):
        with pytest.raises(ValueError):
            hankel_symbols(1.0, 0)

    def test_real_and_even_in_a(self):
        assert hankel_symbols(-2.0, 6) == hankel_symbols(2.0, 6)
        assert isinstance(hankel_symbols(2.0, 6), HankelSeq)


class TestLargexEval:
    def test_a0_x50_pins(self, pins):
        ref = pins["a0"]["50"]
        q = largex_eval(OrderArg(0.0, 50.0), ScalingMode.UNSCALED)
        assert rel_err(q.k, float(ref["K0"])) < 1e-13
        assert rel_err(q.kp, float(ref["mK1"])) < 1e-13
        assert rel_err(q.l, float(ref["I0"])) < 1e-13
        assert rel_err(q.lp, float(ref["I1"])) < 1e-13

    def test_leading_term_structure(self):
        # at a=0, x=50 the sum is 1 + O(1/(2x))
        q = largex_eval(OrderArg(0.0, 50.0), ScalingMode.UNSCALED)
        lead = math.sqrt(0.5 * math.pi / 50.0) * math.exp(-50.0)
        assert abs(q.k / lead - 1.0) < 1.0 / 50.0

    @pytest.mark.parametrize("a,x", [(1.0, 25.0), (5.0, 20.0), (12.0, 60.0)])
    def test_vs_oracle_pins(self, a, x, pins):
        ref = next(r for r in pins["general"]
                   if float(r["a"]) == a and float(r["x"]) == x)
        kl = [float(v) for v in ref["kl"]]
        q = largex_eval(OrderArg(a, x), ScalingMode.UNSCALED, rtol=1e-10)
        for got, exact in zip((q.k, q.kp, q.l, q.lp), kl):
            assert rel_err(got, exact) < 1e-11

    def test_L_through_a_tall_hump(self, pins):
        # a^2 > x: the alternating K sums cancel, but the positive-term L
        # series stays usable
        ref = next(r for r in pins["general"]
                   if float(r["a"]) == 60.0 and float(r["x"]) == 180.0)
        kl = [float(v) for v in ref["kl"]]
        q = largex_eval(OrderArg(60.0, 180.0), ScalingMode.UNSCALED,
                        rtol=1e-10)
        assert rel_err(q.l, kl[2]) < 1e-11
        assert rel_err(q.lp, kl[3]) < 1e-11

    def test_wronskian(self):
        for a, x in [(0.0, 40.0), (2.0, 25.0), (10.0, 60.0)]:
            q = largex_eval(OrderArg(a, x), ScalingMode.SCALED)
            assert abs(q.wronskian_residual(x)) < 1e-11

    def test_accuracy_loss_signalled(self):
        with pytest.raises(AccuracyLossError):
            largex_eval(OrderArg(3.0, 4.0), ScalingMode.SCALED)

    def _min_x(self, a, which, rtol=1e-13):
        x = 5.0
        while x < 400.0:
            try:
                largex_eval(OrderArg(a, x), ScalingMode.SCALED, rtol=rtol)
                return x
            except AccuracyLossError:
                x *= 1.05
        return x

    @pytest.mark.parametrize("a", [1.0, 5.0, 10.0])
    def test_L_usable_wider_than_K(self, a):
        # the positive-term L series tolerates smaller x than alternating K:
        # compare the achieved accuracy floor at the joint admission point
        import mpmath as mp
        mp.mp.dps = 40
        x = self._min_x(a, None)
        q = largex_eval(OrderArg(a, x), ScalingMode.UNSCALED, rtol=1e-13)
        K = float(mp.besselk(1j * mp.mpf(a), mp.mpf(x)).real)
        L = float(((mp.besseli(-1j * mp.mpf(a), mp.mpf(x))
                    + mp.besseli(1j * mp.mpf(a), mp.mpf(x))) / 2).real)
        # at the admission boundary both are near the floor; L strictly better
        assert rel_err(q.l, L) <= rel_err(q.k, K) * 1.5 + 1e-15
