import math

import mpmath as mp
import pytest

from imbessel.core import Family, OrderArg, ScalingMode, scale_factor_log
from imbessel.errors import OutOfValidityError
from imbessel.uniform import (coeff_sums, default_tables, phi_chi,
                              turning_vars, uniform_eval, zeta_of_z)

from conftest import rel_err

CBRT2 = 2.0 ** (1.0 / 3.0)


def _zeta_oracle(z):
    mp.mp.dps = 40
    zm = mp.mpf(z)
    if zm == 1:
        return 0.0
    if zm < 1:
        w = mp.sqrt(1 - zm * zm)
        return float(mp.power(1.5 * (mp.log((1 + w) / zm) - w), mp.mpf(2) / 3))
    w = mp.sqrt(zm * zm - 1)
    return float(-mp.power(1.5 * (w - mp.acos(1 / zm)), mp.mpf(2) / 3))


class TestZeta:
    def test_turning_point(self):
        assert zeta_of_z(1.0) == 0.0

    def test_branch_pins(self):
        assert rel_err(zeta_of_z(0.5), 0.7705518364338153) < 1e-14
        assert rel_err(zeta_of_z(2.0), -1.0181048885671158) < 1e-14

    @pytest.mark.parametrize("z", [0.3, 0.74, 0.76, 0.9, 0.999, 1.0001, 1.1,
                                   1.24, 1.26, 2.5, 10.0])
    def test_vs_oracle_both_sides_of_series_switch(self, z):
        assert rel_err(zeta_of_z(z), _zeta_oracle(z)) < 3e-15

    def test_monotone_decreasing(self):
        zs = [0.2, 0.5, 0.9, 0.99, 1.0, 1.01, 1.5, 3.0]
        vals = [zeta_of_z(z) for z in zs]
        assert all(u > v for u, v in zip(vals, vals[1:]))


class TestPhiChi:
    def test_phi_at_turning(self):
        phi, chi = phi_chi(1.0, 0.0)
        assert rel_err(phi, CBRT2) < 1e-15

    def test_phi_closed_form_z_half(self):
        zeta = zeta_of_z(0.5)
        phi, _ = phi_chi(0.5, zeta)
        assert rel_err(phi, (4.0 * zeta / 0.75) ** 0.25) < 1e-14

    def test_phi_decays_at_large_z(self):
        z = 600.0
        phi, _ = phi_chi(z, zeta_of_z(z))
        approx = (4.0 * (1.5 * z) ** (2.0 / 3.0) / (z * z)) ** 0.25
        assert abs(phi / approx - 1.0) < 0.01

    @pytest.mark.parametrize("z", [0.6, 0.64, 1.42, 1.47])
    def test_table_matches_closed_form_at_seam(self, z):
        # the table/closed-form switch is at |eta| = 0.8
        zeta = zeta_of_z(z)
        eta = zeta / CBRT2
        tab = default_tables()
        phi_t, chi_t = phi_chi(z, zeta)
        if z < 1:
            omz2 = (1 - z) * (1 + z)
            phi_c = (4 * zeta / omz2) ** 0.25
            chi_c = 0.25 / zeta - z * z * math.sqrt(zeta) / (2 * omz2 ** 1.5)
        else:
            zm = -zeta
            z2m1 = (z - 1) * (z + 1)
            phi_c = (4 * zm / z2m1) ** 0.25
            chi_c = -0.25 / zm + z * z * math.sqrt(zm) / (2 * z2m1 ** 1.5)
        assert rel_err(phi_t, phi_c) < 5e-15
        assert rel_err(chi_t, chi_c) < 5e-14


class TestCoeffTables:
    def test_product_identity_across_band(self):
        # F P - G Q/a^2 = 1 at a = 100 across the table radius
        tab = default_tables()
        for eta in (-1.2, -0.9, -0.5, -0.1, 0.0, 0.3, 0.8, 1.2):
            fv, gv, pv, qv = coeff_sums(100.0, eta, tab)
            assert abs(fv * pv - gv * qv / 1e4 - 1.0) <= 1e-12

    def test_identity_decay_rate(self):
        # four retained terms leave an a^{-8} defect; measure where it is
        # still above the double-rounding floor (~1e-16)
        tab = default_tables()
        resid = {}
        for a in (6.0, 8.0, 12.0, 16.0):
            resid[a] = max(
                abs(cs[0] * cs[2] - cs[1] * cs[3] / (a * a) - 1.0)
                for cs in (coeff_sums(a, eta, tab)
                           for eta in (-1.0, -0.4, 0.2, 0.9)))
        for a1, a2 in ((6.0, 8.0), (8.0, 12.0), (12.0, 16.0)):
            expect = (a2 / a1) ** 8
            assert expect / 4.0 <= resid[a1] / resid[a2] <= expect * 4.0

    def test_ces_relations_at_eta(self):
        # c_s = a_s + chi b_{s-1} + b'_{s-1}; d_s = -chi a_s - a_s' - zeta b_s
        # checked as values via numerical differentiation of the tables
        tab = default_tables()
        h = 1e-6

        def hv(coef, eta):
            acc = 0.0
            for c in reversed(coef):
                acc = acc * eta + c
            return acc

        for eta in (-0.6, 0.0, 0.7):
            zeta = CBRT2 * eta
            chi = hv(tab.chi, eta)
            for s in (1, 2, 3):
                bprev = hv(tab.b_s[s - 1], eta)
                dbprev = ((hv(tab.b_s[s - 1], eta + h)
                           - hv(tab.b_s[s - 1], eta - h)) / (2 * h) / CBRT2)
                cs = hv(tab.a_s[s], eta) + chi * bprev + dbprev
                assert rel_err(hv(tab.c_s[s], eta), cs) < 1e-8
            for s in (0, 1, 2):
                da = ((hv(tab.a_s[s], eta + h)
                       - hv(tab.a_s[s], eta - h)) / (2 * h) / CBRT2)
                ds = (-chi * hv(tab.a_s[s], eta) - da
                      - zeta * hv(tab.b_s[s], eta))
                assert rel_err(hv(tab.d_s[s], eta), ds) < 1e-7


class TestUniformEval:
    def _oracle_scaled(self, a, x):
        mp.mp.dps = 50
        am, xm = mp.mpf(a), mp.mpf(x)
        if xm >= am:
            s = mp.sqrt(xm * xm - am * am) + am * mp.asin(am / xm)
        else:
            s = am * mp.pi / 2
        es = mp.exp(s)
        k = (mp.besselk(1j * am, xm) * es).real
        kp = (mp.diff(lambda t: mp.besselk(1j * am, t), xm) * es).real
        lf = lambda t: ((mp.besseli(-1j * am, t) + mp.besseli(1j * am, t)) / 2)
        l = (lf(xm) / es).real
        lp = (mp.diff(lf, xm) / es).real
        return float(k), float(kp), float(l), float(lp)

    @pytest.mark.parametrize("a,z", [(25.0, 1.0), (30.0, 0.85), (30.0, 1.18),
                                     (100.0, 0.55), (100.0, 1.0),
                                     (100.0, 2.2), (1000.0, 0.6),
                                     (1000.0, 2.0)])
    def test_vs_oracle(self, a, z):
        x = a * z
        q = uniform_eval(OrderArg(a, x), ScalingMode.SCALED)
        exact = self._oracle_scaled(a, x)
        for got, ex in zip((q.k, q.kp, q.l, q.lp), exact):
            assert rel_err(got, ex) < 2e-12

    def test_turning_point_structure(self):
        # at z = 1 the value is pi phi(0) a^{-1/3} [Ai(0) F + a^{-4/3} Ai'(0) G]
        a = 100.0
        q = uniform_eval(OrderArg(a, a), ScalingMode.SCALED)
        tab = default_tables()
        fv, gv, _, _ = coeff_sums(a, 0.0, tab)
        expect = (math.pi * CBRT2 / a ** (1 / 3)
                  * (0.3550280538878172 * fv
                     - 0.2588194037928068 * gv / a ** (4 / 3)))
        assert rel_err(q.k, expect) < 1e-13

    def test_wronskian(self):
        for a, z in [(25.0, 0.8), (40.0, 1.0), (300.0, 1.3)]:
            q = uniform_eval(OrderArg(a, a * z), ScalingMode.SCALED)
            assert abs(q.wronskian_residual(a * z)) < 1e-11

    def test_validity_refusals(self):
        with pytest.raises(OutOfValidityError):
            uniform_eval(OrderArg(10.0, 10.0), ScalingMode.SCALED)
        with pytest.raises(OutOfValidityError):
            uniform_eval(OrderArg(100.0, 500.0), ScalingMode.SCALED)

    def test_unscaled_consistency(self):
        p = OrderArg(30.0, 33.0)
        qs = uniform_eval(p, ScalingMode.SCALED)
        qu = uniform_eval(p, ScalingMode.UNSCALED)
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        assert rel_err(qu.k, qs.k * f) < 1e-15
        assert rel_err(qu.l, qs.l / f) < 1e-15

    def test_turning_vars_record(self):
        tv = turning_vars(OrderArg(50.0, 50.0))
        assert tv.z == 1.0 and tv.zeta == 0.0 and tv.eta == 0.0
        assert rel_err(tv.phi, CBRT2) < 1e-15
