"""Pure-Python hot kernels.

This module is the reference implementation of the numerical inner loops:
stable elementary kernels, the power-series summation, the continued
fraction for K, the Airy evaluator and the fused steepest-descent
quadratures.  A compiled twin (`_kernels_cy`) exposes the same surface and
is preferred at import time; see `_backend`.
"""

from __future__ import annotations

import math

import numpy as np

from .quadrature import _de_sum, finite_map_vec, semiinfinite_map_vec

BACKEND = "python"

_EXP_NEG_CUT = 745.0           # exp(-x) underflows to 0 beyond this

# ---------------------------------------------------------------------------
# stable elementary kernels
# ---------------------------------------------------------------------------

# sinh t - t = sum 2n t^(2n+1)/(2n+1)!? no: sum t^(2n+1)/(2n+1)!, n>=1
_SINHM_COEF = tuple(1.0 / math.factorial(2 * n + 1) for n in range(1, 12))
# t cosh t - sinh t = sum 2n t^(2n+1)/(2n+1)!, n>=1
_TCOSH_COEF = tuple(2.0 * n / math.factorial(2 * n + 1) for n in range(1, 12))


def _odd_series(t, coef):
    t2 = t * t
    acc = 0.0
    for c in reversed(coef):
        acc = acc * t2 + c
    return acc * t2 * t


def coshm1(t):
    """cosh(t) - 1, accurate near t = 0."""
    s = math.sinh(0.5 * t)
    return 2.0 * s * s


def sinhm(t):
    """sinh(t) - t, accurate near t = 0."""
    if abs(t) < 1.5:
        return _odd_series(t, _SINHM_COEF)
    return math.sinh(t) - t


def one_minus_t2_over_sinh2(t):
    """1 - t^2/sinh(t)^2 without cancellation; 0 at t = 0."""
    if abs(t) < 1e-100:          # t*t would underflow inside the quotient
        return t * t / 3.0
    if abs(t) > 350.0:
        return 1.0
    s = math.sinh(t)
    return sinhm(t) * (s + t) / (s * s)


def coth_minus_inv(t):
    """coth(t) - 1/t, accurate near t = 0 (limit 0)."""
    if abs(t) < 1e-100:
        return t / 3.0
    if abs(t) < 1.0:
        return _odd_series(t, _TCOSH_COEF) / (t * math.sinh(t))
    if abs(t) > 20.0:
        return 1.0 / math.tanh(t) - 1.0 / t
    return (t * math.cosh(t) - math.sinh(t)) / (t * math.sinh(t))


def h_factor(t):
    """cosh(t)/t - 1/sinh(t)  (== sinh(2t)/2 - t, over t sinh t)."""
    if t < 1e-100:
        return 2.0 * t / 3.0
    if t > 20.0:
        return math.cosh(t) / t - 1.0 / math.sinh(t)
    return 0.5 * sinhm(2.0 * t) / (t * math.sinh(t))


def sinc(u):
    if u == 0.0:
        return 1.0
    return math.sin(u) / u


# ---------------------------------------------------------------------------
# power series around x = 0
# ---------------------------------------------------------------------------

def series_sums(a, x, w, eps, kmax):
    """Forward-recurrence summation of the four series around x = 0.

    ``w`` is sigma0(a)/a - ln(x/2) so the trig argument is u = a*w.  Returns
    the raw sums (K, K', L, L' up to their prefactors), the number of terms
    and a convergence flag.  The f/r coefficient pair obeys
    (k^2+a^2) r_k = (2k-1) r_{k-1} - r_{k-2} and is summed forward, which is
    stable because neither member is a minimal solution.
    """
    u = a * w
    cu = math.cos(u)
    su = math.sin(u)
    a2 = a * a
    f0 = w * sinc(u)
    r0 = cu
    r1 = (cu - a * su) / (1.0 + a2)
    f1 = (f0 + cu) / (1.0 + a2)

    q = 0.25 * x * x          # c_{k+1} = c_k * q/(k+1)
    sk = f0
    skp = -0.5 * r0
    sl = r0
    slp = 0.5 * a2 * f0
    c = q                      # c_1
    sk += f1 * c
    skp += (f1 - 0.5 * r1) * c
    sl += r1 * c
    slp += (r1 + 0.5 * a2 * f1) * c

    fm2, fm1 = f0, f1
    rm2, rm1 = r0, r1
    ok = 0
    nok = 0
    k = 1
    while k < kmax:
        k += 1
        c *= q / k
        den = k * k + a2
        fk = ((2 * k - 1) * fm1 - fm2) / den
        rk = ((2 * k - 1) * rm1 - rm2) / den
        tk = fk * c
        tkp = (k * fk - 0.5 * rk) * c
        tl = rk * c
        tlp = (k * rk + 0.5 * a2 * fk) * c
        sk += tk
        skp += tkp
        sl += tl
        slp += tlp
        fm2, fm1 = fm1, fk
        rm2, rm1 = rm1, rk
        if (abs(tk) <= eps * abs(sk) and abs(tkp) <= eps * abs(skp)
                and abs(tl) <= eps * abs(sl) and abs(tlp) <= eps * abs(slp)):
            nok += 1
            if nok >= 3:
                ok = 1
                break
        else:
            nok = 0
    return sk, skp, sl, slp, k, ok


# ---------------------------------------------------------------------------
# continued fraction (Steed/Temme scheme) for K_mu, real mu^2
# ---------------------------------------------------------------------------

def cf2_kernel(mu2, x, tol, maxit):
    """Continued fraction with Temme normalization for K_mu(x).

    Returns (khat, h, iters, ok) with K_mu(x) = sqrt(pi/(2x)) e^{-x} khat and
    K_{mu+1}(x) = K_mu(x) (mu + x + 1/2 - h)/x.  Only mu^2 enters, so purely
    imaginary orders mu = ia run in real arithmetic (mu2 = -a^2).
    """
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    delh = d
    h = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25 - mu2
    q = a1
    c = a1
    aa = -a1
    s = 1.0 + q * delh
    i = 1
    ok = 0
    while i < maxit:
        i += 1
        aa -= 2.0 * (i - 1)
        c = -aa * c / i
        qnew = (q1 - b * q2) / aa
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + aa * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels) <= tol * abs(s):
            ok = 1
            break
    return 1.0 / s, a1 * h, i, ok


# ---------------------------------------------------------------------------
# Airy functions (extended precision internally)
# ---------------------------------------------------------------------------

_L = np.longdouble
_AI0 = _L("0.35502805388781723926")      # Ai(0) = 3^(-2/3)/Gamma(2/3)
_AIP0 = _L("0.25881940379280679840")     # -Ai'(0) = 3^(-1/3)/Gamma(1/3)
_SQRT3 = _L("1.7320508075688772935")
_INV_2SQRTPI = _L("0.28209479177387814347")
_INV_SQRTPI = _L("0.56418958354775628695")
_PI_4 = _L("0.78539816339744830962")

_MACLAURIN_CUT = 4.0        # |t| where the direct Maclaurin series stops
_AI_POS_CUT = 3.2           # above this, positive-t Ai cancels too much
_ASYM_CUT = 9.3             # |t| where the asymptotic expansions take over
_MARCH_STEP = 0.5
_MARCH_ORDER = 26

# Asymptotic coefficient families u_k, v_k (DLMF 9.7.2).
_NUV = 40
_U_COEF = [_L(1)]
for _k in range(1, _NUV):
    _U_COEF.append(_U_COEF[-1] * _L((6 * _k - 5) * (6 * _k - 3) * (6 * _k - 1))
                   / (_L(_k) * 216) / _L(2 * _k - 1))
_V_COEF = [_U_COEF[_k] * _L(6 * _k + 1) / _L(1 - 6 * _k) for _k in range(_NUV)]


def _airy_maclaurin(t):
    """f, f', g, g' of the Maclaurin pair: Ai = c1 f - c2 g, Bi = sqrt3(c1 f + c2 g)."""
    if t == 0:
        return _L(1), _L(0), _L(0), _L(1)
    t3 = t * t * t
    f = _L(1)
    fp = _L(0)
    g = t
    gp = _L(1)
    af = _L(1)
    ag = t
    k = 0
    while k < 60:
        k += 1
        af = af * t3 / _L((3 * k - 1) * (3 * k))
        f += af
        fp += af * (3 * k) / t
        ag = ag * t3 / _L((3 * k) * (3 * k + 1))
        g += ag
        gp += ag * (3 * k + 1) / t
        if abs(af) < 1e-25 * abs(f) and abs(ag) < 1e-25 * abs(g):
            break
    return f, fp, g, gp


def _airy_asym_pos(t):
    """Scaled Ai,Bi at t >= _ASYM_CUT: returns (eai, eaip, ebi, ebip, xi)."""
    xi = _L(2) / 3 * t * np.sqrt(t)
    z = 1 / xi
    sa = _L(0)
    sap = _L(0)
    sb = _L(0)
    sbp = _L(0)
    zk = _L(1)
    prev = np.inf
    for k in range(_NUV):
        ua = _U_COEF[k] * zk
        if abs(ua) > prev:       # divergent tail reached: stop at the minimum
            break
        prev = abs(ua)
        va = _V_COEF[k] * zk
        if k % 2 == 0:
            sa += ua
            sap += va
        else:
            sa -= ua
            sap -= va
        sb += ua
        sbp += va
        zk *= z
        if abs(ua) < _L(1e-25):
            break
    t14 = np.sqrt(np.sqrt(t))
    eai = _INV_2SQRTPI / t14 * sa
    eaip = -_INV_2SQRTPI * t14 * sap
    ebi = _INV_SQRTPI / t14 * sb
    ebip = _INV_SQRTPI * t14 * sbp
    return eai, eaip, ebi, ebip, xi


def _airy_asym_neg(t):
    """Unscaled Ai,Bi for t <= -_ASYM_CUT (oscillatory side)."""
    s = -t
    xi = _L(2) / 3 * s * np.sqrt(s)
    z = 1 / (xi * xi)
    pe = _L(0)
    po = _L(0)
    re = _L(0)
    ro = _L(0)
    zk = _L(1)
    prev = np.inf
    for k in range(0, _NUV - 1, 2):
        j = k // 2
        ua = _U_COEF[k] * zk
        if abs(ua) > prev:
            break
        prev = abs(ua)
        sign = _L(1) if j % 2 == 0 else _L(-1)
        pe += sign * ua
        re += sign * _V_COEF[k] * zk
        po += sign * _U_COEF[k + 1] * zk
        ro += sign * _V_COEF[k + 1] * zk
        zk *= z
        if abs(ua) < _L(1e-25):
            break
    po /= xi
    ro /= xi
    w = xi - _PI_4
    cw = np.cos(w)
    sw = np.sin(w)
    t14 = np.sqrt(np.sqrt(s))
    ai = _INV_SQRTPI / t14 * (cw * pe + sw * po)
    aip = _INV_SQRTPI * t14 * (sw * re - cw * ro)
    bi = _INV_SQRTPI / t14 * (-sw * pe + cw * po)
    bip = _INV_SQRTPI * t14 * (cw * re + sw * ro)
    return ai, aip, bi, bip


def _taylor_step(t0, y, yp, h):
    """One Taylor step for y'' = t y from t0 to t0 + h."""
    c_nm1 = y
    c_n = yp
    acc = y + yp * h
    accp = yp
    hp = h
    prev = _L(0)
    for n in range(2, _MARCH_ORDER):
        c_np1 = (t0 * c_nm1 + prev) / _L(n * (n - 1))
        # c_{n} built from y'' = (t0 + s) y  =>  n(n-1)c_n = t0 c_{n-2} + c_{n-3}
        prev = c_nm1
        c_nm1 = c_n
        c_n = c_np1
        acc += c_n * hp * h
        accp += c_n * _L(n) * hp
        hp *= h
    return acc, accp


def _march(t_from, t_to, y, yp):
    n = max(1, int(math.ceil(abs(float(t_to - t_from)) / _MARCH_STEP)))
    h = (t_to - t_from) / _L(n)
    t = t_from
    for _ in range(n):
        y, yp = _taylor_step(t, y, yp, h)
        t += h
    return y, yp


def airy_quad_scaled(td):
    """Scaled Airy quadruple at a double t.

    Returns (eai, eaip, ebi, ebip, xi) as doubles where for t > 0 the Ai
    family carries e^{+xi} and the Bi family e^{-xi}, xi = (2/3) t^(3/2);
    for t <= 0 the values are unscaled and xi = 0.
    """
    t = _L(td)
    if td >= 0.0:
        if td >= _ASYM_CUT:
            eai, eaip, ebi, ebip, xi = _airy_asym_pos(t)
            return float(eai), float(eaip), float(ebi), float(ebip), float(xi)
        xi = _L(2) / 3 * t * np.sqrt(t)
        exi = np.exp(xi)
        f, fp, g, gp = _airy_maclaurin(t)
        bi = _SQRT3 * (_AI0 * f + _AIP0 * g)
        bip = _SQRT3 * (_AI0 * fp + _AIP0 * gp)
        if td <= _AI_POS_CUT:
            ai = _AI0 * f - _AIP0 * g
            aip = _AI0 * fp - _AIP0 * gp
        else:
            s0 = _L(_ASYM_CUT)
            eai0, eaip0, _, _, xi0 = _airy_asym_pos(s0)
            exi0 = np.exp(-xi0)
            ai, aip = _march(s0, t, eai0 * exi0, eaip0 * exi0)
        return float(ai * exi), float(aip * exi), float(bi / exi), float(bip / exi), float(xi)
    if td <= -_ASYM_CUT:
        ai, aip, bi, bip = _airy_asym_neg(t)
    elif td >= -_MACLAURIN_CUT:
        f, fp, g, gp = _airy_maclaurin(t)
        ai = _AI0 * f - _AIP0 * g
        aip = _AI0 * fp - _AIP0 * gp
        bi = _SQRT3 * (_AI0 * f + _AIP0 * g)
        bip = _SQRT3 * (_AI0 * fp + _AIP0 * gp)
    else:
        t0 = _L(-_MACLAURIN_CUT)
        f, fp, g, gp = _airy_maclaurin(t0)
        ai, aip = _march(t0, t, _AI0 * f - _AIP0 * g, _AI0 * fp - _AIP0 * gp)
        bi, bip = _march(t0, t, _SQRT3 * (_AI0 * f + _AIP0 * g),
                         _SQRT3 * (_AI0 * fp + _AIP0 * gp))
    return float(ai), float(aip), float(bi), float(bip), 0.0


def airy_quad(td):
    """Unscaled Airy quadruple; the e^{-+xi} removal happens in extended
    precision so large-t values stay accurate to the double rounding."""
    if td <= 0.0:
        ai, aip, bi, bip, _ = airy_quad_scaled(td)
        return ai, aip, bi, bip
    t = _L(td)
    if td >= _ASYM_CUT:
        eai, eaip, ebi, ebip, xi = _airy_asym_pos(t)
    else:
        v = airy_quad_scaled(td)
        eai, eaip, ebi, ebip = (_L(v[0]), _L(v[1]), _L(v[2]), _L(v[3]))
        xi = _L(2) / 3 * t * np.sqrt(t)
    exi = np.exp(xi)
    return (float(eai / exi), float(eaip / exi),
            float(ebi * exi), float(ebip * exi))


# ---------------------------------------------------------------------------
# fused steepest-descent quadratures
# ---------------------------------------------------------------------------

def _mon_semi_terms(theta, x, sth, cth):
    """Integrand factory for the monotonic semi-infinite pass.

    Four fused sums: e^{-x Phi} * (1, K'-bracket, dsigma/dtau, h(tau)).
    """

    def f(tau):
        if tau > 700.0:
            return (0.0, 0.0, 0.0, 0.0)
        sht = math.sinh(tau)
        q = tau / sht if tau > 0.0 else 1.0
        ssig = sth * q
        csig = math.sqrt((1.0 - ssig) * (1.0 + ssig))
        r = one_minus_t2_over_sinh2(tau)
        sind = sth * r / (cth * q + csig)
        dd = math.asin(sind)
        sig = theta - dd
        cm1 = coshm1(tau)
        sd2 = math.sin(0.5 * dd)
        phi = cm1 * csig + (2.0 * sd2 * math.sin(0.5 * (theta + sig)) - dd * sth)
        xphi = x * phi
        if xphi > _EXP_NEG_CUT:
            return (0.0, 0.0, 0.0, 0.0)
        e = math.exp(-xphi)
        dsig = -(ssig / csig) * coth_minus_inv(tau)
        brk = cth + (cm1 + 2.0 * sd2 * sd2) / csig
        hh = ssig * h_factor(tau) if tau > 0.0 else 0.0
        return (e, e * brk, e * dsig, e * hh)

    return f


def _mon_fin_terms(theta, x, sth, cth):
    """sigma-integral pass: e^{x gamma(sigma)} * (1, cos sigma)."""

    def f(sig):
        g = math.cos(sig) - cth + (sig - theta) * sth
        xg = x * g
        if xg < -_EXP_NEG_CUT:
            return (0.0, 0.0)
        e = math.exp(xg)
        return (e, e * math.cos(sig))

    return f


def mon_quad(theta, x, tol):
    """Fused quadratures for the monotonic-region integral representations.

    Returns (ik, ikp, ils, ilps, ilf, ilpf, levels, evals, ok): the two
    semi-infinite K/K' integrals, the two semi-infinite L-correction
    integrals and the two finite sigma-integrals, plus diagnostics.
    """
    sth = math.sin(theta)
    cth = math.cos(theta)
    g1 = semiinfinite_map_vec(_mon_semi_terms(theta, x, sth, cth), 0.0, 4)
    (ik, ikp, ils, ilps), err1, lev1, ev1, ok1 = _de_sum(g1, 4, tol)

    g2 = finite_map_vec(_mon_fin_terms(theta, x, sth, cth), -theta - math.pi,
                        -theta + math.pi, 2)
    (ilf, ilpf), err2, lev2, ev2, ok2 = _de_sum(g2, 2, tol)
    return (ik, ikp, ils, ilps, ilf, ilpf, max(lev1, lev2), ev1 + ev2,
            1 if (ok1 and ok2) else 0)


def osc_path_vars(mu, x, a, tau, cmu, smu):
    """Stable path quantities in the oscillatory region at tau >= tau0.

    Returns (ssig, csig, dsig, psi) where psi = x cosh(tau) cos(sigma)
    + a (sigma - pi/2) >= 0.  1 - sin(sigma) is built from coshm1/sinhm
    kernels so the sigma = pi/2 crossing at tau = mu stays fully accurate.
    """
    eps = tau - mu
    sht = math.sinh(tau)
    cht = math.cosh(tau)
    if eps == 0.0:
        return 1.0, 0.0, -1.0, 0.0
    dd = (smu * coshm1(eps) + cmu * sinhm(eps)) / sht
    if dd > 1.0:
        dd = 1.0
    ssig = 1.0 - dd
    csig = math.copysign(math.sqrt(dd * (2.0 - dd)), eps)
    num = dd * cht - 2.0 * math.sinh(0.5 * (tau + mu)) * math.sinh(0.5 * eps)
    dsig = num / (csig * sht)
    delta = 2.0 * math.asin(math.sqrt(0.5 * dd))
    psi = x * cht * csig - math.copysign(a * delta, eps)
    if psi < 0.0:
        psi = 0.0
    return ssig, csig, dsig, psi


def osc_invert(mu, cmu, smu, s, tau_seed, tau0):
    """Solve ((tau-mu) cosh mu + sinh mu) = s sinh(tau) for tau in (0, tau0].

    s = sin(sigma) <= 0 on the continued branch; F is convex with
    F' = cosh mu - s cosh tau > 0, so safeguarded Newton converges from any
    seed in the bracket.
    """
    tau = tau_seed
    if not 0.0 < tau <= tau0:
        tau = 0.5 * tau0
    for _ in range(80):
        fv = (tau - mu) * cmu + smu - s * math.sinh(tau)
        fp = cmu - s * math.cosh(tau)
        dt = fv / fp
        tau -= dt
        if tau <= 0.0:
            tau = 0.5 * (tau + dt)     # back inside the bracket
        if abs(dt) <= 1e-16 * tau:
            break
    return tau


def _osc_semi_terms(mu, x, a, cchi, schi, cmu, smu, with_rho):
    """tau-integrand for the oscillatory region (plain or rho-weighted)."""
    api = a * math.pi

    def f(tau):
        if tau > 300.0:
            return (0.0, 0.0, 0.0, 0.0)
        ssig, csig, dsig, psi = osc_path_vars(mu, x, a, tau, cmu, smu)
        if psi > _EXP_NEG_CUT:
            return (0.0, 0.0, 0.0, 0.0)
        e = math.exp(-psi)
        cht = math.cosh(tau)
        sht = math.sinh(tau)
        av = -cht * csig + sht * ssig * dsig
        cv = -sht * ssig - cht * csig * dsig
        if with_rho:
            rho2 = 2.0 * (api - psi)
            e2 = math.exp(-rho2) if rho2 < _EXP_NEG_CUT else 0.0
            wm = 1.0 - e2
            wp = 1.0 + e2
        else:
            wm = 1.0
            wp = 1.0
        return (e * (cchi * wm + schi * wp * dsig),
                e * (cchi * wp * av + schi * wm * cv),
                e * (schi * wm - cchi * wp * dsig),
                e * (schi * wp * av - cchi * wm * cv))

    return f


def _osc_sig_terms(mu, x, a, cchi, schi, cmu, smu, tau0):
    """sigma-integrand for the third oscillatory pass, sigma in (pi, 3pi/2)."""
    three_half_pi = 1.5 * math.pi
    half_pi = 0.5 * math.pi
    state = {"tau": tau0 * 0.98}

    def f(sig):
        s = math.sin(sig)
        c = math.cos(sig)
        tau = osc_invert(mu, cmu, smu, s, state["tau"], tau0)
        state["tau"] = tau
        sht = math.sinh(tau)
        cht = math.cosh(tau)
        tp = c * sht / (cmu - s * cht)
        rho = a * (three_half_pi - sig) - x * cht * c
        psi = a * (sig - half_pi) + x * cht * c
        if psi > _EXP_NEG_CUT:
            return (0.0, 0.0, 0.0, 0.0)
        e = math.exp(-psi)
        rho2 = 2.0 * rho
        e2 = math.exp(-rho2) if rho2 < _EXP_NEG_CUT else 0.0
        wm = 1.0 - e2
        wp = 1.0 + e2
        bv = -cht * c * tp + sht * s
        dv = -sht * s * tp - cht * c
        return (e * (cchi * wm * tp + schi * wp),
                e * (cchi * wp * bv + schi * wm * dv),
                e * (schi * wm * tp - cchi * wp),
                e * (schi * wp * bv - cchi * wm * dv))

    return f


def osc_quad(mu, x, a, tol, simplified):
    """Fused quadratures for the oscillatory-region representations.

    Returns (p1, p2, p3, levels, evals, ok) where each p is a 4-tuple of raw
    integrals for (K, K', L, L').  In simplified mode p2 = p3 = zeros and p1
    starts at tau0 = mu - tanh(mu) instead of mu.
    """
    cmu = math.cosh(mu)
    smu = math.sinh(mu)
    chi = x * smu - a * mu
    cchi = math.cos(chi)
    schi = math.sin(chi)
    tau0 = mu - math.tanh(mu)
    zeros4 = (0.0, 0.0, 0.0, 0.0)

    lower = tau0 if simplified else mu
    g1 = semiinfinite_map_vec(
        _osc_semi_terms(mu, x, a, cchi, schi, cmu, smu, False), lower, 4)
    p1, err1, lev1, ev1, ok1 = _de_sum(g1, 4, tol)
    if simplified:
        return tuple(p1), zeros4, zeros4, lev1, ev1, 1 if ok1 else 0

    g2 = finite_map_vec(_osc_semi_terms(mu, x, a, cchi, schi, cmu, smu, True),
                        tau0, mu, 4)
    p2, err2, lev2, ev2, ok2 = _de_sum(g2, 4, tol)

    g3 = finite_map_vec(_osc_sig_terms(mu, x, a, cchi, schi, cmu, smu, tau0),
                        math.pi, 1.5 * math.pi, 4)
    p3, err3, lev3, ev3, ok3 = _de_sum(g3, 4, tol)
    return (tuple(p1), tuple(p2), tuple(p3), max(lev1, lev2, lev3),
            ev1 + ev2 + ev3, 1 if (ok1 and ok2 and ok3) else 0)
