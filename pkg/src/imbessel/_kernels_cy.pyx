# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernels_py: same surface, C inner loops.

The quadrature driver, path evaluations and special-function cores mirror
the pure-Python reference implementation; keep the two in lockstep.
"""

from libc.math cimport (asin, asinh, atan2, cos, cosh, exp, expm1, fabs,
                        hypot, log, sin, sinh, sqrt, tanh, copysign,
                        INFINITY, ceil)

cdef extern from "<math.h>" nogil:
    long double sqrtl(long double)
    long double expl(long double)
    long double sinl(long double)
    long double cosl(long double)
    long double fabsl(long double)

BACKEND = "cython"

cdef double _EXP_NEG_CUT = 745.0

# quadrature control, mirrored from quadrature.py
cdef double H0 = 0.5
cdef double T_CAP = 6.75
cdef int LEVELS_MAX = 10
cdef double EPS_TRUNC = 1e-18
cdef int N_CONSEC = 3
cdef double VALUE_FLOOR = 2.2250738585072014e-308
cdef double MIN_SCAN = 3.0
cdef double SIBLING_SCALE = 1e-2

cdef double PI = 3.141592653589793238462643383279503
cdef double LN2 = 0.6931471805599453094172321214581766


# ---------------------------------------------------------------------------
# stable elementary kernels
# ---------------------------------------------------------------------------

cdef double _SINHM_COEF[11]
cdef double _TCOSH_COEF[11]

def _init_small_series():
    import math as _m
    for n in range(1, 12):
        _SINHM_COEF[n - 1] = 1.0 / _m.factorial(2 * n + 1)
        _TCOSH_COEF[n - 1] = 2.0 * n / _m.factorial(2 * n + 1)

_init_small_series()


cdef inline double _odd_series(double t, double* coef) nogil:
    cdef double t2 = t * t
    cdef double acc = 0.0
    cdef int i
    for i in range(10, -1, -1):
        acc = acc * t2 + coef[i]
    return acc * t2 * t


cdef inline double c_coshm1(double t) nogil:
    cdef double s = sinh(0.5 * t)
    return 2.0 * s * s


cdef inline double c_sinhm(double t) nogil:
    if fabs(t) < 1.5:
        return _odd_series(t, _SINHM_COEF)
    return sinh(t) - t


cdef inline double c_one_minus_t2_over_sinh2(double t) nogil:
    if fabs(t) < 1e-100:
        return t * t / 3.0
    if fabs(t) > 350.0:
        return 1.0
    cdef double s = sinh(t)
    return c_sinhm(t) * (s + t) / (s * s)


cdef inline double c_coth_minus_inv(double t) nogil:
    if fabs(t) < 1e-100:
        return t / 3.0
    if fabs(t) < 1.0:
        return _odd_series(t, _TCOSH_COEF) / (t * sinh(t))
    if fabs(t) > 20.0:
        return 1.0 / tanh(t) - 1.0 / t
    return (t * cosh(t) - sinh(t)) / (t * sinh(t))


cdef inline double c_h_factor(double t) nogil:
    if t < 1e-100:
        return 2.0 * t / 3.0
    if t > 20.0:
        return cosh(t) / t - 1.0 / sinh(t)
    return 0.5 * c_sinhm(2.0 * t) / (t * sinh(t))


cdef inline double c_sinc(double u) nogil:
    if u == 0.0:
        return 1.0
    return sin(u) / u


def coshm1(double t):
    """cosh(t) - 1, accurate near t = 0."""
    return c_coshm1(t)

def sinhm(double t):
    """sinh(t) - t, accurate near t = 0."""
    return c_sinhm(t)

def one_minus_t2_over_sinh2(double t):
    """1 - t^2/sinh(t)^2 without cancellation; 0 at t = 0."""
    return c_one_minus_t2_over_sinh2(t)

def coth_minus_inv(double t):
    """coth(t) - 1/t, accurate near t = 0 (limit 0)."""
    return c_coth_minus_inv(t)

def h_factor(double t):
    """cosh(t)/t - 1/sinh(t)."""
    return c_h_factor(t)

def sinc(double u):
    return c_sinc(u)


# ---------------------------------------------------------------------------
# power series around x = 0
# ---------------------------------------------------------------------------

def series_sums(double a, double x, double w, double eps, int kmax):
    """Forward-recurrence summation of the four series around x = 0."""
    cdef double u = a * w
    cdef double cu = cos(u)
    cdef double su = sin(u)
    cdef double a2 = a * a
    cdef double f0 = w * c_sinc(u)
    cdef double r0 = cu
    cdef double r1 = (cu - a * su) / (1.0 + a2)
    cdef double f1 = (f0 + cu) / (1.0 + a2)
    cdef double q = 0.25 * x * x
    cdef double sk = f0
    cdef double skp = -0.5 * r0
    cdef double sl = r0
    cdef double slp = 0.5 * a2 * f0
    cdef double c = q
    sk += f1 * c
    skp += (f1 - 0.5 * r1) * c
    sl += r1 * c
    slp += (r1 + 0.5 * a2 * f1) * c
    cdef double fm2 = f0, fm1 = f1, rm2 = r0, rm1 = r1
    cdef double den, fk, rk, tk, tkp, tl, tlp
    cdef int ok = 0, nok = 0, k = 1
    while k < kmax:
        k += 1
        c *= q / k
        den = (<double> k) * k + a2
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
        fm2 = fm1; fm1 = fk
        rm2 = rm1; rm1 = rk
        if (fabs(tk) <= eps * fabs(sk) and fabs(tkp) <= eps * fabs(skp)
                and fabs(tl) <= eps * fabs(sl) and fabs(tlp) <= eps * fabs(slp)):
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

def cf2_kernel(double mu2, double x, double tol, int maxit):
    """(khat, h, iters, ok): K_mu(x) = sqrt(pi/2x) e^{-x} khat."""
    cdef double b = 2.0 * (1.0 + x)
    cdef double d = 1.0 / b
    cdef double delh = d
    cdef double h = d
    cdef double q1 = 0.0, q2 = 1.0
    cdef double a1 = 0.25 - mu2
    cdef double q = a1, c = a1, aa = -a1
    cdef double s = 1.0 + q * delh
    cdef double qnew, dels
    cdef int i = 1, ok = 0
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
        if fabs(dels) <= tol * fabs(s):
            ok = 1
            break
    return 1.0 / s, a1 * h, i, ok


# ---------------------------------------------------------------------------
# Airy functions in C long double
# ---------------------------------------------------------------------------

# extended-precision constants as hi+lo double splits
cdef long double _AI0 = (<long double> 0.3550280538878172
                         + <long double> 2.05233632436212e-17)
cdef long double _AIP0 = (<long double> 0.2588194037928068
                          + <long double> -2.522243111610832e-17)
cdef long double _SQRT3 = (<long double> 1.7320508075688772
                           + <long double> 1.0035084221806903e-16)
cdef long double _INV_2SQRTPI = (<long double> 0.28209479177387814
                                 + <long double> 3.83386490329147e-18)
cdef long double _INV_SQRTPI = (<long double> 0.5641895835477563
                                + <long double> 7.66772980658294e-18)
cdef long double _PI_4 = (<long double> 0.7853981633974483
                          + <long double> 3.061616997868383e-17)
cdef long double _TWO_THIRDS = (<long double> 2.0) / (<long double> 3.0)
cdef long double _TINY_L = 1e-25

cdef double _MACLAURIN_CUT = 4.0
cdef double _AI_POS_CUT = 3.2
cdef double _ASYM_CUT = 9.3
cdef double _MARCH_STEP = 0.5
cdef int _MARCH_ORDER = 26

cdef int _NUV = 40
cdef long double _U_COEF[40]
cdef long double _V_COEF[40]

def _init_uv():
    cdef int k
    _U_COEF[0] = 1.0
    for k in range(1, 40):
        _U_COEF[k] = (_U_COEF[k - 1]
                      * (6 * k - 5) * (6 * k - 3) * (6 * k - 1)
                      / (<long double> k * 216) / (2 * k - 1))
    for k in range(40):
        _V_COEF[k] = _U_COEF[k] * (6 * k + 1) / (<long double> (1 - 6 * k))

_init_uv()


cdef void _airy_maclaurin(long double t, long double* out) nogil:
    # out = f, f', g, g'
    cdef long double t3, f, fp, g, gp, af, ag
    cdef int k
    if t == 0.0:
        out[0] = 1.0; out[1] = 0.0; out[2] = 0.0; out[3] = 1.0
        return
    t3 = t * t * t
    f = 1.0; fp = 0.0
    g = t; gp = 1.0
    af = 1.0; ag = t
    for k in range(1, 61):
        af = af * t3 / ((3 * k - 1) * (3 * k))
        f += af
        fp += af * (3 * k) / t
        ag = ag * t3 / ((3 * k) * (3 * k + 1))
        g += ag
        gp += ag * (3 * k + 1) / t
        if fabsl(af) < _TINY_L * fabsl(f) and fabsl(ag) < _TINY_L * fabsl(g):
            break
    out[0] = f; out[1] = fp; out[2] = g; out[3] = gp


cdef long double _airy_asym_pos(long double t, long double* out) nogil:
    # out = eai, eaip, ebi, ebip; returns xi
    cdef long double xi = _TWO_THIRDS * t * sqrtl(t)
    cdef long double z = (<long double> 1.0) / xi
    cdef long double sa = 0.0, sap = 0.0, sb = 0.0, sbp = 0.0
    cdef long double zk = 1.0
    cdef long double ua, va
    cdef long double prev = INFINITY
    cdef int k
    for k in range(_NUV):
        ua = _U_COEF[k] * zk
        if fabsl(ua) > prev:
            break
        prev = fabsl(ua)
        va = _V_COEF[k] * zk
        if k % 2 == 0:
            sa += ua; sap += va
        else:
            sa -= ua; sap -= va
        sb += ua; sbp += va
        zk *= z
        if fabsl(ua) < _TINY_L:
            break
    cdef long double t14 = sqrtl(sqrtl(t))
    out[0] = _INV_2SQRTPI / t14 * sa
    out[1] = -_INV_2SQRTPI * t14 * sap
    out[2] = _INV_SQRTPI / t14 * sb
    out[3] = _INV_SQRTPI * t14 * sbp
    return xi


cdef void _airy_asym_neg(long double t, long double* out) nogil:
    cdef long double s = -t
    cdef long double xi = _TWO_THIRDS * s * sqrtl(s)
    cdef long double z = (<long double> 1.0) / (xi * xi)
    cdef long double pe = 0.0, po = 0.0, re = 0.0, ro = 0.0
    cdef long double zk = 1.0
    cdef long double ua, sign
    cdef long double prev = INFINITY
    cdef int k, j
    for k in range(0, _NUV - 1, 2):
        j = k // 2
        ua = _U_COEF[k] * zk
        if fabsl(ua) > prev:
            break
        prev = fabsl(ua)
        sign = 1.0 if j % 2 == 0 else -1.0
        pe += sign * ua
        re += sign * _V_COEF[k] * zk
        po += sign * _U_COEF[k + 1] * zk
        ro += sign * _V_COEF[k + 1] * zk
        zk *= z
        if fabsl(ua) < _TINY_L:
            break
    po /= xi
    ro /= xi
    cdef long double w = xi - _PI_4
    cdef long double cw = cosl(w)
    cdef long double sw = sinl(w)
    cdef long double t14 = sqrtl(sqrtl(s))
    out[0] = _INV_SQRTPI / t14 * (cw * pe + sw * po)
    out[1] = _INV_SQRTPI * t14 * (sw * re - cw * ro)
    out[2] = _INV_SQRTPI / t14 * (-sw * pe + cw * po)
    out[3] = _INV_SQRTPI * t14 * (cw * re + sw * ro)


cdef void _taylor_step(long double t0, long double* y, long double* yp,
                       long double h) nogil:
    cdef long double c_nm1 = y[0]
    cdef long double c_n = yp[0]
    cdef long double acc = y[0] + yp[0] * h
    cdef long double accp = yp[0]
    cdef long double hp = h
    cdef long double prev = 0.0
    cdef long double c_np1
    cdef int n
    for n in range(2, _MARCH_ORDER):
        c_np1 = (t0 * c_nm1 + prev) / (n * (n - 1))
        prev = c_nm1
        c_nm1 = c_n
        c_n = c_np1
        acc += c_n * hp * h
        accp += c_n * n * hp
        hp *= h
    y[0] = acc
    yp[0] = accp


cdef void _march(long double t_from, long double t_to,
                 long double* y, long double* yp) nogil:
    cdef int n = <int> ceil(fabs(<double> (t_to - t_from)) / _MARCH_STEP)
    if n < 1:
        n = 1
    cdef long double h = (t_to - t_from) / n
    cdef long double t = t_from
    cdef int i
    for i in range(n):
        _taylor_step(t, y, yp, h)
        t += h


cdef long double _airy_core(double td, long double* out) nogil:
    # out = eai, eaip, ebi, ebip; returns xi (0 for td <= 0)
    cdef long double t = <long double> td
    cdef long double fg[4]
    cdef long double y, yp, xi, exi, ai, aip, bi, bip, xi0, exi0
    cdef long double pos[4]
    if td >= 0.0:
        if td >= _ASYM_CUT:
            return _airy_asym_pos(t, out)
        xi = _TWO_THIRDS * t * sqrtl(t)
        exi = expl(xi)
        _airy_maclaurin(t, fg)
        bi = _SQRT3 * (_AI0 * fg[0] + _AIP0 * fg[2])
        bip = _SQRT3 * (_AI0 * fg[1] + _AIP0 * fg[3])
        if td <= _AI_POS_CUT:
            ai = _AI0 * fg[0] - _AIP0 * fg[2]
            aip = _AI0 * fg[1] - _AIP0 * fg[3]
        else:
            xi0 = _airy_asym_pos(<long double> _ASYM_CUT, pos)
            exi0 = expl(-xi0)
            y = pos[0] * exi0
            yp = pos[1] * exi0
            _march(<long double> _ASYM_CUT, t, &y, &yp)
            ai = y
            aip = yp
        out[0] = ai * exi
        out[1] = aip * exi
        out[2] = bi / exi
        out[3] = bip / exi
        return xi
    if td <= -_ASYM_CUT:
        _airy_asym_neg(t, out)
        return 0.0
    if td >= -_MACLAURIN_CUT:
        _airy_maclaurin(t, fg)
        out[0] = _AI0 * fg[0] - _AIP0 * fg[2]
        out[1] = _AI0 * fg[1] - _AIP0 * fg[3]
        out[2] = _SQRT3 * (_AI0 * fg[0] + _AIP0 * fg[2])
        out[3] = _SQRT3 * (_AI0 * fg[1] + _AIP0 * fg[3])
        return 0.0
    _airy_maclaurin(<long double> (-_MACLAURIN_CUT), fg)
    y = _AI0 * fg[0] - _AIP0 * fg[2]
    yp = _AI0 * fg[1] - _AIP0 * fg[3]
    _march(<long double> (-_MACLAURIN_CUT), t, &y, &yp)
    out[0] = y
    out[1] = yp
    y = _SQRT3 * (_AI0 * fg[0] + _AIP0 * fg[2])
    yp = _SQRT3 * (_AI0 * fg[1] + _AIP0 * fg[3])
    _march(<long double> (-_MACLAURIN_CUT), t, &y, &yp)
    out[2] = y
    out[3] = yp
    return 0.0


def airy_quad_scaled(double td):
    """Scaled Airy quadruple (eai, eaip, ebi, ebip, xi) at a double t."""
    cdef long double out[4]
    cdef long double xi = _airy_core(td, out)
    return (<double> out[0], <double> out[1], <double> out[2],
            <double> out[3], <double> xi)


def airy_quad(double td):
    """Unscaled Airy quadruple; e^{-+xi} removed in extended precision."""
    cdef long double out[4]
    cdef long double xi, exi
    xi = _airy_core(td, out)
    if td <= 0.0:
        return (<double> out[0], <double> out[1], <double> out[2],
                <double> out[3])
    exi = expl(xi)
    return (<double> (out[0] / exi), <double> (out[1] / exi),
            <double> (out[2] * exi), <double> (out[3] * exi))


# ---------------------------------------------------------------------------
# oscillatory path helpers
# ---------------------------------------------------------------------------

cdef void _c_osc_path(double mu, double x, double a, double tau,
                      double cmu, double smu, double* out) nogil:
    # out = ssig, csig, dsig, psi
    cdef double eps = tau - mu
    cdef double sht = sinh(tau)
    cdef double cht = cosh(tau)
    cdef double dd, ssig, csig, num, dsig, delta, psi
    if eps == 0.0:
        out[0] = 1.0; out[1] = 0.0; out[2] = -1.0; out[3] = 0.0
        return
    dd = (smu * c_coshm1(eps) + cmu * c_sinhm(eps)) / sht
    if dd > 1.0:
        dd = 1.0
    ssig = 1.0 - dd
    csig = copysign(sqrt(dd * (2.0 - dd)), eps)
    num = dd * cht - 2.0 * sinh(0.5 * (tau + mu)) * sinh(0.5 * eps)
    dsig = num / (csig * sht)
    delta = 2.0 * asin(sqrt(0.5 * dd))
    psi = x * cht * csig - copysign(a * delta, eps)
    if psi < 0.0:
        psi = 0.0
    out[0] = ssig; out[1] = csig; out[2] = dsig; out[3] = psi


cdef double _c_osc_invert(double mu, double cmu, double smu, double s,
                          double tau_seed, double tau0) nogil:
    cdef double tau = tau_seed
    cdef double fv, fp, dt
    cdef int i
    if not (0.0 < tau <= tau0):
        tau = 0.5 * tau0
    for i in range(80):
        fv = (tau - mu) * cmu + smu - s * sinh(tau)
        fp = cmu - s * cosh(tau)
        dt = fv / fp
        tau -= dt
        if tau <= 0.0:
            tau = 0.5 * (tau + dt)
        if fabs(dt) <= 1e-16 * tau:
            break
    return tau


def osc_path_vars(double mu, double x, double a, double tau,
                  double cmu, double smu):
    """(ssig, csig, dsig, psi) on the oscillatory path at tau >= tau0."""
    cdef double out[4]
    _c_osc_path(mu, x, a, tau, cmu, smu, out)
    return out[0], out[1], out[2], out[3]


def osc_invert(double mu, double cmu, double smu, double s,
               double tau_seed, double tau0):
    """Solve ((tau-mu) cosh mu + sinh mu) = s sinh(tau) on (0, tau0]."""
    return _c_osc_invert(mu, cmu, smu, s, tau_seed, tau0)


# ---------------------------------------------------------------------------
# fused quadratures
# ---------------------------------------------------------------------------

cdef enum:
    K_MON_SEMI = 0
    K_MON_FIN = 1
    K_OSC_SEMI = 2
    K_OSC_FIN_TAU = 3
    K_OSC_FIN_SIG = 4

ctypedef struct QuadParams:
    double theta, x, sth, cth          # monotonic
    double mu, a, cchi, schi, cmu, smu, tau0, lower
    double sig_seed                    # Newton state of the sigma pass


cdef int _terms_mon_semi(QuadParams* P, double tau, double* out) nogil:
    cdef double sht, q, ssig, csig, r, sind, dd, sig, cm1, sd2, phi, xphi
    cdef double e, dsig, brk, hh
    if tau > 700.0:
        out[0] = out[1] = out[2] = out[3] = 0.0
        return 4
    sht = sinh(tau)
    q = tau / sht if tau > 0.0 else 1.0
    ssig = P.sth * q
    csig = sqrt((1.0 - ssig) * (1.0 + ssig))
    r = c_one_minus_t2_over_sinh2(tau)
    sind = P.sth * r / (P.cth * q + csig)
    dd = asin(sind)
    sig = P.theta - dd
    cm1 = c_coshm1(tau)
    sd2 = sin(0.5 * dd)
    phi = cm1 * csig + (2.0 * sd2 * sin(0.5 * (P.theta + sig)) - dd * P.sth)
    xphi = P.x * phi
    if xphi > _EXP_NEG_CUT:
        out[0] = out[1] = out[2] = out[3] = 0.0
        return 4
    e = exp(-xphi)
    dsig = -(ssig / csig) * c_coth_minus_inv(tau)
    brk = P.cth + (cm1 + 2.0 * sd2 * sd2) / csig
    hh = ssig * c_h_factor(tau) if tau > 0.0 else 0.0
    out[0] = e
    out[1] = e * brk
    out[2] = e * dsig
    out[3] = e * hh
    return 4


cdef int _terms_mon_fin(QuadParams* P, double sig, double* out) nogil:
    cdef double g = cos(sig) - P.cth + (sig - P.theta) * P.sth
    cdef double xg = P.x * g
    cdef double e
    if xg < -_EXP_NEG_CUT:
        out[0] = out[1] = 0.0
        return 2
    e = exp(xg)
    out[0] = e
    out[1] = e * cos(sig)
    return 2


cdef int _terms_osc_semi(QuadParams* P, double tau, double* out, bint with_rho) nogil:
    cdef double pv[4]
    cdef double e, cht, sht, av, cv, rho2, e2, wm, wp
    if tau > 300.0:
        out[0] = out[1] = out[2] = out[3] = 0.0
        return 4
    _c_osc_path(P.mu, P.x, P.a, tau, P.cmu, P.smu, pv)
    if pv[3] > _EXP_NEG_CUT:
        out[0] = out[1] = out[2] = out[3] = 0.0
        return 4
    e = exp(-pv[3])
    cht = cosh(tau)
    sht = sinh(tau)
    av = -cht * pv[1] + sht * pv[0] * pv[2]
    cv = -sht * pv[0] - cht * pv[1] * pv[2]
    if with_rho:
        rho2 = 2.0 * (P.a * PI - pv[3])
        e2 = exp(-rho2) if rho2 < _EXP_NEG_CUT else 0.0
        wm = 1.0 - e2
        wp = 1.0 + e2
    else:
        wm = 1.0
        wp = 1.0
    out[0] = e * (P.cchi * wm + P.schi * wp * pv[2])
    out[1] = e * (P.cchi * wp * av + P.schi * wm * cv)
    out[2] = e * (P.schi * wm - P.cchi * wp * pv[2])
    out[3] = e * (P.schi * wp * av - P.cchi * wm * cv)
    return 4


cdef int _terms_osc_sig(QuadParams* P, double sig, double* out) nogil:
    cdef double s = sin(sig)
    cdef double c = cos(sig)
    cdef double tau = _c_osc_invert(P.mu, P.cmu, P.smu, s, P.sig_seed, P.tau0)
    cdef double sht, cht, tp, rho, psi, e, rho2, e2, wm, wp, bv, dv
    P.sig_seed = tau
    sht = sinh(tau)
    cht = cosh(tau)
    tp = c * sht / (P.cmu - s * cht)
    rho = P.a * (1.5 * PI - sig) - P.x * cht * c
    psi = P.a * (sig - 0.5 * PI) + P.x * cht * c
    if psi > _EXP_NEG_CUT:
        out[0] = out[1] = out[2] = out[3] = 0.0
        return 4
    e = exp(-psi)
    rho2 = 2.0 * rho
    e2 = exp(-rho2) if rho2 < _EXP_NEG_CUT else 0.0
    wm = 1.0 - e2
    wp = 1.0 + e2
    bv = -cht * c * tp + sht * s
    dv = -sht * s * tp - cht * c
    out[0] = e * (P.cchi * wm * tp + P.schi * wp)
    out[1] = e * (P.cchi * wp * bv + P.schi * wm * dv)
    out[2] = e * (P.schi * wm * tp - P.cchi * wp)
    out[3] = e * (P.schi * wp * bv - P.cchi * wm * dv)
    return 4


cdef int _mapped_terms(int kind, QuadParams* P, double t, int nsums,
                       double aa, double bb, double* out) nogil:
    # evaluate mapped integrand terms at abscissa t (includes map jacobian)
    cdef double s, c, w, xx, u, eu, tau
    cdef int i
    for i in range(nsums):
        out[i] = 0.0
    if kind == K_MON_SEMI or kind == K_OSC_SEMI:
        u = sinh(t)
        if u > 300.0:
            tau = aa + u + LN2
            w = cosh(t)
        else:
            eu = exp(u)
            if eu == 0.0:
                return nsums
            tau = aa + asinh(eu)
            if tau <= aa:
                return nsums
            w = cosh(t) * eu / hypot(1.0, eu)
        if kind == K_MON_SEMI:
            _terms_mon_semi(P, tau, out)
        else:
            _terms_osc_semi(P, tau, out, 0)
    else:
        s = sinh(t)
        if fabs(s) > 350.0:
            return nsums
        c = cosh(s)
        w = 0.5 * (bb - aa) * cosh(t) / (c * c)
        if w == 0.0:
            return nsums
        # abscissa from the exact distance to the nearer endpoint
        if s <= 0.0:
            eu = exp(2.0 * s)
            xx = aa + (bb - aa) * eu / (1.0 + eu)
        else:
            eu = exp(-2.0 * s)
            xx = bb - (bb - aa) * eu / (1.0 + eu)
        if xx <= aa or xx >= bb:
            return nsums
        if kind == K_MON_FIN:
            _terms_mon_fin(P, xx, out)
        elif kind == K_OSC_FIN_TAU:
            _terms_osc_semi(P, xx, out, 1)
        else:
            _terms_osc_sig(P, xx, out)
    for i in range(nsums):
        out[i] *= w
    return nsums


ctypedef struct DeState:
    double sums[4]
    double gmax[4]
    double sig_lo
    double sig_hi
    int evals


cdef bint _significant(DeState* S, double* terms, int nsums) nogil:
    cdef bint sig = 0
    cdef double v
    cdef int i
    for i in range(nsums):
        v = fabs(terms[i])
        if v > S.gmax[i]:
            S.gmax[i] = v
        if v > EPS_TRUNC * S.gmax[i]:
            sig = 1
    return sig


cdef void _scan(int kind, QuadParams* P, DeState* S, int nsums,
                double aa, double bb, double start, double step,
                bint first_level) nogil:
    cdef int consec = 0
    cdef double t = start
    cdef double terms[4]
    cdef double bound
    cdef int i
    while fabs(t) <= T_CAP:
        _mapped_terms(kind, P, t, nsums, aa, bb, terms)
        S.evals += 1
        for i in range(nsums):
            S.sums[i] += terms[i]
        if _significant(S, terms, nsums):
            consec = 0
            if t > S.sig_hi:
                S.sig_hi = t
            if t < S.sig_lo:
                S.sig_lo = t
        else:
            consec += 1
            bound = MIN_SCAN if first_level else (S.sig_hi if step > 0
                                                  else -S.sig_lo)
            if consec >= N_CONSEC and fabs(t) >= bound:
                break
        t += step


cdef int _de_sum_c(int kind, QuadParams* P, int nsums, double aa, double bb,
                   double tol, double* values, int* levels_out,
                   int* evals_out) nogil:
    cdef DeState S
    cdef double terms[4]
    cdef double totals[4]
    cdef double new_totals[4]
    cdef double deltas[4]
    cdef double h = H0
    cdef double scale, bound
    cdef int i, level = 0
    cdef bint conv
    for i in range(4):
        S.sums[i] = 0.0
        S.gmax[i] = 0.0
    S.sig_lo = 0.0
    S.sig_hi = 0.0
    S.evals = 0
    _mapped_terms(kind, P, 0.0, nsums, aa, bb, terms)
    S.evals += 1
    for i in range(nsums):
        S.sums[i] += terms[i]
    _significant(&S, terms, nsums)
    _scan(kind, P, &S, nsums, aa, bb, H0, H0, 1)
    _scan(kind, P, &S, nsums, aa, bb, -H0, -H0, 1)
    for i in range(nsums):
        totals[i] = H0 * S.sums[i]
    while level < LEVELS_MAX:
        level += 1
        h *= 0.5
        _scan(kind, P, &S, nsums, aa, bb, h, 2.0 * h, 0)
        _scan(kind, P, &S, nsums, aa, bb, -h, -2.0 * h, 0)
        scale = 0.0
        for i in range(nsums):
            new_totals[i] = h * S.sums[i]
            deltas[i] = fabs(new_totals[i] - totals[i])
            totals[i] = new_totals[i]
            if fabs(new_totals[i]) > scale:
                scale = fabs(new_totals[i])
        if level >= 2:
            conv = 1
            for i in range(nsums):
                bound = fabs(totals[i])
                if SIBLING_SCALE * scale > bound:
                    bound = SIBLING_SCALE * scale
                if bound < VALUE_FLOOR:
                    bound = VALUE_FLOOR
                if deltas[i] > tol * bound:
                    conv = 0
                    break
            if conv:
                for i in range(nsums):
                    values[i] = totals[i]
                levels_out[0] = level
                evals_out[0] = S.evals
                return 1
    for i in range(nsums):
        values[i] = totals[i]
    levels_out[0] = level
    evals_out[0] = S.evals
    return 0


def mon_quad(double theta, double x, double tol):
    """Fused quadratures for the monotonic-region representations.

    Returns (ik, ikp, ils, ilps, ilf, ilpf, levels, evals, ok).
    """
    cdef QuadParams P
    cdef double v1[4]
    cdef double v2[4]
    cdef int lev1 = 0, lev2 = 0, ev1 = 0, ev2 = 0
    cdef int ok1, ok2
    P.theta = theta
    P.x = x
    P.sth = sin(theta)
    P.cth = cos(theta)
    with nogil:
        ok1 = _de_sum_c(K_MON_SEMI, &P, 4, 0.0, 0.0, tol, v1, &lev1, &ev1)
        ok2 = _de_sum_c(K_MON_FIN, &P, 2, -theta - PI, -theta + PI, tol,
                        v2, &lev2, &ev2)
    return (v1[0], v1[1], v1[2], v1[3], v2[0], v2[1],
            max(lev1, lev2), ev1 + ev2, 1 if (ok1 and ok2) else 0)


def osc_quad(double mu, double x, double a, double tol, bint simplified):
    """Fused quadratures for the oscillatory-region representations.

    Returns (p1, p2, p3, levels, evals, ok); p2 = p3 = zeros in simplified
    mode, where p1 starts at tau0 instead of mu.
    """
    cdef QuadParams P
    cdef double v1[4]
    cdef double v2[4]
    cdef double v3[4]
    cdef int lev1 = 0, lev2 = 0, lev3 = 0, ev1 = 0, ev2 = 0, ev3 = 0
    cdef int ok1, ok2 = 1, ok3 = 1
    cdef double tau0 = mu - tanh(mu)
    cdef double lower
    P.mu = mu
    P.x = x
    P.a = a
    P.cmu = cosh(mu)
    P.smu = sinh(mu)
    P.cchi = cos(x * P.smu - a * mu)
    P.schi = sin(x * P.smu - a * mu)
    P.tau0 = tau0
    P.sig_seed = 0.98 * tau0
    lower = tau0 if simplified else mu
    with nogil:
        ok1 = _de_sum_c(K_OSC_SEMI, &P, 4, lower, 0.0, tol, v1, &lev1, &ev1)
    if simplified:
        return ((v1[0], v1[1], v1[2], v1[3]), (0.0, 0.0, 0.0, 0.0),
                (0.0, 0.0, 0.0, 0.0), lev1, ev1, 1 if ok1 else 0)
    with nogil:
        ok2 = _de_sum_c(K_OSC_FIN_TAU, &P, 4, tau0, mu, tol, v2, &lev2, &ev2)
        ok3 = _de_sum_c(K_OSC_FIN_SIG, &P, 4, PI, 1.5 * PI, tol, v3,
                        &lev3, &ev3)
    return ((v1[0], v1[1], v1[2], v1[3]), (v2[0], v2[1], v2[2], v2[3]),
            (v3[0], v3[1], v3[2], v3[3]), max(lev1, max(lev2, lev3)),
            ev1 + ev2 + ev3, 1 if (ok1 and ok2 and ok3) else 0)
