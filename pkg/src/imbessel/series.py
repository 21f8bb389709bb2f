"""Power-series evaluation of K, K', L, L' near x = 0.

The series run over coefficient pairs (f_k, r_k) obeying a shared three-term
recurrence seeded by the Coulomb phase shift sigma0(a) = arg Gamma(1+ia).
The normalization n(a) carrying the dominant e^{a pi/2} growth is kept
factored, so the sums themselves stay O(1) for any a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .core import (ExponentKind, Family, FunctionQuad, OrderArg, ScalingMode,
                   dominant_exponent, scale_factor_log)
from .errors import NoConvergenceError

K_MAX_DEFAULT = 300
_TERM_EPS = 5e-17

_EULER = 0.5772156649015328606

# arg Gamma(1+ia)/a = -euler + sum (-1)^k zeta(2k+1) a^2k / (2k+1), |a| < 0.1
_SIGMA0_TAYLOR = (
    -0.5772156649015328606,
    +1.2020569031595942854 / 3.0,
    -1.0369277551433699263 / 5.0,
    +1.0083492773819228268 / 7.0,
    -1.0020083928260822144 / 9.0,
    +1.0004941886041194646 / 11.0,
    -1.0001227133475784891 / 13.0,
    +1.0000305882363070205 / 15.0,
    -1.0000076371976378998 / 17.0,
    +1.0000019082127165539 / 19.0,
)

# B_2 .. B_18 for the Stirling series of arg Gamma
_BERN = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
         -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0)


_L = np.longdouble


def _arg_gamma_asym(sig, t):
    """Im ln Gamma(sig + i t) by the Stirling series; needs |z| >= ~10.

    Extended-precision scalars throughout: the downward recurrence that
    consumes this partially cancels it for small t.
    """
    r2 = sig * sig + t * t
    val = (sig - 0.5) * np.arctan2(t, sig) + 0.5 * t * np.log(r2) - t
    # imaginary parts of B_2j/(2j(2j-1)) z^{1-2j} via a real (re, im) ladder
    zre = sig / r2
    zim = -t / r2
    z2re = zre * zre - zim * zim
    z2im = 2.0 * zre * zim
    tre, tim = zre, zim
    for j, b in enumerate(_BERN, start=1):
        val += b / (2 * j * (2 * j - 1)) * tim
        tre, tim = tre * z2re - tim * z2im, tre * z2im + tim * z2re
    return val


def sigma0_over_a(a: float) -> float:
    """arg Gamma(1+ia)/a, smooth through a = 0."""
    if abs(a) < 0.1:
        a2 = a * a
        acc = 0.0
        for c in reversed(_SIGMA0_TAYLOR):
            acc = acc * a2 + c
        return acc
    return coulomb_phase0(a) / a


def coulomb_phase0(a: float) -> float:
    """Coulomb phase shift sigma0(a) = arg Gamma(1 + ia); odd in a.

    Upward recurrence arg Gamma(1+ia) = arg Gamma(m+1+ia) - sum atan(a/k)
    with m chosen so |m+1+ia| >= 10, then the Stirling series at the shifted
    argument.
    """
    if a == 0.0:
        return 0.0
    if abs(a) < 0.1:
        return a * sigma0_over_a(a)
    aa = _L(abs(a))
    m = 0
    while (m + 1) ** 2 + float(aa * aa) < 100.0:
        m += 1
    val = _arg_gamma_asym(_L(m + 1), aa)
    for k in range(1, m + 1):
        val -= np.arctan2(aa, _L(k))
    return float(val) if a > 0 else -float(val)


def series_seeds(a: float, x: float) -> tuple[float, float, float, float]:
    """Seed values (f0, f1, r0, r1) of the coefficient recurrence.

    The sin(.)/a forms are evaluated through sigma0(a)/a so they stay finite
    and fully accurate as a -> 0.
    """
    w = sigma0_over_a(a) - math.log(0.5 * x)
    u = a * w
    cu = math.cos(u)
    f0 = w * kernels.sinc(u)
    r0 = cu
    one_a2 = 1.0 + a * a
    r1 = (cu - a * math.sin(u)) / one_a2
    f1 = (f0 + cu) / one_a2
    return f0, f1, r0, r1


@dataclass
class SeriesCoeffState:
    """Recurrence window for the series coefficients.

    Both f_k and r_k satisfy (k^2+a^2) r_k - (2k-1) r_{k-1} + r_{k-2} = 0;
    c_k = (x/2)^{2k}/k!.
    """

    f_prev2: float
    f_prev1: float
    r_prev2: float
    r_prev1: float
    k: int
    c_k: float
    n_a: float

    @classmethod
    def initial(cls, a: float, x: float) -> "SeriesCoeffState":
        f0, f1, r0, r1 = series_seeds(a, x)
        return cls(f0, f1, r0, r1, 1, 0.25 * x * x, scaled_normalization(a))

    def advance(self, a: float, x: float) -> tuple[float, float, float]:
        """Step to k+1; returns (f_k, r_k, c_k) at the new k."""
        self.k += 1
        k = self.k
        den = k * k + a * a
        fk = ((2 * k - 1) * self.f_prev1 - self.f_prev2) / den
        rk = ((2 * k - 1) * self.r_prev1 - self.r_prev2) / den
        self.f_prev2, self.f_prev1 = self.f_prev1, fk
        self.r_prev2, self.r_prev1 = self.r_prev1, rk
        self.c_k *= 0.25 * x * x / k
        return fk, rk, self.c_k


def scaled_normalization(a: float) -> float:
    """n(a) e^{-a pi/2} = sqrt((1 - e^{-2 pi a})/(2 pi a)); 1 at a = 0."""
    a = abs(a)
    if a < 1e-300:
        return 1.0
    return math.sqrt(-math.expm1(-2.0 * math.pi * a) / (2.0 * math.pi * a))


def series_eval(p: OrderArg, scaling: ScalingMode,
                k_max: int = K_MAX_DEFAULT) -> FunctionQuad:
    """Sum the four series; stops when three consecutive terms are below
    5e-17 of every partial sum."""
    a, x = p.a, p.x
    w = sigma0_over_a(a) - math.log(0.5 * x)
    sk, skp, sl, slp, k_used, ok = kernels.series_sums(
        a, x, w, _TERM_EPS, k_max)
    if not ok:
        raise NoConvergenceError(
            f"series did not converge in {k_max} terms at a={a}, x={x}")
    nt = scaled_normalization(a)
    two_x = 2.0 / x
    kv = sk / nt
    kpv = two_x * skp / nt
    lv = nt * sl
    lpv = two_x * nt * slp
    if x >= a:
        # native scaling strips e^{-+ a pi/2}; the scaled definition wants
        # e^{+-lambda} here, which differs by e^{lambda_tilde}
        resid = math.exp(dominant_exponent(p, ExponentKind.LAMBDA_TILDE))
        kv *= resid
        kpv *= resid
        lv /= resid
        lpv /= resid
    if scaling is ScalingMode.UNSCALED:
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        return FunctionQuad(kv * f, kpv * f, lv / f, lpv / f, scaling)
    return FunctionQuad(kv, kpv, lv, lpv, scaling)
