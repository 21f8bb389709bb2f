"""Non-oscillating steepest-descent integral representations.

These cover the whole plane away from the turning band and serve as the
reference method: the monotonic case factors e^{-+lambda}, the oscillatory
case e^{-+ a pi/2}.  The quadrature work happens in the kernel backend; this
module owns the path geometry, the stable sigma/tau parameterizations and
the assembly of the raw integrals into function values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._backend import kernels
from .core import (ExponentKind, Family, FunctionQuad, OrderArg, Region,
                   ScalingMode, dominant_exponent, scale_factor_log)
from .errors import DomainError, NoConvergenceError

QUAD_TOL_DEFAULT = 1e-12
A_SIMPL_MIN = 25.0


class OscMode(enum.Enum):
    FULL = "full"
    SIMPLIFIED = "simplified"


@dataclass(frozen=True)
class MonPath:
    """Monotonic-region path data: sin(theta) = a/x, lambda = x cos th + a th."""

    theta: float
    lam: float

    @classmethod
    def from_point(cls, p: OrderArg) -> "MonPath":
        if p.x < p.a:
            raise DomainError("monotonic path needs x >= |a|")
        th = math.asin(min(p.a / p.x, 1.0))
        return cls(th, dominant_exponent(p, ExponentKind.LAMBDA_MON))


@dataclass(frozen=True)
class OscPath:
    """Oscillatory-region path data: cosh(mu) = a/x > 1."""

    mu: float
    chi: float      # x sinh mu - a mu  (< 0)
    tau0: float     # mu - tanh mu

    @classmethod
    def from_point(cls, p: OrderArg) -> "OscPath":
        if p.x >= p.a:
            raise DomainError("oscillatory path needs x < |a|")
        mu = math.acosh(p.a / p.x)
        return cls(mu, p.x * math.sinh(mu) - p.a * mu, mu - math.tanh(mu))


def mon_sigma(theta: float, tau: float) -> tuple[float, float, float]:
    """(sigma, theta - sigma, dsigma/dtau) on the monotonic path.

    sigma solves sin(sigma) = sin(theta) tau/sinh(tau); the difference uses
    sin(th - sig) = sin th (1 - tau^2/sinh^2 tau)/(cos th tau/sinh tau +
    cos sig), which is exact and cancellation-free.
    """
    if not 0.0 <= theta < 0.5 * math.pi:
        raise DomainError(f"theta must be in [0, pi/2), got {theta}")
    if tau < 0.0:
        raise DomainError(f"tau must be >= 0, got {tau}")
    sth = math.sin(theta)
    cth = math.cos(theta)
    q = tau / math.sinh(tau) if tau > 0.0 else 1.0
    ssig = sth * q
    csig = math.sqrt((1.0 - ssig) * (1.0 + ssig))
    r = kernels.one_minus_t2_over_sinh2(tau)
    dd = math.asin(sth * r / (cth * q + csig))
    dsig = -(ssig / csig) * kernels.coth_minus_inv(tau)
    return theta - dd, dd, dsig


def mon_phi(theta: float, tau: float) -> float:
    """Exponent Phi(tau) of the monotonic integrands, ~ tau^2 cos(theta)/2
    near tau = 0 with no cancellation."""
    sig, dd, _ = mon_sigma(theta, tau)
    cm1 = kernels.coshm1(tau)
    ssig = math.sin(theta) * (tau / math.sinh(tau) if tau > 0.0 else 1.0)
    csig = math.sqrt((1.0 - ssig) * (1.0 + ssig))
    return (cm1 * csig + 2.0 * math.sin(0.5 * dd)
            * math.sin(0.5 * (theta + sig)) - dd * math.sin(theta))


def mon_eval(p: OrderArg, scaling: ScalingMode,
             tol: float = QUAD_TOL_DEFAULT) -> FunctionQuad:
    """All four functions from the monotonic-region representations."""
    if p.region is not Region.MONOTONIC:
        raise DomainError(
            f"monotonic integrals not offered inside the turning band "
            f"(a={p.a}, x={p.x})")
    path = MonPath.from_point(p)
    ik, ikp, ils, ilps, ilf, ilpf, levels, evals, ok = kernels.mon_quad(
        path.theta, p.x, tol)
    if not ok:
        raise NoConvergenceError(
            f"monotonic quadrature stalled at a={p.a}, x={p.x}")
    cw = -math.expm1(-2.0 * math.pi * p.a)
    eeta = math.exp(-2.0 * dominant_exponent(p, ExponentKind.LAMBDA_TILDE))
    inv2pi = 0.5 / math.pi
    kv = ik
    kpv = -ikp
    lv = (ilf - cw * eeta * ils) * inv2pi
    lpv = (ilpf + cw * eeta * ilps) * inv2pi
    if scaling is ScalingMode.UNSCALED:
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        return FunctionQuad(kv * f, kpv * f, lv / f, lpv / f, scaling)
    return FunctionQuad(kv, kpv, lv, lpv, scaling)


def osc_sigma_tau(path: OscPath, tau: float) -> tuple[float, float]:
    """(sigma, dsigma/dtau) on the branches parameterized by tau >= tau0.

    sigma runs from pi at tau0 through pi/2 at mu down to 0 as tau -> oo;
    the branch below tau0 (sigma > pi) is reached through
    osc_invert_sigma instead.
    """
    if tau < path.tau0 - 4.0 * 1e-16 * max(1.0, path.tau0):
        raise DomainError(f"tau = {tau} below tau0 = {path.tau0}")
    mu = path.mu
    ssig, csig, dsig, _psi = kernels.osc_path_vars(
        mu, 1.0, 1.0, tau, math.cosh(mu), math.sinh(mu))
    if tau >= mu:
        sig = 0.5 * math.pi - math.asin(
            math.sqrt(max(0.0, 0.5 * (1.0 - ssig)))) * 2.0
    else:
        sig = 0.5 * math.pi + 2.0 * math.asin(
            math.sqrt(max(0.0, 0.5 * (1.0 - ssig))))
    return sig, dsig


def osc_invert_sigma(path: OscPath, sigma: float) -> tuple[float, float]:
    """(tau, dtau/dsigma) for sigma in [pi, 3 pi/2], the continued branch.

    Newton with the bracket (0, tau0]; dsigma/dtau diverges at the far end
    sigma = 3 pi/2 where dtau/dsigma -> 0, which is why this branch is
    integrated in sigma.
    """
    if not math.pi - 1e-12 <= sigma <= 1.5 * math.pi + 1e-12:
        raise DomainError(f"sigma = {sigma} outside [pi, 3pi/2]")
    mu = path.mu
    cmu = math.cosh(mu)
    smu = math.sinh(mu)
    s = math.sin(sigma)
    c = math.cos(sigma)
    tau = kernels.osc_invert(mu, cmu, smu, s, 0.7 * path.tau0, path.tau0)
    dtds = c * math.sinh(tau) / (cmu - s * math.cosh(tau))
    return tau, dtds


def osc_eval(p: OrderArg, scaling: ScalingMode,
             tol: float = QUAD_TOL_DEFAULT,
             mode: OscMode = OscMode.FULL) -> FunctionQuad:
    """All four functions from the oscillatory-region representations.

    FULL evaluates the three steepest-descent integrals per function;
    SIMPLIFIED keeps the single semi-infinite integral from tau0 with an
    O(e^{-pi a/2}) relative remainder and is refused below a = 25.
    """
    if p.region is not Region.OSCILLATORY:
        raise DomainError(
            f"oscillatory integrals not offered at a={p.a}, x={p.x}")
    if mode is OscMode.SIMPLIFIED and p.a < A_SIMPL_MIN:
        raise DomainError(
            f"simplified mode needs a >= {A_SIMPL_MIN}, got {p.a}")
    path = OscPath.from_point(p)
    p1, p2, p3, levels, evals, ok = kernels.osc_quad(
        path.mu, p.x, p.a, tol, mode is OscMode.SIMPLIFIED)
    if not ok:
        raise NoConvergenceError(
            f"oscillatory quadrature stalled at a={p.a}, x={p.x}")
    if mode is OscMode.SIMPLIFIED:
        kv, kpv = p1[0], p1[1]
        lv = p1[2] / (2.0 * math.pi)
        lpv = p1[3] / (2.0 * math.pi)
    else:
        d2pi = -math.expm1(-2.0 * math.pi * p.a)
        kv = p1[0] + (p2[0] - p3[0]) / d2pi
        kpv = p1[1] + (p2[1] - p3[1]) / d2pi
        lv = (0.5 * d2pi * p1[2] + 0.5 * (p2[2] - p3[2])) / math.pi
        lpv = (0.5 * d2pi * p1[3] + 0.5 * (p2[3] - p3[3])) / math.pi
    if scaling is ScalingMode.UNSCALED:
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        return FunctionQuad(kv * f, kpv * f, lv / f, lpv / f, scaling)
    return FunctionQuad(kv, kpv, lv, lpv, scaling)
