"""Domain types, dominant-exponent arithmetic and computable-range guards.

Everything here is even in the order parameter: |a| is taken when an
OrderArg is constructed, so (a, x) and (-a, x) are bitwise identical
downstream.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .errors import DomainError

TURNING_BAND_HALFWIDTH = 0.1   # relative half-width of the turning band

_L = np.longdouble
_PI_L = _L("3.1415926535897932384626433832795029")

# Taylor coefficients of cos(th) - 1 + th sin(th) = sum (-1)^(n-1) (2n-1) th^(2n)/(2n)!
_LBAR_COEF = tuple((-1.0) ** (n - 1) * _L(2 * n - 1) / _L(math.factorial(2 * n))
                   for n in range(1, 15))
# Taylor coefficients of sin(ps) - ps cos(ps) = sum (-1)^(n+1) 2n ps^(2n+1)/(2n+1)!
_LTILDE_COEF = tuple((-1.0) ** (n + 1) * _L(2 * n) / _L(math.factorial(2 * n + 1))
                     for n in range(1, 15))


class Region(enum.Enum):
    MONOTONIC = "monotonic"        # x >= |a| (1 + band)
    OSCILLATORY = "oscillatory"    # x <= |a| (1 - band)
    TURNING_POINT = "turning"      # the band around x = |a|


class ScalingMode(enum.Enum):
    UNSCALED = "unscaled"
    SCALED = "scaled"


class ExponentKind(enum.Enum):
    LAMBDA_MON = "lambda"          # sqrt(x^2-a^2) + a asin(a/x)
    LAMBDA_TILDE = "lambda_tilde"  # lambda - a pi/2
    LAMBDA_BAR = "lambda_bar"      # lambda - x
    HALF_PI_A = "half_pi_a"        # |a| pi/2


class Family(enum.Enum):
    K_FAMILY = "K"
    L_FAMILY = "L"


class GuardStatus(enum.Enum):
    OK = "ok"
    OVERFLOW_RISK = "overflow"
    UNDERFLOW_RISK = "underflow"


@dataclass(frozen=True)
class OrderArg:
    """Validated (order parameter, argument) pair with region classification."""

    a: float
    x: float
    region: Region = field(init=False)

    def __post_init__(self):
        if not (self.x > 0.0 and math.isfinite(self.x)):
            raise DomainError(f"argument x must be positive and finite, got {self.x}")
        if not math.isfinite(self.a):
            raise DomainError(f"order parameter a must be finite, got {self.a}")
        object.__setattr__(self, "a", abs(self.a))
        band = TURNING_BAND_HALFWIDTH * self.a
        if self.x >= self.a + band:
            region = Region.MONOTONIC
        elif self.x <= self.a - band:
            region = Region.OSCILLATORY
        else:
            region = Region.TURNING_POINT
        object.__setattr__(self, "region", region)

    @property
    def z(self) -> float:
        """x / |a| (inf when a == 0)."""
        return self.x / self.a if self.a > 0.0 else math.inf


@dataclass(frozen=True)
class FunctionQuad:
    """The four function values plus the scaling tag."""

    k: float
    kp: float
    l: float
    lp: float
    scaling: ScalingMode

    def wronskian_residual(self, x: float) -> float:
        """x (K L' - K' L) - 1; the scale factors cancel in either mode."""
        return x * (self.k * self.lp - self.kp * self.l) - 1.0


def _default_log_limit(n_safety: int) -> float:
    # decimal overflow exponent of the format, less the safety digits
    dec_max = math.floor(math.log10(sys.float_info.max))
    return (dec_max - n_safety) * math.log(10.0)


@dataclass(frozen=True)
class RangeGuardConfig:
    """Unscaled-mode overflow/underflow guard: e^(exponent) must stay below
    10^(-n_safety) times the format overflow threshold."""

    n_safety: int = 8
    log_limit: float = 0.0

    def __post_init__(self):
        if self.log_limit == 0.0:
            object.__setattr__(self, "log_limit",
                               _default_log_limit(self.n_safety))
        if self.log_limit <= 0.0:
            raise DomainError("log_limit must be positive")

    @classmethod
    def from_decimal_exponent(cls, d: float) -> "RangeGuardConfig":
        """Guard for a computable magnitude of 10^d (e.g. d=300)."""
        return cls(n_safety=8, log_limit=d * math.log(10.0))

    @property
    def a_limit(self) -> float:
        """Largest |a| evaluable unscaled in the oscillatory region."""
        return 2.0 * self.log_limit / math.pi


def dominant_exponent(p: OrderArg, kind: ExponentKind) -> float:
    """The dominant exponents lambda, lambda-tilde, lambda-bar and |a| pi/2.

    lambda-tilde = lambda - a pi/2 and lambda-bar = lambda - x are computed
    from their Taylor expansions in (pi/2 - theta) resp. theta when the
    expansion variable is small, to keep them accurate where they vanish.
    Internally in extended precision; results are correctly rounded doubles
    up to ~1 ulp.
    """
    a = _L(p.a)
    x = _L(p.x)
    if kind is ExponentKind.HALF_PI_A:
        return float(0.5 * _PI_L * a)
    if p.x < p.a:
        raise DomainError(
            f"{kind.value} requires x >= |a|, got a={p.a}, x={p.x}")
    if kind in (ExponentKind.LAMBDA_MON, ExponentKind.LAMBDA_TILDE):
        # psi = pi/2 - theta = arccos(a/x), stable via 2 asin(sqrt((x-a)/2x));
        # lambda-tilde = x (sin psi - psi cos psi) stays accurate at x = a,
        # and lambda = a pi/2 + lambda-tilde avoids the ill-conditioned
        # arcsin(a/x) there
        ps = 2.0 * np.arcsin(np.sqrt(0.5 * (x - a) / x))
        if ps < 0.9:
            ps2 = ps * ps
            acc = _L(0)
            for c in reversed(_LTILDE_COEF):
                acc = acc * ps2 + c
            lt = x * acc * ps2 * ps
        else:
            lt = x * (np.sin(ps) - ps * np.cos(ps))
        if kind is ExponentKind.LAMBDA_TILDE:
            return float(lt)
        return float(lt + 0.5 * _PI_L * a)
    if kind is ExponentKind.LAMBDA_BAR:
        th = np.arcsin(a / x)
        if th < 0.9:
            th2 = th * th
            acc = _L(0)
            for c in reversed(_LBAR_COEF):
                acc = acc * th2 + c
            return float(x * acc * th2)
        return float(x * (th * np.sin(th) - 2.0 * np.sin(0.5 * th) ** 2))
    raise DomainError(f"unknown exponent kind {kind!r}")


def scale_factor_log(p: OrderArg, fam: Family) -> float:
    """Signed log of the factor turning the unscaled function into the scaled
    one: +lambda (K, x >= |a|), +|a| pi/2 (K, x < |a|); L carries the
    reciprocal factors."""
    if p.x >= p.a:
        s = dominant_exponent(p, ExponentKind.LAMBDA_MON)
    else:
        s = dominant_exponent(p, ExponentKind.HALF_PI_A)
    return s if fam is Family.K_FAMILY else -s


def range_guard(p: OrderArg, cfg: RangeGuardConfig,
                scaling: ScalingMode,
                fam: Family | None = None) -> GuardStatus:
    """Classify whether unscaled evaluation is representable.

    Scaled functions are representable throughout, so scaled mode is always
    Ok.  In unscaled mode the K family underflows and the L family
    overflows once the dominant exponent passes the guard; with fam=None
    the overflow (hard-failure) classification is reported.
    """
    if scaling is ScalingMode.SCALED:
        return GuardStatus.OK
    if p.x < p.a:
        exponent = dominant_exponent(p, ExponentKind.HALF_PI_A)
    else:
        exponent = dominant_exponent(p, ExponentKind.LAMBDA_MON)
    if exponent <= cfg.log_limit:
        return GuardStatus.OK
    if fam is Family.K_FAMILY:
        return GuardStatus.UNDERFLOW_RISK
    return GuardStatus.OVERFLOW_RISK


def stable_kernels(tau: float) -> tuple[float, float]:
    """(cosh(tau) - 1, 1 - tau^2/sinh(tau)^2), stable down to tau = 0."""
    if tau < 0.0:
        raise DomainError(f"tau must be >= 0, got {tau}")
    return kernels.coshm1(tau), kernels.one_minus_t2_over_sinh2(tau)
