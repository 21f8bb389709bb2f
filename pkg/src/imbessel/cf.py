"""Continued-fraction evaluation of K and K' in the monotonic region.

The Steed-style continued fraction with Temme's normalization series gives
K_mu(x) = sqrt(pi/2x) e^{-x} / S and the ratio K_{mu+1}/K_mu.  Only mu^2
enters the iteration, so for mu = ia everything is real (mu^2 = -a^2), and
in the derivative relation K' = (mu/x) K - K_{mu+1} the imaginary parts
cancel exactly, leaving K' = -K (x + 1/2 - h)/x.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from ._backend import kernels
from .core import (ExponentKind, Family, OrderArg, ScalingMode,
                   TURNING_BAND_HALFWIDTH, dominant_exponent,
                   scale_factor_log)
from .errors import NoConvergenceError, OutOfValidityError

X_CF_MIN = 1.3
A_CF_MAX = 150.0


@dataclass(frozen=True)
class CFConfig:
    tol: float = 4.0 * sys.float_info.epsilon
    max_iter: int = 30000

    def __post_init__(self):
        if self.tol < sys.float_info.epsilon:
            raise ValueError("tol below machine epsilon")
        if self.max_iter < 100:
            raise ValueError("max_iter must be >= 100")


_DEFAULT = CFConfig()


def cf_eval(p: OrderArg, scaling: ScalingMode,
            cfg: CFConfig = _DEFAULT) -> tuple[float, float]:
    """(K, K') by the continued fraction; scaled mode strips e^{-lambda}."""
    a, x = p.a, p.x
    if x < a * (1.0 + TURNING_BAND_HALFWIDTH) or x < X_CF_MIN or a > A_CF_MAX:
        raise OutOfValidityError(
            f"continued fraction not offered at a={a}, x={x}")
    khat, h, iters, ok = kernels.cf2_kernel(-a * a, x, cfg.tol, cfg.max_iter)
    if not ok:
        raise NoConvergenceError(
            f"continued fraction stalled after {iters} iterations "
            f"at a={a}, x={x}")
    lbar = dominant_exponent(p, ExponentKind.LAMBDA_BAR)
    kv = math.sqrt(0.5 * math.pi / x) * math.exp(lbar) * khat
    kpv = -kv * (x + 0.5 - h) / x
    if scaling is ScalingMode.UNSCALED:
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        return kv * f, kpv * f
    return kv, kpv
