"""Real-argument Airy functions Ai, Bi and derivatives.

Self-contained evaluator (Maclaurin series, an ODE Taylor march through the
mid range, asymptotic expansions beyond |t| = 9.3; extended precision
internally).  The scaled variant removes e^{-+xi}, xi = (2/3) t^(3/2), on
the positive axis, which is what the uniform expansions consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError


@dataclass(frozen=True)
class AiryQuad:
    """Ai, Ai', Bi, Bi' at one point; pi (Ai Bi' - Ai' Bi) = 1."""

    ai: float
    aip: float
    bi: float
    bip: float

    def wronskian_residual(self) -> float:
        return math.pi * (self.ai * self.bip - self.aip * self.bi) - 1.0


def airy_scaled(t: float) -> tuple[float, float, float, float, float]:
    """(Ai e^xi, Ai' e^xi, Bi e^-xi, Bi' e^-xi, xi); xi = 0 for t <= 0."""
    if not math.isfinite(t):
        raise DomainError(f"airy argument must be finite, got {t}")
    return kernels.airy_quad_scaled(t)


def airy_eval(t: float) -> AiryQuad:
    """Unscaled Airy quadruple; raises OverflowError once Bi(t) is not
    representable (t around 103.9)."""
    if not math.isfinite(t):
        raise DomainError(f"airy argument must be finite, got {t}")
    ai, aip, bi, bip = kernels.airy_quad(t)
    if math.isinf(bi) or math.isinf(bip):
        raise OverflowError(f"Bi overflows at t = {t}")
    return AiryQuad(ai, aip, bi, bip)
