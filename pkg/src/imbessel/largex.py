"""Large-x asymptotic expansions via Hankel symbols.

K and L share the symbol sequence (ia,k), which is real because it depends
only on a^2; L's series has the signs flipped term by term, which makes it
positive-term and therefore usable down to smaller x than K's alternating
one.  Derivatives use d_k = (ia,k) + (2k-1)(ia,k-1), obtained by
differentiating the displayed products term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (ExponentKind, Family, FunctionQuad, OrderArg, ScalingMode,
                   dominant_exponent, scale_factor_log)
from .errors import AccuracyLossError

N_MAX = 400
RTOL_DEFAULT = 1e-13


@dataclass(frozen=True)
class HankelSeq:
    """Hankel symbols (ia,k), k = 0..n-1, for order ia."""

    terms: tuple[float, ...]
    a2: float


def hankel_symbols(a: float, nmax: int) -> HankelSeq:
    """(ia,0)=1; (ia,k+1) = -[(k+1/2)^2 + a^2]/(k+1) (ia,k)."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    a2 = a * a
    terms = [1.0]
    for k in range(nmax - 1):
        terms.append(-(((k + 0.5) ** 2 + a2) / (k + 1)) * terms[-1])
    return HankelSeq(tuple(terms), a2)


def largex_eval(p: OrderArg, scaling: ScalingMode,
                rtol: float = RTOL_DEFAULT) -> FunctionQuad:
    """Optimally truncated large-x expansions of all four functions.

    Term magnitudes can first rise (when a^2 > x) before the asymptotic
    descent, so truncation stops at the first increase after the descent.
    Raises AccuracyLossError when the resulting floor is above rtol * |L
    sum|; the alternating K sums share the floor but lose further digits to
    cancellation once the hump is tall, which is why the dispatcher feeds K
    to the continued fraction instead.
    """
    a, x = p.a, p.x
    a2 = a * a
    u = 0.5 / x
    sk = sl = 1.0
    skd = sld = 1.0   # derivative sums, d_0 = 1
    c_prev = 1.0
    uk = 1.0
    prev_mag = 1.0     # the k = 0 term
    min_term = math.inf
    descending = False
    k = 0
    while k < N_MAX:
        k += 1
        c = -(((k - 0.5) ** 2 + a2) / k) * c_prev
        d = c + (2 * k - 1) * c_prev
        uk *= u
        t = c * uk
        td = d * uk
        mag = max(abs(t), abs(td))
        if not math.isfinite(mag):
            raise AccuracyLossError(
                f"large-x expansion divergent at a={a}, x={x}")
        if descending and mag >= prev_mag:
            break                      # optimal truncation point passed
        if mag < prev_mag:
            descending = True
            min_term = mag
        prev_mag = mag
        sk += t
        skd += td
        if k % 2 == 0:
            sl += t
            sld += td
        else:
            sl -= t
            sld -= td
        c_prev = c
        if descending and mag <= 1e-18 * abs(sl):
            break
    if min_term > rtol * abs(sl):
        raise AccuracyLossError(
            f"large-x expansion floor {min_term:.2e} above target at "
            f"a={a}, x={x}")
    lbar = dominant_exponent(p, ExponentKind.LAMBDA_BAR)
    pref_k = math.sqrt(0.5 * math.pi / x) * math.exp(lbar)
    pref_l = math.exp(-lbar) / math.sqrt(2.0 * math.pi * x)
    kv = pref_k * sk
    kpv = -pref_k * skd
    lv = pref_l * sl
    lpv = pref_l * sld
    if scaling is ScalingMode.UNSCALED:
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        return FunctionQuad(kv * f, kpv * f, lv / f, lpv / f, scaling)
    return FunctionQuad(kv, kpv, lv, lpv, scaling)
