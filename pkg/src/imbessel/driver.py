"""Public evaluation API: region dispatch over the five methods.

Every method produces natively scaled values; unscaled output is the scaled
quad times e^{-+ scale_factor_log}, guarded by the computable-range check.
The dispatch map is a set of tunable constants validated by the seam tests:
series near x = 0 (and inside the turning band for moderate |a|), the
uniform Airy-type expansions in a broad band around x = |a| for large |a|,
the continued fraction for K with the large-x expansion (or monotonic
integrals) for L elsewhere in the monotonic region, and the oscillatory
steepest-descent integrals (single-integral simplified form for large |a|)
below the band.
"""

from __future__ import annotations

import enum
import math
import statistics
from dataclasses import dataclass, field

from . import cf as _cf
from . import integrals as _integrals
from . import largex as _largex
from . import series as _series
from . import uniform as _uniform
from .core import (Family, FunctionQuad, GuardStatus, OrderArg,
                   RangeGuardConfig, Region, ScalingMode, range_guard,
                   scale_factor_log)
from .errors import (AccuracyLossError, NoConvergenceError,
                     OutOfValidityError, RangeError)


class Method(enum.Enum):
    SERIES = "series"
    CF = "cf"
    LARGEX_L = "largex"
    AIRY_UNIFORM = "uniform"
    INTEGRAL_MON = "int-mon"
    INTEGRAL_OSC_FULL = "int-osc-full"
    INTEGRAL_OSC_SIMPL = "int-osc-simpl"


@dataclass(frozen=True)
class DispatchConfig:
    """All region-map constants in one place (provisional, seam-tested)."""

    series_x_max: float = 1.5
    series_frac: float = 0.4
    series_k_max: int = 300
    a_min_uniform: float = 25.0
    eta_max: float = 1.2
    a_simpl: float = 25.0
    x_cf_min: float = 1.3
    a_cf_max: float = 150.0
    x_largex_min: float = 12.0
    quad_tol: float = 1e-12
    largex_rtol: float = 1e-13
    guard: RangeGuardConfig = RangeGuardConfig()


DEFAULT_CONFIG = DispatchConfig()

# conservative per-method accuracy estimates, fed into EvalReport
_EST_ACCURACY = {
    Method.SERIES: 1e-12,
    Method.CF: 1e-13,
    Method.LARGEX_L: 1e-12,
    Method.AIRY_UNIFORM: 1e-12,
    Method.INTEGRAL_MON: 1e-11,
    Method.INTEGRAL_OSC_FULL: 1e-11,
    Method.INTEGRAL_OSC_SIMPL: 1e-11,
}


@dataclass(frozen=True)
class MethodChoice:
    """Which method produced each of K, K', L, L'."""

    k: Method
    kp: Method
    l: Method
    lp: Method

    def tag(self) -> str:
        if len({self.k, self.kp, self.l, self.lp}) == 1:
            return self.k.value
        return f"{self.k.value}+{self.l.value}"


@dataclass(frozen=True)
class EvalReport:
    quad: FunctionQuad
    choice: MethodChoice
    guard: GuardStatus
    est_accuracy: float


def _series_cut(a: float, cfg: DispatchConfig) -> float:
    return min(cfg.series_x_max, cfg.series_frac * max(1.0, a))


def _eta(p: OrderArg) -> float:
    return _uniform.zeta_of_z(p.z) / 2.0 ** (1.0 / 3.0) if p.a > 0 else -math.inf


def _uniform_ok(p: OrderArg, cfg: DispatchConfig) -> bool:
    return p.a >= cfg.a_min_uniform and abs(_eta(p)) <= cfg.eta_max


def _scaled_eval(p: OrderArg, cfg: DispatchConfig) -> tuple[FunctionQuad, MethodChoice]:
    a, x = p.a, p.x
    sc = ScalingMode.SCALED
    if p.region is Region.TURNING_POINT:
        if _uniform_ok(p, cfg):
            q = _uniform.uniform_eval(p, sc, a_min=cfg.a_min_uniform)
            return q, MethodChoice(*(Method.AIRY_UNIFORM,) * 4)
        q = _series.series_eval(p, sc, k_max=cfg.series_k_max)
        return q, MethodChoice(*(Method.SERIES,) * 4)

    if p.region is Region.MONOTONIC:
        if x <= _series_cut(a, cfg):
            q = _series.series_eval(p, sc, k_max=cfg.series_k_max)
            return q, MethodChoice(*(Method.SERIES,) * 4)
        if _uniform_ok(p, cfg):
            q = _uniform.uniform_eval(p, sc, a_min=cfg.a_min_uniform)
            return q, MethodChoice(*(Method.AIRY_UNIFORM,) * 4)
        kv = kpv = None
        mk = Method.CF
        if x >= cfg.x_cf_min and a <= cfg.a_cf_max:
            try:
                kv, kpv = _cf.cf_eval(p, sc)
            except (NoConvergenceError, OutOfValidityError):
                kv = None
        lv = lpv = None
        ml = Method.LARGEX_L
        if x >= cfg.x_largex_min:
            try:
                ql = _largex.largex_eval(p, sc, rtol=cfg.largex_rtol)
                lv, lpv = ql.l, ql.lp
            except AccuracyLossError:
                lv = None
        if kv is None or lv is None:
            qm = _integrals.mon_eval(p, sc, tol=cfg.quad_tol)
            if kv is None:
                kv, kpv = qm.k, qm.kp
                mk = Method.INTEGRAL_MON
            if lv is None:
                lv, lpv = qm.l, qm.lp
                ml = Method.INTEGRAL_MON
        return (FunctionQuad(kv, kpv, lv, lpv, sc),
                MethodChoice(mk, mk, ml, ml))

    # oscillatory
    if x <= _series_cut(a, cfg):
        q = _series.series_eval(p, sc, k_max=cfg.series_k_max)
        return q, MethodChoice(*(Method.SERIES,) * 4)
    if _uniform_ok(p, cfg):
        q = _uniform.uniform_eval(p, sc, a_min=cfg.a_min_uniform)
        return q, MethodChoice(*(Method.AIRY_UNIFORM,) * 4)
    if a >= cfg.a_simpl:
        q = _integrals.osc_eval(p, sc, tol=cfg.quad_tol,
                                mode=_integrals.OscMode.SIMPLIFIED)
        return q, MethodChoice(*(Method.INTEGRAL_OSC_SIMPL,) * 4)
    q = _integrals.osc_eval(p, sc, tol=cfg.quad_tol,
                            mode=_integrals.OscMode.FULL)
    return q, MethodChoice(*(Method.INTEGRAL_OSC_FULL,) * 4)


def evaluate(a: float, x: float,
             scaling: ScalingMode = ScalingMode.UNSCALED,
             config: DispatchConfig = DEFAULT_CONFIG) -> EvalReport:
    """Evaluate K_ia(x), K'_ia(x), L_ia(x), L'_ia(x).

    Unscaled mode raises RangeError outside the representable region; scaled
    mode works throughout x > 0.
    """
    p = OrderArg(a, x)
    guard = range_guard(p, config.guard, scaling)
    if guard is not GuardStatus.OK:
        raise RangeError(
            f"unscaled evaluation not representable at a={a}, x={x} "
            f"(use scaled mode)")
    quad, choice = _scaled_eval(p, config)
    if scaling is ScalingMode.UNSCALED:
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        quad = FunctionQuad(quad.k * f, quad.kp * f,
                            quad.l / f, quad.lp / f, scaling)
    est = max(_EST_ACCURACY[m] for m in
              (choice.k, choice.kp, choice.l, choice.lp))
    return EvalReport(quad, choice, guard, est)


# ---------------------------------------------------------------------------
# selfcheck: Wronskian sweep plus cross-method seam strips
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    points: int = 10000
    seed: int = 0
    a_lo: float = 1e-3
    a_hi: float = 200.0
    x_lo: float = 1e-3
    x_hi: float = 200.0


@dataclass(frozen=True)
class StripResult:
    name: str
    max_rel_diff: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.max_rel_diff <= self.tol


@dataclass(frozen=True)
class SelfCheckReport:
    n_points: int
    max_wronskian: float
    median_wronskian: float
    region_stats: dict
    strips: tuple
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def _halton(i: int, base: int) -> float:
    f = 1.0
    r = 0.0
    while i > 0:
        f /= base
        r += f * (i % base)
        i //= base
    return r


def halton_grid(spec: GridSpec):
    """Quasi-random log-uniform points, seed-rotated (Cranley-Patterson)."""
    rot1 = _halton(spec.seed + 1, 5)
    rot2 = _halton(spec.seed + 1, 7)
    la0, la1 = math.log(spec.a_lo), math.log(spec.a_hi)
    lx0, lx1 = math.log(spec.x_lo), math.log(spec.x_hi)
    for i in range(1, spec.points + 1):
        u = (_halton(i, 2) + rot1) % 1.0
        v = (_halton(i, 3) + rot2) % 1.0
        yield math.exp(la0 + u * (la1 - la0)), math.exp(lx0 + v * (lx1 - lx0))


def _rel_diff(q1: FunctionQuad, q2: FunctionQuad, kp_only: bool = False) -> float:
    pairs = [(q1.k, q2.k), (q1.kp, q2.kp)]
    if not kp_only:
        pairs += [(q1.l, q2.l), (q1.lp, q2.lp)]
    return max(abs(u - v) / max(abs(u), abs(v)) for u, v in pairs)


def _seam_strips(tol: float):
    """The six declared overlap strips; each yields (name, tol, diff-fn)."""
    sc = ScalingMode.SCALED

    def series_vs_cf():
        worst = 0.0
        for x in (1.4, 1.45, 1.5, 1.55, 1.6):
            p = OrderArg(1.0, x)
            qs = _series.series_eval(p, sc)
            kv, kpv = _cf.cf_eval(p, sc)
            worst = max(worst, abs(kv - qs.k) / abs(qs.k),
                        abs(kpv - qs.kp) / abs(qs.kp))
        return worst

    def series_vs_osc():
        worst = 0.0
        for x in (3.5, 3.75, 4.0):
            p = OrderArg(10.0, x)
            qs = _series.series_eval(p, sc)
            qo = _integrals.osc_eval(p, sc, tol=1e-13)
            worst = max(worst, _rel_diff(qs, qo))
        return worst

    def cf_vs_uniform():
        worst = 0.0
        for a in (30.0, 100.0):
            for z in (1.15, 1.2, 1.25):
                p = OrderArg(a, a * z)
                qu = _uniform.uniform_eval(p, sc)
                kv, kpv = _cf.cf_eval(p, sc)
                worst = max(worst, abs(kv - qu.k) / abs(qu.k),
                            abs(kpv - qu.kp) / abs(qu.kp))
        return worst

    def uniform_vs_osc():
        worst = 0.0
        for a in (30.0, 100.0):
            for z in (0.8, 0.84, 0.88):
                p = OrderArg(a, a * z)
                qu = _uniform.uniform_eval(p, sc)
                qo = _integrals.osc_eval(p, sc, tol=1e-13)
                worst = max(worst, _rel_diff(qu, qo))
        return worst

    def uniform_vs_mon():
        worst = 0.0
        for a in (30.0, 100.0):
            for z in (1.12, 1.16, 1.2):
                p = OrderArg(a, a * z)
                qu = _uniform.uniform_eval(p, sc)
                qm = _integrals.mon_eval(p, sc, tol=1e-13)
                worst = max(worst, _rel_diff(qu, qm))
        return worst

    def simpl_vs_full():
        worst = 0.0
        for a in (30.0, 100.0):
            p = OrderArg(a, 0.5 * a)
            qs = _integrals.osc_eval(p, sc, tol=1e-13,
                                     mode=_integrals.OscMode.SIMPLIFIED)
            qf = _integrals.osc_eval(p, sc, tol=1e-13)
            worst = max(worst, _rel_diff(qs, qf))
        return worst

    return (("series/cf", tol, series_vs_cf),
            ("series/osc-integral", tol, series_vs_osc),
            ("cf/uniform", tol, cf_vs_uniform),
            ("uniform/osc-integral", tol, uniform_vs_osc),
            ("uniform/mon-integral", tol, uniform_vs_mon),
            ("simplified/full", tol, simpl_vs_full))


def selfcheck(grid: GridSpec = GridSpec(), tol: float = 1e-10,
              config: DispatchConfig = DEFAULT_CONFIG) -> SelfCheckReport:
    """Sweep the grid in scaled mode, checking Wronskians and seam strips."""
    wtol = 1e-11
    failures = []
    residuals = []
    per_region: dict = {r.value: [] for r in Region}
    for a, x in halton_grid(grid):
        rep = evaluate(a, x, ScalingMode.SCALED, config)
        r = abs(rep.quad.wronskian_residual(x))
        residuals.append(r)
        per_region[OrderArg(a, x).region.value].append(r)
        if r > wtol:
            failures.append(
                f"wronskian residual {r:.3e} at a={a:.6g}, x={x:.6g} "
                f"({rep.choice.tag()})")
    strips = []
    if grid.points > 0:
        for name, stol, fn in _seam_strips(tol):
            worst = fn()
            sr = StripResult(name, worst, stol)
            strips.append(sr)
            if not sr.ok:
                failures.append(
                    f"strip {name}: rel diff {worst:.3e} > {stol:.1e}")
    region_stats = {
        name: (max(v), statistics.median(v), len(v)) if v else (0.0, 0.0, 0)
        for name, v in per_region.items()}
    return SelfCheckReport(
        n_points=len(residuals),
        max_wronskian=max(residuals) if residuals else 0.0,
        median_wronskian=statistics.median(residuals) if residuals else 0.0,
        region_stats=region_stats,
        strips=tuple(strips),
        failures=tuple(failures[:50]))
