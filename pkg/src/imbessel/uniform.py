"""Airy-type uniform asymptotic evaluation for large |a| around x = |a|.

The Airy argument is -a^(2/3) zeta(z), z = x/a; the coefficient functions
F, G (values) and P, Q (derivatives) are truncated at four terms using the
precomputed Maclaurin tables in eta = 2^(-1/3) zeta.  In scaled mode the
explicit e^{-+ a pi/2} prefactors are stripped exactly; for x > a the
residual factor e^{+-lambda_tilde} is combined with the exponentially
scaled Airy functions so nothing overflows anywhere in the scaled range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _uniform_tables as _tab
from .airy import airy_scaled
from .core import (ExponentKind, Family, FunctionQuad, OrderArg, ScalingMode,
                   dominant_exponent, scale_factor_log)
from .errors import DomainError, OutOfValidityError

A_MIN_DEFAULT = 25.0
_CBRT2 = 2.0 ** (1.0 / 3.0)
_SERIES_HALFWIDTH = 0.25   # |z-1| below which the mapping uses its series
_ETA_TABLE_CUT = 0.8       # |eta| below which phi, chi use the tables


def _horner(coef, x):
    acc = 0.0
    for c in reversed(coef):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class TurningVars:
    """Mapped variables at one (z, zeta) point."""

    z: float
    zeta: float
    eta: float
    phi: float
    chi: float


@dataclass(frozen=True)
class UniformCoeffTables:
    """Immutable Maclaurin tables of the expansion coefficient functions."""

    radius: float
    phi: tuple
    chi: tuple
    a_s: tuple      # 4 series
    b_s: tuple
    c_s: tuple
    d_s: tuple


_DEFAULT_TABLES = UniformCoeffTables(
    radius=_tab.ETA_RADIUS,
    phi=_tab.PHI,
    chi=_tab.CHI,
    a_s=(_tab.A0, _tab.A1, _tab.A2, _tab.A3),
    b_s=(_tab.B0, _tab.B1, _tab.B2, _tab.B3),
    c_s=(_tab.C0, _tab.C1, _tab.C2, _tab.C3),
    d_s=(_tab.D0, _tab.D1, _tab.D2, _tab.D3),
)


def default_tables() -> UniformCoeffTables:
    return _DEFAULT_TABLES


def zeta_of_z(z: float) -> float:
    """The turning-point mapping: positive for z < 1, zero at 1, negative
    beyond; series around z = 1, closed branches elsewhere."""
    if z <= 0.0:
        raise DomainError(f"z must be positive, got {z}")
    u = 1.0 - z
    if abs(u) <= _SERIES_HALFWIDTH:
        return _horner(_tab.ZETA_FROM_U, u)
    if z < 1.0:
        w = math.sqrt((1.0 - z) * (1.0 + z))
        f = math.log((1.0 + w) / z) - w
        return (1.5 * f) ** (2.0 / 3.0)
    w = math.sqrt((z - 1.0) * (z + 1.0))
    g = w - math.acos(1.0 / z)
    return -((1.5 * g) ** (2.0 / 3.0))


def phi_chi(z: float, zeta: float) -> tuple[float, float]:
    """phi = (4 zeta/(1-z^2))^(1/4) and chi = phi'/phi, removable at z=1."""
    eta = zeta / _CBRT2
    if abs(eta) <= _ETA_TABLE_CUT:
        return _horner(_tab.PHI, eta), _horner(_tab.CHI, eta)
    if z < 1.0:
        omz2 = (1.0 - z) * (1.0 + z)
        phi = (4.0 * zeta / omz2) ** 0.25
        chi = 0.25 / zeta - z * z * math.sqrt(zeta) / (2.0 * omz2 ** 1.5)
        return phi, chi
    zm = -zeta
    z2m1 = (z - 1.0) * (z + 1.0)
    phi = (4.0 * zm / z2m1) ** 0.25
    chi = -0.25 / zm + z * z * math.sqrt(zm) / (2.0 * z2m1 ** 1.5)
    return phi, chi


def turning_vars(p: OrderArg) -> TurningVars:
    z = p.z
    zeta = zeta_of_z(z)
    phi, chi = phi_chi(z, zeta)
    return TurningVars(z, zeta, zeta / _CBRT2, phi, chi)


def coeff_sums(a: float, eta: float,
               tables: UniformCoeffTables) -> tuple[float, float, float, float]:
    """(F, G, P, Q): four-term alternating sums in 1/a^2 of the tables."""
    ia2 = 1.0 / (a * a)
    fv = gv = pv = qv = 0.0
    w = 1.0
    for s in range(4):
        fv += w * _horner(tables.a_s[s], eta)
        gv += w * _horner(tables.b_s[s], eta)
        pv += w * _horner(tables.c_s[s], eta)
        qv += w * _horner(tables.d_s[s], eta)
        w = -w * ia2
    return fv, gv, pv, qv


def uniform_eval(p: OrderArg, scaling: ScalingMode,
                 tables: UniformCoeffTables | None = None,
                 a_min: float = A_MIN_DEFAULT) -> FunctionQuad:
    """Evaluate all four functions by the Airy-type expansions."""
    tables = tables or _DEFAULT_TABLES
    a, x = p.a, p.x
    if a < a_min:
        raise OutOfValidityError(f"uniform expansion needs |a| >= {a_min}")
    tv = turning_vars(p)
    if abs(tv.eta) > tables.radius:
        raise OutOfValidityError(
            f"|eta| = {abs(tv.eta):.3f} outside table radius {tables.radius}")
    fv, gv, pv, qv = coeff_sums(a, tv.eta, tables)
    a13 = a ** (1.0 / 3.0)
    a23 = a13 * a13
    a43 = a23 * a23
    t = -a23 * tv.zeta
    eai, eaip, ebi, ebip, xi = airy_scaled(t)
    kv = math.pi * tv.phi / a13 * (eai * fv + eaip * gv / a43)
    kpv = 2.0 * math.pi / (tv.z * a23 * tv.phi) * (eaip * pv + eai * qv / a23)
    lv = tv.phi / (2.0 * a13) * (ebi * fv + ebip * gv / a43)
    lpv = 1.0 / (tv.z * a23 * tv.phi) * (ebip * pv + ebi * qv / a23)
    if x >= a:
        # residual between lambda_tilde and the Airy scaling exponent
        resid = math.exp(dominant_exponent(p, ExponentKind.LAMBDA_TILDE) - xi)
        kv *= resid
        kpv *= resid
        lv /= resid
        lpv /= resid
    if scaling is ScalingMode.UNSCALED:
        f = math.exp(-scale_factor_log(p, Family.K_FAMILY))
        return FunctionQuad(kv * f, kpv * f, lv / f, lpv / f, scaling)
    return FunctionQuad(kv, kpv, lv, lpv, scaling)
