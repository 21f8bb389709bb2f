"""Double-exponential (tanh-sinh) trapezoidal quadrature.

Finite intervals are mapped through x(t) = (b+a)/2 + (b-a)/2 * tanh(sinh t);
semi-infinite intervals [a, oo) through tau(u) = a + asinh(e^u), u = sinh t.
Both maps turn a smooth integrand into one decaying doubly exponentially in
t, so the equal-mesh trapezoidal sum converges near-exponentially as the mesh
is halved.  The driver halves h starting from H0 until the last two sums
agree to the requested tolerance, reusing all previously evaluated abscissas
(each level only adds the odd multiples of the new mesh).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NoConvergenceError

H0 = 0.5                 # initial mesh size
T_CAP = 6.75             # |t| beyond which mapped weights underflow anyway
LEVELS_MAX = 10          # maximum number of mesh halvings
EPS_TRUNC = 1e-18        # tail term cut-off, relative to the largest term
N_CONSEC = 3             # consecutive negligible terms before a tail stops
VALUE_FLOOR = 2.2250738585072014e-308   # smallest normal double
MIN_SCAN = 3.0           # minimum |t| scanned on the coarsest mesh
# Fused sums share abscissas; a component much smaller than its siblings is
# held to the shared absolute scale instead of its own relative one.
SIBLING_SCALE = 1e-2


@dataclass(frozen=True)
class QuadResult:
    """Outcome of one quadrature: value, last halving delta, work done."""

    value: float
    err_est: float
    levels: int
    evals: int


def _converged(deltas, totals, tol):
    scale = max(abs(t) for t in totals)
    for d, t in zip(deltas, totals):
        if d > tol * max(abs(t), SIBLING_SCALE * scale, VALUE_FLOOR):
            return False
    return True


def _de_sum(g, nsums, tol):
    """Trapezoidal level-doubling driver for a mapped integrand.

    ``g(t)`` returns ``nsums`` already-mapped terms (integrand times map
    jacobian).  Returns (values, err_est, levels, evals, converged).
    """
    sums = [0.0] * nsums
    gmax = [0.0] * nsums
    evals = 0
    sig_hi = 0.0   # largest |t| where a significant term has been seen
    sig_lo = 0.0

    def significant(terms):
        sig = False
        for i in range(nsums):
            v = abs(terms[i])
            if v > gmax[i]:
                gmax[i] = v
            if v > EPS_TRUNC * gmax[i]:
                sig = True
        return sig

    def scan(h, start, step, first_level):
        # Walk one tail direction, adding terms until N_CONSEC consecutive
        # negligible ones occur past the known significant region.
        nonlocal evals, sig_hi, sig_lo
        consec = 0
        t = start
        while abs(t) <= T_CAP:
            terms = g(t)
            evals += 1
            for i in range(nsums):
                sums[i] += terms[i]
            if significant(terms):
                consec = 0
                if t > sig_hi:
                    sig_hi = t
                if t < sig_lo:
                    sig_lo = t
            else:
                consec += 1
                bound = MIN_SCAN if first_level else (sig_hi if step > 0 else -sig_lo)
                if consec >= N_CONSEC and abs(t) >= bound:
                    break
            t += step

    # Level 0: mesh H0 over the whole window.
    terms = g(0.0)
    evals += 1
    for i in range(nsums):
        sums[i] += terms[i]
    significant(terms)
    scan(H0, H0, H0, True)
    scan(H0, -H0, -H0, True)
    totals = [H0 * s for s in sums]
    err = math.inf
    h = H0
    level = 0
    while level < LEVELS_MAX:
        level += 1
        h *= 0.5
        # New abscissas: odd multiples of the refined mesh.
        scan(h, h, 2.0 * h, False)
        scan(h, -h, -2.0 * h, False)
        new_totals = [h * s for s in sums]
        deltas = [abs(n - o) for n, o in zip(new_totals, totals)]
        totals = new_totals
        err = max(deltas)
        if level >= 2 and _converged(deltas, totals, tol):
            return totals, err, level, evals, True
    return totals, err, level, evals, False


def _finite_abscissa(a, b, s):
    """x(s) = (b+a)/2 + (b-a)/2 tanh(s), built from the exact distance to the
    nearer endpoint so integrable endpoint behaviour keeps full precision."""
    if s <= 0.0:
        e = math.exp(2.0 * s)
        return a + (b - a) * e / (1.0 + e)
    e = math.exp(-2.0 * s)
    return b - (b - a) * e / (1.0 + e)


def finite_map(f, a, b):
    """Map f on (a, b) to a doubly-exponentially decaying integrand of t."""
    half = 0.5 * (b - a)

    def g(t):
        s = math.sinh(t)
        if abs(s) > 350.0:
            return 0.0
        c = math.cosh(s)
        w = half * math.cosh(t) / (c * c)
        if w == 0.0:
            return 0.0
        x = _finite_abscissa(a, b, s)
        if x <= a or x >= b:
            return 0.0
        return f(x) * w

    return g


def semiinfinite_map(f, a):
    """Map f on (a, oo) via tau = a + asinh(e^u), u = sinh t."""

    def g(t):
        u = math.sinh(t)
        if u > 300.0:
            tau = a + u + math.log(2.0)
            w = math.cosh(t)
        else:
            eu = math.exp(u)
            if eu == 0.0:
                return 0.0
            tau = a + math.asinh(eu)
            if tau <= a:
                return 0.0
            w = math.cosh(t) * eu / math.hypot(1.0, eu)
        return f(tau) * w

    return g


def finite_map_vec(f, a, b, nsums):
    """finite_map for integrands returning ``nsums`` fused components."""
    half = 0.5 * (b - a)
    zeros = (0.0,) * nsums

    def g(t):
        s = math.sinh(t)
        if abs(s) > 350.0:
            return zeros
        c = math.cosh(s)
        w = half * math.cosh(t) / (c * c)
        if w == 0.0:
            return zeros
        x = _finite_abscissa(a, b, s)
        if x <= a or x >= b:
            return zeros
        return tuple(v * w for v in f(x))

    return g


def semiinfinite_map_vec(f, a, nsums):
    """semiinfinite_map for integrands returning ``nsums`` fused components."""
    zeros = (0.0,) * nsums

    def g(t):
        u = math.sinh(t)
        if u > 300.0:
            tau = a + u + math.log(2.0)
            w = math.cosh(t)
        else:
            eu = math.exp(u)
            if eu == 0.0:
                return zeros
            tau = a + math.asinh(eu)
            if tau <= a:
                return zeros
            w = math.cosh(t) * eu / math.hypot(1.0, eu)
        return tuple(v * w for v in f(tau))

    return g


def _run_scalar(g, tol, where):
    vals, err, levels, evals, ok = _de_sum(lambda t: (g(t),), 1, tol)
    res = QuadResult(vals[0], err, levels, evals)
    if not ok and err > tol * max(abs(vals[0]), VALUE_FLOOR):
        raise NoConvergenceError(
            f"{where}: no convergence after {levels} halvings "
            f"(delta={err:.3e}, value={vals[0]:.6e})")
    return res


def de_finite(f, a, b, tol):
    """Integrate f over the finite interval (a, b); f is never called at the
    endpoints."""
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    return _run_scalar(finite_map(f, a, b), tol, "de_finite")


def de_semiinfinite(f, a, tol):
    """Integrate f over (a, oo); f must decay at least exponentially."""
    return _run_scalar(semiinfinite_map(f, a), tol, "de_semiinfinite")
