"""Modified Bessel functions of imaginary order.

K_ia(x) and L_ia(x) are the numerically satisfactory real solution pair of
x^2 w'' + x w' + (a^2 - x^2) w = 0 on x > 0, with Wronskian
K L' - K' L = 1/x.  This package evaluates both functions and their
x-derivatives in double precision, unscaled or exponentially scaled,
selecting among power series, a continued fraction, large-x expansions,
Airy-type uniform expansions and non-oscillating integral representations
by region of the (x, a) plane.
"""

from ._backend import backend_name
from .core import (Family, FunctionQuad, GuardStatus, OrderArg,
                   RangeGuardConfig, Region, ScalingMode, dominant_exponent,
                   ExponentKind, range_guard, scale_factor_log,
                   stable_kernels)
from .driver import (DEFAULT_CONFIG, DispatchConfig, EvalReport, GridSpec,
                     Method, MethodChoice, SelfCheckReport, evaluate,
                     selfcheck)
from .errors import (AccuracyLossError, DomainError, NoConvergenceError,
                     OutOfValidityError, RangeError)

__version__ = "0.1.0"

__all__ = [
    "AccuracyLossError", "DEFAULT_CONFIG", "DispatchConfig", "DomainError",
    "EvalReport", "ExponentKind", "Family", "FunctionQuad", "GridSpec",
    "GuardStatus", "Method", "MethodChoice", "NoConvergenceError",
    "OrderArg", "OutOfValidityError", "RangeError", "RangeGuardConfig",
    "Region", "ScalingMode", "SelfCheckReport", "backend_name",
    "dominant_exponent", "evaluate", "range_guard", "scale_factor_log",
    "selfcheck", "stable_kernels", "__version__",
]
