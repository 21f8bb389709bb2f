"""Command-line interface: eval, table, selfcheck, region-map.

TSV on stdout, diagnostics on stderr.  Exit codes: 0 ok, 1 selfcheck
failure, 2 usage/domain error, 3 out of unscaled range, 4 no convergence.
"""

from __future__ import annotations

import argparse
import math
import sys

from .core import ExponentKind, OrderArg, ScalingMode, dominant_exponent
from .driver import DEFAULT_CONFIG, GridSpec, evaluate, selfcheck
from .errors import DomainError, NoConvergenceError, RangeError

_HEADER = "#a\tx\tK\tK'\tL\tL'\tscaling\tmethod"


def _fmt(v: float) -> str:
    return f"{v:.16e}"


def _emit_point(a: float, x: float, scaled: bool) -> None:
    mode = ScalingMode.SCALED if scaled else ScalingMode.UNSCALED
    rep = evaluate(a, x, mode)
    q = rep.quad
    print("\t".join((_fmt(a), _fmt(x), _fmt(q.k), _fmt(q.kp), _fmt(q.l),
                     _fmt(q.lp), mode.value, rep.choice.tag())))


def _cmd_eval(args) -> int:
    print(_HEADER)
    _emit_point(args.a, args.x, args.scaled)
    return 0


def _linspace(lo: float, hi: float, n: int):
    if n == 1:
        yield lo
        return
    step = (hi - lo) / (n - 1)
    for i in range(n):
        yield lo + i * step


def _cmd_table(args) -> int:
    print(_HEADER)
    for a in _linspace(args.a_min, args.a_max, args.a_steps):
        for x in _linspace(args.x_min, args.x_max, args.x_steps):
            _emit_point(a, x, args.scaled)
    return 0


def _cmd_selfcheck(args) -> int:
    rep = selfcheck(GridSpec(points=args.points, seed=args.seed),
                    tol=args.tol)
    print(f"#points\t{rep.n_points}")
    print(f"max_wronskian\t{_fmt(rep.max_wronskian)}")
    print(f"median_wronskian\t{_fmt(rep.median_wronskian)}")
    for name, (mx, med, n) in rep.region_stats.items():
        print(f"region_{name}\t{n}\t{_fmt(mx)}\t{_fmt(med)}")
    for s in rep.strips:
        print(f"strip_{s.name}\t{_fmt(s.max_rel_diff)}\t"
              f"{'ok' if s.ok else 'FAIL'}")
    for f in rep.failures:
        print(f"failure\t{f}", file=sys.stderr)
    if rep.n_points and rep.max_wronskian > 1e-11:
        return 1
    return 0 if rep.ok else 1


def _cmd_region_map(args) -> int:
    limit = args.limit * math.log(10.0)
    a_max = 2.0 * limit / math.pi
    print("#a\tx_max")
    print(f"{_fmt(a_max)}\t{_fmt(0.0)}")
    n = args.points
    for i in range(n + 1):
        a = a_max * (1.0 - i / n)
        # lambda(x, a) grows in x; bisect for lambda = limit
        lo, hi = max(a, 1e-300), limit + a + 1.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            lam = dominant_exponent(OrderArg(a if a > 0 else 0.0, mid),
                                    ExponentKind.LAMBDA_MON)
            if lam < limit:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-9 * max(1.0, hi):
                break
        print(f"{_fmt(a)}\t{_fmt(0.5 * (lo + hi))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="imbessel",
        description="Evaluate the modified Bessel functions of imaginary "
                    "order K_ia(x), L_ia(x) and their x-derivatives.")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one point")
    pe.add_argument("--a", type=float, required=True)
    pe.add_argument("--x", type=float, required=True)
    pe.add_argument("--scaled", action="store_true",
                    help="exponentially scaled values")
    pe.set_defaults(fn=_cmd_eval)

    pt = sub.add_parser("table", help="TSV sweep over a rectangle")
    pt.add_argument("--a-min", type=float, required=True)
    pt.add_argument("--a-max", type=float, required=True)
    pt.add_argument("--a-steps", type=int, required=True)
    pt.add_argument("--x-min", type=float, required=True)
    pt.add_argument("--x-max", type=float, required=True)
    pt.add_argument("--x-steps", type=int, required=True)
    pt.add_argument("--scaled", action="store_true")
    pt.set_defaults(fn=_cmd_table)

    ps = sub.add_parser("selfcheck",
                        help="Wronskian sweep and cross-method seam checks")
    ps.add_argument("--tol", type=float, default=1e-10)
    ps.add_argument("--points", type=int, default=10000)
    ps.add_argument("--seed", type=int, default=0)
    ps.set_defaults(fn=_cmd_selfcheck)

    pr = sub.add_parser("region-map",
                        help="boundary of the unscaled computable range")
    pr.add_argument("--limit", type=float, default=300.0,
                    help="decimal exponent of the computable magnitude")
    pr.add_argument("--points", type=int, default=100)
    pr.set_defaults(fn=_cmd_region_map)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        print(f"imbessel: {exc}", file=sys.stderr)
        return 2
    except RangeError as exc:
        print(f"imbessel: {exc}", file=sys.stderr)
        return 3
    except NoConvergenceError as exc:
        print(f"imbessel: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
