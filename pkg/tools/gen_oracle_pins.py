#!/usr/bin/env python3
"""Regenerate tests/fixtures/pins.json.

Extended-precision brute-force oracle for the test suite: K_ia, L_ia and
x-derivatives from mpmath (50 significant digits), written as 25-digit
decimal strings.  The a = 0 block pins K_0, -K_1, I_0, I_1; the general
block pins a grid across all dispatch regions.

Run:  python3 tools/gen_oracle_pins.py
"""

from __future__ import annotations

import json
import os

import mpmath as mp

mp.mp.dps = 50

OUT = os.path.join(os.path.dirname(__file__), os.pardir,
                   "tests", "fixtures", "pins.json")


def quad(a, x):
    """K, K', L, L' for order ia at x, via the defining combinations of
    modified Bessel functions of order +-ia."""
    a = mp.mpf(a)
    x = mp.mpf(x)
    k = mp.besselk(1j * a, x).real
    kp = mp.diff(lambda t: mp.besselk(1j * a, t).real, x)
    lf = lambda t: ((mp.besseli(-1j * a, t) + mp.besseli(1j * a, t)) / 2).real
    l = lf(x)
    lp = mp.diff(lf, x)
    return [mp.nstr(v, 25) for v in (k, kp, l, lp)]


def main():
    pins_a0 = {}
    for x in ("0.5", "1", "5", "10", "50"):
        xm = mp.mpf(x)
        pins_a0[x] = {
            "K0": mp.nstr(mp.besselk(0, xm), 25),
            "mK1": mp.nstr(-mp.besselk(1, xm), 25),
            "I0": mp.nstr(mp.besseli(0, xm), 25),
            "I1": mp.nstr(mp.besseli(1, xm), 25),
        }
    general = []
    grid = [
        ("0.1", "0.2"), ("0.5", "1.1"), ("1", "0.3"), ("1", "2"),
        ("1", "8"), ("1", "25"), ("2", "1"), ("3", "3.1"), ("5", "2"), ("5", "20"),
        ("8", "8"), ("10", "4"), ("10", "10.5"), ("12", "30"), ("12", "60"),
        ("20", "11"), ("24", "23"), ("30", "14"), ("30", "29"),
        ("30", "34"), ("50", "40"), ("60", "180"), ("100", "50"),
        ("100", "101"), ("100", "130"),
    ]
    for a, x in grid:
        general.append({"a": a, "x": x, "kl": quad(a, x)})
    scaled = []
    for a, x in [("200", "90"), ("200", "205"), ("400", "100"),
                 ("1000", "500"), ("1000", "2000")]:
        am, xm = mp.mpf(a), mp.mpf(x)
        if xm >= am:
            s = mp.sqrt(xm * xm - am * am) + am * mp.asin(am / xm)
        else:
            s = am * mp.pi / 2
        es = mp.exp(s)
        k, kp, l, lp = [mp.mpf(v) for v in quad(a, x)]
        scaled.append({"a": a, "x": x, "kl_scaled": [
            mp.nstr(k * es, 25), mp.nstr(kp * es, 25),
            mp.nstr(l / es, 25), mp.nstr(lp / es, 25)]})
    with open(OUT, "w") as fh:
        json.dump({"a0": pins_a0, "general": general, "scaled": scaled},
                  fh, indent=1)
    print(f"wrote {os.path.normpath(OUT)}")


if __name__ == "__main__":
    main()
