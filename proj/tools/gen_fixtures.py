#!/usr/bin/env python3
"""Regenerate tests/fixtures/specfun_grid.json with 50-digit mpmath values.

Run once; the output is committed and the C++ build never calls this.
"""
import json
import random
import sys

import mpmath as mp

mp.mp.dps = 50


def w(z):
    return mp.exp(-z * z) * mp.erfc(-1j * z)


def cell(fn, z, v):
    return {
        "fn": fn,
        "re": float(z.real),
        "im": float(z.imag),
        "value_re": mp.nstr(v.real, 30, strip_zeros=False),
        "value_im": mp.nstr(v.imag, 30, strip_zeros=False),
    }


def main(path):
    rng = random.Random(20240611)
    rows = []

    # Faddeeva: mix of upper and lower half-plane, tiny to large moduli,
    # plus arguments along the axes.
    w_args = [0, 1j, 2, -2, 0.5 + 0.5j, 1e-3 + 1e-3j, 30 + 0.1j, -7 + 3j,
              1e3 + 1j, 5j, 0.2 - 0.3j, 3 - 1j, -4 - 2j, 12 - 0.5j]
    while len(w_args) < 34:
        r = 10 ** rng.uniform(-2, 2)
        th = rng.uniform(-0.45, 1.0) * mp.pi
        w_args.append(complex(mp.mpf(r) * mp.cos(th), mp.mpf(r) * mp.sin(th)))
    for z in w_args:
        z = mp.mpc(complex(z))
        rows.append(cell("w", z, w(z)))

    # erf: arguments like (L T^2 +- 2 s^2 (t0 + i g)) / (2 s ...) are mostly
    # real-dominated; keep |Im| <= |Re| + 2 so the value stays representable.
    erf_args = [1, 0.7 + 1.3j, 0.7 - 1.3j, -2.5, 0.01, 3 + 2j, 25 + 1j, -6 + 4j]
    while len(erf_args) < 33:
        x = rng.uniform(-8, 8)
        y = rng.uniform(-1, 1) * (abs(x) + 2)
        erf_args.append(complex(x, y))
    for z in erf_args:
        z = mp.mpc(complex(z))
        rows.append(cell("erf", z, mp.erf(z)))

    # erfi: imaginary-dominated counterparts, kept below overflow.
    erfi_args = [1, 0.3 + 0.2j, 2.5, -1.7, 4 - 3j, 1j, 0.05 - 0.4j, 10 + 9j]
    while len(erfi_args) < 33:
        x = rng.uniform(-9, 9)
        y = rng.uniform(-1, 1) * (abs(x) + 2)
        erfi_args.append(complex(x, y))
    for z in erfi_args:
        z = mp.mpc(complex(z))
        rows.append(cell("erfi", z, mp.erfi(z)))

    assert len(rows) == 100
    with open(path, "w") as fh:
        json.dump({"digits": 50, "rows": rows}, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/specfun_grid.json")
