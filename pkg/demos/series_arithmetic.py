#!/usr/bin/env python3
"""Exact series arithmetic walkthrough.

Starts from the reciprocal side z/f(z) = 1 + b1 z + b2 z^2 + ..., recovers
the Taylor coefficients of f by exact reciprocal, the inverse-function
coefficients by reversion, and the logarithmic coefficients from
log(f^{-1}(w)/w).  Every number printed is a Fraction; nothing is floated.
"""

from __future__ import annotations

from fractions import Fraction as F

from ucv.series import TruncatedSeries, series_from_polynomial


def show(label: str, s: TruncatedSeries) -> None:
    body = ", ".join(str(c) for c in s.coeffs)
    print(f"{label:<14s} [{body}]  + O(z^{s.order + 1})")


def main() -> None:
    # the lambda = 1 extremal denominator: z/f = (1 + z)^2 = 1 + 2z + z^2
    den = series_from_polynomial([F(1), F(2), F(1)], order=6)
    show("z/f", den)

    f_over_z = den.reciprocal()
    show("f/z", f_over_z)
    show("(z/f)(f/z)", den * f_over_z)  # exactly 1 through the cutoff

    # prepend a zero coefficient to pass from f/z to f itself
    f = TruncatedSeries((F(0),) + f_over_z.coeffs)
    show("f", f)
    finv = f.revert()
    show("f inverse", finv)
    show("f(f inverse)", f.compose(finv))

    # logarithmic coefficients: log(finv(w)/w) carries 2 Gamma_n at w^n
    unit = TruncatedSeries(finv.coeffs[1:])
    log_side = unit.log_unit()
    show("log(finv/w)", log_side)
    gammas = [c / 2 for c in log_side.coeffs[1:4]]
    print("Gamma_1..3    =", ", ".join(str(g) for g in gammas))

    # the same numbers through the closed forms, for comparison
    b1, b2, b3 = F(2), F(1), F(0)
    print()
    print("closed forms at b = (2, 1):")
    print("  a2 = -b1                           =", -b1)
    print("  a3 = b1^2 - b2                     =", b1 * b1 - b2)
    print("  A3 = b2 + b1^2                     =", b2 + b1 * b1)
    print("  G3 = (b3 + 2 b1 b2 + b1^3 / 3) / 2 =", (b3 + 2 * b1 * b2 + b1**3 / F(3)) / 2)


if __name__ == "__main__":
    main()
