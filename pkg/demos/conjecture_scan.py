#!/usr/bin/env python3
"""Scan the coefficient growth conjecture |a_n| <= 1 + lambda + ... + lambda^(n-1).

Coarse resolution on purpose; the point is the shape of the table, not
the last digit.  A FAIL row would be a counterexample candidate worth
re-running at a finer step before believing.
"""

from __future__ import annotations

from fractions import Fraction as F

from ucv.search import SearchConfig, conjecture_scan


def main() -> None:
    cfg = SearchConfig(grid_step=F(1, 12), refine_rounds=2)
    print(f"{'n':>2s} {'lam':>4s} {'searched |a_n|':>15s} {'bound':>10s} {'gap':>10s} status")
    for n in range(2, 6):
        for lam in (F(1, 2), F(1)):
            cert = conjecture_scan(n, lam, cfg)
            print(f"{n:>2d} {str(lam):>4s} {cert.searched_value:>15.8f} "
                  f"{cert.closed_form:>10.6f} {cert.gap:>10.2e} {cert.status}")
    print()
    print("argmax drifts toward the single-factor extremal (1 + z)(1 + lam z):")
    cert = conjecture_scan(4, F(1, 2), cfg)
    print("  n=4, lam=1/2:", tuple(str(x) for x in cert.argmax))


if __name__ == "__main__":
    main()
