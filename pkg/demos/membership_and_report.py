#!/usr/bin/env python3
"""Membership checking and the coefficient report.

Feeds a few b-vectors to the validator, shows why the bad ones bounce,
then prints the full functional report for two members of interest.
"""

from __future__ import annotations

from fractions import Fraction as F

from ucv.model import CoefficientReport, NonMember, extremal_catalog, validate

CANDIDATES = [
    ("lambda=1 extremal", F(1), ("2", "1")),
    ("interior point", F(1, 2), ("1/4", "1/8", "0", "1/16")),
    ("budget exceeded", F(1, 2), ("0", "1", "0", "0")),
    ("negative coefficient", F(1), ("1", "-1/2")),
    ("zero inside the disk", F(1), ("3", "0", "0", "0")),
]


def main() -> None:
    for label, lam, b in CANDIDATES:
        try:
            member = validate(lam, b)
        except NonMember as exc:
            print(f"{label:<22s} REJECTED: {exc.reason}")
        else:
            used = member.lemma_sum()
            print(f"{label:<22s} member, budget used {used} of {lam}")

    print()
    for name, lam in (("FLambda", F(1)), ("HalfZ3", F(1, 2))):
        member = extremal_catalog(name, lam)
        report = CoefficientReport.from_member(member)
        print(f"--- {name} at lambda = {lam}: b = {tuple(str(x) for x in member.b)}")
        for field in ("a2", "a3", "a4", "a5", "A2", "A3", "A4",
                      "gamma1", "gamma2", "gamma3",
                      "h2f", "h3f", "h2inv", "h3inv", "z23", "z24"):
            print(f"  {field:<7s} = {str(report.value(field)):>8s}")
        print()


if __name__ == "__main__":
    main()
