#!/usr/bin/env python3
"""Run every bundled case study and print the full check-by-check reports."""

import sys

from logcentre.casestudies import CASE_STUDIES, run_case_study


def main() -> int:
    ok = True
    for name in CASE_STUDIES:
        report = run_case_study(name)
        print(report.to_text())
        print()
        ok = ok and report.overall
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
