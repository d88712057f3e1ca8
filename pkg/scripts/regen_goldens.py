#!/usr/bin/env python3
"""Regenerate the frozen golden files under tests/golden/.

The files are produced by the oracle routes only (brute-force enumeration for
totals and distributions, the residue computation for partial fractions);
the closed-form routes are then tested against these frozen files.  Rerun
after any intentional change to the oracle output formats.
"""
from __future__ import annotations

from pathlib import Path

from seprec.formulas import pfd_golden_lines
from seprec.oracle import MAX_DIST_N, MAX_TOTAL_N, distributions_golden_lines, totals_golden_lines

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"

PFD_MAX_K = 15


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    targets = {
        f"totals_n{MAX_TOTAL_N}.txt": totals_golden_lines(MAX_TOTAL_N),
        f"distributions_n{MAX_DIST_N}.txt": distributions_golden_lines(MAX_DIST_N),
        f"pfd_k{PFD_MAX_K}.txt": pfd_golden_lines(PFD_MAX_K),
    }
    for name, lines in targets.items():
        path = GOLDEN_DIR / name
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path} ({len(lines)} lines)")


if __name__ == "__main__":
    main()
