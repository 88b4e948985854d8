#!/usr/bin/env python3
"""Sweep the eigenvalue arguments of the confined walk operator over alpha.

Every quarter fraction p/(4q) with q up to Q_MAX contributes 4q
unimodular eigenvalues.  Plotting their principal arguments against
alpha produces a self-similar band pattern; here it is rendered as a
coarse character raster and also written to butterfly.csv for real
plotting tools.  The dataset is symmetric under alpha -> 1 - alpha
(with arguments negated), which the raster makes visible.
"""

import csv
import sys

from iqwalk import butterfly

Q_MAX = 16
COLS = 97     # alpha axis resolution, odd so alpha = 1/2 is a column
ROWS = 41     # argument axis resolution, odd so arg = 0 is a row

TWO_PI = 6.283185307179586


def main():
    q_max = int(sys.argv[1]) if len(sys.argv) > 1 else Q_MAX
    grid = [[" "] * COLS for _ in range(ROWS)]
    rows = 0
    with open("butterfly.csv", "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["alpha", "p", "q", "arg"])
        for spec in butterfly(q_max):
            x = round(float(spec.alpha) * (COLS - 1))
            for arg in spec.args:
                writer.writerow([f"{float(spec.alpha):.10f}", spec.p, spec.q,
                                 f"{arg:.12f}"])
                y = round((0.5 - arg / TWO_PI) * (ROWS - 1))
                grid[y][x] = "*"
                rows += 1
    print(f"q <= {q_max}: {rows} eigenvalue rows written to butterfly.csv\n")
    print("arg  +pi")
    for y, line in enumerate(grid):
        label = " 0" if y == ROWS // 2 else "  "
        print(f"{label}  |{''.join(line)}|")
    print("     -pi")
    print(f"      alpha = 0{' ' * (COLS - 16)}alpha = 1")


if __name__ == "__main__":
    main()
