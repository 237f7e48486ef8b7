"""Scan the flip-flop couplings (f, g) and map where B exceeds 2.

Defaults: a = b = 0, c = 1, mediator in the +y state. Pass a grid size as the
first argument (41 reproduces the full scan, about five seconds).
"""

import sys

import numpy as np

from temporal_witness import SweepConfig, run_sweep

n = int(sys.argv[1]) if len(sys.argv) > 1 else 21
res = run_sweep(SweepConfig(grid_n=n))
print(f"{n}x{n} grid, violation fraction {res.violation_fraction:.3f}")
print("global max:", res.global_max)

# Coarse text contour: '#' above 2.4, '+' above 2, '.' at or below 2.
grid = res.max_b.reshape(n, n)
f_axis, g_axis = SweepConfig(grid_n=n).axes()
for j in range(n - 1, -1, -1):
    row = "".join("#" if v > 2.4 else "+" if v > 2 else "." for v in grid[:, j])
    print(f"g={g_axis[j]:5.2f} {row}")
print("      f from", f_axis[0], "to", f_axis[-1])

# Reflecting g leaves the scan unchanged; reflecting (f, g) jointly does not.
print("g-reflection asymmetry:", np.max(np.abs(grid - grid[:, ::-1])))
print("(f,g)-reflection asymmetry:", np.max(np.abs(grid - grid[::-1, ::-1])))
