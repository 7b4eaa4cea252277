#!/usr/bin/env python3
"""Where 2- and 3-cores of n are missing: the cycle-count caps A(n), B(n)."""
import sys

from vanprop.vanishing import candidate_types, pnv_upper_bound

hi = int(sys.argv[1]) if len(sys.argv) > 1 else 60
print(f"{'n':>4} {'A(n)':>5} {'B(n)':>5} {'#types':>7}  pnv bound")
for n in range(1, hi + 1):
    c = candidate_types(n)
    print(f"{n:>4} {c.max_three_cycles:>5} {c.max_two_cycles:>5} {len(c.types):>7}  {float(pnv_upper_bound(n)):.3e}")
