#!/usr/bin/env python3
"""pv over the builtin groups and a seeded batch of products and quotients."""
import argparse
from fractions import Fraction

from vanprop.groups import is_half_type, is_solvable, pv
from vanprop.suites import builtin_family, random_family

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--seed", type=int, default=0)
ap.add_argument("--count", type=int, default=24)
args = ap.parse_args()

rows = []
for G in builtin_family() + random_family(args.seed, args.count):
    v = pv(G)
    rows.append((v, G.name, G.order, G.is_abelian(), is_solvable(G), is_half_type(G)))

rows.sort()
print(f"{'group':<24} {'order':>6} {'pv':>12} {'≈':>9}  abelian solvable half")
for v, name, order, ab, solv, half in rows:
    print(f"{name:<24} {order:>6} {str(v):>12} {float(v):>9.6f}  "
          f"{'y' if ab else '-':^7} {'y' if solv else '-':^8} {'y' if half else '-':^4}")

nonab = [r for r in rows if not r[3]]
print(f"\nsmallest non-abelian pv: {nonab[0][0]} ({nonab[0][1]})")
print(f"non-solvable with pv <= 2/3: {[r[1] for r in rows if r[0] <= Fraction(2, 3) and not r[4]]}")
