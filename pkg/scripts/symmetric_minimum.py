#!/usr/bin/env python3
"""Tabulate pnv(S_n) against 193/2520: exact tables, then class-size bounds.

    python scripts/symmetric_minimum.py --exact 18 --bound 105 --json report.json
"""
import argparse
import json
import sys

from vanprop.vanishing import THRESHOLD, verify_symmetric_minimum


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exact", type=int, default=18)
    ap.add_argument("--bound", type=int, default=105)
    ap.add_argument("--tail", type=int, default=10**6)
    ap.add_argument("--json", help="also write the full report here")
    args = ap.parse_args()

    rep = verify_symmetric_minimum(args.exact, args.bound, tail_hi=args.tail)
    print(f"{'n':>4} {'mode':<6} {'pnv / bound':>14}  ratio to {THRESHOLD}")
    for c in rep.checks:
        ratio = float(c.pnv / THRESHOLD)
        extra = ""
        if c.mode == "bound":
            extra = f"  A={c.detail['max_three_cycles']} B={c.detail['max_two_cycles']}"
        print(f"{c.n:>4} {c.mode:<6} {float(c.pnv):>14.6e}  {ratio:.3e}{extra}")
    if rep.tail_range:
        lo, hi = rep.tail_range
        status = "holds" if rep.tail_failure is None else f"fails at {rep.tail_failure}"
        print(f"n - m_n >= 4 on [{lo}, {hi}]: {status}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rep.to_json(), fh, indent=1)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
