"""Command-line front end.

    vanprop pv sym 7
    vanprop pv builtin:frobenius:7:3 --detail
    vanprop table sym 5 --csv
    vanprop cores 2 6
    vanprop bounds 11
    vanprop verify 1.4 --exact 18 --bound 105

Exit status: 0 all checks pass, 1 assertion failure, 2 input error,
3 resource cap.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError, ResourceLimitError
from .groups import DEFAULT_CAP, load_group, table_of, vanishing_set
from .partitions import format_partition, r_cores
from .suites import (
    builtin_family,
    half_classification_suite,
    identity_suite,
    lower_bound_suite,
    random_family,
    small_pv_suite,
)
from .symchars import alt_table, sym_table
from .vanishing import (
    DEFAULT_BOUND_LIMIT,
    DEFAULT_EXACT_LIMIT,
    candidate_types,
    moved_points_bound,
    pnv_upper_bound,
    pv_alt,
    pv_sym,
    verify_symmetric_minimum,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
FORMATS = ("json", "csv", "text")
TAIL_LIMIT = 10**6
VERIFY_TARGETS = {
    "1.1": "non-abelian members of the family have pv >= 1/2",
    "1.3": "pv = 1/2 exactly for the index-2 Frobenius structure",
    "1.4": "pnv(S_n) <= 193/2520 for n >= 5, equality only at n = 7",
    "1.6": "pv <= 2/3 forces solvability",
    "lemmas": "products, p-groups, Frobenius groups, defect zero, quotients",
}


@dataclass
class RunConfig:
    command: str
    target: list[str]
    exact_limit: int = DEFAULT_EXACT_LIMIT
    bound_limit: int = DEFAULT_BOUND_LIMIT
    fmt: str = "text"
    out: Optional[str] = None
    cap: int = DEFAULT_CAP
    seed: int = 0

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise InputError(f"format must be one of {FORMATS}")
        if min(self.exact_limit, self.bound_limit, self.cap) < 1:
            raise InputError("limits must be positive")


def approx(x: Fraction) -> str:
    return f"≈ {float(x):.6f}"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _int(s: str, what: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {s!r}") from None


# -- targets --------------------------------------------------------------------------

def _family_target(target: Sequence[str]):
    """('sym', n), ('alt', n) or (None, source)."""
    if not target:
        raise InputError("missing target")
    if target[0] in ("sym", "alt"):
        if len(target) != 2:
            raise InputError(f"usage: {target[0]} N")
        return target[0], _int(target[1], "n")
    if len(target) != 1:
        raise InputError(f"expected one group source, got {' '.join(target)!r}")
    return None, target[0]


def _vanishing_report(cfg: RunConfig):
    kind, arg = _family_target(cfg.target)
    if kind == "sym":
        if arg < 1:
            raise InputError("n must be positive")
        return pv_sym(arg)
    if kind == "alt":
        if arg < 3:
            raise InputError("alternating groups are taken for n >= 3")
        return pv_alt(arg)
    return vanishing_set(load_group(arg, cfg.cap))


# -- commands -------------------------------------------------------------------------

def cmd_pv(cfg: RunConfig, detail: bool) -> tuple[str, int]:
    rep = _vanishing_report(cfg)
    if cfg.fmt == "json":
        doc = rep.to_json(detail)
        doc["pv_decimal"] = approx(rep.pv)
        return _dump(doc), EXIT_OK
    if cfg.fmt == "csv":
        rows = [["class", "size", "vanishing", "witness"]]
        rows += [[c.label, c.size, "no", ""] for c in rep.nonvanishing_classes]
        rows += [[c.label, c.size, "yes", c.witness] for c in rep.vanishing_classes]
        return _csv(rows), EXIT_OK
    lines = [f"{rep.pv}\t{approx(rep.pv)}"]
    if detail:
        lines.append(f"group {rep.group_label}, order {rep.order}, pnv = {rep.pnv}")
        for c in rep.nonvanishing_classes:
            lines.append(f"  {c.label:>14}  size {c.size:<10} non-vanishing")
        for c in rep.vanishing_classes:
            lines.append(f"  {c.label:>14}  size {c.size:<10} vanishing ({c.witness})")
    return "\n".join(lines) + "\n", EXIT_OK


def _table(cfg: RunConfig):
    kind, arg = _family_target(cfg.target)
    if kind == "sym":
        return sym_table(arg)
    if kind == "alt":
        return alt_table(arg)
    return table_of(load_group(arg, cfg.cap))


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    table = _table(cfg)
    if cfg.fmt == "json":
        return _dump(table.to_json()), EXIT_OK
    text = table.to_csv()
    if cfg.fmt == "csv":
        return text, EXIT_OK
    rows = list(csv.reader(io.StringIO(text)))
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows) + "\n", EXIT_OK


def cmd_cores(cfg: RunConfig, r: int, n: int) -> tuple[str, int]:
    if n < 0 or r < 2:
        raise InputError("need r >= 2 and n >= 0")
    cores = r_cores(n, r)
    if cfg.fmt == "json":
        return _dump({"r": r, "n": n, "cores": [list(c) for c in cores]}), EXIT_OK
    if cfg.fmt == "csv":
        return _csv([["core"]] + [[format_partition(c)] for c in cores]), EXIT_OK
    return "[" + ",".join(format_partition(c) for c in cores) + "]\n", EXIT_OK


def cmd_bounds(cfg: RunConfig, n: int) -> tuple[str, int]:
    if n < 1:
        raise InputError("n must be positive")
    cand = candidate_types(n)
    bound = pnv_upper_bound(n)
    a_vals = list(range(cand.max_three_cycles + 1))
    b_vals = list(range(0, cand.max_two_cycles + 1, 2))
    doc = {
        "n": n,
        "A": cand.max_three_cycles,
        "B": cand.max_two_cycles,
        "a_values": a_vals,
        "b_values": b_vals,
        "m_n": moved_points_bound(n),
        "candidate_types": [format_partition(t) for t in cand.types],
        "pnv_bound": str(bound),
    }
    if cfg.fmt == "json":
        return _dump(doc), EXIT_OK
    if cfg.fmt == "csv":
        rows = [["key", "value"]] + [[k, json.dumps(v) if isinstance(v, list) else v] for k, v in doc.items()]
        return _csv(rows), EXIT_OK
    lines = [
        f"n = {n}",
        f"A(n) = {doc['A']}, B(n) = {doc['B']}, m_n = {doc['m_n']}",
        "a in {" + ",".join(map(str, a_vals)) + "}",
        "b in {" + ",".join(map(str, b_vals)) + "}",
        "candidate types: " + " ".join(doc["candidate_types"]),
        f"pnv bound: {bound}\t{approx(bound)}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _family(name: str, seed: int, count: int):
    if name == "builtins":
        return builtin_family()
    if name == "random":
        return random_family(seed, count)
    if name == "all":
        return builtin_family() + random_family(seed, count)
    raise InputError(f"unknown family {name!r}")


def cmd_verify(cfg: RunConfig, target: str, family: str, count: int, tail: int) -> tuple[str, int]:
    if target == "1.4":
        if tail > TAIL_LIMIT * 100:
            raise ResourceLimitError("tail", tail, TAIL_LIMIT * 100)
        rep = verify_symmetric_minimum(cfg.exact_limit, cfg.bound_limit, tail_hi=tail)
        code = EXIT_OK if rep.passed else EXIT_FAIL
        if cfg.fmt == "json":
            return _dump(rep.to_json()), code
        rows = [(str(c.n), c.mode, str(c.pnv), approx(c.pnv), "pass" if c.passed else "FAIL")
                for c in rep.checks]
        if cfg.fmt == "csv":
            return _csv([["n", "mode", "pnv", "decimal", "result"]] + rows), code
        lines = [f"n={n:>4}  {mode:<6} pnv={p:<28} {d}  {res}" for n, mode, p, d, res in rows]
        if rep.tail_range:
            lo, hi = rep.tail_range
            first = rep.tail_failure
            lines.append(f"tail n - m_n >= 4 for {lo} <= n <= {hi}: "
                         + ("pass" if first is None else f"FAIL at n={first}"))
        lines.append("PASS" if rep.passed else "FAIL")
        return "\n".join(lines) + "\n", code

    if target == "lemmas":
        res = identity_suite()
    else:
        groups = _family(family, cfg.seed, count)
        suite = {"1.1": lower_bound_suite, "1.3": half_classification_suite,
                 "1.6": small_pv_suite}.get(target)
        if suite is None:
            raise InputError(f"unknown verification target {target!r}")
        res = suite(groups)
    code = EXIT_OK if res.passed else EXIT_FAIL
    if cfg.fmt == "json":
        return _dump(res.to_json()), code
    if cfg.fmt == "csv":
        return _csv([["check", "result", "detail"]]
                    + [[c.name, "pass" if c.passed else "FAIL", c.detail] for c in res.checks]), code
    lines = [f"{'pass' if c.passed else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if c.detail else "")
             for c in res.checks]
    lines.append(f"{res.suite}: {'PASS' if res.passed else 'FAIL'} "
                 f"({sum(c.passed for c in res.checks)}/{len(res.checks)})")
    return "\n".join(lines) + "\n", code


# -- parser -----------------------------------------------------------------------------

def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=FORMATS, default=d("text"), help="output format")
    p.add_argument("--out", default=d(None), help="write output to this file")
    p.add_argument("--cap", type=int, default=d(DEFAULT_CAP), help="element cap for groups")
    p.add_argument("--seed", type=int, default=d(0), help="seed for random families")
    p.add_argument("--exact-limit", type=int, default=d(DEFAULT_EXACT_LIMIT))
    p.add_argument("--bound-limit", type=int, default=d(DEFAULT_BOUND_LIMIT))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vanprop", description="Vanishing elements of finite groups.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pv", help="proportion of vanishing elements")
    p.add_argument("target", nargs="+", help="'sym N', 'alt N', builtin:NAME:ARGS or a group file")
    p.add_argument("--detail", action="store_true", help="per-class listing")

    p = sub.add_parser("table", help="character table")
    p.add_argument("target", nargs="+")
    p.add_argument("--csv", action="store_true", help="same as --format csv")

    p = sub.add_parser("cores", help="list the r-cores of n")
    p.add_argument("r", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("bounds", help="cycle-count bounds and candidate types for S_n")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("target", choices=VERIFY_TARGETS, metavar="TARGET",
                   help="; ".join(f"{k}: {v}" for k, v in VERIFY_TARGETS.items()))
    p.add_argument("--exact", type=int, dest="exact_limit", default=argparse.SUPPRESS)
    p.add_argument("--bound", type=int, dest="bound_limit", default=argparse.SUPPRESS)
    p.add_argument("--tail", type=int, default=TAIL_LIMIT, help="scan n - m_n >= 4 up to here")
    p.add_argument("--family", choices=("builtins", "random", "all"), default="all")
    p.add_argument("--count", type=int, default=24, help="size of the random family")

    for sp in sub.choices.values():
        _global_options(sp, suppress=True)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[str, int, Optional[str]]:
    """Parse and execute; returns (output text, exit code, output path)."""
    args = build_parser().parse_args(argv)
    fmt = "csv" if getattr(args, "csv", False) else args.format
    targets = args.target if args.command in ("pv", "table") else []
    cfg = RunConfig(args.command, list(targets), args.exact_limit,
                    args.bound_limit, fmt, args.out, args.cap, args.seed)
    if cfg.command == "pv":
        text, code = cmd_pv(cfg, args.detail)
    elif cfg.command == "table":
        text, code = cmd_table(cfg)
    elif cfg.command == "cores":
        text, code = cmd_cores(cfg, args.r, args.n)
    elif cfg.command == "bounds":
        text, code = cmd_bounds(cfg, args.n)
    else:
        text, code = cmd_verify(cfg, args.target, args.family, args.count, args.tail)
    return text, code, cfg.out


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        text, code, out = run(argv)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return EXIT_CAP
    except AssertionError as e:
        print(f"assertion failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
