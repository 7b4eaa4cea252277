"""Vanishing elements of S_n and A_n, and the class-size bounds on pnv(S_n).

A class is vanishing when some irreducible character is zero on it.  For
large n the exact table is replaced by a superset bound: a non-vanishing
permutation has cycle type (3^a, 2^b, 1^...) with b even, and a, b are
capped by the existence of 3- and 2-cores (an r-core of n - a*r, with a*r
added to its first row, gives a character vanishing on every element with
more than a r-cycles).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InputError, VerificationError
from .partitions import Partition, exists_r_core_of, format_partition
from .symchars import (
    DEFAULT_TABLE_LIMIT,
    alt_table,
    class_size,
    is_even_type,
    sym_table,
)

THRESHOLD = Fraction(193, 2520)  # pnv(S_7)
DEFAULT_EXACT_LIMIT = 18
DEFAULT_BOUND_LIMIT = 105


@dataclass(frozen=True)
class ClassVerdict:
    label: str
    size: int
    witness: Optional[str] = None  # first character (table order) vanishing here


@dataclass
class VanishingReport:
    group_label: str
    order: int
    pv: Fraction
    pnv: Fraction
    nonvanishing_classes: list[ClassVerdict] = field(default_factory=list)
    vanishing_classes: list[ClassVerdict] = field(default_factory=list)

    def check(self) -> None:
        assert self.pv + self.pnv == 1
        total = sum(c.size for c in self.nonvanishing_classes + self.vanishing_classes)
        assert total == self.order, (total, self.order)

    def to_json(self, detail: bool = True) -> dict:
        doc = {
            "group": self.group_label,
            "order": self.order,
            "pv": str(self.pv),
            "pnv": str(self.pnv),
        }
        if detail:
            doc["nonvanishing_classes"] = [
                {"class": c.label, "size": c.size} for c in self.nonvanishing_classes
            ]
            doc["vanishing_classes"] = [
                {"class": c.label, "size": c.size, "witness": c.witness}
                for c in self.vanishing_classes
            ]
        return doc


def report_from_columns(label: str, order: int, classes, sizes, zero_witness) -> VanishingReport:
    """Assemble a report; ``zero_witness(j)`` names a vanishing character or None."""
    nv, van = [], []
    for j, (cls, size) in enumerate(zip(classes, sizes)):
        w = zero_witness(j)
        (van if w is not None else nv).append(ClassVerdict(cls, size, w))
    vsize = sum(c.size for c in van)
    rep = VanishingReport(label, order, Fraction(vsize, order), Fraction(order - vsize, order), nv, van)
    rep.check()
    return rep


def pv_sym(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> VanishingReport:
    table = sym_table(n, limit)
    cols = list(zip(*table.values)) if table.values else []

    def witness(j):
        for lam, v in zip(table.labels, cols[j]):
            if v == 0:
                return format_partition(lam)
        return None

    return report_from_columns(
        f"S{n}", table.order, [format_partition(m) for m in table.classes],
        table.class_sizes, witness,
    )


def pv_alt(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> VanishingReport:
    """pv(A_n) from the A_n table, cross-checked against 2*pv(S_n) - 1."""
    table = alt_table(n, limit)

    def witness(j):
        for ch, row in zip(table.labels, table.values):
            if row[j].is_zero():
                return ch.label()
        return None

    rep = report_from_columns(
        f"A{n}", table.order, [c.label() for c in table.classes], table.class_sizes, witness,
    )
    via_sym = 2 * pv_sym(n, limit).pv - 1
    if rep.pv != via_sym:
        raise VerificationError(
            f"pv(A{n}) = {rep.pv} from the A_n table but 2*pv(S{n})-1 = {via_sym}"
        )
    return rep


# -- candidate cycle types and bounds -----------------------------------------

def min_cycle_bound(n: int, r: int) -> int:
    """Smallest a >= 0 such that an r-core of n - a*r exists.

    No non-vanishing element of S_n has more than this many r-cycles.
    """
    if n < 0:
        raise InputError("n must be non-negative")
    if r < 2:
        raise InputError("r must be at least 2")
    a = 0
    while not exists_r_core_of(n - a * r, r):
        a += 1
    return a


@dataclass(frozen=True)
class CandidateTypeSet:
    n: int
    max_three_cycles: int
    max_two_cycles: int
    types: tuple[Partition, ...]

    def moved_points(self) -> int:
        """Most points moved by any candidate type."""
        return max((self.n - t.multiplicities().get(1, 0) for t in self.types), default=0)


def _type(n: int, a: int, b: int) -> Partition:
    return Partition([3] * a + [2] * b + [1] * (n - 3 * a - 2 * b))


def candidate_types(n: int) -> CandidateTypeSet:
    """Cycle types (3^a, 2^b, 1^rest) a non-vanishing permutation can have."""
    if n < 1:
        raise InputError("n must be positive")
    A = min_cycle_bound(n, 3)
    B = min_cycle_bound(n, 2)
    types = [
        _type(n, a, b)
        for a in range(A + 1)
        for b in range(0, B + 1, 2)
        if 3 * a + 2 * b <= n
    ]
    return CandidateTypeSet(n, A, B, tuple(types))


def pnv_upper_bound(n: int) -> Fraction:
    cand = candidate_types(n)
    return Fraction(sum(class_size(t) for t in cand.types), math.factorial(n))


def moved_points_bound(n: int) -> int:
    """3*floor(2*sqrt(n)) + 2*floor(3*sqrt(n/2)), in integer arithmetic."""
    if n < 1:
        raise InputError("n must be positive")
    # floor(sqrt(x)) == isqrt(floor(x)) for real x >= 0
    return 3 * math.isqrt(4 * n) + 2 * math.isqrt(9 * n // 2)


def factorial_bound(n: int, moved: int) -> Optional[Fraction]:
    """pnv <= 1/(n - moved)! when every non-vanishing element moves <= moved points."""
    if moved > n:
        return None
    return Fraction(1, math.factorial(n - moved))


def check_tail(lo: int = 106, hi: int = 10**6) -> Optional[int]:
    """First n in [lo, hi] with n - m_n < 4, or None if there is none."""
    for n in range(lo, hi + 1):
        if n - (3 * math.isqrt(4 * n) + 2 * math.isqrt(9 * n // 2)) < 4:
            return n
    return None


@dataclass
class BoundCheck:
    n: int
    mode: str  # "exact", "bound" or "factorial"
    pnv: Fraction
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"n": self.n, "mode": self.mode, "pnv": str(self.pnv),
                "threshold": str(THRESHOLD), "pass": self.passed, **self.detail}


def check_exact(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> BoundCheck:
    rep = pv_sym(n, limit)
    ok = rep.pnv <= THRESHOLD and ((rep.pnv == THRESHOLD) == (n == 7))
    return BoundCheck(n, "exact", rep.pnv, ok, {
        "nonvanishing_classes": [c.label for c in rep.nonvanishing_classes],
    })


def check_bound(n: int) -> BoundCheck:
    cand = candidate_types(n)
    bound = pnv_upper_bound(n)
    detail = {
        "max_three_cycles": cand.max_three_cycles,
        "max_two_cycles": cand.max_two_cycles,
        "candidate_types": [format_partition(t) for t in cand.types],
    }
    if bound <= THRESHOLD:
        return BoundCheck(n, "bound", bound, True, detail)
    m_n = moved_points_bound(n)
    fb = factorial_bound(n, m_n)
    detail["m_n"] = m_n
    if fb is None:
        return BoundCheck(n, "factorial", bound, False, detail)
    return BoundCheck(n, "factorial", fb, fb <= THRESHOLD, detail)


@dataclass
class MinimumReport:
    checks: list[BoundCheck]
    tail_range: Optional[tuple[int, int]] = None
    tail_failure: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and self.tail_failure is None

    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        doc = {"pass": self.passed, "threshold": str(THRESHOLD),
               "checks": [c.to_json() for c in self.checks]}
        if self.tail_range:
            doc["tail"] = {"range": list(self.tail_range),
                           "first_failure": self.tail_failure}
        return doc


def verify_symmetric_minimum(
    exact_limit: int = DEFAULT_EXACT_LIMIT,
    bound_limit: int = DEFAULT_BOUND_LIMIT,
    tail_hi: Optional[int] = None,
    table_limit: int = DEFAULT_TABLE_LIMIT,
) -> MinimumReport:
    """pv(S_n) >= pv(S_7) for n >= 5: exact tables, then class-size bounds.

    Exact range: pnv(S_n) <= 193/2520 with equality only at n = 7.  Bound
    range: the candidate-class bound is <= 193/2520.  If ``tail_hi`` is
    given, n - m_n >= 4 is also scanned for bound_limit < n <= tail_hi.
    """
    if exact_limit > table_limit:
        raise InputError(f"exact limit {exact_limit} exceeds table limit {table_limit}")
    if bound_limit < exact_limit:
        raise InputError("bound limit must be at least the exact limit")
    checks = [check_exact(n, table_limit) for n in range(5, exact_limit + 1)]
    checks += [check_bound(n) for n in range(max(exact_limit + 1, 5), bound_limit + 1)]
    rep = MinimumReport(checks)
    if tail_hi is not None:
        lo = bound_limit + 1
        rep.tail_range = (lo, tail_hi)
        rep.tail_failure = check_tail(lo, tail_hi)
    return rep


def nonvanishing_types_sym(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> list[Partition]:
    from .partitions import parse_partition

    return [parse_partition(c.label) for c in pv_sym(n, limit).nonvanishing_classes]


def all_nonvanishing_even(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> bool:
    return all(is_even_type(t) for t in nonvanishing_types_sym(n, limit))
