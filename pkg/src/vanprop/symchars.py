"""Exact irreducible character values of S_n and A_n.

S_n values come from the Murnaghan-Nakayama rule.  A_n values are the
restrictions of S_n characters, except that a self-conjugate label splits
into two characters whose values on the class pair of cycle type h(lambda)
(the diagonal hook lengths) are (t +- sqrt(t * prod h_ii)) / 2.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .cyclotomic import CyclotomicValue, sqrt_cyclotomic
from .errors import InputError, ResourceLimitError
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    hook_data,
    parse_partition,
    rim_hooks,
)

DEFAULT_TABLE_LIMIT = 20


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise ResourceLimitError("table size n =", n, limit)


def _as_partition(lam: Sequence[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


# -- S_n ------------------------------------------------------------------------

def class_size(mu: Sequence[int]) -> int:
    """Number of permutations of cycle type ``mu`` in S_|mu|."""
    mu = _as_partition(mu)
    centralizer = 1
    for part, mult in mu.multiplicities().items():
        centralizer *= part ** mult * math.factorial(mult)
    return math.factorial(mu.n) // centralizer


def sign(mu: Sequence[int]) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def is_even_type(mu: Sequence[int]) -> bool:
    return sign(mu) == 1


def splits_in_alternating(mu: Sequence[int]) -> bool:
    """An S_n class splits in A_n iff its parts are odd and pairwise distinct."""
    return all(p % 2 for p in mu) and len(set(mu)) == len(mu)


class MurnaghanNakayama:
    """Memoized chi^lambda(mu).

    One instance is one cache; tables build a fresh instance so runs are
    reproducible and the memory goes away with the table.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}

    def __len__(self) -> int:
        return len(self._memo)

    def value(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        lam, mu = tuple(lam), tuple(sorted(mu, reverse=True))
        if sum(lam) != sum(mu):
            raise InputError(f"size mismatch: {list(lam)} vs {list(mu)}")
        return self._value(lam, mu)

    def _value(self, lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
        if not mu:
            return 1
        key = (lam, mu)
        memo = self._memo
        if key in memo:
            return memo[key]
        # strip the largest remaining cycle
        r, rest = mu[0], mu[1:]
        total = 0
        for sub, leg in rim_hooks(lam, r):
            v = self._value(sub, rest)
            total += -v if leg & 1 else v
        memo[key] = total
        return total


def mn_value(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lambda evaluated at a permutation of cycle type mu."""
    return MurnaghanNakayama().value(lam, mu)


@dataclass(frozen=True)
class SymCharacterTable:
    n: int
    labels: tuple[Partition, ...]  # characters, rows
    classes: tuple[Partition, ...]  # cycle types, columns
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.factorial(self.n)

    def row(self, lam: Sequence[int]) -> tuple[int, ...]:
        return self.values[self.labels.index(tuple(lam))]

    def entry(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        return self.values[self.labels.index(tuple(lam))][self.classes.index(tuple(mu))]

    def degrees(self) -> tuple[int, ...]:
        j = self.classes.index(tuple([1] * self.n))
        return tuple(row[j] for row in self.values)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": {"characters": [format_partition(l) for l in self.labels],
                       "classes": [format_partition(m) for m in self.classes]},
            "class_sizes": list(self.class_sizes),
            "entries": [list(r) for r in self.values],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SymCharacterTable":
        return cls(
            n=doc["n"],
            labels=tuple(parse_partition(s) for s in doc["labels"]["characters"]),
            classes=tuple(parse_partition(s) for s in doc["labels"]["classes"]),
            values=tuple(tuple(r) for r in doc["entries"]),
            class_sizes=tuple(doc["class_sizes"]),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["character"] + [format_partition(m) for m in self.classes])
        for lam, row in zip(self.labels, self.values):
            w.writerow([format_partition(lam)] + list(row))
        return buf.getvalue()


def sym_table(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> SymCharacterTable:
    if n < 0:
        raise InputError("n must be non-negative")
    _check_limit(n, limit)
    parts = enumerate_partitions(n)
    mn = MurnaghanNakayama()
    values = tuple(tuple(mn._value(lam, mu) for mu in parts) for lam in parts)
    return SymCharacterTable(n, parts, parts, values, tuple(class_size(mu) for mu in parts))


def degrees(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> dict[Partition, int]:
    """chi^lambda(1) for every lambda, by the same recursion on (1^n)."""
    _check_limit(n, limit)
    mn = MurnaghanNakayama()
    ones = (1,) * n
    return {lam: mn._value(lam, ones) for lam in enumerate_partitions(n)}


# -- surds ----------------------------------------------------------------------

def _square_part(m: int) -> tuple[int, int]:
    """Split m = s**2 * f with f squarefree; returns (s, f)."""
    s, f, p = 1, m, 2
    while p * p <= f:
        while f % (p * p) == 0:
            f //= p * p
            s *= p
        p += 1
    return s, f


@dataclass(frozen=True)
class AlgebraicValue:
    """q + c*sqrt(t*m), with m squarefree; sqrt of a negative means i*sqrt(m)."""

    q: Fraction
    c: Fraction = Fraction(0)
    t: int = 1
    m: int = 1

    @classmethod
    def rational(cls, q) -> "AlgebraicValue":
        return cls(Fraction(q))

    @classmethod
    def surd(cls, q, c, radicand: int) -> "AlgebraicValue":
        q, c = Fraction(q), Fraction(c)
        if radicand == 0 or c == 0:
            return cls(q)
        t = 1 if radicand > 0 else -1
        s, f = _square_part(abs(radicand))
        c *= s
        if f == 1 and t == 1:
            return cls(q + c)
        return cls(q, c, t, f)

    def is_zero(self) -> bool:
        # the surd part is irrational or imaginary after normalization
        return self.q == 0 and self.c == 0

    def is_rational(self) -> bool:
        return self.c == 0

    def to_cyclotomic(self) -> CyclotomicValue:
        if self.c == 0:
            return CyclotomicValue.rational(self.q)
        return sqrt_cyclotomic(self.t * self.m) * self.c + self.q

    def to_json(self):
        if self.c == 0:
            return str(self.q)
        return {"q": str(self.q), "c": str(self.c), "t": self.t, "m": self.m}

    @classmethod
    def from_json(cls, obj) -> "AlgebraicValue":
        if isinstance(obj, dict):
            return cls.surd(Fraction(obj["q"]), Fraction(obj["c"]), obj["t"] * obj["m"])
        return cls(Fraction(obj))

    def __str__(self) -> str:
        if self.c == 0:
            return str(self.q)
        root = f"sqrt({self.t * self.m})"
        if not self.q:
            return f"{self.c}*{root}"
        op = "+" if self.c > 0 else "-"
        return f"{self.q}{op}{abs(self.c)}*{root}"


# -- A_n ------------------------------------------------------------------------

class AltClass(NamedTuple):
    cycle_type: Partition
    half: int  # 0 for an unsplit class, +1 / -1 for the two halves

    def label(self) -> str:
        return format_partition(self.cycle_type) + {0: "", 1: "+", -1: "-"}[self.half]


class AltChar(NamedTuple):
    partition: Partition
    half: int  # 0 for a restricted character, +1 / -1 for split ones

    def label(self) -> str:
        return format_partition(self.partition) + {0: "", 1: "+", -1: "-"}[self.half]


def alt_classes(n: int) -> list[AltClass]:
    out = []
    for mu in enumerate_partitions(n):
        if not is_even_type(mu):
            continue
        if splits_in_alternating(mu) and n > 1:
            out += [AltClass(mu, 1), AltClass(mu, -1)]
        else:
            out.append(AltClass(mu, 0))
    return out


def alt_class_size(cls: AltClass) -> int:
    size = class_size(cls.cycle_type)
    return size // 2 if cls.half else size


def canonical_representative(mu: Sequence[int]) -> tuple[int, ...]:
    """Permutation (image list on 0..n-1) with cycles 0->1->..., filled in order.

    This element lies in the (+) half of a split class by convention.
    """
    img = []
    start = 0
    for part in mu:
        img += [start + (i + 1) % part for i in range(part)]
        start += part
    return tuple(img)


def alt_values(
    lam: Sequence[int], mn: Optional[MurnaghanNakayama] = None
) -> tuple[list[AlgebraicValue], list[AlgebraicValue]]:
    """Values of the two constituents chi^{lambda+}, chi^{lambda-} on alt_classes(n).

    Off the class pair of type h(lambda) both equal chi^lambda / 2.  On that
    pair, with t = chi^lambda(h(lambda)) and P = prod h_ii, the (+) character
    takes (t + sqrt(tP))/2 on the (+) class and (t - sqrt(tP))/2 on the
    (-) class; the (-) character is the swap.
    """
    lam = _as_partition(lam)
    if tuple(conjugate(lam)) != tuple(lam):
        raise InputError(f"{format_partition(lam)} is not self-conjugate")
    n = lam.n
    if n < 3:
        raise InputError("split characters need n >= 3")
    mn = mn or MurnaghanNakayama()
    h = hook_data(lam).diagonal
    t = mn.value(lam, h)
    prod = math.prod(h)
    plus, minus = [], []
    for cls in alt_classes(n):
        if tuple(cls.cycle_type) == tuple(h):
            root = AlgebraicValue.surd(Fraction(t, 2), Fraction(cls.half, 2), t * prod)
            conj = AlgebraicValue.surd(Fraction(t, 2), Fraction(-cls.half, 2), t * prod)
            plus.append(root)
            minus.append(conj)
        else:
            v = AlgebraicValue.rational(Fraction(mn.value(lam, cls.cycle_type), 2))
            plus.append(v)
            minus.append(v)
    return plus, minus


@dataclass(frozen=True)
class AltCharacterTable:
    n: int
    labels: tuple[AltChar, ...]
    classes: tuple[AltClass, ...]
    values: tuple[tuple[AlgebraicValue, ...], ...]
    class_sizes: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.factorial(self.n) // 2

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": {"characters": [c.label() for c in self.labels],
                       "classes": [c.label() for c in self.classes]},
            "class_sizes": list(self.class_sizes),
            "entries": [[v.to_json() for v in row] for row in self.values],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["character"] + [c.label() for c in self.classes])
        for ch, row in zip(self.labels, self.values):
            w.writerow([ch.label()] + [str(v) for v in row])
        return buf.getvalue()


def alt_table(n: int, limit: int = DEFAULT_TABLE_LIMIT) -> AltCharacterTable:
    if n < 3:
        raise InputError("alternating tables are built for n >= 3")
    _check_limit(n, limit)
    mn = MurnaghanNakayama()
    classes = alt_classes(n)
    labels: list[AltChar] = []
    rows: list[tuple[AlgebraicValue, ...]] = []
    for lam in enumerate_partitions(n):
        lc = conjugate(lam)
        if tuple(lc) == tuple(lam):
            plus, minus = alt_values(lam, mn)
            labels += [AltChar(lam, 1), AltChar(lam, -1)]
            rows += [tuple(plus), tuple(minus)]
        elif tuple(lam) > tuple(lc):
            labels.append(AltChar(lam, 0))
            rows.append(tuple(AlgebraicValue.rational(mn._value(lam, c.cycle_type))
                              for c in classes))
    return AltCharacterTable(n, tuple(labels), tuple(classes), tuple(rows),
                             tuple(alt_class_size(c) for c in classes))
