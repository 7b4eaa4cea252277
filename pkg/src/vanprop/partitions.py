"""Integer partitions: hooks, rim hooks, conjugation and r-cores.

Partitions are stored as weakly decreasing tuples of positive integers and
double as cycle types of permutations.  Rim hooks are handled through
beta-sets (first-column hook lengths), where removing an r-rim hook is the
same as sliding one bead down by r onto an empty position.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 2])
    Traceback (most recent call last):
    ...
    ValueError: parts must be weakly decreasing positive integers: [3, 1, 2]
    >>> Partition((3, 2, 1)).n
    6
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts) or any(
            parts[i] < parts[i + 1] for i in range(len(parts) - 1)
        ):
            raise ValueError(
                f"parts must be weakly decreasing positive integers: {list(parts)}"
            )
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def _trusted(parts: Sequence[int]) -> Partition:
    # skips validation; callers guarantee a decreasing positive sequence
    return tuple.__new__(Partition, parts)


EMPTY = _trusted(())


# -- serialization -----------------------------------------------------------

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[3,2,1]"`` or exponent shorthand ``"[3^1,2^2,1^4]"``."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s.strip():
        return EMPTY
    parts: list[int] = []
    for tok in s.split(","):
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad partition token {tok!r} in {text!r}")
        part = int(m.group(1))
        parts.extend([part] * (int(m.group(2)) if m.group(2) else 1))
    parts.sort(reverse=True)
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


# -- enumeration --------------------------------------------------------------

def iter_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Yield partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    if max_part < 1:
        return
    # iterative "next partition in reverse lex order" on a list of parts
    a = [max_part]
    rem = n - max_part
    while rem:
        k = min(rem, a[-1])
        a.append(k)
        rem -= k
    while True:
        yield _trusted(a)
        # drop trailing ones, then decrement the last part > 1
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        a[-1] -= 1
        rem = ones + 1
        top = a[-1]
        while rem:
            k = min(rem, top)
            a.append(k)
            rem -= k


@lru_cache(maxsize=64)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, reverse-lexicographically ordered.

    The empty partition is the only partition of 0.
    """
    return tuple(iter_partitions(n))


# -- shape statistics ---------------------------------------------------------

def conjugate(lam: Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return EMPTY
    return _trusted([sum(1 for p in lam if p > j) for j in range(lam[0])])


@dataclass(frozen=True)
class HookData:
    lengths: tuple[tuple[int, ...], ...]
    diagonal: Partition

    def multiset(self) -> list[int]:
        return sorted(h for row in self.lengths for h in row)


def hook_data(lam: Sequence[int]) -> HookData:
    """Hook length of every cell, plus the diagonal hooks ``(h11, h22, ...)``."""
    lc = conjugate(lam)
    rows = tuple(
        tuple(lam[i] - j + lc[j] - i - 1 for j in range(lam[i]))
        for i in range(len(lam))
    )
    diag = [rows[i][i] for i in range(len(lam)) if lam[i] > i]
    return HookData(rows, _trusted(diag))


def is_self_conjugate(lam: Sequence[int]) -> bool:
    return tuple(conjugate(lam)) == tuple(lam)


# -- beta-sets and rim hooks --------------------------------------------------

def beta_set(lam: Sequence[int], length: Optional[int] = None) -> list[int]:
    """Decreasing first-column hook lengths, padded to ``length`` beads."""
    ell = len(lam) if length is None else length
    if ell < len(lam):
        raise ValueError("beta-set length shorter than partition")
    return [(lam[i] if i < len(lam) else 0) + ell - 1 - i for i in range(ell)]


def from_beta_set(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    ell = len(b)
    return _trusted([x for x in (b[i] - (ell - 1 - i) for i in range(ell)) if x > 0])


def remove_rim_hook(
    lam: Sequence[int], start_row: int, length: int
) -> Optional[tuple[Partition, int]]:
    """Remove the ``length``-rim hook whose top cell lies in ``start_row``.

    Returns ``(smaller partition, leg length)``, or ``None`` if there is no
    such rim hook.
    """
    if length < 1:
        raise ValueError("rim hook length must be positive")
    if not 0 <= start_row < len(lam):
        raise ValueError(f"start_row {start_row} outside partition {list(lam)}")
    beta = beta_set(lam)
    x = beta[start_row]
    y = x - length
    if y < 0 or y in beta:
        return None
    leg = sum(1 for b in beta if y < b < x)
    beta[start_row] = y
    return from_beta_set(beta), leg


def rim_hooks(lam: Sequence[int], length: int) -> Iterator[tuple[Partition, int]]:
    """All removable rim hooks of the given length, top row ascending."""
    beta = beta_set(lam)
    present = set(beta)
    for i, x in enumerate(beta):
        y = x - length
        if y >= 0 and y not in present:
            leg = sum(1 for b in beta if y < b < x)
            nb = beta.copy()
            nb[i] = y
            yield from_beta_set(nb), leg


# -- cores ----------------------------------------------------------------------

def is_r_core(lam: Sequence[int], r: int) -> bool:
    """True iff no hook length of ``lam`` is divisible by ``r``."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return all(h % r for row in hook_data(lam).lengths for h in row)


def r_core(lam: Sequence[int], r: int) -> Partition:
    """Strip ``r``-rim hooks until none is left."""
    if r < 2:
        raise ValueError("r must be at least 2")
    # on the abacus: push every bead as far down its runner as it goes
    beta = beta_set(lam)
    runners: dict[int, int] = {}
    for b in beta:
        runners[b % r] = runners.get(b % r, 0) + 1
    core_beta = [i + r * k for i, cnt in runners.items() for k in range(cnt)]
    return from_beta_set(core_beta)


def staircase(k: int) -> Partition:
    """(k, k-1, ..., 1), a 2-core of size k(k+1)/2."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _trusted(range(k, 0, -1))


def three_core_families(k: int) -> tuple[Partition, Optional[Partition]]:
    """The even-staircase (2k, 2k-2, ..., 2) and odd-staircase (2k-1, ..., 1).

    Both are 3-cores, of sizes k(k+1) and k^2.  The odd one is undefined
    (``None``) for k = 0.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    even = _trusted(range(2 * k, 0, -2))
    odd = _trusted(range(2 * k - 1, 0, -2)) if k >= 1 else None
    return even, odd


def general_three_core(c: int, d: int, e: int) -> Partition:
    """(2c+d, 2c+d-2, ..., d+2, d^e, (d-1)^2, ..., 1^2), always a 3-core.

    With d = 0 the block of d's is empty and the result is the even
    staircase of length c; in particular (0, 0, e) gives the empty partition.
    """
    if c < 0 or d < 0:
        raise ValueError("c and d must be non-negative")
    if e not in (1, 2):
        raise ValueError(f"e must be 1 or 2, got {e}")
    parts = list(range(2 * c + d, d, -2))
    if d > 0:
        parts += [d] * e
        for v in range(d - 1, 0, -1):
            parts += [v, v]
    return _trusted(parts)


def r_cores(m: int, r: int) -> list[Partition]:
    """All r-cores of size ``m`` in reverse-lexicographic order.

    An r-core is fixed by the bead surplus ``x_i`` on each abacus runner
    (the surpluses sum to zero), and its size is
    ``sum(r*x_i**2/2 + i*x_i)``.  Each surplus is at most
    ``isqrt(2m // r) + 1`` in absolute value.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if m < 0:
        return []
    bound = math.isqrt(2 * m // r) + 1
    base = bound + 1
    out = []
    for head in itertools.product(range(-bound, bound + 1), repeat=r - 1):
        last = -sum(head)
        if abs(last) > bound:
            continue
        surplus = head + (last,)
        if r * sum(x * x for x in surplus) + 2 * sum(
            i * x for i, x in enumerate(surplus)
        ) != 2 * m:
            continue
        beta = [i + r * k for i, x in enumerate(surplus) for k in range(base + x)]
        out.append(from_beta_set(beta))
    return sorted(out, reverse=True)


@lru_cache(maxsize=None)
def exists_r_core_of(m: int, r: int) -> bool:
    """Is there an r-core partition of ``m``?

    For r = 2 the 2-cores are the staircases, so this is "m is triangular".
    Small ``m`` are scanned directly; larger ones use the abacus enumeration.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if m < 0:
        return False
    if m == 0:
        return True
    if r == 2:
        k = (math.isqrt(8 * m + 1) - 1) // 2
        return k * (k + 1) // 2 == m
    if m <= 30:
        return any(is_r_core(lam, r) for lam in iter_partitions(m))
    return bool(r_cores(m, r))
