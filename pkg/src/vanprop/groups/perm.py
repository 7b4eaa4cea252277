"""Finite permutation groups given by generators, enumerated by closure.

Permutations are image tuples on ``0..d-1``.  The product ``mul(x, y)`` is
composition ``x o y`` (apply y first).
"""
from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Optional, Sequence

from ..errors import InputError, ResourceLimitError

DEFAULT_CAP = 20_000

Perm = tuple[int, ...]


def identity(d: int) -> Perm:
    return tuple(range(d))


def mul(x: Perm, y: Perm) -> Perm:
    return tuple([x[i] for i in y])


def inverse(x: Perm) -> Perm:
    out = [0] * len(x)
    for i, xi in enumerate(x):
        out[xi] = i
    return tuple(out)


def commutator(x: Perm, y: Perm) -> Perm:
    """x^-1 y^-1 x y."""
    return mul(mul(inverse(x), inverse(y)), mul(x, y))


def cycle_type(x: Perm) -> tuple[int, ...]:
    seen = [False] * len(x)
    lens = []
    for i in range(len(x)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = x[j]
                k += 1
            lens.append(k)
    return tuple(sorted(lens, reverse=True))


def perm_order(x: Perm) -> int:
    from math import lcm

    return lcm(*cycle_type(x)) if x else 1


def check_perm(x: Sequence[int], d: int) -> Perm:
    x = tuple(int(v) for v in x)
    if len(x) != d or sorted(x) != list(range(d)):
        raise InputError(f"not a permutation of 0..{d - 1}: {list(x)}")
    return x


class PermGroup:
    """Subgroup of Sym(d) generated by ``gens``.

    Elements are enumerated lazily; the enumeration refuses to grow past
    ``cap`` elements.
    """

    def __init__(
        self,
        degree: int,
        gens: Iterable[Sequence[int]] = (),
        cap: int = DEFAULT_CAP,
        name: Optional[str] = None,
        elements: Optional[Iterable[Perm]] = None,
    ):
        if degree < 0:
            raise InputError("degree must be non-negative")
        self.degree = degree
        self.cap = cap
        self.gens = tuple(g for g in (check_perm(g, degree) for g in gens) if g != identity(degree))
        self.name = name or f"<{len(self.gens)} gens on {degree} points>"
        if elements is not None:
            elts = list(elements)
            if len(elts) > cap:
                raise ResourceLimitError("group order", len(elts), cap)
            self.__dict__["elements"] = elts

    def __repr__(self) -> str:
        return f"PermGroup({self.name}, order={self.order})"

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    @cached_property
    def elements(self) -> list[Perm]:
        e = self.identity
        seen = {e}
        out = [e]
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for g in self.gens:
                y = mul(g, x)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    if len(out) > self.cap:
                        raise ResourceLimitError(f"order of {self.name}:", len(out), self.cap)
                    queue.append(y)
        return out

    @cached_property
    def index(self) -> dict[Perm, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x) -> bool:
        return tuple(x) in self.index

    def is_abelian(self) -> bool:
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(self.gens) for b in self.gens[i + 1:])

    def subgroup(self, gens: Iterable[Sequence[int]], name: Optional[str] = None) -> "PermGroup":
        gens = [check_perm(g, self.degree) for g in gens]
        for g in gens:
            if g not in self:
                raise InputError(f"{list(g)} is not an element of {self.name}")
        return PermGroup(self.degree, gens, self.cap, name)

    def same_elements(self, other: "PermGroup") -> bool:
        return self.element_set == other.element_set


def center(G: PermGroup) -> PermGroup:
    """Elements commuting with every generator."""
    z = [x for x in G.elements if all(mul(x, g) == mul(g, x) for g in G.gens)]
    return PermGroup(G.degree, z, G.cap, f"Z({G.name})", elements=z)


def normal_closure(G: PermGroup, gens: Iterable[Perm]) -> PermGroup:
    gens = [g for g in gens if g != G.identity]
    while True:
        K = PermGroup(G.degree, gens, G.cap)
        new = None
        for g in G.gens:
            ginv = inverse(g)
            for s in K.gens:
                c = mul(mul(g, s), ginv)
                if c not in K:
                    new = c
                    break
            if new is not None:
                break
        if new is None:
            return K
        gens.append(new)


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = {commutator(a, b) for a in G.gens for b in G.gens}
    K = normal_closure(G, sorted(comms))
    K.name = f"[{G.name},{G.name}]"
    return K


def derived_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            return series
        series.append(D)
        if D.order == 1:
            return series


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order == 1


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    for g in G.gens:
        ginv = inverse(g)
        for n in N.gens:
            if mul(mul(g, n), ginv) not in N:
                return False
    return True


def direct_product(G: PermGroup, H: PermGroup, cap: Optional[int] = None) -> PermGroup:
    """G x H acting on the disjoint union of the two point sets."""
    cap = cap if cap is not None else max(G.cap, H.cap)
    if G.order * H.order > cap:
        raise ResourceLimitError(f"order of {G.name} x {H.name}:", G.order * H.order, cap)
    dg, dh = G.degree, H.degree
    gens = [tuple(g) + tuple(range(dg, dg + dh)) for g in G.gens]
    gens += [tuple(range(dg)) + tuple(dg + x for x in h) for h in H.gens]
    return PermGroup(dg + dh, gens, cap, f"{G.name}x{H.name}")


def quotient(G: PermGroup, N: PermGroup) -> PermGroup:
    """G/N realized by the action of G on the left cosets of N."""
    if not is_normal(G, N):
        raise InputError(f"{N.name} is not normal in {G.name}")
    coset_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    for g in G.elements:
        if g in coset_of:
            continue
        cid = len(reps)
        reps.append(g)
        for n in N.elements:
            coset_of[mul(g, n)] = cid
    gens = [tuple(coset_of[mul(s, r)] for r in reps) for s in G.gens]
    return PermGroup(len(reps), gens, G.cap, f"{G.name}/{N.name}")


def regular_representation(elements: Sequence, op, gens: Sequence, cap: int = DEFAULT_CAP,
                           name: Optional[str] = None) -> PermGroup:
    """Left-regular permutation group of an abstract group given by a product."""
    pos = {x: i for i, x in enumerate(elements)}
    perms = [tuple(pos[op(g, x)] for x in elements) for g in gens]
    return PermGroup(len(elements), perms, cap, name)
