"""Vanishing sets and structural predicates for small permutation groups."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from sympy import isprime

from ..errors import InputError
from ..vanishing import VanishingReport, report_from_columns
from .chartable import DEFAULT_MAX_CLASSES, GroupCharacterTable, character_table
from .perm import (
    Perm,
    PermGroup,
    center,
    commutator,
    is_normal,
    mul,
    quotient,
)


def table_of(G: PermGroup, max_classes: int = DEFAULT_MAX_CLASSES) -> GroupCharacterTable:
    """Character table of G, computed once and kept on the group object."""
    cached = G.__dict__.get("_character_table")
    if cached is None:
        cached = character_table(G, max_classes)
        G.__dict__["_character_table"] = cached
    return cached


def vanishing_classes(table: GroupCharacterTable) -> list[Optional[int]]:
    """Per class: index of the first character vanishing there, or None."""
    out = []
    for j in range(len(table.class_sizes)):
        out.append(next((i for i in range(len(table)) if table.is_zero(i, j)), None))
    return out


def vanishing_set(G: PermGroup, max_classes: int = DEFAULT_MAX_CLASSES) -> VanishingReport:
    table = table_of(G, max_classes)
    wit = vanishing_classes(table)
    labels = table.class_labels()
    return report_from_columns(
        G.name, G.order, labels, table.class_sizes,
        lambda j: None if wit[j] is None else f"X{wit[j] + 1}",
    )


def pv(G: PermGroup) -> Fraction:
    return vanishing_set(G).pv


def pnv(G: PermGroup) -> Fraction:
    return vanishing_set(G).pnv


def vanishing_elements(G: PermGroup) -> frozenset:
    table = table_of(G)
    wit = vanishing_classes(table)
    cc = table.classes
    return frozenset(G.elements[i] for j, m in enumerate(cc.members) if wit[j] is not None for i in m)


def nonvanishing_elements(G: PermGroup) -> frozenset:
    return G.element_set - vanishing_elements(G)


# -- index-two subgroups and the pv = 1/2 structure --------------------------------

def index_two_subgroups(G: PermGroup) -> list[frozenset]:
    """Kernels of the surjections G -> C2.

    A sign on each generator extends to a homomorphism iff labelling the
    Cayley graph by products of signs is consistent.
    """
    gens = G.gens
    kernels = set()
    for mask in range(1, 2 ** len(gens)):
        signs = [(mask >> i) & 1 for i in range(len(gens))]
        label = {G.identity: 0}
        stack = [G.identity]
        ok = True
        while stack and ok:
            x = stack.pop()
            for g, s in zip(gens, signs):
                y = mul(g, x)
                v = label[x] ^ s
                if y in label:
                    if label[y] != v:
                        ok = False
                        break
                else:
                    label[y] = v
                    stack.append(y)
        if ok:
            kernels.add(frozenset(x for x, v in label.items() if v == 0))
    return sorted(kernels, key=lambda k: sorted(k))


def _generating_set(elements: Iterable[Perm], degree: int) -> list[Perm]:
    gens: list[Perm] = []
    span = {tuple(range(degree))}
    for x in elements:
        if x in span:
            continue
        gens.append(x)
        span = set(PermGroup(degree, gens, cap=len(span) * 2 + 1_000_000).elements)
    return gens


def _abelian_set(elements: Sequence[Perm], degree: int) -> bool:
    gens = _generating_set(elements, degree)
    return all(mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


def half_type_witness(G: PermGroup) -> Optional[frozenset]:
    """An abelian F of index 2, containing Z(G), on which G/F acts fixed-point-freely mod Z(G).

    For h outside F and x in F the commutator [h, x] does not depend on the
    choice of h (F is abelian), so one h is enough.
    """
    Z = center(G).element_set
    for F in index_two_subgroups(G):
        if not Z <= F:
            continue
        if not _abelian_set(sorted(F), G.degree):
            continue
        h = next(x for x in G.elements if x not in F)
        if all(commutator(h, x) not in Z for x in F if x not in Z):
            return F
    return None


def is_half_type(G: PermGroup) -> bool:
    """G/Z(G) is Frobenius with abelian kernel F/Z(G) and complement of order 2."""
    return half_type_witness(G) is not None


# -- defect zero ------------------------------------------------------------------

def has_p_defect_zero(table: GroupCharacterTable, p: int) -> list[int]:
    """Row indices of characters with p not dividing |G| / chi(1)."""
    return [i for i, d in enumerate(table.degrees) if (table.order // d) % p]


def verify_defect_zero_vanishing(G: PermGroup, p: int) -> bool:
    """Every p-defect-zero character vanishes on every p-singular class."""
    if not isprime(p) or G.order % p:
        raise InputError(f"{p} is not a prime divisor of |G| = {G.order}")
    table = table_of(G)
    singular = [j for j, o in enumerate(table.classes.orders) if o % p == 0]
    return all(table.is_zero(i, j) for i in has_p_defect_zero(table, p) for j in singular)


# -- quotients --------------------------------------------------------------------

def quotient_pv_check(G: PermGroup, normal_gens: Iterable[Sequence[int]]):
    """(pv(G), pv(G/N), |N n van(G)| / |G|) where N is generated by normal_gens."""
    N = G.subgroup(normal_gens, name="N")
    if not is_normal(G, N):
        raise InputError("the given subgroup is not normal")
    Q = quotient(G, N)
    van = vanishing_elements(G)
    inside = sum(1 for x in N.elements if x in van)
    return pv(G), pv(Q), Fraction(inside, G.order)
