"""Property suites over constructed group families.

Statements about all finite groups cannot be checked by computation; these
suites check them on explicit families: the builtins plus seeded random
direct products and quotients.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .groups import (
    alternating,
    center,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    extraspecial,
    frobenius,
    half_type_witness,
    is_solvable,
    nonvanishing_elements,
    pnv,
    pv,
    quaternion8,
    quotient,
    quotient_pv_check,
    symmetric,
    verify_defect_zero_vanishing,
)
from .groups.perm import PermGroup
from .vanishing import pv_alt, pv_sym


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self) -> dict:
        return {"suite": self.suite, "pass": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def builtin_family() -> list[PermGroup]:
    gs = [cyclic(k) for k in (1, 2, 3, 4, 6)]
    gs += [dihedral(k) for k in (3, 4, 5, 6, 7, 8, 9, 10, 15)]
    gs += [symmetric(n) for n in range(1, 7)]
    gs += [alternating(n) for n in range(3, 8)]
    gs += [frobenius(p, q) for p, q in ((5, 2), (5, 4), (7, 2), (7, 3), (7, 6),
                                       (11, 2), (11, 5), (13, 3), (13, 4))]
    gs += [extraspecial(p) for p in (2, 3, 5)]
    gs.append(quaternion8())
    return gs


def _small_pool() -> list[PermGroup]:
    return [cyclic(2), cyclic(3), cyclic(4), symmetric(3), dihedral(4), dihedral(5),
            quaternion8(), alternating(4), frobenius(7, 3), frobenius(5, 4), dihedral(6)]


def random_family(seed: int = 0, count: int = 24, max_order: int = 600) -> list[PermGroup]:
    """Seeded direct products of small groups and quotients of those products."""
    rng = random.Random(seed)
    pool = _small_pool()
    out: list[PermGroup] = []
    while len(out) < count:
        G, H = rng.choice(pool), rng.choice(pool)
        if G.order * H.order > max_order:
            continue
        P = direct_product(G, H)
        kind = rng.choice(("product", "mod_center", "mod_factor", "mod_derived"))
        if kind == "product":
            out.append(P)
        elif kind == "mod_center":
            Z = center(P)
            if Z.order == 1:
                out.append(P)
                continue
            Q = quotient(P, P.subgroup(Z.elements))
            Q.name = f"({P.name})/Z"
            out.append(Q)
        elif kind == "mod_factor":
            # quotient by the first factor: H again, acting on cosets
            first = [g for g in P.gens[: len(G.gens)]]
            Q = quotient(P, P.subgroup(first))
            Q.name = f"({P.name})/{G.name}"
            out.append(Q)
        else:
            D = derived_subgroup(P)
            Q = quotient(P, D)
            Q.name = f"({P.name})/D"
            out.append(Q)
    return out


def _run(suite: str, groups: Iterable[PermGroup], test: Callable[[PermGroup], tuple[bool, str]]) -> SuiteResult:
    res = SuiteResult(suite)
    for G in groups:
        ok, detail = test(G)
        res.add(G.name, ok, detail)
    return res


def lower_bound_suite(groups: Iterable[PermGroup]) -> SuiteResult:
    """Non-abelian groups have pv >= 1/2; abelian ones have pv = 0."""
    def test(G):
        v = pv(G)
        if G.is_abelian():
            return v == 0, f"abelian, pv={v}"
        return v >= Fraction(1, 2), f"pv={v}"
    return _run("lower-bound", groups, test)


def half_classification_suite(groups: Iterable[PermGroup]) -> SuiteResult:
    """pv = 1/2 exactly for the groups with the index-2 Frobenius structure."""
    def test(G):
        v = pv(G)
        w = half_type_witness(G) is not None
        return w == (v == Fraction(1, 2)), f"pv={v}, structure={'yes' if w else 'no'}"
    return _run("half-classification", groups, test)


def small_pv_suite(groups: Iterable[PermGroup]) -> SuiteResult:
    """pv <= 2/3 forces solvability; pv < 2/3 forces abelian or pv = 1/2."""
    res = _run("small-pv", groups, lambda G: _small_pv_test(G))
    for n in (5, 6, 7):
        v = pv(alternating(n))
        res.add(f"pv(A{n}) > 3/4", v > Fraction(3, 4), f"pv={v}")
    v5 = pv(alternating(5))
    res.add("pv(A5) > 2/3", v5 > Fraction(2, 3), f"pv={v5}")
    return res


def _small_pv_test(G: PermGroup) -> tuple[bool, str]:
    v = pv(G)
    ok = True
    if v <= Fraction(2, 3):
        ok = is_solvable(G)
    if v < Fraction(2, 3):
        ok = ok and (G.is_abelian() or v == Fraction(1, 2))
    return ok, f"pv={v}"


def product_pairs() -> list[tuple[PermGroup, PermGroup]]:
    a = [symmetric(3), dihedral(4), quaternion8(), frobenius(7, 3), cyclic(3), alternating(4),
         dihedral(5), frobenius(5, 4)]
    pairs = [(a[i], a[j]) for i in range(len(a)) for j in range(i, len(a))
             if a[i].order * a[j].order <= 500]
    return pairs


def identity_suite() -> SuiteResult:
    """Exact identities on named groups.

    Multiplicativity of pnv over direct products, defect-zero vanishing,
    the quotient inequality, nv = Z for the small p-groups, pv of Frobenius
    groups with cyclic complement, and pv(A_n) = 2 pv(S_n) - 1.
    """
    res = SuiteResult("lemmas")
    half = Fraction(1, 2)

    for G, H in product_pairs():
        P = direct_product(G, H)
        lhs, rhs = pnv(P), pnv(G) * pnv(H)
        res.add(f"pnv({G.name} x {H.name}) = pnv*pnv", lhs == rhs, f"{lhs} vs {rhs}")
    S3 = symmetric(3)
    cube = direct_product(direct_product(S3, S3), S3)
    res.add("pnv(S3^3) = (1/2)^3", pnv(cube) == half ** 3, str(pnv(cube)))

    for G, p in ((alternating(5), 5), (symmetric(5), 5), (alternating(5), 3),
                 (alternating(6), 5), (symmetric(4), 2), (alternating(7), 7)):
        res.add(f"defect zero vanishing {G.name}, p={p}", verify_defect_zero_vanishing(G, p))

    S4 = symmetric(4)
    for G, gens, name in (
        (S3, [(1, 2, 0)], "S3/A3"),
        (S3, [], "S3/1"),
        (S4, [(1, 0, 3, 2), (2, 3, 0, 1)], "S4/V4"),
        (S4, [(1, 2, 0, 3), (1, 0, 3, 2)], "S4/A4"),
        (quaternion8(), [], "Q8/1"),
    ):
        g, q, extra = quotient_pv_check(G, gens)
        res.add(f"pv({name}) quotient inequality", g >= q + extra, f"{g} >= {q} + {extra}")

    for G, expected in ((dihedral(4), Fraction(3, 4)), (quaternion8(), Fraction(3, 4)),
                        (extraspecial(3), Fraction(8, 9)), (extraspecial(5), Fraction(24, 25)),
                        (dihedral(8), Fraction(7, 8))):
        nv = nonvanishing_elements(G)
        Z = center(G).element_set
        v = pv(G)
        res.add(f"nv({G.name}) = Z and pv = {expected}", nv == Z and v == expected, f"pv={v}")
    for p in (2, 3, 5):
        v = pv(extraspecial(p))
        res.add(f"pv(extraspecial {p}) = 1 - 1/p^2", v == 1 - Fraction(1, p * p), str(v))

    for p, q in ((7, 3), (5, 4), (11, 5), (13, 3), (7, 6), (13, 4)):
        G = frobenius(p, q)
        kernel = G.subgroup([G.gens[0]])
        v = pv(G)
        van = G.element_set - nonvanishing_elements(G)
        ok = van == G.element_set - kernel.element_set and v == 1 - Fraction(1, q)
        res.add(f"frobenius {p}:{q}: van = G - F, pv = 1 - 1/{q}", ok, f"pv={v}")
    for k in (3, 5, 7, 9, 15):
        res.add(f"pv(D{k}) = 1/2", pv(dihedral(k)) == half)

    for G in (direct_product(S3, cyclic(2)), direct_product(S3, cyclic(4)),
              direct_product(dihedral(5), cyclic(2)), direct_product(frobenius(7, 2), cyclic(4))):
        res.add(f"central Sylow-2 in kernel: pv({G.name}) = 1/2", pv(G) == half, str(pv(G)))

    for n in range(3, 10):
        a, s = pv_alt(n).pv, pv_sym(n).pv
        res.add(f"pv(A{n}) = 2 pv(S{n}) - 1", a == 2 * s - 1, f"{a} vs {s}")
    return res
