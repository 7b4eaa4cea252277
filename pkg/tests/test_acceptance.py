"""Acceptance criteria, each at its stated tolerance (exact) and time budget.

Every criterion records one PASS/FAIL line; conftest prints them in the
terminal summary.  ``python tests/test_acceptance.py`` runs them standalone.
"""
import math
import time
from fractions import Fraction

import pytest

from vanprop.groups import (
    alternating,
    center,
    dihedral,
    direct_product,
    extraspecial,
    frobenius,
    is_half_type,
    is_solvable,
    nonvanishing_elements,
    pnv,
    pv,
    quaternion8,
    symmetric,
    verify_defect_zero_vanishing,
)
from vanprop.oracle import compare_alternating, compare_symmetric
from vanprop.suites import builtin_family, product_pairs, random_family
from vanprop.symchars import alt_table, degrees, sym_table
from vanprop.vanishing import THRESHOLD, check_bound, check_tail, pv_alt, pv_sym

RESULTS: list[str] = []


def record(num, title, budget, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = elapsed < budget
    verdict = "PASS" if ok and in_time else "FAIL"
    RESULTS.append(f"[{verdict}] criterion {num}: {title} ({elapsed:.2f}s / {budget:g}s) {detail}")
    return ok, in_time, elapsed


def _c1():
    want = {1: 0, 2: 0, 3: Fraction(1, 2), 4: Fraction(5, 6), 7: Fraction(2327, 2520)}
    got = {n: pv_sym(n).pv for n in want}
    return got == want, " ".join(f"S{n}={v}" for n, v in got.items())


def _c2():
    from_table = pv_alt(7).pv  # also raises if it disagrees with the S_7 route
    via_sym = 2 * pv_sym(7).pv - 1
    t = alt_table(7)
    direct = Fraction(sum(s for j, s in enumerate(t.class_sizes)
                          if any(row[j].is_zero() for row in t.values)), t.order)
    ok = from_table == via_sym == direct == Fraction(1067, 1260)
    return ok, f"table={direct} 2pv(S7)-1={via_sym}"


def _c3():
    bad = []
    for n in range(5, 19):
        p = pv_sym(n).pnv
        if not (p <= THRESHOLD and (p == THRESHOLD) == (n == 7)):
            bad.append(n)
    for n in range(19, 106):
        c = check_bound(n)
        if not (c.mode == "bound" and c.passed):
            bad.append(n)
    return not bad, f"failures={bad}"


def _c4():
    first = check_tail(106, 10**6)
    return first is None, f"first failure={first}"


def _c5():
    bad = []
    for n in range(1, 13):
        t = sym_table(n)
        N = t.order
        vals, sizes = t.values, t.class_sizes
        for i, a in enumerate(vals):
            for k in range(i, len(vals)):
                s = sum(c * x * y for c, x, y in zip(sizes, a, vals[k]))
                if s != (N if i == k else 0):
                    bad.append(("row", n, i, k))
        cols = list(zip(*vals))
        for j, a in enumerate(cols):
            for k in range(j, len(cols)):
                s = sum(x * y for x, y in zip(a, cols[k]))
                if s != (N // sizes[j] if j == k else 0):
                    bad.append(("col", n, j, k))
    for n in range(0, 21):
        if sum(d * d for d in degrees(n).values()) != math.factorial(n):
            bad.append(("deg", n))
    return not bad, f"failures={bad[:5]}"


def _c6():
    res = [compare_symmetric(n) for n in range(3, 8)] + [compare_alternating(n) for n in range(3, 8)]
    bad = [r.label for r in res if not r.ok]
    return not bad, f"checked {len(res)} tables, mismatched={bad}"


def _c7():
    bad = []
    pairs = product_pairs()
    if len(pairs) < 10:
        bad.append("fewer than 10 pairs")
    for G, H in pairs:
        if pnv(direct_product(G, H)) != pnv(G) * pnv(H):
            bad.append(f"{G.name}x{H.name}")
    for G, want in ((dihedral(4), Fraction(3, 4)), (quaternion8(), Fraction(3, 4)),
                    (extraspecial(3), Fraction(8, 9))):
        if nonvanishing_elements(G) != center(G).element_set or pv(G) != want:
            bad.append(G.name)
    for p, q in ((7, 3), (5, 4), (11, 5), (13, 3)):
        if pv(frobenius(p, q)) != 1 - Fraction(1, q):
            bad.append(f"F{p}:{q}")
    if not verify_defect_zero_vanishing(alternating(5), 5):
        bad.append("A5 p=5")
    if not verify_defect_zero_vanishing(symmetric(5), 5):
        bad.append("S5 p=5")
    return not bad, f"{len(pairs)} product pairs, failures={bad}"


def _family():
    rnd = random_family(seed=0, count=24)
    return builtin_family() + rnd, len(rnd)


def _c8():
    fam, n_rand = _family()
    bad = [G.name for G in fam if is_half_type(G) != (pv(G) == Fraction(1, 2))]
    halves = sum(1 for G in fam if pv(G) == Fraction(1, 2))
    return (not bad and n_rand >= 20,
            f"{len(fam)} groups ({n_rand} random), {halves} with pv=1/2, failures={bad}")


def _c9():
    fam, _ = _family()
    bad = []
    for G in fam:
        v = pv(G)
        if not G.is_abelian() and v < Fraction(1, 2):
            bad.append(f"{G.name}: pv={v} < 1/2")
        if v <= Fraction(2, 3) and not is_solvable(G):
            bad.append(f"{G.name}: pv={v} but not solvable")
    a5 = pv(alternating(5))
    if not a5 > Fraction(3, 4):
        bad.append(f"pv(A5)={a5}")
    return not bad, f"{len(fam)} groups, pv(A5)={a5}, failures={bad}"


CRITERIA = [
    (1, "pv(S1), pv(S2), pv(S3), pv(S4), pv(S7)", 1, _c1),
    (2, "pv(A7) from the A7 table and as 2pv(S7)-1", 5, _c2),
    (3, "pnv(S_n) <= 193/2520 for 5 <= n <= 105", 300, _c3),
    (4, "n - m_n >= 4 for 106 <= n <= 10^6", 10, _c4),
    (5, "orthogonality n <= 12, sum of squared degrees n <= 20", 120, _c5),
    (6, "engine tables of S3..S7, A3..A7 match MN tables", 120, _c6),
    (7, "product, p-group, Frobenius and defect-zero checks", 60, _c7),
    (8, "half-type structure iff pv = 1/2", 120, _c8),
    (9, "pv >= 1/2 when non-abelian; pv <= 2/3 implies solvable; pv(A5) > 3/4", 120, _c9),
]


@pytest.mark.parametrize("num,title,budget,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, budget, fn):
    ok, in_time, elapsed = record(num, title, budget, fn)
    assert ok, RESULTS[-1]
    assert in_time, f"criterion {num} took {elapsed:.2f}s, budget {budget}s"


if __name__ == "__main__":
    for c in CRITERIA:
        record(*c)
        print(RESULTS[-1])
