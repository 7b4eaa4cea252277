import json
import math
from fractions import Fraction

import pytest

from vanprop.errors import InputError
from vanprop.partitions import enumerate_partitions, hook_data, parse_partition
from vanprop.symchars import alt_table, class_size, is_even_type, sym_table
from vanprop.vanishing import (
    THRESHOLD,
    candidate_types,
    check_bound,
    check_exact,
    check_tail,
    factorial_bound,
    min_cycle_bound,
    moved_points_bound,
    pnv_upper_bound,
    pv_alt,
    pv_sym,
    verify_symmetric_minimum,
)


def floor_sqrt_scaled(num, den):
    """Largest k with k^2 * den <= num, by bisection on integers."""
    lo, hi = 0, num + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid * den <= num:
            lo = mid
        else:
            hi = mid
    return lo


def m_n_oracle(n):
    # floor(2 sqrt n) = max k: k^2 <= 4n ; floor(3 sqrt(n/2)) = max k: 2 k^2 <= 9n
    return 3 * floor_sqrt_scaled(4 * n, 1) + 2 * floor_sqrt_scaled(9 * n, 2)


def any_core_by_hooks(m, r):
    return any(all(h % r for h in hook_data(lam).multiset()) for lam in enumerate_partitions(m))


# -- exact pv values --------------------------------------------------------------

@pytest.mark.parametrize("n,expected", [(1, 0), (2, 0), (3, Fraction(1, 2)), (4, Fraction(5, 6)),
                                        (7, Fraction(2327, 2520))])
def test_pv_sym_values(n, expected):
    assert pv_sym(n).pv == expected


@pytest.mark.parametrize("n,expected", [(3, 0), (4, Fraction(2, 3)), (7, Fraction(1067, 1260))])
def test_pv_alt_values(n, expected):
    assert pv_alt(n).pv == expected


def test_s3_vanishing_class_is_transpositions():
    rep = pv_sym(3)
    assert [(c.label, c.size) for c in rep.vanishing_classes] == [("[2,1]", 3)]


def test_report_invariants_and_witnesses():
    for n in range(1, 13):
        rep = pv_sym(n)
        assert rep.pv + rep.pnv == 1
        assert sum(c.size for c in rep.vanishing_classes + rep.nonvanishing_classes) == math.factorial(n)
        t = sym_table(n)
        for c in rep.vanishing_classes:
            assert t.entry(parse_partition(c.witness), parse_partition(c.label)) == 0
        for c in rep.nonvanishing_classes:
            assert c.witness is None


def test_report_json_roundtrip():
    doc = pv_sym(7).to_json()
    assert json.loads(json.dumps(doc)) == doc
    assert doc["pv"] == "2327/2520" and doc["pnv"] == "193/2520"
    assert Fraction(doc["pv"]) + Fraction(doc["pnv"]) == 1


def test_pv_alt_is_twice_pv_sym_minus_one():
    for n in range(3, 14):
        assert pv_alt(n).pv == 2 * pv_sym(n).pv - 1


def test_nonvanishing_elements_are_even():
    # S_2 is abelian, so its transposition is non-vanishing
    assert pv_sym(2).nonvanishing_classes[0].label == "[2]"
    for n in range(3, 19):
        rep = pv_sym(n)
        assert all(is_even_type(parse_partition(c.label)) for c in rep.nonvanishing_classes)


def test_nonvanishing_sym_inside_candidates():
    for n in range(5, 19):
        cand = set(candidate_types(n).types)
        assert {parse_partition(c.label) for c in pv_sym(n).nonvanishing_classes} <= cand


def test_nonvanishing_sym_and_alt_coincide():
    for n in range(3, 13):
        sym_nv = {parse_partition(c.label) for c in pv_sym(n).nonvanishing_classes}
        alt_rep = pv_alt(n)
        t = alt_table(n)
        by_label = {c.label(): c for c in t.classes}
        alt_nv = {by_label[c.label].cycle_type for c in alt_rep.nonvanishing_classes}
        # each S_n class either stays whole or splits into two non-vanishing halves
        assert alt_nv == sym_nv
        assert sum(c.size for c in alt_rep.nonvanishing_classes) == sum(
            c.size for c in pv_sym(n).nonvanishing_classes)


# -- bounds ----------------------------------------------------------------------------

def test_min_cycle_bound_examples():
    assert min_cycle_bound(6, 2) == 0
    assert min_cycle_bound(3, 3) == 1
    assert min_cycle_bound(11, 2) == 4
    with pytest.raises(InputError):
        min_cycle_bound(5, 1)


def test_min_cycle_bound_matches_hook_scan():
    for n in range(0, 26):
        for r in (2, 3, 4, 5):
            a = 0
            while not any_core_by_hooks(n - a * r, r):
                a += 1
            assert min_cycle_bound(n, r) == a


def test_candidate_types_examples():
    c11 = candidate_types(11)
    assert {t.multiplicities().get(3, 0) for t in c11.types} == {0, 1}
    assert {t.multiplicities().get(2, 0) for t in c11.types} == {0, 2, 4}
    assert len(c11.types) == 6
    assert candidate_types(1).types == ((1,),)
    c13 = candidate_types(13)
    assert {t.multiplicities().get(3, 0) for t in c13.types} == {0, 1}
    assert {t.multiplicities().get(2, 0) for t in c13.types} == {0, 2, 4}


def test_candidate_types_are_valid():
    for n in range(1, 80):
        for t in candidate_types(n).types:
            assert t.n == n
            assert t.multiplicities().get(2, 0) % 2 == 0
            assert set(t) <= {1, 2, 3}


def test_pnv_upper_bound_examples():
    by_hand = sum(
        math.factorial(11) // (3 ** a * math.factorial(a) * 2 ** b * math.factorial(b)
                               * math.factorial(11 - 3 * a - 2 * b))
        for a in (0, 1) for b in (0, 2, 4))
    assert pnv_upper_bound(11) == Fraction(by_hand, math.factorial(11))
    assert pnv_upper_bound(11) < THRESHOLD
    assert pnv_upper_bound(7) >= THRESHOLD
    assert pnv_upper_bound(1) == 1


def test_bound_dominates_exact():
    # n = 2 is the abelian exception: its odd class is non-vanishing
    assert pnv_upper_bound(2) < pv_sym(2).pnv
    for n in [1] + list(range(3, 19)):
        assert pnv_upper_bound(n) >= pv_sym(n).pnv


def test_moved_points_bound():
    assert moved_points_bound(106) == 102
    assert 106 - moved_points_bound(106) == 4
    for n in list(range(1, 3000)) + [10**6, 10**12 + 7]:
        assert moved_points_bound(n) == m_n_oracle(n)


def test_tail_scan():
    assert check_tail(106, 10**6) is None
    # below 106 the inequality fails somewhere
    assert check_tail(1, 105) is not None


def test_factorial_bound():
    assert factorial_bound(10, 6) == Fraction(1, 24)
    assert factorial_bound(3, 5) is None


def test_check_exact_equality_only_at_seven():
    for n in range(5, 12):
        c = check_exact(n)
        assert c.passed
        assert (c.pnv == THRESHOLD) == (n == 7)
    assert check_exact(6).pnv < THRESHOLD and check_exact(8).pnv < THRESHOLD


def test_check_bound_report_shape():
    doc = check_bound(11).to_json()
    assert doc["mode"] == "bound" and doc["pass"] is True
    assert doc["threshold"] == "193/2520"
    assert Fraction(doc["pnv"]) == pnv_upper_bound(11)
    assert json.loads(json.dumps(doc)) == doc


def test_verify_minimum_small():
    rep = verify_symmetric_minimum(exact_limit=10, bound_limit=40)
    assert rep.passed
    assert [c.n for c in rep.checks] == list(range(5, 41))
    assert {c.mode for c in rep.checks} == {"exact", "bound"}


def test_tail_failure_is_reported_when_started_too_early():
    rep = verify_symmetric_minimum(exact_limit=10, bound_limit=40, tail_hi=2000)
    assert not rep.passed
    assert rep.tail_failure == 41
    assert rep.to_json()["tail"] == {"range": [41, 2000], "first_failure": 41}


def test_verify_minimum_rejects_bad_limits():
    with pytest.raises(InputError):
        verify_symmetric_minimum(exact_limit=25)
    with pytest.raises(InputError):
        verify_symmetric_minimum(exact_limit=10, bound_limit=8)


def test_class_size_bound_is_exact_sum():
    for n in (11, 13, 20):
        cand = candidate_types(n)
        assert pnv_upper_bound(n) == Fraction(sum(class_size(t) for t in cand.types), math.factorial(n))
