import json
import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vanprop.errors import InputError, ResourceLimitError
from vanprop.partitions import conjugate, enumerate_partitions, hook_data, is_self_conjugate, r_cores
from vanprop.symchars import (
    AlgebraicValue,
    MurnaghanNakayama,
    SymCharacterTable,
    alt_class_size,
    alt_classes,
    alt_table,
    alt_values,
    class_size,
    degrees,
    mn_value,
    sign,
    splits_in_alternating,
    sym_table,
)


# -- oracles --------------------------------------------------------------------

def _power_sum_coeff(alpha, mu):
    """Coefficient of x^alpha in prod_k (x_1^mu_k + ... + x_l^mu_k)."""
    @lru_cache(maxsize=None)
    def go(k, rest):
        if k == len(mu):
            return int(not any(rest))
        total = 0
        for i, a in enumerate(rest):
            if a >= mu[k]:
                total += go(k + 1, rest[:i] + (a - mu[k],) + rest[i + 1:])
        return total
    return go(0, tuple(alpha))


def frobenius_character(lam, mu):
    """chi^lam(mu) = [x^(lam + delta)] a_delta * p_mu."""
    l = len(lam)
    delta = list(range(l - 1, -1, -1))
    target = [lam[i] + delta[i] for i in range(l)]
    total = 0
    for perm in permutations(range(l)):
        inv = sum(1 for i in range(l) for j in range(i + 1, l) if perm[i] > perm[j])
        alpha = [target[i] - delta[perm[i]] for i in range(l)]
        if min(alpha) < 0:
            continue
        total += (-1) ** inv * _power_sum_coeff(alpha, tuple(mu))
    return total


def class_size_by_counting(mu):
    n = sum(mu)
    count = 0
    for p in permutations(range(n)):
        seen, ct = set(), []
        for i in range(n):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = p[j]
                length += 1
            ct.append(length)
        if sorted(ct, reverse=True) == list(mu):
            count += 1
    return count


# -- class sizes -------------------------------------------------------------------

def test_class_size_examples():
    assert class_size((1, 1, 1, 1)) == 1
    assert class_size((3,)) == 2
    assert class_size((2, 1)) == 3


def test_class_sizes_match_counting():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert class_size(mu) == class_size_by_counting(mu)


def test_class_sizes_sum_to_factorial():
    for n in range(0, 21):
        assert sum(class_size(mu) for mu in enumerate_partitions(n)) == math.factorial(n)


# -- MN values ----------------------------------------------------------------------

def test_mn_examples():
    for n in range(1, 9):
        for mu in enumerate_partitions(n):
            assert mn_value((n,), mu) == 1
            assert mn_value((1,) * n, mu) == sign(mu) == (-1) ** (n - len(mu))
    assert mn_value((2, 1), (3,)) == -1


def test_s3_two_dimensional_rep_trace():
    # (0 1 2) acts on {x : x0 + x1 + x2 = 0} with basis e0-e1, e1-e2
    rot = [[0, -1], [1, -1]]
    assert rot[0][0] + rot[1][1] == mn_value((2, 1), (3,))
    swap = [[-1, 1], [0, 1]]  # (0 1)
    assert swap[0][0] + swap[1][1] == mn_value((2, 1), (2, 1))


def test_mn_matches_frobenius_formula():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                assert mn_value(lam, mu) == frobenius_character(lam, mu), (lam, mu)


parts_st = st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_partitions(n)), st.sampled_from(enumerate_partitions(n))))


@settings(max_examples=60)
@given(parts_st)
def test_mn_matches_frobenius_formula_random(pair):
    lam, mu = pair
    assert mn_value(lam, mu) == frobenius_character(lam, mu)


def test_mn_rejects_mismatched_sizes():
    with pytest.raises(ValueError):
        mn_value((2, 1), (2,))


def test_memo_is_per_instance():
    a = MurnaghanNakayama()
    a.value((3, 2), (2, 2, 1))
    assert len(a) > 0
    assert len(MurnaghanNakayama()) == 0


# -- full tables -----------------------------------------------------------------------

def test_table_examples():
    assert sym_table(1).values == ((1,),)
    t3 = sym_table(3)
    assert sorted(t3.degrees()) == [1, 1, 2]
    assert sum(d * d for d in sym_table(5).degrees()) == 120


def _row_orth(t):
    N = t.order
    for i, a in enumerate(t.values):
        for k, b in enumerate(t.values):
            s = sum(c * x * y for c, x, y in zip(t.class_sizes, a, b))
            assert s == (N if i == k else 0)


def _col_orth(t):
    N = t.order
    cols = list(zip(*t.values))
    for j, a in enumerate(cols):
        for k, b in enumerate(cols):
            s = sum(x * y for x, y in zip(a, b))
            assert s == (N // t.class_sizes[j] if j == k else 0)


@pytest.mark.parametrize("n", range(1, 13))
def test_orthogonality(n):
    t = sym_table(n)
    assert sum(t.class_sizes) == math.factorial(n)
    _row_orth(t)
    _col_orth(t)


def test_degree_squares_to_twenty():
    for n in range(0, 21):
        assert sum(d * d for d in degrees(n).values()) == math.factorial(n)


def test_degrees_match_hook_length_formula():
    for n in range(1, 15):
        for lam, d in degrees(n).items():
            assert d * math.prod(hook_data(lam).multiset()) == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_conjugate_row_is_sign_twist(n):
    t = sym_table(n)
    rows = dict(zip(t.labels, t.values))
    signs = [sign(mu) for mu in t.classes]
    for lam, row in rows.items():
        assert rows[conjugate(lam)] == tuple(s * v for s, v in zip(signs, row))


@pytest.mark.parametrize("r", [2, 3, 5])
def test_hooked_partitions_vanish_on_many_r_cycles(r):
    mn = MurnaghanNakayama()
    for n in range(1, 16):
        for a in range(0, n // r + 1):
            for core in r_cores(n - a * r, r):
                lam = (core[0] + a * r,) + tuple(core[1:]) if core else (a * r,)
                for mu in enumerate_partitions(n):
                    if mu.multiplicities().get(r, 0) > a:
                        assert mn.value(lam, mu) == 0, (lam, mu)


def test_table_limit():
    with pytest.raises(ResourceLimitError):
        sym_table(21)
    assert sym_table(8, limit=8).n == 8
    with pytest.raises(InputError):
        sym_table(-1)


def test_table_json_and_csv():
    t = sym_table(5)
    doc = json.loads(json.dumps(t.to_json()))
    assert SymCharacterTable.from_json(doc) == t
    lines = t.to_csv().strip().splitlines()
    assert len(lines) == 8
    assert lines[0].startswith("character,[5]")


# -- A_n ---------------------------------------------------------------------------------

def test_alt_class_examples():
    c3 = alt_classes(3)
    assert [c.label() for c in c3] == ["[3]+", "[3]-", "[1,1,1]"]
    assert [alt_class_size(c) for c in c3] == [1, 1, 1]
    assert not splits_in_alternating((2, 2))
    assert all(c.half == 0 for c in alt_classes(4) if tuple(c.cycle_type) == (2, 2))
    fives = [c for c in alt_classes(5) if tuple(c.cycle_type) == (5,)]
    assert [alt_class_size(c) for c in fives] == [12, 12]


def test_alt_class_sizes_sum():
    for n in range(3, 15):
        assert sum(alt_class_size(c) for c in alt_classes(n)) == math.factorial(n) // 2


def test_split_values_for_21():
    plus, minus = alt_values((2, 1))
    classes = alt_classes(3)
    at = {c.label(): (p, m) for c, p, m in zip(classes, plus, minus)}
    w = AlgebraicValue.surd(Fraction(-1, 2), Fraction(1, 2), -3)
    wbar = AlgebraicValue.surd(Fraction(-1, 2), Fraction(-1, 2), -3)
    assert at["[3]+"] == (w, wbar)
    assert at["[3]-"] == (wbar, w)
    assert at["[1,1,1]"] == (AlgebraicValue.rational(1), AlgebraicValue.rational(1))
    # conjugate pair sums to the S_3 value
    assert (w.to_cyclotomic() + wbar.to_cyclotomic()) == -1


def test_split_values_on_diagonal_class_never_zero():
    for n in range(3, 16):
        for lam in enumerate_partitions(n):
            if not is_self_conjugate(lam):
                continue
            h = tuple(hook_data(lam).diagonal)
            plus, minus = alt_values(lam)
            for c, p, m in zip(alt_classes(n), plus, minus):
                if tuple(c.cycle_type) == h:
                    assert not p.is_zero() and not m.is_zero()


def test_perfect_square_radicand_normalizes_to_rational():
    # h(lambda) = (9) for the hook (5,1,1,1,1): t * prod h = 9
    plus, _ = alt_values((5, 1, 1, 1, 1))
    vals = {c.label(): p for c, p in zip(alt_classes(9), plus)}
    assert vals["[9]+"].is_rational() and vals["[9]-"].is_rational()
    assert {vals["[9]+"].q, vals["[9]-"].q} == {2, -1}


def _alt_row_orth(t):
    N = t.order
    cyc = [[v.to_cyclotomic() for v in row] for row in t.values]
    for i, a in enumerate(cyc):
        for k, b in enumerate(cyc):
            s = sum((x * y.conj() * c for c, x, y in zip(t.class_sizes, a, b)), start=0)
            assert s == (N if i == k else 0)


@pytest.mark.parametrize("n", range(3, 10))
def test_alt_table_orthogonality(n):
    t = alt_table(n)
    assert len(t.labels) == len(t.classes)
    assert sum(t.class_sizes) == math.factorial(n) // 2
    _alt_row_orth(t)


def test_swapping_split_labels_preserves_vanishing():
    for n in range(3, 11):
        t = alt_table(n)
        swap_c = [t.classes.index(type(c)(c.cycle_type, -c.half)) for c in t.classes]
        swap_r = [t.labels.index(type(ch)(ch.partition, -ch.half)) for ch in t.labels]
        for i in range(len(t.labels)):
            for j in range(len(t.classes)):
                assert t.values[swap_r[i]][swap_c[j]] == t.values[i][j] or (
                    t.labels[i].half and t.classes[j].half)
                assert t.values[swap_r[i]][swap_c[j]].is_zero() == t.values[i][j].is_zero()


def test_alt_table_json_roundtrip():
    t = alt_table(7)
    doc = json.loads(json.dumps(t.to_json()))
    back = [[AlgebraicValue.from_json(v) for v in row] for row in doc["entries"]]
    assert back == [list(r) for r in t.values]
    assert any(isinstance(v, dict) for row in doc["entries"] for v in row)


def test_alt_values_rejects():
    with pytest.raises(InputError):
        alt_values((3, 1))
    with pytest.raises(InputError):
        alt_table(2)
