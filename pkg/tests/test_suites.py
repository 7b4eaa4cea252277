from fractions import Fraction

import pytest

from vanprop.groups import pv
from vanprop.suites import (
    builtin_family,
    half_classification_suite,
    identity_suite,
    lower_bound_suite,
    product_pairs,
    random_family,
    small_pv_suite,
)


def test_random_family_is_seeded():
    a = [(G.name, G.order) for G in random_family(3)]
    b = [(G.name, G.order) for G in random_family(3)]
    assert a == b
    assert a != [(G.name, G.order) for G in random_family(4)]


def test_random_family_mixes_products_and_quotients():
    fam = random_family(0, count=24)
    assert len(fam) == 24
    assert any("/" in G.name for G in fam)
    assert any("/" not in G.name for G in fam)


def test_builtin_family_covers_every_constructor():
    initials = {G.name[0] for G in builtin_family()}
    assert {"C", "D", "S", "A", "F", "H", "Q"} <= initials


@pytest.mark.parametrize("seed", [1, 2])
def test_suites_pass_on_other_seeds(seed):
    fam = random_family(seed, count=20)
    assert lower_bound_suite(fam).passed
    assert half_classification_suite(fam).passed
    assert small_pv_suite(fam).passed


def test_suite_reports_failures():
    res = lower_bound_suite(builtin_family()[:3])
    assert res.passed
    res.add("forced", False, "x")
    assert not res.passed
    assert res.to_json()["checks"][-1] == {"check": "forced", "pass": False, "detail": "x"}


def test_identity_suite_passes_with_enough_pairs():
    assert len(product_pairs()) >= 10
    res = identity_suite()
    failed = [c.name for c in res.checks if not c.passed]
    assert failed == []


def test_a5_above_three_quarters():
    from vanprop.groups import alternating
    assert pv(alternating(5)) > Fraction(3, 4)
