"""Coefficient tables of the shifted-zeta combination."""

from fractions import Fraction

import pytest

from deszeta.coeffs import (
    CoeffTable,
    SPoly,
    combination,
    expand_G,
    expand_H,
    weight_check,
)
from deszeta.verify import FROZEN_GROUPS


def test_depth_one_table():
    t = expand_G(1)
    assert len(t) == 2
    assert t.terms == [(1, (0,), (0,)), (-1, (1,), (0,))]


def test_depth_two_monomial_count():
    # seven monomials before grouping (constant term included)
    assert len(expand_G(2)) == 7


def test_frozen_groups():
    for r, expected in FROZEN_GROUPS.items():
        groups = combination(r).groups()
        assert {m: dict(p.terms) for m, p in groups.items()} == expected


def test_depth_two_grouped_polynomials():
    s1 = SPoly.variable(2, 0)
    s2 = SPoly.variable(2, 1)
    one = SPoly.constant(2, 1)
    groups = combination(2).groups()
    assert groups[(0, 0)] == (s1 - one) * (s2 - one)
    assert groups[(-1, 1)] == s2 * (s2 + one - s1)
    assert groups[(-2, 2)] == SPoly.constant(2, -1) * s2 * (s2 + one)


def test_depth_three_group_count():
    assert len(combination(3).groups()) == 11


def test_two_constructions_agree():
    for r in range(1, 6):
        assert expand_G(r) == expand_H(r)


def test_weight_condition():
    for r in range(1, 7):
        assert weight_check(expand_G(r))


def test_json_round_trip():
    for r in (1, 2, 3):
        t = expand_G(r)
        assert CoeffTable.from_json(t.to_json()) == t


def test_invalid_depth():
    with pytest.raises(ValueError):
        expand_G(0)


def test_spoly_evaluate():
    s1 = SPoly.variable(2, 0)
    s2 = SPoly.variable(2, 1)
    p = (s1 - SPoly.constant(2, 1)) * (s2 - SPoly.constant(2, 1))
    assert p.evaluate((3, 4)) == 6
    assert p.evaluate((Fraction(1, 2), 2)) == Fraction(-1, 2)


def test_pochhammer_product():
    p = SPoly.pochhammer_product(2, (2, 0))
    # (s1)_2 = s1 (s1 + 1)
    assert p.evaluate((3, 99)) == 12


def test_combination_evaluate_calls_zeta():
    calls = []

    def fake_zeta(args):
        calls.append(args)
        return 1.0

    total = combination(1).evaluate((5.0,), fake_zeta)
    assert calls == [(5.0,)]
    assert total == complex(1 - 5.0)


def test_repr_readable():
    groups = combination(2).groups()
    assert repr(groups[(-2, 2)]) == "-s_2^2 - s_2"
    assert repr(groups[(0, 0)]) == "s_1 s_2 - s_1 - s_2 + 1"
