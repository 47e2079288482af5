"""Cyclotomic arithmetic and twisted Bernoulli numbers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from deszeta.cyclotomic import (
    CycloElement,
    OrderMismatchError,
    RootOfUnity,
    TrivialRootError,
    cyclotomic_polynomial,
    frobenius_euler,
    negative_polylog,
    root_sum_twisted,
    twisted_bernoulli,
)
from deszeta.exact import bernoulli_number


def phi(c):
    out = 0
    for k in range(1, c + 1):
        a, b = k, c
        while b:
            a, b = b, a % b
        out += a == 1
    return out


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [Fraction(-1), Fraction(1)]
    assert cyclotomic_polynomial(2) == [Fraction(1), Fraction(1)]
    assert cyclotomic_polynomial(4) == [Fraction(1), Fraction(0), Fraction(1)]
    assert cyclotomic_polynomial(6) == [Fraction(1), Fraction(-1), Fraction(1)]
    for c in range(1, 30):
        assert len(cyclotomic_polynomial(c)) == phi(c) + 1


def test_root_of_unity_validation():
    assert not RootOfUnity(3, 0).nontrivial
    assert not RootOfUnity(3, 6).nontrivial
    with pytest.raises(ValueError):
        RootOfUnity(1, 0)
    assert RootOfUnity(5, 7).a == 2
    with pytest.raises(TrivialRootError):
        twisted_bernoulli(0, RootOfUnity(3, 0))


def test_root_inverse():
    xi = RootOfUnity(7, 3)
    assert xi.inverse().a == 4
    z = xi.embed() * xi.inverse().embed()
    assert z.is_rational and z.as_rational() == 1


def test_embed_requires_compatible_order():
    xi = RootOfUnity(4, 1)
    with pytest.raises(OrderMismatchError):
        xi.embed(6)
    z = xi.embed(8)
    assert z.c == 8 and (z * z * z * z).as_rational() == 1


@given(st.integers(2, 10), st.data())
@settings(max_examples=40, deadline=None)
def test_element_inverse(c, data):
    deg = phi(c)
    coeffs = data.draw(
        st.lists(st.fractions(max_denominator=6), min_size=deg, max_size=deg)
    )
    el = CycloElement(c, coeffs)
    if not el:
        return
    prod = el * el.inverse()
    assert prod.is_rational and prod.as_rational() == 1


def test_element_json_round_trip():
    el = CycloElement(5, [Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(7, 4)])
    assert CycloElement.from_json(el.to_json()) == el


def closed_form(n, xi):
    """Rational closed forms of the first twisted Bernoulli numbers."""
    z = xi.embed()
    one = CycloElement.from_rational(xi.c, 1)
    d = (one - z).inverse()
    if n == 0:
        return d
    if n == 1:
        return z * d * d
    if n == 2:
        return z * (z + 1) * d**3
    if n == 3:
        return z * (z * z + 4 * z + 1) * d**4
    if n == 4:
        return z * (z**3 + 11 * z * z + 11 * z + 1) * d**5
    raise ValueError(n)


@pytest.mark.parametrize("c", [2, 3, 4, 5, 6])
def test_twisted_bernoulli_closed_forms(c):
    for a in range(1, c):
        xi = RootOfUnity(c, a)
        for n in range(5):
            assert twisted_bernoulli(n, xi) == closed_form(n, xi)


@pytest.mark.parametrize("c", [2, 3, 5])
def test_polylog_oracle(c):
    # for n >= 1 the n-th twisted Bernoulli number is the negative polylog
    for a in range(1, c):
        xi = RootOfUnity(c, a)
        for n in range(1, 7):
            assert twisted_bernoulli(n, xi) == negative_polylog(n, xi)


def test_frobenius_euler_relation():
    # B_n(xi) = H_n(xi^{-1}) / (1 - xi)
    for c in (3, 4, 5):
        for a in range(1, c):
            xi = RootOfUnity(c, a)
            z = xi.embed()
            d = (1 - z).inverse()
            for n in range(6):
                h = frobenius_euler(n, xi.inverse())
                assert twisted_bernoulli(n, xi) == h * d


def test_frobenius_euler_rational_argument():
    # (1 - lam)/(e^t - lam) at lam = -1 gives the Euler numbers' relatives
    assert frobenius_euler(0, Fraction(-1)) == 1
    assert frobenius_euler(1, Fraction(-1)) == Fraction(-1, 2)
    assert frobenius_euler(2, Fraction(-1)) == 0
    assert frobenius_euler(3, Fraction(-1)) == Fraction(1, 4)


def test_root_sum_identity():
    for c in range(2, 7):
        for n in range(8):
            want = (1 - Fraction(c) ** (n + 1)) * bernoulli_number(n + 1) / (n + 1)
            assert root_sum_twisted(n, c) == want
