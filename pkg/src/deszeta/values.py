"""Exact special values: twisted multiple Bernoulli numbers, values of the
twisted multiple zeta-function at non-positive integers, and desingularized
values at non-positive integers.

The desingularized values come in three independent routes that must agree:
the nu-matrix enumeration, the r = 2 closed convolution form, and the
generating-function oracle read off the exact c -> 1 limit product.
"""

import math
from fractions import Fraction
from itertools import product as iter_product

from .cyclotomic import TrivialRootError, twisted_bernoulli
from .exact import bernoulli_number, binomial
from .series import build_E_product, build_H_r

__all__ = [
    "twisted_multiple_bernoulli",
    "double_twisted_closed",
    "lerch_special_value",
    "desing_value_exact",
    "desing_value_r2_closed",
    "desing_value_oracle",
]


def twisted_multiple_bernoulli(n, xis, gammas, order=None):
    """Twisted multiple Bernoulli number for the index tuple n, roots xis and
    weights gammas, read from the truncated product generating function."""
    n = tuple(n)
    if len(n) != len(xis) or len(n) != len(gammas):
        raise ValueError("index, roots and weights must have equal length")
    series = build_H_r(xis, gammas, sum(n), order=order)
    coeff = series.coefficient(n)
    scale = Fraction(math.prod(math.factorial(k) for k in n))
    return coeff * scale


def double_twisted_closed(k, l, xi1, xi2, gammas, order=None):
    """Closed convolution form of the r = 2 twisted multiple Bernoulli number:
    sum_j C(l,j) B_{k+j}(xi1) B_{l-j}(xi2) gamma1^{k+j} gamma2^{l-j}."""
    for xi in (xi1, xi2):
        if not xi.nontrivial:
            raise TrivialRootError("roots must differ from 1")
    if order is None:
        order = xi1.c * xi2.c // math.gcd(xi1.c, xi2.c)
    g1, g2 = Fraction(gammas[0]), Fraction(gammas[1])
    total = None
    for j in range(l + 1):
        term = (
            twisted_bernoulli(k + j, xi1, order=order)
            * twisted_bernoulli(l - j, xi2, order=order)
            * (Fraction(binomial(l, j)) * g1 ** (k + j) * g2 ** (l - j))
        )
        total = term if total is None else total + term
    return total


def lerch_special_value(n, xis, gammas, order=None):
    """Value of the twisted multiple zeta-function at the non-positive
    integer point (-n_j): a sign times the twisted multiple Bernoulli number
    at the inverted roots."""
    n = tuple(n)
    r = len(n)
    inv = [xi.inverse() for xi in xis]
    sign = (-1) ** (r + sum(n))
    return twisted_multiple_bernoulli(n, inv, gammas, order=order) * sign


def _compositions(total, parts):
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def desing_value_exact(k, gammas):
    """Desingularized value at (-k_j) by direct enumeration of the
    upper-triangular nu-matrices with column sums k_j."""
    k = tuple(k)
    r = len(k)
    if len(gammas) != r:
        raise ValueError("index and weights must have equal length")
    gammas = [Fraction(g) for g in gammas]
    if any(g == 0 for g in gammas):
        raise ValueError("weights must be nonzero")

    total = Fraction(0)
    # column j (0-based) holds nu_{0j}..nu_{jj}, a composition of k[j]
    for columns in iter_product(*(_compositions(k[j], j + 1) for j in range(r))):
        term = Fraction(1)
        for j in range(r):
            row_sum = sum(columns[l][j] for l in range(j, r))
            term *= bernoulli_number(1 + row_sum) * gammas[j] ** row_sum
            for nu in columns[j]:
                term /= math.factorial(nu)
        total += term
    prefactor = Fraction(math.prod(math.factorial(kj) for kj in k))
    return prefactor * Fraction((-1) ** sum(k)) * total


def desing_value_r2_closed(k, l, gamma1, gamma2):
    """Closed r = 2 form: (-1)^{k+l} sum_nu C(l,nu) B_{k+nu+1} B_{l-nu+1}
    gamma1^{k+nu} gamma2^{l-nu}."""
    g1, g2 = Fraction(gamma1), Fraction(gamma2)
    total = Fraction(0)
    for nu in range(l + 1):
        total += (
            Fraction(binomial(l, nu))
            * bernoulli_number(k + nu + 1)
            * bernoulli_number(l - nu + 1)
            * g1 ** (k + nu)
            * g2 ** (l - nu)
        )
    return Fraction((-1) ** (k + l)) * total


def desing_value_oracle(k, gammas):
    """Desingularized value at (-k_j) read from the exact limit product's
    coefficients; independent of the nu-matrix enumeration."""
    k = tuple(k)
    series = build_E_product([Fraction(g) for g in gammas], sum(k))
    coeff = series.coefficient(k)
    scale = Fraction(math.prod(math.factorial(kj) for kj in k))
    return Fraction(coeff) * scale * Fraction((-1) ** sum(k))
