"""Exact rational building blocks: Bernoulli numbers, binomials, Pochhammer symbols.

The Bernoulli convention throughout this package is the generating function
t/(e^t - 1), so B_1 = -1/2.  Switching to the other convention (B_1 = +1/2)
silently breaks every downstream value formula; do not change it.
"""

import math
import threading
from fractions import Fraction

__all__ = [
    "bernoulli_number",
    "bernoulli_polynomial",
    "binomial",
    "multinomial",
    "pochhammer",
    "format_rational",
    "parse_rational",
]


class _BernoulliCache:
    """Growable table of Bernoulli numbers B_0, B_1, ... (B_1 = -1/2).

    Values are computed by the defining recurrence
    sum_{k=0}^{n} C(n+1, k) B_k = 0 (n >= 1).  Reads of already-computed
    entries are lock-free; extension is serialized.
    """

    def __init__(self):
        self._table = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, n):
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        table = self._table
        if n < len(table):
            return table[n]
        with self._lock:
            while len(self._table) <= n:
                m = len(self._table)
                # sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  solve for B_m
                acc = sum(
                    Fraction(math.comb(m + 1, k)) * self._table[k] for k in range(m)
                )
                self._table.append(-acc / (m + 1))
            return self._table[n]


_CACHE = _BernoulliCache()


def bernoulli_number(n):
    """Return the exact Bernoulli number B_n as a Fraction."""
    return _CACHE.get(n)


def bernoulli_polynomial(n, x):
    """Return B_n(x) = sum_k C(n,k) B_k x^{n-k} exactly for rational x."""
    if n < 0:
        raise ValueError("Bernoulli polynomial degree must be non-negative")
    x = Fraction(x)
    return sum(
        Fraction(math.comb(n, k)) * bernoulli_number(k) * x ** (n - k)
        for k in range(n + 1)
    )


def binomial(n, k):
    """Binomial coefficient C(n, k); zero when k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(*parts):
    """Multinomial coefficient (sum parts)! / prod(part!)."""
    total = 0
    out = 1
    for p in parts:
        if p < 0:
            return 0
        total += p
        out *= math.comb(total, p)
    return out


def pochhammer(s, k):
    """Rising factorial (s)_k = s (s+1) ... (s+k-1), with (s)_0 = 1.

    Works for any scalar supporting + and * (complex, Fraction, polynomials).
    """
    if k < 0:
        raise ValueError("Pochhammer order must be non-negative")
    out = 1
    for i in range(k):
        out = out * (s + i)
    return out


def format_rational(q):
    """Serialize a rational as "p/q", omitting the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_rational(text):
    """Parse the "p/q" form produced by :func:`format_rational`."""
    return Fraction(text.strip().replace("−", "-"))
