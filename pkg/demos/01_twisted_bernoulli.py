"""Twisted Bernoulli numbers and the root-sum identity.

The classical Bernoulli numbers are the Taylor coefficients of t/(e^t - 1);
replacing the expansion point by a root of unity xi != 1 gives the twisted
variant, the coefficients of 1/(1 - xi e^t).  Summed over all nontrivial
c-th roots they recover a classical Bernoulli number, which makes a nice
end-to-end check of the cyclotomic arithmetic.
"""

from fractions import Fraction

from deszeta import RootOfUnity, bernoulli_number, root_sum_twisted, twisted_bernoulli
from deszeta.exact import format_rational

print("Classical Bernoulli numbers (convention t/(e^t - 1), so B_1 = -1/2):")
print("  ", ", ".join(format_rational(bernoulli_number(n)) for n in range(9)))
print()

xi = RootOfUnity(3, 1)
print("Twisted Bernoulli numbers at the primitive cube root of unity,")
print("as elements of Q(zeta_3) in the power basis (1, zeta_3):")
for n in range(5):
    b = twisted_bernoulli(n, xi)
    print("  n=%d: %s" % (n, [format_rational(x) for x in b.coeffs]))
print()

print("Root-sum identity: summing over all nontrivial c-th roots gives")
print("(1 - c^(n+1)) B_(n+1) / (n+1), a plain rational.")
for c in (2, 3, 5):
    for n in (2, 4, 6):
        got = root_sum_twisted(n, c)
        want = (1 - Fraction(c) ** (n + 1)) * bernoulli_number(n + 1) / (n + 1)
        status = "ok" if got == want else "MISMATCH"
        print("  c=%d n=%d: %-12s %s" % (c, n, format_rational(got), status))
