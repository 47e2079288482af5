"""The finite shifted-zeta combination that removes all singularities.

The multiple zeta-function has infinitely many singular hyperplanes.  A
finite integer-coefficient combination of argument-shifted copies, weighted
by Pochhammer polynomials, cancels them all at once; this script prints the
coefficient tables and the grouped human-readable form.
"""

from deszeta import combination, expand_G, expand_H

for r in (1, 2):
    table = expand_G(r)
    print("Depth %d: %d monomials (coefficient, Pochhammer orders, shifts):" % (r, len(table)))
    for a, l, m in table.terms:
        print("   a=%+d  l=%s  m=%s" % (a, list(l), list(m)))
    print()

print("Grouped by shift, depth 2 (the three-term combination):")
print(combination(2).to_tex())
print()

print("Depth 3 groups (shift -> polynomial coefficient):")
for m, poly in sorted(combination(3).groups().items()):
    print("  %s: %s" % (list(m), poly))
print()

print("Two independent constructions of the table (product expansion and")
print("signed subset sums) agree for r = 1..5:")
for r in range(1, 6):
    print("  r=%d: %s" % (r, "ok" if expand_G(r) == expand_H(r) else "MISMATCH"))
