"""
Checking generating function identities with exact arithmetic
=============================================================

TruncatedSeries does formal power series arithmetic over the
rationals with no floating point anywhere, which is what makes
"this residual is exactly zero" a meaningful statement.
"""

from poplab import (
    TruncatedSeries,
    count_avoiders_prefix,
    from_rational,
    get_theorem,
    monomial,
    residual_thm314,
    residual_thm316,
)

# Rational generating functions expand through exact division.  This
# one produces the Schroeder numbers.
schroeder = from_rational([1, -3, 3, -1], [1, -4, 5, -4], 8)
print("Schroeder gf coefficients:", schroeder.integer_coefficients())

# Square roots work coefficient by coefficient; squaring back is the
# sanity check.
x = monomial(8)
root = (1 - 4 * x).sqrt()
print("sqrt(1-4x) check:", root * root == 1 - 4 * x)

# Two catalogued results assert that the avoider generating function
# satisfies a polynomial equation rather than being rational.  Count
# the avoiders, build the series, and evaluate the defining residual:
# exact zero means the counts satisfy the equation.
for name, residual in [
    ("thm-3.14", residual_thm314),
    ("thm-3.16", residual_thm316),
]:
    pop = get_theorem(name).pop()
    counts = count_avoiders_prefix(pop, 9).counts
    series = TruncatedSeries(counts, order=len(counts) - 1)
    print(f"{name} ({pop.to_text()}): counts={list(counts)}")
    print(f"{name}: residual is zero: {residual(series).is_zero()}")
