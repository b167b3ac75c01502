"""
A bijection between POP avoiders and a cycle condition
======================================================

Avoiding the POP of length k whose only relation puts label 1 above
label k is equivalent, through a cycle-flattening bijection, to a
property of cycle structure: every cycle occupies an interval of
width at most k-1 in position space.
"""

from poplab import (
    Permutation,
    count_avoiders_prefix,
    count_cycle_interval_perms,
    has_cycle_interval_property,
    parse_pop,
)

# One concrete permutation, viewed both ways.
perm = Permutation((6, 8, 1, 5, 4, 3, 7, 2))
print("cycles of", perm.to_text(), "=", perm.cycles())
print("max cycle interval width:", perm.max_cycle_interval_width())
print("flattened:", perm.cycle_canonical_flatten().to_text())

# The two counts agree for every n: avoiders of "k=5; 1>5" on one
# side, permutations with all cycle intervals of width < 5 on the
# other.
pop = parse_pop("k=5; 1>5")
avoiders = count_avoiders_prefix(pop, 8).counts
cycles = [count_cycle_interval_perms(5, n) for n in range(9)]
print("avoider counts:       ", list(avoiders))
print("cycle-interval counts:", cycles)
print("agree:", list(avoiders) == cycles)

# The property itself is directly checkable.
sample = Permutation.from_text("51234")
print("51234 has the width-4 property:", has_cycle_interval_property(sample, 5))
