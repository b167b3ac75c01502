"""
Partially ordered patterns and their classical expansions
=========================================================

A partially ordered pattern (POP) of length k is a partial order on
the labels 1..k.  A permutation contains the POP when some k-element
subsequence realizes every order relation; labels left incomparable
put no constraint on the corresponding values.
"""

from poplab import (
    Permutation,
    dual,
    label_complement,
    linear_extensions,
    parse_pop,
    symmetry_orbit,
)

# Parse a POP from its text form.  "1>2" means the value in the slot
# labeled 1 must exceed the value in the slot labeled 2; relations are
# closed under transitivity automatically.
pop = parse_pop("k=4; 3>1, 1>2, 3>4")
print("POP:", pop.to_text())
print("comparable pairs:", pop.relation_count())

# Expanding a POP lists the classical patterns compatible with the
# partial order: avoiding the POP is the same as avoiding all of them
# at once.
patterns = linear_extensions(pop)
print("expands to", len(patterns), "classical patterns:")
for pattern in patterns:
    print("   ", pattern)

# Containment check against a concrete permutation.
perm = Permutation.from_text("41523")
print(f"{perm} contains the POP: {perm.contains_pop(pop)}")
print("occurrences (1-based positions):", sorted(perm.pop_occurrences(pop)))

# Two symmetries act on POPs.  label_complement flips every relation
# through relabeling and matches reversal of the permutation; dual
# flips the order itself and matches complementation.  Together they
# generate orbits of size 1, 2, or 4.
print("label complement:", label_complement(pop).to_text())
print("dual:            ", dual(pop).to_text())
print("orbit size:", len(symmetry_orbit(pop)))
