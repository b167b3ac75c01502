"""
Identifying computed counts against a stored sequence snapshot
==============================================================

The matcher compares computed terms against rows of a stripped-format
sequence file.  Stored rows often start at a different offset or
carry leading zeros, so an alignment may shift into the stored row
and drop leading computed terms, as long as enough terms overlap.
"""

from poplab import bundled_path, get_theorem, load_stripped, match_sequence

db = load_stripped(bundled_path())
print(f"bundled snapshot: {len(db)} sequences from {bundled_path().name}")

# A clean hit: the counts for this catalogue entry match a stored row
# term for term.
entry = get_theorem("thm-3.15")
terms = list(entry.prefix(4))
matches = match_sequence(db, terms)
print(f"counts {terms}")
for m in matches:
    print(f"  -> {m.a_number} shift={m.shift} dropped={m.dropped} overlap={m.overlap}")

# An offset hit: this entry's counts agree with a stored row only
# after dropping two computed terms and skipping three stored ones.
# The stored row is n*(n+1)*(n+2) starting at n = 0, so it carries
# leading zeros the avoider counts do not have.
entry = get_theorem("thm-2.4")
terms = entry.sequence(9, k=5)[1:]
matches = match_sequence(db, terms)
print(f"counts {terms}")
for m in matches:
    print(f"  -> {m.a_number} shift={m.shift} dropped={m.dropped} overlap={m.overlap}")

# No hit: a sequence the snapshot does not contain.
print("powers of 3 match:", match_sequence(db, [3**n for n in range(1, 9)]))
