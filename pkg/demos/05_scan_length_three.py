"""
Scanning every POP of one length and grouping by counts
=======================================================

scan_pops enumerates all POPs of a length, collapses them into
symmetry orbits (a proved grouping), counts avoiders for one
representative per orbit, and then groups orbits whose count
sequences agree so far (an empirical grouping at the scanned depth).
"""

from poplab import bundled_path, load_stripped
from poplab.cli import scan_pops

# Length 3 has 19 POPs.  Counting to n = 7 supplies enough terms for
# the sequence matcher.  The bundled snapshot only carries the rows
# catalogued for lengths 4 and 5, so these length-3 classics (powers
# of two, Fibonacci, Catalan) show no hits here; point POPLAB_OEIS at
# a full "stripped" file to identify them.
db = load_stripped(bundled_path())
doc = scan_pops(3, 7, db=db)

print(f"{doc['pop_count']} POPs of length {doc['length']}")
print(f"{doc['orbit_count']} symmetry orbits ({doc['orbit_grouping']})")
print(f"{doc['wilf_class_count']} count classes ({doc['wilf_grouping']})")
print()

# One line per orbit: its class, representative POP, counts, and any
# catalogued sequences matching the counts.  The star marks the first
# orbit of each count class.
for orbit in doc["orbits"]:
    star = "*" if orbit["representative"] else " "
    matches = ", ".join(m["a_number"] for m in orbit["oeis_matches"]) or "-"
    terms = ",".join(str(c) for c in orbit["counts"][1:])
    print(
        f"{star} class {orbit['wilf_class']}  {orbit['pop']!r:28}"
        f" size {orbit['orbit_size']}  a(1..)={terms}  {matches}"
    )
