"""
Counting the permutations that avoid a POP
==========================================

count_avoiders(pop, n) returns the exact number of length-n
permutations containing no occurrence of the POP.  The counter walks
permutations left to right and prunes every prefix that already ends
in an occurrence, so full sequences up to n = 10 come out in seconds.
"""

from poplab import CeilingExceeded, count_avoiders, count_avoiders_prefix, parse_pop

# A single value: how many permutations of length 8 avoid the POP
# whose only constraint is "first of three exceeds the third"?
pop = parse_pop("k=3; 1>3")
print("a(8) =", count_avoiders(pop, 8))

# Whole prefixes share work across n.  These counts are the Fibonacci
# numbers, one of the classical facts the engine reproduces.
sequence = count_avoiders_prefix(pop, 10)
print("a(0..10) =", list(sequence.counts))

# Counting is exponential in n, so a ceiling guards against runaway
# requests.  Raise it explicitly when you mean it.
try:
    count_avoiders(pop, 12)
except CeilingExceeded as exc:
    print(f"refused: n={exc.n} exceeds ceiling {exc.ceiling}")
print("a(12) =", count_avoiders(pop, 12, ceiling=12))

# The search space splits by the first value, so independent workers
# can take a share each; results are summed in a fixed order and are
# identical to the serial run.
serial = count_avoiders(pop, 9)
parallel = count_avoiders(pop, 9, jobs=2)
print("serial == parallel:", serial == parallel, f"(both {serial})")
