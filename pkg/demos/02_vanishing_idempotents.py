"""When does the idempotent e(nu) vanish?

Four different criteria decide it, each with a printable certificate:
the diagonal dimension sum, the divided-power sum over block
representatives, per-block head pairings for grouped tuples, and shuffle
decompositions into level-one pieces.

Run:  python3 demos/02_vanishing_idempotents.py
"""

from itertools import product

from klrdim import (
    Weight,
    builtin_cartan,
    nonzero_blockwise,
    nonzero_by_shuffle,
    nonzero_direct,
    nonzero_divided,
    validate_cartan,
)

# Single-node data: the cyclotomic nilHecke setting.  At level 2 two
# strands survive, at level 1 they do not.
rank1 = validate_cartan([[2]])
for level in (1, 2):
    v = nonzero_direct(rank1, Weight((level,)), (0, 0))
    print(f"two strands at level {level}: {'nonzero' if v.nonzero else 'zero'} "
          f"(diagonal sum {v.witness})")

# The same verdicts from the per-block criterion: a block of b equal
# letters needs its head pairing to reach b.
for level in (1, 2):
    v = nonzero_blockwise(rank1, Weight((level,)), (0, 0))
    print(f"  blockwise witness at level {level}: {v.witness}")

print()

# Rank two.  The shuffle criterion writes the weight as a sum of
# fundamental weights and looks for a decomposition of nu into pieces
# that survive at level one; the witness is such a decomposition.
a2 = builtin_cartan("A2")
lam = Weight((1, 1))
for nu in [(0, 1), (0, 0), (0, 1, 0), (0, 1, 1)]:
    v = nonzero_by_shuffle(a2, nu, (0, 1))
    tag = "nonzero" if v.nonzero else "zero"
    print(f"e{nu} at weight {lam.coeffs}: {tag}, pieces {v.witness}")

print()

# All methods always agree; sweep every tuple of length <= 3.
agree = 0
for n in range(4):
    for nu in product(range(2), repeat=n):
        d = nonzero_direct(a2, lam, nu).nonzero
        assert nonzero_divided(a2, lam, nu).nonzero == d
        assert nonzero_by_shuffle(a2, nu, (0, 1)).nonzero == d
        agree += 1
print(f"all criteria agree on {agree} tuples: OK")
