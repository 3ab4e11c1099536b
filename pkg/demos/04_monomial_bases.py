"""Monomial-basis index sets and exponent bounds.

Against a grouped target tuple (distinct letters, each repeated in one
block), every tuple of the same content gets per-slot exponent bounds.
The basis exists exactly when all bounds are positive, its size is the
block factorials times the bound product, and on the diagonal the whole
thing factors into nilHecke pieces.

Run:  python3 demos/04_monomial_bases.py
"""

from math import factorial, prod

from klrdim import (
    Weight,
    basis_counts_121,
    block_form_of,
    block_levels,
    builtin_cartan,
    dim,
    exponent_bounds,
    graded_dim,
    graded_dim_blockwise,
    monomial_basis,
    nilhecke_dim,
    sorting_perm,
    tuples_with_content,
    tuple_content,
)

a2 = builtin_cartan("A2")
lam = Weight((3, 2))

# The grouped form of a tuple: letters in first-occurrence order, each
# repeated by multiplicity, with the minimal permutation that sorts onto it.
mu = (1, 0, 0)
form = block_form_of(mu, letters=(0, 1))
print("tuple:", mu)
print("grouped form:", form.tuple, "blocks:", form.sizes)
print("sorting permutation:", sorting_perm(mu, form))

# Exponent bounds: one per slot.  All positive here, so the basis exists.
bounds = exponent_bounds(a2, lam, mu, form)
mb = monomial_basis(a2, lam, mu, form)
print("bounds:", bounds)
print("cardinality:", mb.cardinality,
      "== dim:", dim(a2, lam, form.tuple, mu))

# A few index elements: (permutation, exponent vector) pairs.
elements = list(mb.elements())
print("first four elements:", elements[:4])
assert len(elements) == mb.cardinality

print()

# Sweep all two- and three-letter tuples: bounds positive <=> nonvanishing,
# and the cardinality identity holds throughout.
checks = 0
for beta in (tuple_content(a2, t) for t in [(0, 1), (0, 0, 1), (0, 1, 1)]):
    for candidate in tuples_with_content(beta):
        f = block_form_of(candidate)
        b = exponent_bounds(a2, lam, candidate, f)
        card = prod(factorial(s) for s in f.sizes) * prod(b)
        d = dim(a2, lam, f.tuple, candidate)
        assert card == d
        assert (all(x > 0 for x in b)) == (d != 0)
        checks += 1
print(f"cardinality and positivity identities hold on {checks} tuples")

print()

# On the diagonal the subspace factors as a product of nilHecke algebras,
# one per block, graded and ungraded alike.
grouped = (0, 0, 1)
f = block_form_of(grouped)
levels = block_levels(a2, lam, f)
print("grouped diagonal:", grouped, "block levels:", levels)
print("graded, blockwise product:", graded_dim_blockwise(a2, lam, f))
print("graded, direct engine:    ", graded_dim(a2, lam, grouped, grouped))
print("ungraded nilHecke product:",
      prod(nilhecke_dim(levels[i], f.sizes[i]) for i in range(f.count)))

print()

# Three strands in the pattern (x, y, x): two explicit families count the
# basis, split by whether the full crossing appears.
crossing, poly, total = basis_counts_121(3, 2, a2.a(0, 1), a2.a(1, 0))
print("pattern (x,y,x) counts: crossing family", crossing,
      "+ polynomial family", poly, "=", total)
print("direct dimension:", dim(a2, lam, (0, 1, 0), (0, 1, 0)))
