"""Monomial-basis index machinery.

Fix a grouped tuple with pairwise-distinct letters (the canonical target
produced by :func:`klrdim.perms.block_form_of`).  For an arbitrary tuple mu
of the same content, the subspace cut out between the grouped tuple and mu
has an explicit monomial basis indexed by

    (w, r_1..r_n)   with   w in the transport set from mu to the grouped
                           tuple and 0 <= r_k < bound_k,

where the exponent bounds come from the dimension factors of the sorting
permutation corrected by same-letter counts.  The basis exists exactly when
every bound is positive, and its cardinality (block factorials times the
bound product) is the ungraded dimension of the subspace.

On the diagonal (mu equal to the grouped tuple) everything collapses to a
product of nilHecke algebras, one per block, which also yields the graded
dimension as a closed product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import factorial, prod
from typing import Iterator, Sequence

from .cartan import CartanData, Weight, tuple_content
from .dims import dim_factor, dim_factor_id, nilhecke_graded_dim
from .errors import IncompatibleContent, PreconditionFail, ZeroEdge
from .perms import (
    BlockForm,
    IndexTuple,
    Perm,
    act_right,
    block_form_of,
    perm_length,
    simple_transposition,
    sorting_perm,
    transport_perms,
)
from .qpoly import LaurentPoly


def block_levels(c: CartanData, lam: Weight, form: BlockForm) -> tuple[int, ...]:
    """Head pairing of each block: the nilHecke level its block carries."""
    cumulative = form.cumulative
    return tuple(
        dim_factor_id(c, lam, form.tuple, cumulative[i] + 1)
        for i in range(form.count)
    )


def exponent_bound(
    c: CartanData,
    lam: Weight,
    mu: Sequence[int],
    form: BlockForm,
    k: int,
) -> int:
    """The k-th exponent bound for the monomial basis attached to mu.

    Dimension factor of the sorting permutation at slot k, plus the number
    of earlier slots of mu carrying the same letter.
    """
    mu = tuple(mu)
    d = sorting_perm(mu, form)
    same = sum(1 for j in range(k - 1) if mu[j] == mu[k - 1])
    return dim_factor(c, lam, d, mu, k) + same


def exponent_bounds(
    c: CartanData,
    lam: Weight,
    mu: Sequence[int],
    form: BlockForm | None = None,
) -> tuple[int, ...]:
    """All exponent bounds of mu at once (computing the sorting permutation
    only once)."""
    mu = tuple(mu)
    if form is None:
        form = block_form_of(mu)
    d = sorting_perm(mu, form)
    out = []
    seen: dict[int, int] = {}
    for k in range(1, len(mu) + 1):
        x = mu[k - 1]
        out.append(dim_factor(c, lam, d, mu, k) + seen.get(x, 0))
        seen[x] = seen.get(x, 0) + 1
    return tuple(out)


@dataclass(frozen=True)
class MonomialBasis:
    """Index data of a monomial basis: the source tuple, the grouped target,
    its sorting permutation, and the per-slot exponent bounds.  Elements are
    (permutation, exponent vector) pairs; the actual algebra elements are
    never constructed."""

    mu: IndexTuple
    form: BlockForm
    sort_perm: Perm
    bounds: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return prod(factorial(b) for b in self.form.sizes) * prod(self.bounds)

    def elements(self) -> Iterator[tuple[Perm, tuple[int, ...]]]:
        """All (w, r) index pairs, w lexicographic then r lexicographic."""
        for w in transport_perms(self.mu, self.form.tuple):
            for r in iproduct(*(range(b) for b in self.bounds)):
                yield w, r


def monomial_basis(
    c: CartanData,
    lam: Weight,
    mu: Sequence[int],
    form: BlockForm | None = None,
) -> MonomialBasis | None:
    """The monomial basis between the grouped form and mu, or ``None`` when
    the subspace vanishes (some exponent bound is non-positive)."""
    mu = tuple(mu)
    if form is None:
        form = block_form_of(mu)
    elif tuple_content(c, mu) != tuple_content(c, form.tuple):
        raise IncompatibleContent("tuple content differs from the grouped form")
    bounds = exponent_bounds(c, lam, mu, form)
    if any(b <= 0 for b in bounds):
        return None
    return MonomialBasis(mu, form, sorting_perm(mu, form), bounds)


def monomial_basis_grouped(
    c: CartanData, lam: Weight, form: BlockForm
) -> MonomialBasis | None:
    """The diagonal case: the monomial basis at the grouped tuple itself.

    Here the exponent bounds step down by one inside each block from the
    block's head pairing, and the permutations are exactly the block Young
    subgroup.
    """
    return monomial_basis(c, lam, form.tuple, form)


def graded_dim_blockwise(c: CartanData, lam: Weight, form: BlockForm) -> LaurentPoly:
    """Graded dimension of the diagonal subspace at a grouped tuple, as the
    product of one nilHecke graded dimension per block (level = the block's
    head pairing, strands = the block size, in the variable q^{d_letter})."""
    levels = block_levels(c, lam, form)
    out = LaurentPoly.one()
    for i in range(form.count):
        out = out * nilhecke_graded_dim(
            levels[i], form.sizes[i], c.symmetrizer[form.letters[i]]
        )
    return out


def check_bounds_under_swap(
    c: CartanData,
    lam: Weight,
    mu: Sequence[int],
    form: BlockForm,
    a: int,
) -> bool:
    """Verify how exponent bounds transform under one adjacent swap.

    Requires the sorting permutation to descend at a (slots a, a+1 of mu
    out of block order); then swapping them leaves all other bounds fixed,
    shifts slot a's bound onto slot a+1, and slot a picks up the coroot
    pairing of the swapped letters.  Returns True when all three hold.
    """
    mu = tuple(mu)
    n = len(mu)
    if not 1 <= a < n:
        raise PreconditionFail(f"swap position {a} outside 1..{n - 1}")
    d = sorting_perm(mu, form)
    if d[a - 1] < d[a]:
        raise PreconditionFail("sorting permutation must descend at the swap")
    swapped = act_right(mu, simple_transposition(n, a))
    before = exponent_bounds(c, lam, mu, form)
    after = exponent_bounds(c, lam, swapped, form)
    pairing = c.matrix[mu[a - 1]][mu[a]]  # <alpha_{mu_{a+1}}, h_{mu_a}>
    for k in range(1, n + 1):
        if k == a:
            expect = after[a] + pairing
        elif k == a + 1:
            expect = after[a - 1]
        else:
            expect = after[k - 1]
        if before[k - 1] != expect:
            return False
    return True


def sorting_perm_is_minimal(mu: Sequence[int], form: BlockForm) -> bool:
    """Exhaustive check that the sorting permutation has minimal length in
    the whole transport set (test support; factorial cost)."""
    d = sorting_perm(mu, form)
    best = min(perm_length(w) for w in transport_perms(mu, form.tuple))
    return perm_length(d) == best


def basis_counts_121(l1: int, l2: int, a12: int, a21: int) -> tuple[int, int, int]:
    """Basis sizes for the diagonal subspace at the pattern (x, y, x) with
    content two-of-x plus one-of-y, for letters x, y joined by an edge.

    Returns (crossing-family count, polynomial-family count, total):

        l1 * l2 * l1   and   l1 * (l2 - a21) * (l1 - a12 - 2),

    where l1, l2 are the coroot pairings of the weight against x and y and
    a12, a21 the two Cartan entries between them.  The two-family pattern
    needs the letters adjacent; a12 = 0 is rejected.
    """
    if a12 == 0:
        raise ZeroEdge("the two letters must be joined by an edge (a12 != 0)")
    if a12 > 0 or a21 > 0:
        raise PreconditionFail("off-diagonal Cartan entries must be negative")
    if l1 < 0 or l2 < 0:
        raise PreconditionFail("weight pairings must be non-negative")
    crossing = l1 * l2 * l1
    poly = l1 * (l2 - a21) * (l1 - a12 - 2)
    return crossing, poly, crossing + poly
