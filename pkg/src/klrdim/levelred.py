"""Level reduction: higher-level dimensions from lower-level ones.

Splitting the weight as Lambda = Lambda^1 + ... + Lambda^l turns each
ungraded dimension into a shuffle-indexed sum of products of dimensions at
the parts: pairwise over content-matched shuffle splits, blockwise with a
multinomial-squared weight over decompositions of the block.  The graded
analogue genuinely fails (see the tests), which is why everything here is
integer-valued.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator, Sequence

from . import budget
from .budget import Deadline
from .cartan import CartanData, RootElement, Weight
from .dims import block_dim, dim, graded_dim
from .errors import PreconditionFail
from .perms import matched_shuffle_splits
from .qpoly import LaurentPoly


def _select(nu: Sequence[int], part: Sequence[int]) -> tuple[int, ...]:
    return tuple(nu[p - 1] for p in part)


def _check_split(lam: Weight, split: Sequence[Weight]) -> None:
    if not split:
        raise PreconditionFail("need at least one weight part")
    total = split[0]
    for part in split[1:]:
        total = total + part
    if total != lam:
        raise PreconditionFail("weight parts must sum to the target weight")
    if any(not part.is_dominant for part in split):
        raise PreconditionFail("every weight part must be dominant")


def reduce_pair_dim_multi(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    mu: Sequence[int],
    split: Sequence[Weight],
    deadline: Deadline | None = None,
    cache: dict | None = None,
) -> int:
    """dim e(nu) R^Lambda e(mu) as a sum over l-part matched shuffle splits
    of products of the part dimensions.

    Inner dimensions repeat massively across splits, so they are memoized
    on (part weight, sub-source, sub-target); pass an external ``cache``
    dict to share them across calls with the same Cartan data.
    """
    _check_split(lam, split)
    nu = tuple(nu)
    mu = tuple(mu)
    l = len(split)
    if cache is None:
        cache = {}

    def inner(i: int, sub_nu: tuple[int, ...], sub_mu: tuple[int, ...]) -> int:
        key = (split[i].coeffs, sub_nu, sub_mu)
        hit = cache.get(key)
        if hit is None:
            hit = dim(c, split[i], sub_nu, sub_mu, deadline=deadline)
            cache[key] = hit
        return hit

    total = 0
    for s_split, t_split in matched_shuffle_splits(nu, mu, l):
        budget.check(deadline, "level reduction sum")
        term = 1
        for i in range(l):
            term *= inner(i, _select(nu, s_split[i]), _select(mu, t_split[i]))
            if term == 0:
                break
        total += term
    return total


def reduce_pair_dim(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    mu: Sequence[int],
    split: Sequence[Weight],
    deadline: Deadline | None = None,
) -> int:
    """Two-part level reduction of a pair dimension (the base case the
    multi-part version iterates)."""
    if len(split) != 2:
        raise PreconditionFail("pairwise reduction needs exactly two weight parts")
    return reduce_pair_dim_multi(c, lam, nu, mu, split, deadline=deadline)


def reduce_pair_graded(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    mu: Sequence[int],
    split: Sequence[Weight],
    deadline: Deadline | None = None,
) -> LaurentPoly:
    """The would-be graded analogue of :func:`reduce_pair_dim_multi`.

    This does NOT equal the graded dimension in general -- already one
    nilHecke strand at level two breaks it -- but computing it is how the
    failure is demonstrated.
    """
    _check_split(lam, split)
    nu = tuple(nu)
    mu = tuple(mu)
    l = len(split)
    total = LaurentPoly.zero()
    for s_split, t_split in matched_shuffle_splits(nu, mu, l):
        budget.check(deadline, "graded level reduction sum")
        term = LaurentPoly.one()
        for i in range(l):
            term = term * graded_dim(
                c, split[i], _select(nu, s_split[i]), _select(mu, t_split[i]),
                deadline=deadline,
            )
            if term.is_zero():
                break
        total = total + term
    return total


def content_splits(
    beta: RootElement, parts: int
) -> Iterator[tuple[RootElement, ...]]:
    """All ordered decompositions beta = beta_1 + ... + beta_parts, as
    independent per-node compositions."""
    n = len(beta.coeffs)

    def rec(node: int, acc: list[list[int]]) -> Iterator[tuple[RootElement, ...]]:
        if node == n:
            yield tuple(RootElement(tuple(col)) for col in acc)
            return
        m = beta.coeffs[node]

        def comps(remaining: int, slot: int) -> Iterator[None]:
            if slot == parts - 1:
                acc[slot].append(remaining)
                yield None
                acc[slot].pop()
                return
            for k in range(remaining + 1):
                acc[slot].append(k)
                yield from comps(remaining - k, slot + 1)
                acc[slot].pop()

        for _ in comps(m, 0):
            yield from rec(node + 1, acc)

    yield from rec(0, [[] for _ in range(parts)])


def reduce_block_dim(
    c: CartanData,
    lam: Weight,
    beta: RootElement,
    split: Sequence[Weight],
    deadline: Deadline | None = None,
    cache: dict | None = None,
) -> int:
    """dim R^Lambda(beta) as the multinomial-squared weighted sum of
    products of block dimensions at the weight parts, over all ordered
    decompositions of beta.  ``cache`` as in :func:`reduce_pair_dim_multi`."""
    _check_split(lam, split)
    l = len(split)
    if cache is None:
        cache = {}

    def inner(i: int, part: RootElement) -> int:
        key = ("block", split[i].coeffs, part.coeffs)
        hit = cache.get(key)
        if hit is None:
            hit = block_dim(c, split[i], part, deadline=deadline)
            cache[key] = hit
        return hit

    total = 0
    for decomposition in content_splits(beta, l):
        budget.check(deadline, "block level reduction")
        weight = factorial(beta.size)
        term = 1
        for i in range(l):
            weight //= factorial(decomposition[i].size)
            term *= inner(i, decomposition[i])
            if term == 0:
                break
        if term:
            total += weight * weight * term
    return total


def reduce_algebra_dim(
    c: CartanData,
    lam: Weight,
    n: int,
    split: Sequence[Weight],
    deadline: Deadline | None = None,
    cache: dict | None = None,
) -> int:
    """dim R^Lambda(n) by level-reducing every block of size n and summing;
    equals :func:`klrdim.dims.algebra_dim`."""
    from .dims import blocks_of_size

    if cache is None:
        cache = {}
    return sum(
        reduce_block_dim(c, lam, beta, split, deadline=deadline, cache=cache)
        for beta in blocks_of_size(c, n)
    )


def dominant_splits(lam: Weight, parts: int) -> Iterator[tuple[Weight, ...]]:
    """All ordered ways to write lam as a sum of ``parts`` dominant weights."""
    if not lam.is_dominant:
        raise PreconditionFail("can only split a dominant weight")
    n = len(lam.coeffs)

    def rec(node: int, acc: list[list[int]]) -> Iterator[tuple[Weight, ...]]:
        if node == n:
            yield tuple(Weight(tuple(col)) for col in acc)
            return
        m = lam.coeffs[node]

        def comps(remaining: int, slot: int) -> Iterator[None]:
            if slot == parts - 1:
                acc[slot].append(remaining)
                yield None
                acc[slot].pop()
                return
            for k in range(remaining + 1):
                acc[slot].append(k)
                yield from comps(remaining - k, slot + 1)
                acc[slot].pop()

        for _ in comps(m, 0):
            yield from rec(node + 1, acc)

    yield from rec(0, [[] for _ in range(parts)])
