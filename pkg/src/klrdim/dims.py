"""The dimension engine for cyclotomic quiver Hecke algebras.

For a dominant weight Lambda and index tuples nu, nu' of equal content, the
graded dimension of the idempotent-truncated piece e(nu) R^Lambda e(nu') is

    sum over transport permutations w (w*nu = nu') of
        prod_t  [F(w, nu, t)]_{q^{d_{nu_t}}}  *  q^{d_{nu_t} (F(1, nu, t) - 1)}

where the integer dimension factor F(w, nu, t) pairs the weight, reduced by
the letters at positions before t that w keeps below slot t, against the
coroot of the letter at t.  Evaluating at q = 1 gives plain products of the
factors, and the same dimension is computed by an independent restriction
recursion (:func:`graded_dim_recursive`) so the two routes cross-check each
other exactly.

The divided-power route sums over far fewer permutations by collapsing each
run block of equal letters to a factorial times shifted factors, and the
single-letter case collapses entirely to closed nilHecke products.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import product as iproduct
from math import factorial, prod
from typing import Iterator, Sequence

from . import budget
from .budget import Deadline
from .cartan import CartanData, RootElement, Weight, root_pairing
from .errors import LengthMismatch
from .perms import IndexTuple, Perm, min_coset_reps, run_blocks, transport_perms
from .qpoly import LaurentPoly, quantum_int


def dim_factor(c: CartanData, lam: Weight, w: Perm, nu: Sequence[int], t: int) -> int:
    """The integer factor at slot t of the dimension product for w.

    Pairs Lambda minus the simple roots of the letters at positions j < t
    with w(j) < w(t) against the coroot of the letter at slot t.  May be
    zero or negative for individual w; only the full sum is a dimension.
    """
    i = nu[t - 1]
    row = c.matrix[i]
    val = lam.coeffs[i]
    wt = w[t - 1]
    for j in range(t - 1):
        if w[j] < wt:
            val -= row[nu[j]]
    return val


def dim_factor_id(c: CartanData, lam: Weight, nu: Sequence[int], t: int) -> int:
    """:func:`dim_factor` at the identity: every position before t counts."""
    i = nu[t - 1]
    row = c.matrix[i]
    return lam.coeffs[i] - sum(row[nu[j]] for j in range(t - 1))


def dim_factor_target(
    c: CartanData,
    lam: Weight,
    w: Perm,
    nu: Sequence[int],
    nuprime: Sequence[int],
    t: int,
) -> int:
    """The same factor read off the target tuple instead of the source.

    Sums the letters of nu' at positions below w(t) that are hit by the
    first t-1 values of w.  Exists purely to cross-check
    :func:`dim_factor`, with which it agrees whenever w*nu = nu'.
    """
    i = nu[t - 1]
    row = c.matrix[i]
    val = lam.coeffs[i]
    wt = w[t - 1]
    hit = set(w[:t - 1])
    for j in range(1, wt):
        if j in hit:
            val -= row[nuprime[j - 1]]
    return val


def crossing_degree(c: CartanData, w: Perm, nu: Sequence[int]) -> int:
    """Degree of the strand diagram of w on nu: minus the sum of root
    pairings (alpha_{nu_i} | alpha_{nu_t}) over crossings i < t, w(i) > w(t).

    This is the degree of the corresponding product of braid generators on
    the idempotent and is independent of the chosen reduced expression.
    """
    n = len(w)
    total = 0
    for i in range(n):
        for t in range(i + 1, n):
            if w[i] > w[t]:
                total -= root_pairing(c, nu[i], nu[t])
    return total


# ---------------------------------------------------------------------------
# Graded and ungraded dimensions of e(nu) R e(nu')
# ---------------------------------------------------------------------------


def graded_dim(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    nuprime: Sequence[int],
    deadline: Deadline | None = None,
) -> LaurentPoly:
    """Graded dimension of e(nu) R^Lambda e(nu') as an exact Laurent polynomial.

    Zero when no permutation transports nu to nu'; every coefficient of the
    result is non-negative even though individual summands need not be.
    """
    nu = tuple(nu)
    nuprime = tuple(nuprime)
    if len(nu) != len(nuprime):
        raise LengthMismatch("tuples must have the same length")
    n = len(nu)
    d = c.symmetrizer
    # The per-slot q-shift uses the identity factors only, so it is one
    # global monomial shared by every summand.
    shift = sum(d[nu[t - 1]] * (dim_factor_id(c, lam, nu, t) - 1) for t in range(1, n + 1))
    total = LaurentPoly.zero()
    for w in transport_perms(nu, nuprime):
        budget.check(deadline, "graded dimension sum")
        term = LaurentPoly.one()
        for t in range(1, n + 1):
            f = dim_factor(c, lam, w, nu, t)
            if f == 0:
                term = LaurentPoly.zero()
                break
            term = term * quantum_int(f, d[nu[t - 1]])
        total = total + term
    return total.shift(shift)


def dim(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    nuprime: Sequence[int],
    deadline: Deadline | None = None,
) -> int:
    """Ungraded dimension of e(nu) R^Lambda e(nu'), by direct integer products.

    Deliberately not computed as q -> 1 of :func:`graded_dim`: the two code
    paths stay independent so their agreement is a real consistency check.
    """
    nu = tuple(nu)
    nuprime = tuple(nuprime)
    if len(nu) != len(nuprime):
        raise LengthMismatch("tuples must have the same length")
    n = len(nu)
    total = 0
    for w in transport_perms(nu, nuprime):
        budget.check(deadline, "dimension sum")
        term = 1
        for t in range(1, n + 1):
            term *= dim_factor(c, lam, w, nu, t)
            if term == 0:
                break
        total += term
    return total


def graded_dim_recursive(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    nuprime: Sequence[int],
    memo: dict | None = None,
    deadline: Deadline | None = None,
) -> LaurentPoly:
    """Graded dimension by peeling the last letter of nu (the oracle route).

    Strips nu from the right: removing letter x from slot n of nu and a
    matching occurrence at slot k of nu' contributes a quantum integer of
    the weight reduced by the letters of nu' before k, times an explicit
    power of q^{d_x}, times the dimension one size down.  Memoized on the
    (prefix, remaining-target) pair, so a shared ``memo`` dict makes whole
    block sweeps cheap.
    """
    nu = tuple(nu)
    nuprime = tuple(nuprime)
    if len(nu) != len(nuprime):
        raise LengthMismatch("tuples must have the same length")
    if memo is None:
        memo = {}

    def rec(prefix: IndexTuple, rest: IndexTuple) -> LaurentPoly:
        if not prefix:
            return LaurentPoly.one()
        key = (prefix, rest)
        hit = memo.get(key)
        if hit is not None:
            return hit
        budget.check(deadline, "recursive graded dimension")
        x = prefix[-1]
        row = c.matrix[x]
        # 1 + <Lambda - beta, h_x> over the content of the current prefix.
        e = 1 + lam.coeffs[x] - sum(row[y] for y in prefix)
        shift = c.symmetrizer[x] * e
        shorter = prefix[:-1]
        acc = LaurentPoly.zero()
        reduced = lam.coeffs[x]
        for k, y in enumerate(rest):
            if y == x:
                factor = quantum_int(reduced, c.symmetrizer[x]).shift(shift)
                if not factor.is_zero():
                    sub = rec(shorter, rest[:k] + rest[k + 1 :])
                    acc = acc + factor * sub
            reduced -= row[y]
        memo[key] = acc
        return acc

    return rec(nu, nuprime)


# ---------------------------------------------------------------------------
# Divided-power route for e(nu) R e(nu)
# ---------------------------------------------------------------------------


def divided_factor(
    c: CartanData,
    lam: Weight,
    w: Perm,
    nu: Sequence[int],
    t: int,
    cumulative: Sequence[int],
) -> int:
    """Run-block shifted factor: the plain factor plus the offset of slot t
    inside its run block."""
    base = dim_factor(c, lam, w, nu, t)
    for i in range(len(cumulative) - 1):
        if cumulative[i] < t <= cumulative[i + 1]:
            return base + (t - cumulative[i] - 1)
    raise LengthMismatch(f"slot {t} outside the block structure")


def dim_divided(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    deadline: Deadline | None = None,
) -> int:
    """Ungraded dimension of e(nu) R^Lambda e(nu) via run blocks.

    Sums shifted factors over only the block-ascending stabilizer
    representatives and multiplies by the block factorials; agrees with
    ``dim(c, lam, nu, nu)`` while touching far fewer permutations.
    """
    nu = tuple(nu)
    blocks = run_blocks(nu)
    cumulative = blocks.cumulative
    n = len(nu)
    pre = prod(factorial(b) for b in blocks.sizes)
    total = 0
    for w in min_coset_reps(nu):
        budget.check(deadline, "divided-power sum")
        term = 1
        for t in range(1, n + 1):
            term *= divided_factor(c, lam, w, nu, t, cumulative)
            if term == 0:
                break
        total += term
    return pre * total


# ---------------------------------------------------------------------------
# nilHecke closed forms
# ---------------------------------------------------------------------------


def nilhecke_graded_dim(level: int, size: int, d: int = 1) -> LaurentPoly:
    """Graded dimension of the cyclotomic nilHecke algebra on ``size``
    strands at the given level, in the variable q^d.

    The closed product: a Poincare polynomial in q^{-2d} for the strand
    crossings times one truncated geometric series per strand for the
    dot exponents.
    """
    if level < 0 or size < 0:
        raise ValueError("level and size must be >= 0")
    out = LaurentPoly.one()
    for k in range(1, size + 1):
        out = out * LaurentPoly.from_pairs((-2 * d * j, 1) for j in range(k))
    for t in range(1, size + 1):
        out = out * LaurentPoly.from_pairs((2 * d * j, 1) for j in range(level - t + 1))
    return out


def nilhecke_dim(level: int, size: int) -> int:
    """Ungraded nilHecke dimension: size! * level * (level-1) * ..."""
    if level < 0 or size < 0:
        raise ValueError("level and size must be >= 0")
    return factorial(size) * prod(level - j for j in range(size))


# ---------------------------------------------------------------------------
# Whole blocks and whole algebras
# ---------------------------------------------------------------------------


def blocks_of_size(c: CartanData, n: int) -> Iterator[RootElement]:
    """All root elements of total size n supported on the nodes of c,
    in lexicographic multiplicity order."""
    if n < 0:
        raise ValueError("size must be >= 0")

    def rec(i: int, remaining: int, acc: list[int]) -> Iterator[RootElement]:
        if i == c.n - 1:
            yield RootElement(tuple(acc + [remaining]))
            return
        for k in range(remaining + 1):
            yield from rec(i + 1, remaining - k, acc + [k])

    if c.n == 0:
        return
    yield from rec(0, n, [])


def tuples_with_content(beta: RootElement) -> Iterator[IndexTuple]:
    """All index tuples realizing beta, in lexicographic order."""
    counts = list(beta.coeffs)
    n = beta.size
    out: list[int] = []

    def rec() -> Iterator[IndexTuple]:
        if len(out) == n:
            yield tuple(out)
            return
        for x in range(len(counts)):
            if counts[x]:
                counts[x] -= 1
                out.append(x)
                yield from rec()
                out.pop()
                counts[x] += 1

    yield from rec()


def _pair_sum(compute, pairs, zero, deadline: Deadline | None, threads: int):
    # Exact addition commutes, so any reduction order gives identical
    # canonical results; the threaded path just fans the pair work out.
    if threads > 1:
        pairs = list(pairs)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(lambda p: compute(*p), pairs)
            return sum(results, zero)
    total = zero
    for nu, nuprime in pairs:
        budget.check(deadline, "block sum")
        total = total + compute(nu, nuprime)
    return total


def block_graded_dim(
    c: CartanData,
    lam: Weight,
    beta: RootElement,
    deadline: Deadline | None = None,
    threads: int = 1,
) -> LaurentPoly:
    """Graded dimension of the whole block R^Lambda(beta): the sum over all
    ordered pairs of tuples realizing beta."""
    tuples = list(tuples_with_content(beta))
    return _pair_sum(
        lambda a, b: graded_dim(c, lam, a, b, deadline=deadline),
        iproduct(tuples, repeat=2),
        LaurentPoly.zero(),
        deadline,
        threads,
    )


def block_dim(
    c: CartanData,
    lam: Weight,
    beta: RootElement,
    deadline: Deadline | None = None,
    threads: int = 1,
) -> int:
    """Ungraded dimension of the whole block R^Lambda(beta)."""
    tuples = list(tuples_with_content(beta))
    return _pair_sum(
        lambda a, b: dim(c, lam, a, b, deadline=deadline),
        iproduct(tuples, repeat=2),
        0,
        deadline,
        threads,
    )


def algebra_graded_dim(
    c: CartanData,
    lam: Weight,
    n: int,
    deadline: Deadline | None = None,
    threads: int = 1,
) -> LaurentPoly:
    """Graded dimension of R^Lambda(n): the sum over all blocks of size n."""
    total = LaurentPoly.zero()
    for beta in blocks_of_size(c, n):
        total = total + block_graded_dim(c, lam, beta, deadline=deadline, threads=threads)
    return total


def algebra_dim(
    c: CartanData,
    lam: Weight,
    n: int,
    deadline: Deadline | None = None,
    threads: int = 1,
) -> int:
    """Ungraded dimension of R^Lambda(n)."""
    return sum(
        block_dim(c, lam, beta, deadline=deadline, threads=threads)
        for beta in blocks_of_size(c, n)
    )


