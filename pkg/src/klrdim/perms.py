"""Symmetric-group combinatorics on one-line tuples.

A permutation w of {1..n} is a tuple ``(w(1), ..., w(n))`` of the values
1..n; positions are 1-based throughout to match the usual conventions for
inversion statistics.  The left action on index tuples permutes places:
``(w*nu)_k = nu_{w^-1(k)}``.

Everything here is a pure function over immutable tuples.  Enumerations are
lazy generators in lexicographic one-line order, and transport sets are
built as products of per-letter matchings -- their size is the product of
letter-multiplicity factorials, never n!.

>>> list(transport_perms((0, 0), (0, 0)))
[(1, 2), (2, 1)]
>>> coinversion_code((2, 1, 3))
(0, 0, 2)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterator, Sequence

from .errors import IncompatibleContent, LengthMismatch, NotBlockForm, OutOfRange

Perm = tuple[int, ...]
IndexTuple = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_length(w: Perm) -> int:
    """Coxeter length = number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def compose(w: Perm, u: Perm) -> Perm:
    """Function composition (w o u)(k) = w(u(k))."""
    return tuple(w[u[k] - 1] for k in range(len(u)))


def act_on_tuple(w: Perm, nu: Sequence[int]) -> IndexTuple:
    """Left places action: entry nu_j moves to slot w(j)."""
    out = [0] * len(nu)
    for j, target in enumerate(w):
        out[target - 1] = nu[j]
    return tuple(out)


def act_right(nu: Sequence[int], w: Perm) -> IndexTuple:
    """Right action (nu * w)_k = nu_{w(k)}; inverse of the left action."""
    return tuple(nu[w[k] - 1] for k in range(len(w)))


def simple_transposition(n: int, a: int) -> Perm:
    """The adjacent swap of a and a+1 inside the symmetric group on n."""
    w = list(range(1, n + 1))
    w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


# ---------------------------------------------------------------------------
# Inversion statistics and the coinversion code
# ---------------------------------------------------------------------------


def smaller_before(w: Perm, t: int) -> frozenset[int]:
    """Positions j < t whose value lies below w(t): {j < t | w(j) < w(t)}."""
    wt = w[t - 1]
    return frozenset(j for j in range(1, t) if w[j - 1] < wt)


def coinversion_code(w: Perm) -> tuple[int, ...]:
    """Per-position counts of earlier smaller values; entry t lies in 0..t-1."""
    out = []
    for t in range(1, len(w) + 1):
        wt = w[t - 1]
        out.append(sum(1 for j in range(t - 1) if w[j] < wt))
    return tuple(out)


def from_coinversion_code(code: Sequence[int]) -> Perm:
    """Invert :func:`coinversion_code` by right-to-left decoding.

    Entry t of the code is the rank (minus one) of w(t) among the first t
    values, so peeling positions from the right picks the (code_t+1)-th
    smallest unused value each time.
    """
    n = len(code)
    for t, k in enumerate(code, start=1):
        if not 0 <= k < t:
            raise OutOfRange(f"code entry {k} at position {t} not in 0..{t - 1}")
    remaining = list(range(1, n + 1))
    out = [0] * n
    for t in range(n, 0, -1):
        out[t - 1] = remaining.pop(code[t - 1])
    return tuple(out)


# ---------------------------------------------------------------------------
# Transport sets
# ---------------------------------------------------------------------------


def transport_perms(nu: Sequence[int], nuprime: Sequence[int]) -> Iterator[Perm]:
    """All w with w*nu = nuprime, lazily, in lexicographic one-line order.

    w must carry each slot of nu holding letter x onto a slot of nuprime
    holding x, so the stream is the product of per-letter matchings; it is
    empty exactly when the two letter multisets differ.
    """
    nu = tuple(nu)
    nuprime = tuple(nuprime)
    if len(nu) != len(nuprime):
        raise LengthMismatch("tuples must have the same length")
    if Counter(nu) != Counter(nuprime):
        return
    positions: dict[int, list[int]] = {}
    for pos, x in enumerate(nuprime, start=1):
        positions.setdefault(x, []).append(pos)
    used = {x: [False] * len(ps) for x, ps in positions.items()}
    n = len(nu)
    w = [0] * n

    def rec(k: int) -> Iterator[Perm]:
        if k == n:
            yield tuple(w)
            return
        x = nu[k]
        ps = positions[x]
        flags = used[x]
        for idx, q in enumerate(ps):
            if flags[idx]:
                continue
            flags[idx] = True
            w[k] = q
            yield from rec(k + 1)
            flags[idx] = False

    yield from rec(0)


def transport_count(nu: Sequence[int], nuprime: Sequence[int]) -> int:
    """|{w : w*nu = nuprime}| = product of multiplicity factorials, or 0."""
    if len(nu) != len(nuprime):
        raise LengthMismatch("tuples must have the same length")
    cnt = Counter(nu)
    if cnt != Counter(nuprime):
        return 0
    out = 1
    for m in cnt.values():
        out *= factorial(m)
    return out


# ---------------------------------------------------------------------------
# Blocks of repeated letters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockStructure:
    """Sizes of a tuple's maximal runs plus their cumulative boundaries
    ``(c_0=0, c_1, ..., c_p=n)``; run letters may repeat non-adjacently."""

    sizes: tuple[int, ...]
    letters: tuple[int, ...]

    @property
    def cumulative(self) -> tuple[int, ...]:
        out = [0]
        for b in self.sizes:
            out.append(out[-1] + b)
        return tuple(out)

    @property
    def count(self) -> int:
        return len(self.sizes)


def run_blocks(nu: Sequence[int]) -> BlockStructure:
    """Group a tuple into maximal runs of equal adjacent letters."""
    sizes: list[int] = []
    letters: list[int] = []
    for x in nu:
        if letters and letters[-1] == x:
            sizes[-1] += 1
        else:
            letters.append(x)
            sizes.append(1)
    return BlockStructure(tuple(sizes), tuple(letters))


@dataclass(frozen=True)
class BlockForm:
    """A tuple grouped into blocks of repeated letters that are pairwise
    distinct across *all* blocks (the stricter grouping the basis machinery
    needs, as opposed to :func:`run_blocks` which only separates adjacent
    runs)."""

    tuple: IndexTuple
    letters: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def cumulative(self) -> tuple[int, ...]:
        out = [0]
        for b in self.sizes:
            out.append(out[-1] + b)
        return tuple(out)

    @property
    def count(self) -> int:
        return len(self.sizes)

    def block_of_slot(self, k: int) -> int:
        """0-based block index containing 1-based slot k."""
        c = self.cumulative
        for i in range(self.count):
            if c[i] < k <= c[i + 1]:
                return i
        raise OutOfRange(f"slot {k} outside 1..{c[-1]}")


def block_form_of(mu: Sequence[int], letters: Sequence[int] | None = None) -> BlockForm:
    """The grouped form of mu: each distinct letter repeated by multiplicity.

    Letters appear in first-occurrence order unless an explicit order is
    given (it must list exactly the distinct letters of mu).
    """
    mu = tuple(mu)
    cnt = Counter(mu)
    if letters is None:
        order = list(dict.fromkeys(mu))
    else:
        order = [int(x) for x in letters]
        if Counter(order) != Counter(cnt.keys()):
            raise IncompatibleContent(
                "letter order must list each distinct letter exactly once"
            )
    sizes = tuple(cnt[x] for x in order)
    grouped = tuple(x for x in order for _ in range(cnt[x]))
    return BlockForm(grouped, tuple(order), sizes)


def as_block_form(nu: Sequence[int]) -> BlockForm:
    """View an already-grouped tuple as a :class:`BlockForm`.

    Raises :class:`NotBlockForm` when some letter recurs in a later run.
    """
    nu = tuple(nu)
    runs = run_blocks(nu)
    if len(set(runs.letters)) != len(runs.letters):
        raise NotBlockForm(f"letters repeat across blocks in {nu}")
    return BlockForm(nu, runs.letters, runs.sizes)


def min_coset_reps(nu: Sequence[int]) -> Iterator[Perm]:
    """Stabilizer elements that ascend on each run block of nu, lazily, in
    lexicographic one-line order.

    These are the minimal-length representatives of the left cosets of the
    run-block Young subgroup that meet the stabilizer {w : w*nu = nu}; the
    stabilizer factors uniquely as (these) * (Young subgroup).  Built
    directly by handing each block an ascending subset of its letter's
    slots, so only the product of per-letter multinomials is ever touched
    (a single representative for a constant tuple), never the stabilizer.
    """
    from itertools import combinations

    nu = tuple(nu)
    blocks = run_blocks(nu)
    positions: dict[int, list[int]] = {}
    for p, x in enumerate(nu, start=1):
        positions.setdefault(x, []).append(p)
    taken = {x: [False] * len(ps) for x, ps in positions.items()}
    n = len(nu)
    w = [0] * n
    cumulative = blocks.cumulative

    def rec(i: int) -> Iterator[Perm]:
        if i == blocks.count:
            yield tuple(w)
            return
        x = blocks.letters[i]
        ps = positions[x]
        flags = taken[x]
        free = [idx for idx in range(len(ps)) if not flags[idx]]
        lo = cumulative[i]
        for chosen in combinations(free, blocks.sizes[i]):
            for offset, idx in enumerate(chosen):
                flags[idx] = True
                w[lo + offset] = ps[idx]
            yield from rec(i + 1)
            for idx in chosen:
                flags[idx] = False

    yield from rec(0)


def sorting_perm(mu: Sequence[int], form: BlockForm) -> Perm:
    """The minimal-length w with w*mu equal to the grouped tuple.

    Maps the ascending slots of each letter in mu onto the ascending slots
    of that letter's block, which is exactly the minimal-length right coset
    representative of the block Young subgroup carrying mu to the grouped
    form.
    """
    mu = tuple(mu)
    if Counter(mu) != Counter(form.tuple):
        raise IncompatibleContent("tuple content differs from the grouped form")
    c = form.cumulative
    next_slot = {x: c[i] + 1 for i, x in enumerate(form.letters)}
    w = [0] * len(mu)
    for pos, x in enumerate(mu):
        w[pos] = next_slot[x]
        next_slot[x] += 1
    return tuple(w)


# ---------------------------------------------------------------------------
# Shuffle splits
# ---------------------------------------------------------------------------

ShuffleSplit = tuple[tuple[int, ...], ...]


def shuffle_splits(n: int, parts: int) -> Iterator[ShuffleSplit]:
    """All ordered ways to split positions 1..n into ``parts`` ascending
    (possibly empty) subsequences; there are parts**n of them."""
    if parts < 1:
        raise ValueError("need at least one part")
    for assignment in product(range(parts), repeat=n):
        split: list[list[int]] = [[] for _ in range(parts)]
        for pos, part in enumerate(assignment, start=1):
            split[part].append(pos)
        yield tuple(tuple(p) for p in split)


def matched_shuffle_splits(
    nu: Sequence[int], mu: Sequence[int], parts: int
) -> Iterator[tuple[ShuffleSplit, ShuffleSplit]]:
    """Pairs of splits (s for nu, t for mu) with equal letter content in
    every part.  Empty when the full contents already differ.

    The t-side is generated under per-part per-letter capacity constraints
    accumulated while building the s-side, so hopeless branches are never
    explored and no per-split content recounting happens.
    """
    nu = tuple(nu)
    mu = tuple(mu)
    if len(nu) != len(mu):
        raise LengthMismatch("tuples must have the same length")
    if Counter(nu) != Counter(mu):
        return
    n = len(nu)
    letter_id = {x: i for i, x in enumerate(sorted(set(nu)))}
    nu_ids = [letter_id[x] for x in nu]
    mu_ids = [letter_id[x] for x in mu]
    k = len(letter_id)
    need = [[0] * k for _ in range(parts)]
    s_parts: list[list[int]] = [[] for _ in range(parts)]
    t_parts: list[list[int]] = [[] for _ in range(parts)]

    def rec_t(pos: int) -> Iterator[tuple[ShuffleSplit, ShuffleSplit]]:
        if pos > n:
            yield (
                tuple(tuple(p) for p in s_parts),
                tuple(tuple(p) for p in t_parts),
            )
            return
        x = mu_ids[pos - 1]
        for i in range(parts):
            if need[i][x] > 0:
                need[i][x] -= 1
                t_parts[i].append(pos)
                yield from rec_t(pos + 1)
                t_parts[i].pop()
                need[i][x] += 1

    def rec_s(pos: int) -> Iterator[tuple[ShuffleSplit, ShuffleSplit]]:
        if pos > n:
            yield from rec_t(1)
            return
        x = nu_ids[pos - 1]
        for i in range(parts):
            need[i][x] += 1
            s_parts[i].append(pos)
            yield from rec_s(pos + 1)
            s_parts[i].pop()
            need[i][x] -= 1

    yield from rec_s(1)


def split_perm(w: Perm, split: ShuffleSplit) -> tuple[Perm, Perm, ShuffleSplit]:
    """Cut w along a two-part split of its domain.

    Returns the two rank permutations induced on the parts together with
    the image split (the sorted images of the parts); :func:`merge_perm`
    reassembles w from them.
    """
    s1, s2 = split
    out_perms = []
    images = []
    for part in (s1, s2):
        vals = [w[p - 1] for p in part]
        ranks = sorted(vals)
        pos_of = {v: r + 1 for r, v in enumerate(ranks)}
        out_perms.append(tuple(pos_of[v] for v in vals))
        images.append(tuple(ranks))
    return out_perms[0], out_perms[1], (images[0], images[1])


def merge_perm(w1: Perm, w2: Perm, split: ShuffleSplit, images: ShuffleSplit) -> Perm:
    """Reassemble the permutation cut by :func:`split_perm`:
    position split_i[m] maps to images_i[w_i(m)]."""
    n = sum(len(p) for p in split)
    w = [0] * n
    for wi, si, ti in ((w1, split[0], images[0]), (w2, split[1], images[1])):
        if len(si) != len(wi) or len(ti) != len(wi):
            raise LengthMismatch("split parts and permutations disagree")
        for m, pos in enumerate(si):
            w[pos - 1] = ti[wi[m] - 1]
    return tuple(w)
