"""Deciding when the idempotent e(nu) is nonzero in R^Lambda.

Four independent routes, which always agree:

* ``direct``  -- the diagonal dimension sum is nonzero;
* ``divided`` -- the run-block divided-power sum is nonzero;
* ``blockwise`` -- for grouped tuples with globally distinct letters, each
  block's head pairing is at least the block size;
* ``shuffle`` -- writing Lambda as a sum of fundamental weights, nu splits
  as a shuffle of pieces that survive at level one.

Every verdict carries a machine-checkable witness (the nonzero sum, the
per-block inequalities, or an explicit shuffle decomposition) so callers
can print certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from . import budget
from .budget import Deadline
from .cartan import CartanData, Weight
from .dims import dim, dim_divided, dim_factor_id
from .errors import PreconditionFail
from .perms import BlockForm, as_block_form


@dataclass(frozen=True)
class NonzeroVerdict:
    """Outcome of a vanishing test: the boolean verdict, which route decided
    it, and a witness for certification."""

    nonzero: bool
    method: str
    witness: Any

    def __bool__(self) -> bool:
        return self.nonzero


def nonzero_direct(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    deadline: Deadline | None = None,
) -> NonzeroVerdict:
    """e(nu) is nonzero exactly when dim e(nu) R e(nu) is; witness = the sum."""
    value = dim(c, lam, nu, nu, deadline=deadline)
    return NonzeroVerdict(value != 0, "direct", value)


def nonzero_divided(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int],
    deadline: Deadline | None = None,
) -> NonzeroVerdict:
    """Same verdict via the divided-power sum over block representatives."""
    value = dim_divided(c, lam, nu, deadline=deadline)
    return NonzeroVerdict(value != 0, "divided", value)


def nonzero_blockwise(
    c: CartanData,
    lam: Weight,
    nu: Sequence[int] | BlockForm,
) -> NonzeroVerdict:
    """For a grouped tuple with globally distinct letters: nonzero iff every
    block's head pairing meets the block size.

    Witness: the list of (head pairing, block size) pairs; the verdict is
    their conjunction.  Raises :class:`NotBlockForm` on tuples whose
    letters recur across blocks.
    """
    form = nu if isinstance(nu, BlockForm) else as_block_form(nu)
    cumulative = form.cumulative
    pairs = []
    for i in range(form.count):
        head = dim_factor_id(c, lam, form.tuple, cumulative[i] + 1)
        pairs.append((head, form.sizes[i]))
    ok = all(head >= size for head, size in pairs)
    return NonzeroVerdict(ok, "blockwise", tuple(pairs))


def nonzero_by_shuffle(
    c: CartanData,
    nu: Sequence[int],
    fundamentals: Sequence[int],
    deadline: Deadline | None = None,
) -> NonzeroVerdict:
    """Nonzero at Lambda = sum of the given fundamental weights iff nu is a
    shuffle of pieces each nonzero at its own level-one weight.

    Searches position assignments depth-first; a branch dies as soon as a
    piece opens with a letter whose pairing against its fundamental weight
    vanishes (that alone forces the level-one dimension to zero).  The
    witness of a positive verdict is the tuple of pieces, one per
    fundamental weight, in order.
    """
    nu = tuple(nu)
    parts = list(fundamentals)
    if not parts:
        raise PreconditionFail("need at least one fundamental weight")
    n = len(nu)
    l = len(parts)
    level_one = [Weight.fundamental(c.n, t) for t in parts]
    lam_head = [w.coeffs for w in level_one]
    piece: list[list[int]] = [[] for _ in range(l)]
    seen: dict[tuple[int, tuple[int, ...]], bool] = {}

    def piece_ok(i: int) -> bool:
        key = (parts[i], tuple(piece[i]))
        hit = seen.get(key)
        if hit is None:
            hit = dim(c, level_one[i], piece[i], piece[i], deadline=deadline) != 0
            seen[key] = hit
        return hit

    def rec(pos: int) -> tuple[tuple[int, ...], ...] | None:
        budget.check(deadline, "shuffle search")
        if pos == n:
            if all(piece_ok(i) for i in range(l)):
                return tuple(tuple(p) for p in piece)
            return None
        x = nu[pos]
        for i in range(l):
            if not piece[i] and lam_head[i][x] == 0:
                continue
            piece[i].append(x)
            found = rec(pos + 1)
            if found is not None:
                return found
            piece[i].pop()
        return None

    witness = rec(0)
    return NonzeroVerdict(witness is not None, "shuffle", witness)
