"""Self-verification battery: every closed formula against its independent
recomputation, over all blocks and tuple pairs up to a size cap.

Failures are reported as data (with the first counterexample), never raised;
a clean report is the library's strongest correctness statement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterator

from . import budget
from .budget import Deadline
from .cartan import CartanData, Weight
from .dims import (
    blocks_of_size,
    block_dim,
    dim,
    dim_divided,
    graded_dim,
    graded_dim_recursive,
    nilhecke_graded_dim,
    tuples_with_content,
)
from .levelred import (
    dominant_splits,
    reduce_block_dim,
    reduce_pair_dim_multi,
    reduce_pair_graded,
)
from .basis import block_levels, exponent_bounds
from .perms import block_form_of
from .qpoly import eval_one

SCOPES = ("oracle", "divided", "levelred", "basis", "all")


@dataclass
class VerifyReport:
    """Outcome of one suite: pass flag, work counters, first failures."""

    suite: str
    ok: bool = True
    blocks: int = 0
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    def record(self, **counterexample) -> None:
        self.ok = False
        if len(self.failures) < 10:
            self.failures.append(counterexample)

    def summary(self) -> str:
        status = "OK" if self.ok else "FAIL"
        return (
            f"{status}: {self.blocks}/{self.blocks} β-blocks, "
            f"{len(self.failures) if not self.ok else 0} mismatches "
            f"({self.checked} checks)"
        )

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "blocks": self.blocks,
            "checked": self.checked,
            "failures": self.failures,
        }


def _pairs(c: CartanData, max_n: int) -> Iterator[tuple]:
    for n in range(max_n + 1):
        for beta in blocks_of_size(c, n):
            tuples = list(tuples_with_content(beta))
            yield beta, tuples


def verify_oracle(
    c: CartanData, lam: Weight, max_n: int = 3, deadline: Deadline | None = None
) -> VerifyReport:
    """Closed graded formula == restriction recursion (exact Laurent
    equality) and q=1 == direct integer products, on every pair."""
    report = VerifyReport("oracle")
    for beta, tuples in _pairs(c, max_n):
        report.blocks += 1
        memo: dict = {}
        for nu in tuples:
            for nuprime in tuples:
                budget.check(deadline, "oracle suite")
                closed = graded_dim(c, lam, nu, nuprime)
                recursive = graded_dim_recursive(c, lam, nu, nuprime, memo=memo)
                plain = dim(c, lam, nu, nuprime)
                report.checked += 1
                if closed != recursive:
                    report.record(
                        kind="graded mismatch", nu=list(nu), nuprime=list(nuprime),
                        closed=str(closed), recursive=str(recursive),
                    )
                if eval_one(closed) != plain:
                    report.record(
                        kind="q=1 mismatch", nu=list(nu), nuprime=list(nuprime),
                        graded_at_one=eval_one(closed), direct=plain,
                    )
                if any(coeff < 0 for _, coeff in closed.items()):
                    report.record(
                        kind="negative coefficient", nu=list(nu),
                        nuprime=list(nuprime), value=str(closed),
                    )
    return report


def verify_divided(
    c: CartanData, lam: Weight, max_n: int = 3, deadline: Deadline | None = None
) -> VerifyReport:
    """Divided-power diagonal sums == direct diagonal dimensions."""
    report = VerifyReport("divided")
    for beta, tuples in _pairs(c, max_n):
        report.blocks += 1
        for nu in tuples:
            budget.check(deadline, "divided suite")
            lhs = dim_divided(c, lam, nu)
            rhs = dim(c, lam, nu, nu)
            report.checked += 1
            if lhs != rhs:
                report.record(kind="divided mismatch", nu=list(nu), divided=lhs, direct=rhs)
    return report


def verify_levelred(
    c: CartanData, lam: Weight, max_n: int = 2, deadline: Deadline | None = None
) -> VerifyReport:
    """Pairwise and blockwise level reduction identities for all 2- and
    3-part dominant splits, plus the graded-analogue failure witness."""
    report = VerifyReport("levelred")
    splits = [s for parts in (2, 3) for s in dominant_splits(lam, parts)]
    cache: dict = {}
    for beta, tuples in _pairs(c, max_n):
        report.blocks += 1
        direct_block = block_dim(c, lam, beta)
        for split in splits:
            reduced_block = reduce_block_dim(
                c, lam, beta, split, deadline=deadline, cache=cache
            )
            report.checked += 1
            if direct_block != reduced_block:
                report.record(
                    kind="block reduction mismatch", beta=list(beta.coeffs),
                    split=[list(w.coeffs) for w in split],
                    direct=direct_block, reduced=reduced_block,
                )
            for nu in tuples:
                for mu in tuples:
                    budget.check(deadline, "level reduction suite")
                    direct = dim(c, lam, nu, mu)
                    reduced = reduce_pair_dim_multi(
                        c, lam, nu, mu, split, deadline=deadline, cache=cache
                    )
                    report.checked += 1
                    if direct != reduced:
                        report.record(
                            kind="pair reduction mismatch", nu=list(nu), mu=list(mu),
                            split=[list(w.coeffs) for w in split],
                            direct=direct, reduced=reduced,
                        )
    # The graded analogue must FAIL on one nilHecke strand at level two:
    # the reduction sum gives 1+1 while the true graded dimension is 1+q^2.
    from .cartan import validate_cartan

    rank1 = validate_cartan([[2]])
    two = Weight((2,))
    halves = (Weight((1,)), Weight((1,)))
    graded_sum = reduce_pair_graded(rank1, two, (0,), (0,), halves)
    true_graded = graded_dim(rank1, two, (0,), (0,))
    report.checked += 1
    if graded_sum == true_graded:
        report.record(
            kind="graded reduction unexpectedly held",
            reduced=str(graded_sum), direct=str(true_graded),
        )
    return report


def verify_basis(
    c: CartanData, lam: Weight, max_n: int = 3, deadline: Deadline | None = None
) -> VerifyReport:
    """Exponent-bound cardinalities == dimensions, positivity ==
    nonvanishing, and the diagonal nilHecke factorization, for every tuple."""
    report = VerifyReport("basis")
    for beta, tuples in _pairs(c, max_n):
        report.blocks += 1
        for mu in tuples:
            budget.check(deadline, "basis suite")
            form = block_form_of(mu)
            bounds = exponent_bounds(c, lam, mu, form)
            card = prod(factorial(b) for b in form.sizes) * prod(bounds)
            d1 = dim(c, lam, form.tuple, mu)
            d2 = dim(c, lam, mu, form.tuple)
            report.checked += 1
            if not (card == d1 == d2):
                report.record(
                    kind="cardinality mismatch", mu=list(mu),
                    grouped=list(form.tuple), bounds=list(bounds),
                    cardinality=card, dim_to=d1, dim_from=d2,
                )
            if (all(b > 0 for b in bounds)) != (d1 != 0):
                report.record(
                    kind="positivity mismatch", mu=list(mu),
                    bounds=list(bounds), dim=d1,
                )
            if mu == form.tuple:
                levels = block_levels(c, lam, form)
                closed = graded_dim(c, lam, mu, mu)
                product = None
                for i in range(form.count):
                    piece = nilhecke_graded_dim(
                        levels[i], form.sizes[i], c.symmetrizer[form.letters[i]]
                    )
                    product = piece if product is None else product * piece
                report.checked += 1
                if product is not None and closed != product:
                    report.record(
                        kind="diagonal factorization mismatch", mu=list(mu),
                        closed=str(closed), product=str(product),
                    )
    return report


_SUITES = {
    "oracle": verify_oracle,
    "divided": verify_divided,
    "levelred": verify_levelred,
    "basis": verify_basis,
}


def verify_suite(
    scope: str,
    c: CartanData,
    lam: Weight,
    max_n: int = 3,
    deadline: Deadline | None = None,
) -> list[VerifyReport]:
    """Run one named suite, or all of them; returns one report per suite."""
    if scope not in SCOPES:
        raise ValueError(f"unknown suite {scope!r}; pick one of {SCOPES}")
    if scope == "all":
        names = ("oracle", "divided", "levelred", "basis")
    else:
        names = (scope,)
    out = []
    for name in names:
        n_cap = min(max_n, 2) if name == "levelred" else max_n
        out.append(_SUITES[name](c, lam, max_n=n_cap, deadline=deadline))
    return out
