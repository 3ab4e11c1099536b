"""Permutation combinatorics: transport sets, codes, blocks, shuffles."""

from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klrdim.errors import (
    IncompatibleContent,
    LengthMismatch,
    NotBlockForm,
    OutOfRange,
)
from klrdim.perms import (
    act_on_tuple,
    act_right,
    as_block_form,
    block_form_of,
    coinversion_code,
    compose,
    from_coinversion_code,
    identity_perm,
    matched_shuffle_splits,
    merge_perm,
    min_coset_reps,
    perm_inverse,
    perm_length,
    run_blocks,
    shuffle_splits,
    simple_transposition,
    smaller_before,
    sorting_perm,
    split_perm,
    transport_count,
    transport_perms,
)

S3_S1 = (2, 1, 3)  # the swap of 1 and 2 inside S_3


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


class TestBasics:
    def test_actions_are_mutually_inverse(self):
        nu = (0, 1, 2, 1)
        for w in all_perms(4):
            assert act_right(act_on_tuple(w, nu), w) == nu
            assert act_on_tuple(w, act_right(nu, w)) == nu

    def test_compose_and_inverse(self):
        for w in all_perms(4):
            assert compose(w, perm_inverse(w)) == identity_perm(4)
            assert compose(perm_inverse(w), w) == identity_perm(4)

    def test_length_is_inversions(self):
        assert perm_length(identity_perm(5)) == 0
        assert perm_length((3, 2, 1)) == 3

    def test_simple_transposition(self):
        assert simple_transposition(3, 1) == S3_S1
        # s_2 s_1 as function composition has one-line form (3,1,2)
        assert compose(simple_transposition(3, 2), simple_transposition(3, 1)) == (3, 1, 2)


class TestSmallerBefore:
    def test_identity(self):
        w = identity_perm(5)
        for t in range(1, 6):
            assert smaller_before(w, t) == frozenset(range(1, t))

    def test_s1_in_s3(self):
        assert smaller_before(S3_S1, 3) == frozenset({1, 2})
        assert smaller_before(S3_S1, 2) == frozenset()


class TestCoinversionCode:
    def test_identity(self):
        for n in range(1, 7):
            assert coinversion_code(identity_perm(n)) == tuple(range(n))

    def test_s1_in_s3(self):
        assert coinversion_code(S3_S1) == (0, 0, 2)

    def test_roundtrip_s4(self):
        for w in all_perms(4):
            assert from_coinversion_code(coinversion_code(w)) == w

    def test_bijection_up_to_5(self):
        for n in range(6):
            codes = {coinversion_code(w) for w in all_perms(n)}
            expected = set(product(*(range(j + 1) for j in range(n))))
            assert codes == expected

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(list(range(1, 8))))
    def test_roundtrip_random(self, w):
        w = tuple(w)
        assert from_coinversion_code(coinversion_code(w)) == w

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            from_coinversion_code((0, 2))
        with pytest.raises(OutOfRange):
            from_coinversion_code((1,))


class TestTransport:
    def test_repeated_letter_pair(self):
        assert list(transport_perms((0, 0), (0, 0))) == [(1, 2), (2, 1)]

    def test_content_mismatch_is_empty(self):
        assert list(transport_perms((1, 2), (2, 2))) == []
        assert transport_count((1, 2), (2, 2)) == 0

    def test_aba_stabilizer(self):
        assert list(transport_perms((1, 2, 1), (1, 2, 1))) == [(1, 2, 3), (3, 2, 1)]

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            list(transport_perms((1,), (1, 1)))

    def test_against_brute_force(self):
        cases = [
            ((0, 1, 0, 1), (1, 0, 0, 1)),
            ((0, 0, 0, 1), (0, 1, 0, 0)),
            ((2, 2, 2, 2), (2, 2, 2, 2)),
            ((0, 1, 2, 1, 0), (1, 0, 0, 1, 2)),
        ]
        for nu, nuprime in cases:
            fast = list(transport_perms(nu, nuprime))
            slow = [w for w in all_perms(len(nu)) if act_on_tuple(w, nu) == nuprime]
            assert fast == sorted(slow)
            assert fast == sorted(fast)  # lexicographic stream
            assert transport_count(nu, nuprime) == len(fast)

    def test_count_formula(self):
        from math import factorial

        nu = (0, 0, 1, 1, 1, 2)
        assert transport_count(nu, nu) == factorial(2) * factorial(3)

    def test_empty_tuple(self):
        assert list(transport_perms((), ())) == [()]


class TestBlocks:
    def test_run_blocks(self):
        b = run_blocks((0, 0, 1, 0))
        assert b.sizes == (2, 1, 1)
        assert b.letters == (0, 1, 0)
        assert b.cumulative == (0, 2, 3, 4)

    def test_block_form_first_occurrence(self):
        f = block_form_of((2, 1, 1))
        assert f.tuple == (2, 1, 1)
        assert f.letters == (2, 1)
        f2 = block_form_of((2, 1, 1), letters=(1, 2))
        assert f2.tuple == (1, 1, 2)

    def test_block_form_of_scattered(self):
        assert block_form_of((0, 1, 0)).tuple == (0, 0, 1)

    def test_block_form_bad_letters(self):
        with pytest.raises(IncompatibleContent):
            block_form_of((0, 1), letters=(0, 2))

    def test_as_block_form_rejects_repeats(self):
        with pytest.raises(NotBlockForm):
            as_block_form((0, 1, 0))
        f = as_block_form((0, 0, 1))
        assert f.sizes == (2, 1)


class TestMinCosetReps:
    def test_single_block(self):
        assert list(min_coset_reps((0, 0))) == [(1, 2)]

    def test_distinct_letters(self):
        assert list(min_coset_reps((1, 2))) == [(1, 2)]

    def test_aba(self):
        assert list(min_coset_reps((1, 2, 1))) == [(1, 2, 3), (3, 2, 1)]

    @pytest.mark.parametrize("letters,n", [(2, 5), (3, 4)])
    def test_unique_factorization(self, letters, n):
        # stabilizer == reps * (block Young subgroup), uniquely
        for nu in product(range(letters), repeat=n):
            blocks = run_blocks(nu)
            bounds = blocks.cumulative
            young = []
            for w in all_perms(n):
                if all(
                    bounds[i] < w[k] <= bounds[i + 1]
                    for i in range(blocks.count)
                    for k in range(bounds[i], bounds[i + 1])
                ):
                    young.append(w)
            reps = list(min_coset_reps(nu))
            produced = {}
            for d in reps:
                for u in young:
                    w = compose(d, u)
                    assert w not in produced
                    produced[w] = (d, u)
            assert set(produced) == set(transport_perms(nu, nu))


class TestSortingPerm:
    def test_already_grouped(self):
        f = block_form_of((0, 0, 1))
        assert sorting_perm((0, 0, 1), f) == (1, 2, 3)

    def test_worked_example(self):
        f = block_form_of((1, 1, 2))
        assert sorting_perm((2, 1, 1), f) == (3, 1, 2)

    def test_content_mismatch(self):
        with pytest.raises(IncompatibleContent):
            sorting_perm((0, 0), block_form_of((0, 1)))

    @pytest.mark.parametrize("letters,n", [(2, 5), (3, 4)])
    def test_minimal_length_exhaustive(self, letters, n):
        for mu in product(range(letters), repeat=n):
            f = block_form_of(mu)
            d = sorting_perm(mu, f)
            assert act_on_tuple(d, mu) == f.tuple
            lengths = [
                perm_length(w) for w in transport_perms(mu, f.tuple)
            ]
            assert perm_length(d) == min(lengths)
            # minimality is attained by d alone within its Young coset
            assert sum(1 for L in lengths if L == perm_length(d)) >= 1

    def test_factor_recurrence(self):
        # if the sorting permutation factors as d1*d2 with lengths adding,
        # then the sorting permutation of mu * d2^-1 is d1
        for mu in product(range(3), repeat=4):
            f = block_form_of(mu)
            d = sorting_perm(mu, f)
            for u in all_perms(4):
                d1 = compose(d, perm_inverse(u))
                if perm_length(d1) + perm_length(u) != perm_length(d):
                    continue
                mu2 = act_right(mu, perm_inverse(u))
                assert sorting_perm(mu2, f) == d1


class TestShuffles:
    def test_counts(self):
        assert len(list(shuffle_splits(2, 2))) == 4
        assert len(list(shuffle_splits(3, 3))) == 27
        assert list(shuffle_splits(0, 2)) == [((), ())]

    def test_parts_partition_positions(self):
        for split in shuffle_splits(4, 3):
            seen = [p for part in split for p in part]
            assert sorted(seen) == [1, 2, 3, 4]
            for part in split:
                assert list(part) == sorted(part)

    def test_matched_singleton(self):
        got = list(matched_shuffle_splits((0,), (0,), 2))
        assert got == [
            (((1,), ()), ((1,), ())),
            (((), (1,)), ((), (1,))),
        ]

    def test_matched_pair_count(self):
        assert len(list(matched_shuffle_splits((1, 2), (2, 1), 2))) == 4

    def test_matched_empty_on_content_mismatch(self):
        assert list(matched_shuffle_splits((1, 1), (1, 2), 2)) == []

    def test_matched_against_brute_force(self):
        nu, mu = (0, 1, 0), (0, 0, 1)
        fast = set(matched_shuffle_splits(nu, mu, 2))
        slow = set()
        for s in shuffle_splits(3, 2):
            for t in shuffle_splits(3, 2):
                if all(
                    sorted(nu[p - 1] for p in s[i]) == sorted(mu[p - 1] for p in t[i])
                    for i in range(2)
                ):
                    slow.add((s, t))
        assert fast == slow


class TestSplitMerge:
    def test_one_sided(self):
        w = (3, 1, 2)
        w1, w2, images = split_perm(w, ((1, 2, 3), ()))
        assert w1 == w and w2 == () and images == ((1, 2, 3), ())

    def test_tiny(self):
        w1, w2, images = split_perm((2, 1), ((1,), (2,)))
        assert w1 == (1,) and w2 == (1,)
        assert images == ((2,), (1,))

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
    def test_merge_recovers(self, n):
        for w in all_perms(n):
            count = 0
            for split in shuffle_splits(n, 2):
                w1, w2, images = split_perm(w, split)
                assert merge_perm(w1, w2, split, images) == w
                count += 1
            assert count == 2 ** n
