"""The bijections and their worked examples, roundtrips, and laws."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

import fishburn as fb
from fishburn import (
    AscentSequence,
    ChordInvolution,
    ModifiedAscentSequence,
    Permutation,
)
from fishburn.bijections import (
    active_sites,
    canonical_labelling,
    dual,
    from_modified,
    involution_to_poset,
    perm_to_sequence,
    poset_to_involution,
    poset_to_perm,
    poset_to_sequence,
    remove_neighbour_nestings,
    sequence_to_perm,
    sequence_to_perm_by_insertion,
    sequence_to_poset,
    swap_endpoints,
    to_modified,
)
from fishburn.errors import NotInRError, NotModifiedSequenceError
from fishburn.objects import (
    enumerate_fixed_point_free_involutions,
    in_I2n,
    neighbour_nesting_positions,
)

from conftest import (
    CHORD10_SEQUENCE,
    POSET8B_LEVELS,
    POSET8B_SEQUENCE,
    POSET8C_LEVELS,
    POSET8C_SEQUENCE,
)
from test_objects import ascent_sequences


class TestPermutationEncoding:
    def test_worked_example(self):
        x = perm_to_sequence(Permutation((6, 1, 8, 3, 2, 5, 4, 7)))
        assert x.entries == (0, 1, 1, 2, 2, 0, 3, 1)

    def test_trivial_cases(self):
        assert perm_to_sequence(Permutation((1,))).entries == (0,)
        assert perm_to_sequence(Permutation((2, 1))).entries == (0, 0)
        assert perm_to_sequence(Permutation((1, 2))).entries == (0, 1)
        assert perm_to_sequence(Permutation(())).entries == ()

    def test_rejects_with_witness(self):
        with pytest.raises(NotInRError) as info:
            perm_to_sequence(Permutation((2, 3, 1)))
        assert info.value.witness == (1, 2, 3)

    def test_decode_worked_example(self):
        expect = (3, 1, 7, 6, 4, 8, 2, 5)
        x = AscentSequence((0, 1, 0, 1, 3, 1, 1, 2))
        assert sequence_to_perm(x).entries == expect
        assert sequence_to_perm_by_insertion(x).entries == expect

    def test_decode_single(self):
        assert sequence_to_perm(AscentSequence((0,))).entries == (1,)

    def test_decoders_agree_and_roundtrip(self, sequences_by_length):
        for n in range(7):
            for x in sequences_by_length[n]:
                pi = sequence_to_perm(x)
                assert sequence_to_perm_by_insertion(x) == pi
                assert perm_to_sequence(pi) == x

    @given(ascent_sequences())
    def test_roundtrip_random(self, x):
        pi = sequence_to_perm(x)
        assert sequence_to_perm_by_insertion(x) == pi
        assert perm_to_sequence(pi) == x


class TestActiveSites:
    def test_worked_example(self):
        profile = active_sites(Permutation((3, 1, 7, 6, 4, 8, 2, 5)))
        assert profile.sites == (0, 2, 5, 6, 7, 8)
        assert profile.s == 6
        assert profile.b == 2

    def test_single(self):
        profile = active_sites(Permutation((1,)))
        assert profile.s == 2
        assert profile.b == 0

    def test_rejects_outside_family(self):
        with pytest.raises(NotInRError):
            active_sites(Permutation((2, 3, 1)))

    def test_site_count_matches_ascents(self):
        pi = Permutation((6, 1, 8, 3, 2, 5, 4, 7))
        assert active_sites(pi).s == 2 + perm_to_sequence(pi).asc

    def test_profile_laws_exhaustive(self, sequences_by_length):
        for n in range(1, 7):
            for x in sequences_by_length[n]:
                profile = active_sites(sequence_to_perm(x))
                assert profile.s == 2 + x.asc
                assert profile.b == x.entries[-1]
                assert profile.sites[0] == 0 and profile.sites[-1] == n


class TestModification:
    def test_worked_example(self):
        m = to_modified(AscentSequence((0, 1, 0, 1, 3, 1, 1, 2)))
        assert m.entries == (0, 3, 0, 1, 4, 1, 1, 2)
        assert from_modified(m).entries == (0, 1, 0, 1, 3, 1, 1, 2)

    def test_no_ascents_fixed(self):
        assert to_modified(AscentSequence((0, 0, 0))).entries == (0, 0, 0)

    def test_trivial(self):
        assert to_modified(AscentSequence((0,))).entries == (0,)
        assert from_modified(ModifiedAscentSequence((0,))).entries == (0,)

    def test_injective_and_roundtrips(self, sequences_by_length):
        for n in range(8):
            images = set()
            for x in sequences_by_length[n]:
                m = to_modified(x)
                images.add(m.entries)
                assert from_modified(m) == x
                assert fb.objects.ascent_positions(m.entries) == fb.objects.ascent_positions(x.entries)
                assert (max(m.entries) if n else 0) == x.asc
            assert len(images) == len(sequences_by_length[n])

    def test_unreachable_input_rejected(self):
        with pytest.raises(NotModifiedSequenceError):
            ModifiedAscentSequence((0, 2))


class TestPosetEncoding:
    def test_deletion_walkthrough(self, poset8b):
        assert poset_to_sequence(poset8b).entries == POSET8B_SEQUENCE

    def test_insertion_walkthrough(self, poset8c):
        assert poset_to_sequence(poset8c).entries == POSET8C_SEQUENCE
        built = sequence_to_poset(AscentSequence(POSET8C_SEQUENCE))
        assert built == poset8c
        assert built.levels == POSET8C_LEVELS

    def test_chain_and_antichain(self):
        assert poset_to_sequence(fb.Poset.chain(5)).entries == (0, 1, 2, 3, 4)
        assert poset_to_sequence(fb.Poset.antichain(4)).entries == (0, 0, 0, 0)
        assert sequence_to_poset(AscentSequence((0, 0, 0))) == fb.Poset.antichain(3)

    def test_roundtrip_exhaustive(self, sequences_by_length):
        for n in range(8):
            for x in sequences_by_length[n]:
                assert poset_to_sequence(sequence_to_poset(x)) == x

    @given(ascent_sequences())
    def test_roundtrip_random(self, x):
        assert poset_to_sequence(sequence_to_poset(x)) == x

    def test_canonical_labels_sit_at_modified_levels(self, sequences_by_length):
        for n in range(8):
            for x in sequences_by_length[n]:
                p = sequence_to_poset(x)
                labels = canonical_labelling(p)
                m = to_modified(x).entries
                for element in range(1, n + 1):
                    assert p.level_of(element) == m[labels[element - 1] - 1]

    def test_canonical_labelling_of_relabelled_poset(self, poset8b):
        # built with canonical labels, the walkthrough poset has levels m_i
        built = sequence_to_poset(AscentSequence(POSET8B_SEQUENCE))
        assert built.levels == POSET8B_LEVELS
        assert canonical_labelling(built) == tuple(range(1, 9))


class TestPosetToPerm:
    def test_worked_example(self, poset8b):
        assert poset_to_perm(poset8b).entries == (3, 1, 7, 6, 4, 8, 2, 5)

    def test_single(self):
        assert poset_to_perm(fb.Poset.antichain(1)).entries == (1,)

    def test_triangle_commutes(self, sequences_by_length):
        for n in range(8):
            for x in sequences_by_length[n]:
                assert poset_to_perm(sequence_to_poset(x)) == sequence_to_perm(x)

    def test_active_sites_are_level_boundaries(self, sequences_by_length):
        for n in range(1, 7):
            for x in sequences_by_length[n]:
                p = sequence_to_poset(x)
                sizes = [len(s) for s in p.level_sets()]
                boundaries = [0] + list(itertools.accumulate(sizes))
                assert active_sites(poset_to_perm(p)).sites == tuple(boundaries)


class TestIntervalOrders:
    def test_worked_example(self, chord10):
        p = involution_to_poset(chord10)
        assert p.levels == (0, 0, 0, 1, 2)
        assert poset_to_sequence(p).entries == CHORD10_SEQUENCE

    def test_single_chord(self):
        p = involution_to_poset(ChordInvolution((2, 1)))
        assert p.n == 1
        assert poset_to_involution(p).partner == (2, 1)

    def test_reconstruction_worked_example(self, chord10):
        assert poset_to_involution(involution_to_poset(chord10)) == chord10

    def test_roundtrips_exhaustive(self, sequences_by_length):
        for n in range(7):
            for x in sequences_by_length[n]:
                c = poset_to_involution(sequence_to_poset(x))
                assert in_I2n(c)
                assert poset_to_sequence(involution_to_poset(c)) == x
        for points in range(0, 13, 2):
            for c in enumerate_fixed_point_free_involutions(points):
                if in_I2n(c):
                    assert poset_to_involution(involution_to_poset(c)) == c

    def test_mirror_gives_dual(self):
        for points in range(2, 9, 2):
            for c in enumerate_fixed_point_free_involutions(points):
                lhs = poset_to_sequence(involution_to_poset(c.mirror()))
                rhs = poset_to_sequence(dual(involution_to_poset(c)))
                assert lhs == rhs

    def test_chord_level_counts_closing_runs(self):
        for points in range(2, 11, 2):
            for c in enumerate_fixed_point_free_involutions(points):
                p = involution_to_poset(c)
                for label, (opener, _closer) in enumerate(c.chords(), start=1):
                    runs = 0
                    for j in range(2, opener + 1):
                        if not c.is_opener(j) and c.is_opener(j - 1):
                            runs += 1
                    assert p.level_of(label) == runs


class TestNestingRemoval:
    def test_worked_example(self):
        before = ChordInvolution((3, 6, 1, 5, 4, 2, 10, 9, 8, 7))
        after = remove_neighbour_nestings(before)
        assert after.partner == (3, 5, 1, 6, 2, 4, 9, 10, 7, 8)
        assert in_I2n(after)

    def test_identity_on_members(self):
        for points in range(0, 11, 2):
            for c in enumerate_fixed_point_free_involutions(points):
                if in_I2n(c):
                    assert remove_neighbour_nestings(c) == c

    def test_matches_reconstruction(self):
        for points in range(0, 9, 2):
            for c in enumerate_fixed_point_free_involutions(points):
                assert remove_neighbour_nestings(c) == poset_to_involution(involution_to_poset(c))

    def test_each_swap_preserves_the_order(self):
        for points in (6, 8):
            for c in enumerate_fixed_point_free_involutions(points):
                target = poset_to_sequence(involution_to_poset(c))
                current = c
                while True:
                    spots = neighbour_nesting_positions(current)
                    if not spots:
                        break
                    current = swap_endpoints(current, spots[0])
                    assert poset_to_sequence(involution_to_poset(current)).entries == target.entries

    def test_result_is_order_independent(self):
        # explore every order of applying the swaps on 8 points
        for c in enumerate_fixed_point_free_involutions(8):
            expected = remove_neighbour_nestings(c)
            stack, seen = [c], set()
            while stack:
                cur = stack.pop()
                if cur.partner in seen:
                    continue
                seen.add(cur.partner)
                spots = neighbour_nesting_positions(cur)
                if not spots:
                    assert cur == expected
                stack.extend(swap_endpoints(cur, i) for i in spots)


def chord_involutions(max_chords=8):
    """Hypothesis strategy: a random fixed-point-free involution."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_chords))
        points = list(range(1, 2 * n + 1))
        partner = [0] * (2 * n)
        while points:
            a = points.pop(0)
            b = points.pop(draw(st.integers(min_value=0, max_value=len(points) - 1)))
            partner[a - 1], partner[b - 1] = b, a
        return ChordInvolution(tuple(partner))

    return build()


class TestRandomChordDiagrams:
    @given(chord_involutions())
    def test_normalization_matches_reconstruction(self, c):
        cleaned = remove_neighbour_nestings(c)
        assert in_I2n(cleaned)
        assert cleaned == poset_to_involution(involution_to_poset(c))

    @given(chord_involutions())
    def test_mirror_gives_dual_randomized(self, c):
        lhs = poset_to_sequence(involution_to_poset(c.mirror()))
        rhs = poset_to_sequence(dual(involution_to_poset(c)))
        assert lhs == rhs


class TestDuality:
    def test_self_dual_families(self):
        chain = fb.Poset.chain(4)
        assert poset_to_sequence(dual(chain)) == poset_to_sequence(chain)
        assert dual(fb.Poset.antichain(4)) == fb.Poset.antichain(4)

    def test_involutive_and_rank_preserving(self, sequences_by_length):
        for n in range(7):
            for x in sequences_by_length[n]:
                p = sequence_to_poset(x)
                d = dual(p)
                assert dual(d) == p
                if n:
                    assert d.rank == p.rank

    def test_dual_of_walkthrough_poset(self, poset8b):
        pi = sequence_to_perm(poset_to_sequence(dual(poset8b)))
        assert pi.entries == (4, 1, 7, 2, 6, 5, 8, 3)
