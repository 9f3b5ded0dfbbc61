"""Unit tests for dominantization, wall bounds, RoCK tests, and signatures."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import blocks, contexts
from rockblocks import (
    Block,
    Context,
    DomainError,
    all_rocks,
    base_point,
    canonical_scopes_signature,
    find_dom_w_chamber,
    find_dominant,
    find_n,
    is_dominant,
    reflect_block,
    reflect_point,
    render_report,
    rock_weight,
    scopes_equivalent,
    scopes_signature,
)
from rockblocks import test_rock as run_rock_test

CTX = Context(4, (2, 0))
AL = Block.from_counts(CTX, {0: 25, 1: 32, 2: 34, 3: 32})
RAL = Block.from_counts(CTX, {0: 45, 1: 42, 2: 34, 3: 42})
DOM = Block.from_counts(CTX, {0: 3, 1: 3, 2: 3, 3: 3})
POINT = (Fraction(3, 2), Fraction(-3), Fraction(15, 4), Fraction(-3, 4))


class TestFindDominant:
    def test_reference_word_and_block(self):
        word, dom = find_dominant(AL)
        assert word == (1, 2, 1, 3, 0, 1, 2, 1, 0, 3, 0, 1, 2, 1, 0, 3, 0, 2, 1, 0, 3, 0, 2)
        assert dom == DOM

    def test_word_composes_to_dominant(self):
        word, dom = find_dominant(AL)
        assert reduce(reflect_block, word, AL) == dom

    def test_dominant_block_gets_empty_word(self):
        word, dom = find_dominant(DOM)
        assert word == ()
        assert dom == DOM

    def test_rejects_negative_entries(self):
        with pytest.raises(DomainError):
            find_dominant(Block.from_counts(CTX, {0: -1}))

    @given(blocks())
    def test_result_is_dominant_when_in_support(self, blk):
        try:
            _, dom = find_dominant(blk)
        except DomainError:
            return
        assert is_dominant(dom)
        assert all(entry >= 0 for entry in dom.b)


class TestChamberPoint:
    def test_reference_point(self):
        point, dom = find_dom_w_chamber(AL)
        assert point == POINT
        assert dom == DOM

    def test_point_is_word_applied_to_base(self):
        word, _ = find_dominant(AL)
        point, _ = find_dom_w_chamber(AL)
        assert reduce(reflect_point, word, base_point(CTX.e)) == point

    @given(blocks())
    def test_point_sum_matches_base(self, blk):
        try:
            point, _ = find_dom_w_chamber(blk)
        except DomainError:
            return
        assert sum(point) == sum(base_point(blk.ctx.e))


class TestFindN:
    def test_reference_table(self):
        wb = find_n(DOM)
        assert wb.entries == {
            (2, 1): 2, (3, 1): 3, (4, 1): 3,
            (1, 2): 2, (3, 2): 3, (4, 2): 3,
            (1, 3): 2, (2, 3): 2, (4, 3): 2,
            (1, 4): 2, (2, 4): 2, (3, 4): 2,
        }

    def test_accessors_are_oriented(self):
        wb = find_n(DOM)
        assert wb.kplus(1, 2) == wb.entries[(1, 2)]
        assert wb.kminus(1, 2) == wb.entries[(2, 1)]

    def test_rejects_non_dominant_block(self):
        with pytest.raises(DomainError):
            find_n(AL)


class TestRockTest:
    def test_failing_block_report(self):
        report = run_rock_test(AL)
        assert report.is_rock is False
        values = {(c.i, c.j): c.value for c in report.checks}
        assert values == {
            (1, 2): Fraction(9, 2),
            (1, 3): Fraction(-9, 4),
            (1, 4): Fraction(9, 4),
            (2, 3): Fraction(-27, 4),
            (2, 4): Fraction(-9, 4),
            (3, 4): Fraction(9, 2),
        }
        bad = [c for c in report.checks if not c.ok]
        assert [(c.i, c.j) for c in bad] == [(1, 4)]
        assert (bad[0].lower, bad[0].upper) == (-2, 3)

    def test_passing_block_report(self):
        report = run_rock_test(RAL)
        assert report.is_rock is True
        values = {(c.i, c.j): c.value for c in report.checks}
        assert values == {
            (1, 2): Fraction(11, 2),
            (1, 3): Fraction(-9, 4),
            (1, 4): Fraction(13, 4),
            (2, 3): Fraction(-31, 4),
            (2, 4): Fraction(-9, 4),
            (3, 4): Fraction(11, 2),
        }

    def test_render_report_text(self):
        assert render_report(run_rock_test(AL)) == "\n".join([
            "pair [1, 2]: value 9/2 range [-2, 2] -> OK",
            "pair [1, 3]: value -9/4 range [-2, 3] -> OK",
            "pair [1, 4]: value 9/4 range [-2, 3] -> PROBLEM",
            "pair [2, 3]: value -27/4 range [-2, 3] -> OK",
            "pair [2, 4]: value -9/4 range [-2, 3] -> OK",
            "pair [3, 4]: value 9/2 range [-2, 2] -> OK",
            "verdict: not RoCK",
        ])


class TestRockWeight:
    def test_reference_chamber(self):
        assert rock_weight(POINT, AL) == RAL

    def test_accepts_string_rationals(self):
        assert rock_weight(("3/2", "-3", "15/4", "-3/4"), AL) == RAL

    def test_rejects_wall_point(self):
        with pytest.raises(DomainError):
            rock_weight((1, 1, 2, 3), AL)

    def test_rejects_wrong_length(self):
        with pytest.raises(DomainError):
            rock_weight((1, 2, 3), AL)

    def test_result_tests_rock(self):
        for perm in itertools.permutations(base_point(CTX.e)):
            constructed = rock_weight(perm, AL)
            assert run_rock_test(constructed).is_rock, perm


class TestAllRocks:
    def test_keys_are_base_point_permutations(self):
        rocks = all_rocks(AL)
        assert set(rocks) == set(itertools.permutations(base_point(CTX.e)))

    def test_agrees_with_rock_weight(self):
        rocks = all_rocks(AL)
        for point, blk in rocks.items():
            assert rock_weight(point, AL) == blk


class TestSignatures:
    def test_equivalence_is_reflexive_and_symmetric(self):
        assert scopes_equivalent(AL, AL)
        other = Block.from_counts(CTX, {0: 25, 1: 32, 2: 34, 3: 32})
        assert scopes_equivalent(AL, other)
        assert scopes_equivalent(other, AL)

    def test_context_mismatch_raises(self):
        other = Block.from_counts(Context(4, (0, 0)), {0: 1})
        with pytest.raises(DomainError):
            scopes_equivalent(AL, other)

    def test_weight_one_orbit_is_one_class(self):
        ctx = Context(2, (0,))
        members = [
            Block.from_counts(ctx, {0: 1, 1: 1}),
            Block.from_counts(ctx, {0: 2, 1: 1}),
            Block.from_counts(ctx, {0: 2, 1: 3}),
        ]
        for a in members:
            for b in members:
                assert scopes_equivalent(a, b)

    def test_wall_crossing_breaks_equivalence(self):
        # reflecting at a residue with a large pairing crosses genuine walls
        reflected = reflect_block(AL, 1)
        assert not scopes_equivalent(AL, reflected)
        assert not scopes_equivalent(AL, reflected, up_to_stabilizer=True)

    def test_non_equivalent_blocks_detected(self):
        assert not scopes_equivalent(AL, RAL)

    @given(contexts(), st.data())
    def test_plain_equivalence_implies_stabilizer_equivalence(self, ctx, data):
        entries = st.integers(0, 4)
        a = Block(ctx, tuple(data.draw(entries) for _ in range(ctx.e)))
        b = Block(ctx, tuple(data.draw(entries) for _ in range(ctx.e)))
        try:
            plain = scopes_equivalent(a, b)
        except DomainError:
            return
        if plain:
            assert scopes_equivalent(a, b, up_to_stabilizer=True)

    def test_signature_has_one_sign_per_wall(self):
        sig = scopes_signature(RAL)
        wb = find_n(DOM)
        expected = sum(
            wb.kplus(i, j) + wb.kminus(i, j) + 1
            for i in range(1, 5)
            for j in range(i + 1, 5)
        )
        assert len(sig.signs) == expected

    def test_canonical_signature_constant_on_classes(self):
        ctx = Context(2, (0,))
        a = Block.from_counts(ctx, {0: 2, 1: 1})
        b = Block.from_counts(ctx, {0: 2, 1: 3})
        assert canonical_scopes_signature(a) == canonical_scopes_signature(b)
