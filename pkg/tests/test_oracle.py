"""Unit tests for the brute-force multipartition oracle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import contexts
from rockblocks import (
    Block,
    BudgetExceededError,
    Context,
    DomainError,
    EnumerationBudget,
    block_of_multipartition,
    enumerate_block,
    in_support,
    oracle_in_support,
    oracle_wall_bounds,
)


class TestEnumerate:
    def test_level_one_block_lists_matching_partitions(self):
        ctx = Context(2, (0,))
        found = enumerate_block(Block.from_counts(ctx, {0: 2, 1: 1}))
        assert found == [((3,),), ((1, 1, 1),)]

    def test_results_are_descending_lexicographic(self):
        ctx = Context(2, (0, 1))
        found = enumerate_block(Block.from_counts(ctx, {0: 2, 1: 2}))
        assert found == sorted(found, reverse=True)

    def test_every_result_hits_the_block(self):
        ctx = Context(3, (0, 2))
        blk = Block.from_counts(ctx, {0: 2, 1: 1, 2: 2})
        found = enumerate_block(blk)
        assert found
        for mp in found:
            assert block_of_multipartition(ctx, mp) == blk

    def test_empty_when_out_of_support(self):
        ctx = Context(2, (0,))
        assert enumerate_block(Block.from_counts(ctx, {1: 1})) == []

    def test_box_budget_enforced(self):
        ctx = Context(2, (0,))
        blk = Block.from_counts(ctx, {0: 8, 1: 7})
        with pytest.raises(BudgetExceededError):
            enumerate_block(blk, EnumerationBudget(max_boxes=10))

    def test_time_budget_enforced(self):
        ctx = Context(4, (0, 1, 2, 3))
        blk = Block.from_counts(ctx, {0: 5, 1: 5, 2: 5, 3: 5})
        with pytest.raises(BudgetExceededError):
            enumerate_block(blk, EnumerationBudget(max_boxes=100, max_seconds=1e-9))

    def test_budget_error_is_domain_error(self):
        assert issubclass(BudgetExceededError, DomainError)


class TestOracleSupport:
    def test_known_values(self):
        ctx = Context(2, (0,))
        assert oracle_in_support(Block.from_counts(ctx, {0: 1}))
        assert not oracle_in_support(Block.from_counts(ctx, {1: 1}))

    @settings(deadline=None)
    @given(contexts(), st.data())
    def test_matches_reflection_support(self, ctx, data):
        entries = st.integers(0, 6 // ctx.e + 1)
        blk = Block(ctx, tuple(data.draw(entries) for _ in range(ctx.e)))
        assert in_support(blk) == oracle_in_support(blk, EnumerationBudget(max_boxes=12))


class TestOracleWalls:
    def test_small_dominant_block(self):
        ctx = Context(2, (0,))
        wb = oracle_wall_bounds(Block.from_counts(ctx, {0: 1, 1: 1}))
        assert wb.entries == {(1, 2): 0, (2, 1): 0}

    def test_rejects_non_dominant(self):
        ctx = Context(2, (0,))
        with pytest.raises(DomainError):
            oracle_wall_bounds(Block.from_counts(ctx, {0: 2, 1: 0}))

    def test_budget_applies_to_base_block(self):
        ctx = Context(4, (2, 0))
        blk = Block.from_counts(ctx, {0: 25, 1: 32, 2: 34, 3: 32})
        with pytest.raises(DomainError):
            oracle_wall_bounds(blk, EnumerationBudget(max_boxes=10))
