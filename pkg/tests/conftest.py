"""Shared hypothesis strategies for the test suite."""

from __future__ import annotations

import hypothesis.strategies as st

from rockblocks import Block, Context


@st.composite
def contexts(draw, max_e: int = 4, max_level: int = 3):
    """A small Context with random quantum characteristic and multicharge."""
    e = draw(st.integers(2, max_e))
    level = draw(st.integers(1, max_level))
    mc = tuple(draw(st.integers(0, e - 1)) for _ in range(level))
    return Context(e, mc)


@st.composite
def blocks(draw, max_entry: int = 6, allow_negative: bool = False, max_e: int = 4):
    """A Block over a random small context."""
    ctx = draw(contexts(max_e=max_e))
    lo = -max_entry if allow_negative else 0
    b = tuple(draw(st.integers(lo, max_entry)) for _ in range(ctx.e))
    return Block(ctx, b)


@st.composite
def partitions(draw, max_rows: int = 4, max_col: int = 6):
    """A partition as a weakly decreasing tuple of positive parts."""
    rows = draw(st.lists(st.integers(1, max_col), max_size=max_rows))
    return tuple(sorted(rows, reverse=True))


@st.composite
def charged_multipartitions(draw, max_e: int = 4, max_level: int = 3):
    """A (Context, multipartition) pair with one component per charge."""
    ctx = draw(contexts(max_e=max_e, max_level=max_level))
    mp = tuple(draw(partitions()) for _ in range(ctx.level))
    return ctx, mp
