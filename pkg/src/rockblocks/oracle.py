"""Brute-force verification oracle: enumerate the multipartitions of a block.

Everything here recomputes support and wall bounds from first principles
(exhaustive search over multipartitions with the requested residue census) so
it can cross-check the closed-form algorithms elsewhere in the package.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .blocks import Multipartition, is_dominant
from .root_system import Block, DomainError, Root, add_root
from .scopes import WallBounds, _height_cap


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps for the exhaustive search: total boxes, optional wall-clock time."""

    max_boxes: int = 10
    max_seconds: float | None = None


class BudgetExceededError(DomainError):
    """The requested enumeration does not fit in the given budget."""


def _multipartitions(ctx, target: tuple[int, ...], deadline: float | None) -> Iterator[Multipartition]:
    """All multipartitions with the given residue census, component-major,
    each component in descending lexicographic order."""
    e, level = ctx.e, ctx.level
    census = list(target)
    total = sum(census)
    parts: list[tuple[int, ...]] = []

    def components(c: int) -> Iterator[Multipartition]:
        nonlocal total
        if c == level:
            if total == 0:
                yield tuple(parts)
            return
        charge = ctx.multicharge[c]
        rows: list[int] = []

        def place(a: int, max_len: int) -> Iterator[Multipartition]:
            nonlocal total
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceededError("time budget exhausted")
            # Row a of this component adds boxes of consecutive residues
            # charge + 1 - a, charge + 2 - a, ...; extend while the census
            # allows, then peel boxes off the end one at a time.
            longest = 0
            for col in range(1, min(max_len, total) + 1):
                r = (charge + col - a) % e
                if census[r] == 0:
                    break
                census[r] -= 1
                total -= 1
                longest = col
            for length in range(longest, 0, -1):
                rows.append(length)
                yield from place(a + 1, length)
                rows.pop()
                census[(charge + length - a) % e] += 1
                total += 1
            parts.append(tuple(rows))
            yield from components(c + 1)
            parts.pop()

        yield from place(1, total)

    yield from components(0)


def _start(block: Block, budget: EnumerationBudget | None) -> tuple[tuple[int, ...], float | None]:
    budget = budget or EnumerationBudget()
    boxes = sum(block.b)
    if boxes > budget.max_boxes:
        raise BudgetExceededError(
            f"block has {boxes} boxes, over the {budget.max_boxes}-box budget"
        )
    deadline = time.monotonic() + budget.max_seconds if budget.max_seconds else None
    return block.b, deadline


def enumerate_block(block: Block, budget: EnumerationBudget | None = None) -> list[Multipartition]:
    """Every multipartition whose residue census equals the block."""
    if any(x < 0 for x in block.b):
        return []
    target, deadline = _start(block, budget)
    return list(_multipartitions(block.ctx, target, deadline))


def oracle_in_support(block: Block, budget: EnumerationBudget | None = None) -> bool:
    """Support test by exhaustive search: does any multipartition exist?"""
    if any(x < 0 for x in block.b):
        return False
    target, deadline = _start(block, budget)
    return next(_multipartitions(block.ctx, target, deadline), None) is not None


def oracle_wall_bounds(dominant: Block, budget: EnumerationBudget | None = None) -> WallBounds:
    """Wall bounds recomputed by exhaustive search.

    Scans every candidate height up to the arithmetic cap (beyond which some
    coefficient is negative) and keeps the largest one whose shifted block is
    inhabited, so the result does not assume heights fill an interval.  The
    time budget, if any, covers the whole call.
    """
    if any(x < 0 for x in dominant.b):
        raise DomainError("block coefficients must be non-negative")
    if not is_dominant(dominant):
        raise DomainError("wall bounds are defined for dominant blocks only")
    _, deadline = _start(dominant, budget)
    ctx, e = dominant.ctx, dominant.ctx.e
    entries: dict[tuple[int, int], int] = {}
    for i in range(1, e + 1):
        for j in range(1, e + 1):
            if i == j:
                continue
            legal_min, floor = (0, -1) if i < j else (1, 0)
            best = floor
            for n in range(legal_min, _height_cap(dominant.b, i, j) + 1):
                shifted = add_root(dominant, Root(i, j, n))
                if any(x < 0 for x in shifted.b):
                    continue
                if next(_multipartitions(ctx, shifted.b, deadline), None) is not None:
                    best = n
            entries[(i, j)] = best
    return WallBounds(entries)
