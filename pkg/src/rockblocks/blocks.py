"""Blocks of multipartitions and the bead-count coordinates of a block."""

from __future__ import annotations

from dataclasses import dataclass

from .root_system import Block, Context, DomainError, _pairing

Multipartition = tuple[tuple[int, ...], ...]


def validate_multipartition(mp, level: int) -> Multipartition:
    """Normalize a nested sequence into a level-`level` multipartition."""
    comps = []
    for comp in mp:
        rows = tuple(int(x) for x in comp)
        if any(x <= 0 for x in rows):
            raise DomainError(f"partition rows must be positive, got {rows}")
        if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
            raise DomainError(f"partition rows must be weakly decreasing, got {rows}")
        comps.append(rows)
    if len(comps) != level:
        raise DomainError(f"expected {level} components, got {len(comps)}")
    return tuple(comps)


def block_of_multipartition(ctx: Context, mp) -> Block:
    """Residue census of a multipartition: b_r counts the boxes of residue r.

    The box in row a, column c of component m has residue charge_m + c - a
    mod e (rows and columns 1-based).
    """
    mp = validate_multipartition(mp, ctx.level)
    b = [0] * ctx.e
    for comp, charge in zip(mp, ctx.multicharge):
        for a, row_len in enumerate(comp, start=1):
            for c in range(1, row_len + 1):
                b[(charge + c - a) % ctx.e] += 1
    return Block(ctx, tuple(b))


def is_dominant(block: Block) -> bool:
    """Whether all simple coroot pairings of the block's weight are >= 0."""
    return all(_pairing(block.ctx, block.b, i) >= 0 for i in range(block.ctx.e))


@dataclass(frozen=True)
class TCoordinates:
    """Per-runner bead counts of a block at a given overall shift."""

    t: tuple[int, ...]
    reference: tuple[int, ...]
    shift: int


def weight_from_block(block: Block, shift: int) -> TCoordinates:
    """Bead counts t_r of the block on an abacus with `shift` extra bead rows.

    reference_r is the bead count of the empty multipartition; the block tilts
    it by the difference of adjacent root coefficients.  Raises if the shift
    is too small to keep every count non-negative.
    """
    ctx = block.ctx
    if any(x < 0 for x in block.b):
        raise DomainError("block coefficients must be non-negative")
    shift = int(shift)
    reference = tuple(
        shift + sum(1 for k in ctx.multicharge if k > r) for r in range(ctx.e)
    )
    t = tuple(
        reference[r] + block.b[r] - block.b[(r + 1) % ctx.e] for r in range(ctx.e)
    )
    if any(x < 0 for x in t):
        raise DomainError(f"shift {shift} is too small: it gives a negative bead count")
    return TCoordinates(t=t, reference=reference, shift=shift)
