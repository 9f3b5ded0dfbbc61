"""Multicomponent abacus displays: beta-numbers, bead pushes, runner swaps.

Each component of a multipartition becomes a column-major board with e
runners; the bead for part k sits at beta-number lambda_k + (s_c - k), where
s_c is the component's bead count.  Bead position beta occupies runner
beta mod e, row beta // e, with row 0 rendered at the top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import Multipartition, validate_multipartition
from .root_system import Context, DomainError


@dataclass(frozen=True)
class Abacus:
    """Bead positions per component, bounded by a fixed number of rows."""

    ctx: Context
    components: tuple[frozenset[int], ...]
    rows: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "components", tuple(frozenset(int(b) for b in comp) for comp in self.components)
        )
        if len(self.components) != self.ctx.level:
            raise DomainError(
                f"expected {self.ctx.level} components, got {len(self.components)}"
            )
        if self.rows < 1:
            raise DomainError("an abacus needs at least one row")
        capacity = self.rows * self.ctx.e
        for comp, charge in zip(self.components, self.ctx.multicharge):
            if any(b < 0 or b >= capacity for b in comp):
                raise DomainError(f"bead positions must lie in [0, {capacity})")
            if len(comp) % self.ctx.e != charge % self.ctx.e:
                raise DomainError(
                    f"component bead count {len(comp)} does not match charge {charge} mod {self.ctx.e}"
                )


def abacus_from_multipartition(ctx: Context, mp, shift: int, rows: int | None = None) -> Abacus:
    """Abacus of a multipartition with `shift` extra bead rows overall.

    The shift is split over the components front-loaded: component c receives
    floor((shift + level - 1 - c) / level) full rows of extra beads, so the
    bead counts sum to the reference census of the same shift.
    """
    mp = validate_multipartition(mp, ctx.level)
    shift = int(shift)
    if shift < 0:
        raise DomainError("shift must be non-negative")
    level = ctx.level
    components = []
    for c, (parts, charge) in enumerate(zip(mp, ctx.multicharge)):
        s = ((shift + level - 1 - c) // level) * ctx.e + charge
        if len(parts) > s:
            raise DomainError(
                f"shift {shift} is too small: component {c} has {len(parts)} parts but {s} beads"
            )
        padded = list(parts) + [0] * (s - len(parts))
        components.append(frozenset(padded[k - 1] + s - k for k in range(1, s + 1)))
    highest = max((b for comp in components for b in comp), default=-1)
    needed = highest // ctx.e + 1 if highest >= 0 else 1
    if rows is None:
        rows = needed
    elif rows < needed:
        raise DomainError(f"{rows} rows cannot hold a bead at position {highest}")
    return Abacus(ctx, tuple(components), rows)


def multipartition_from_abacus(ab: Abacus) -> Multipartition:
    """Recover the multipartition encoded by the bead positions."""
    comps = []
    for comp in ab.components:
        betas = sorted(comp, reverse=True)
        s = len(betas)
        rows = tuple(beta - (s - k) for k, beta in enumerate(betas, start=1))
        comps.append(tuple(x for x in rows if x > 0))
    return tuple(comps)


def runner_census(ab: Abacus) -> tuple[int, ...]:
    """Total number of beads on each runner, indexed by residue."""
    census = [0] * ab.ctx.e
    for comp in ab.components:
        for beta in comp:
            census[beta % ab.ctx.e] += 1
    return tuple(census)


def can_push_bead(ab: Abacus, i: int, j: int, n: int) -> bool:
    """Whether some bead on runner i-1 can move to runner j-1, n rows up.

    Such a push takes a bead from position beta (beta mod e = i-1) to the
    free position (beta // e - n) * e + (j - 1); it exists for n >= 0 when
    j < i and n >= 1 when j > i, and realizes adding the root with coordinate
    pair (j, i) and height n to the component's block.
    """
    e = ab.ctx.e
    if not (1 <= i <= e and 1 <= j <= e) or i == j:
        raise DomainError(f"runner coordinates must be distinct and in [1, {e}], got ({i}, {j})")
    if n < 0:
        raise DomainError(f"push height must be non-negative, got {n}")
    if j > i and n == 0:
        return False
    for comp in ab.components:
        for beta in comp:
            if beta % e != i - 1:
                continue
            row = beta // e - n
            if row < 0:
                continue
            if (row * e + j - 1) not in comp:
                return True
    return False


def _push_exists(ab: Abacus, source_residue: int, leftward: bool) -> bool:
    """Whether any bead can cross the runner wall at `source_residue`.

    Leftward means beta -> beta - 1 from a bead with beta mod e equal to the
    residue; rightward is the mirror move beta -> beta + 1 onto it.
    """
    e = ab.ctx.e
    for comp in ab.components:
        for beta in comp:
            if leftward:
                if beta % e == source_residue and beta >= 1 and (beta - 1) not in comp:
                    return True
            else:
                if beta % e == (source_residue - 1) % e and (beta + 1) not in comp:
                    return True
    return False


def swap_runners(ab: Abacus, i: int) -> Abacus:
    """Exchange occupancies across the runner wall at residue i mod e.

    For residue r >= 1 this swaps the runner pair (r-1, r) row by row; for
    r = 0 the pair wraps, exchanging runner e-1 with runner 0 one row down.
    Legal only when at most one of the two crossing directions admits a move
    on this abacus (the one-sided condition under which the swap is the
    block-level reflection); then the swap is an involution.  The wrap swap
    also requires position 0 to be occupied in every component and enough
    rows below the last bead, otherwise the image does not fit the board.
    """
    e = ab.ctx.e
    if not 0 <= i <= e:
        raise DomainError(f"swap index must lie in [0, {e}], got {i}")
    r = i % e
    if _push_exists(ab, r, leftward=True) and _push_exists(ab, r, leftward=False):
        raise DomainError(
            f"runner wall {r} admits moves in both directions; the swap is not a bijection here"
        )
    if r == 0:
        # The wrap wall pairs position 0 with the virtual position -1, which
        # is a bead under the full-rows-above stabilization.  An empty
        # position 0 would pull that bead onto the board, which a fixed bead
        # count cannot represent.
        for comp in ab.components:
            if 0 not in comp:
                raise DomainError(
                    "swap would pull a bead in above row 0; rebuild with a larger shift"
                )
    capacity = ab.rows * e
    components = []
    for comp in ab.components:
        moved = set()
        for beta in comp:
            if beta % e == (r - 1) % e and (beta + 1) not in comp:
                if beta + 1 >= capacity:
                    raise DomainError(
                        f"swap would push a bead past row {ab.rows}; rebuild with more rows"
                    )
                moved.add(beta + 1)
            elif beta % e == r and beta >= 1 and (beta - 1) not in comp:
                moved.add(beta - 1)
            else:
                moved.add(beta)
        components.append(frozenset(moved))
    return Abacus(ab.ctx, tuple(components), ab.rows)


def render_ascii(ab: Abacus) -> str:
    """Draw the abacus: one board per component, row 0 on top, O for beads."""
    boards = []
    for comp in ab.components:
        lines = []
        for row in range(ab.rows):
            lines.append(
                "".join("O" if (row * ab.ctx.e + r) in comp else "." for r in range(ab.ctx.e))
            )
        boards.append("\n".join(lines))
    return "\n\n".join(boards)


def parse_ascii(ctx: Context, text: str) -> Abacus:
    """Inverse of render_ascii for the given context."""
    boards = [board for board in text.strip().split("\n\n")]
    components = []
    rows = None
    for board in boards:
        lines = [line.strip() for line in board.strip().split("\n")]
        if rows is None:
            rows = len(lines)
        elif len(lines) != rows:
            raise DomainError("all components must have the same number of rows")
        beads = set()
        for row, line in enumerate(lines):
            if len(line) != ctx.e or any(ch not in "O." for ch in line):
                raise DomainError(f"malformed abacus row {line!r}")
            for r, ch in enumerate(line):
                if ch == "O":
                    beads.add(row * ctx.e + r)
        components.append(frozenset(beads))
    if rows is None:
        raise DomainError("empty abacus text")
    return Abacus(ctx, tuple(components), rows)
