"""Exact affine type A root and weight arithmetic on block coefficient vectors.

Conventions used throughout the package: residues live in [0, e) with the
affine node at residue 0; "coordinates" are the 1-based positions 1..e of the
h-coordinate picture, so coordinate i corresponds to residue i - 1.  Points
carry exact rational entries (fractions.Fraction) and are plain tuples; blocks
carry integer root coefficients indexed by residue.  No floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

Point = tuple[Fraction, ...]


class DomainError(ValueError):
    """A mathematically invalid request (as opposed to a malformed one)."""


class OutOfSupportError(DomainError):
    """The block does not lie in the weight support of its context."""


@dataclass(frozen=True)
class Context:
    """Quantum characteristic e >= 2 together with an ordered multicharge."""

    e: int
    multicharge: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "e", int(self.e))
        object.__setattr__(self, "multicharge", tuple(int(k) for k in self.multicharge))
        if self.e < 2:
            raise DomainError(f"quantum characteristic must be at least 2, got {self.e}")
        if not self.multicharge:
            raise DomainError("multicharge must have at least one component")
        for k in self.multicharge:
            if not 0 <= k < self.e:
                raise DomainError(f"multicharge entries must lie in [0, {self.e}), got {k}")

    @property
    def level(self) -> int:
        return len(self.multicharge)

    @cached_property
    def weight_multiplicities(self) -> tuple[int, ...]:
        """Multiplicity of each fundamental weight, indexed by residue."""
        w = [0] * self.e
        for k in self.multicharge:
            w[k] += 1
        return tuple(w)


@dataclass(frozen=True)
class Block:
    """Root coefficients of a block, indexed by residue 0..e-1.

    Entries are allowed to be negative so that intermediate results of root
    operations can certify that a weight left the support; every function that
    needs non-negative entries checks for itself.
    """

    ctx: Context
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.b) != self.ctx.e:
            raise DomainError(
                f"block must have exactly {self.ctx.e} entries, got {len(self.b)}"
            )

    @classmethod
    def from_counts(cls, ctx: Context, counts) -> "Block":
        """Build a block from a residue -> coefficient mapping (missing residues are 0)."""
        b = [0] * ctx.e
        for r, v in counts.items():
            r = int(r)
            if not 0 <= r < ctx.e:
                raise DomainError(f"residue {r} out of range [0, {ctx.e})")
            b[r] = int(v)
        return cls(ctx, tuple(b))

    def counts(self) -> dict[int, int]:
        return dict(enumerate(self.b))

    def total(self) -> int:
        return sum(self.b)


@dataclass(frozen=True)
class Root:
    """Real root alpha_{ij;n} in coordinate labels 1 <= i != j, height n.

    For i < j the legal heights are n >= 0, for i > j they are n >= 1.
    """

    i: int
    j: int
    n: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1 or self.i == self.j:
            raise DomainError(f"root coordinates must be distinct and >= 1, got ({self.i}, {self.j})")
        floor = 0 if self.i < self.j else 1
        if self.n < floor:
            raise DomainError(
                f"height {self.n} is illegal for the pair ({self.i}, {self.j}); need n >= {floor}"
            )


def _check_residue(e: int, i: int) -> None:
    if not 0 <= i < e:
        raise DomainError(f"residue {i} out of range [0, {e})")


def cartan_entry(ctx: Context, i: int, j: int) -> int:
    """Affine type A Cartan matrix entry for residues i, j."""
    e = ctx.e
    _check_residue(e, i)
    _check_residue(e, j)
    if i == j:
        return 2
    if e == 2:
        return -2
    return -1 if (i - j) % e in (1, e - 1) else 0


def _pairing(ctx: Context, b, i: int) -> int:
    w = ctx.weight_multiplicities[i]
    if ctx.e == 2:
        return w - 2 * b[i] + 2 * b[1 - i]
    return w - 2 * b[i] + b[i - 1] + b[(i + 1) % ctx.e]


def coroot_pairing(block: Block, i: int) -> int:
    """Pairing of the block's weight with the simple coroot at residue i."""
    _check_residue(block.ctx.e, i)
    return _pairing(block.ctx, block.b, i)


def reflect_block(block: Block, i: int) -> Block:
    """Simple reflection s_i acting on the block's weight."""
    _check_residue(block.ctx.e, i)
    b = list(block.b)
    b[i] += _pairing(block.ctx, b, i)
    return Block(block.ctx, tuple(b))


def reflect_point(point: Point, i: int) -> Point:
    """Simple affine reflection s_i acting on a point in h-coordinates.

    For 1 <= i <= e-1 this swaps q_i and q_{i+1}; the affine reflection s_0
    sends (q_1, ..., q_e) to (q_e + 1, ..., q_1 - 1).
    """
    e = len(point)
    _check_residue(e, i)
    q = list(point)
    if i == 0:
        q[0], q[-1] = point[-1] + 1, point[0] - 1
    else:
        q[i - 1], q[i] = point[i], point[i - 1]
    return tuple(q)


def base_point(e: int) -> Point:
    """Reference interior point of the fundamental alcove: q_i = (e - i)/e."""
    return tuple(Fraction(e - i, e) for i in range(1, e + 1))


def add_root(block: Block, root: Root) -> Block:
    """Add the real root alpha_{ij;n} to the block's weight.

    Moving up by a root lowers root coefficients: every residue loses n, and
    the residue interval cut out by the coordinate pair loses (for i < j) or
    regains (for i > j) one more.
    """
    e = block.ctx.e
    i, j = root.i, root.j
    if i > e or j > e:
        raise DomainError(f"root coordinates must be at most {e}, got ({i}, {j})")
    b = [x - root.n for x in block.b]
    if i < j:
        for r in range(i, j):
            b[r] -= 1
    else:
        for r in range(j, i):
            b[r] += 1
    return Block(block.ctx, tuple(b))


def _dominantize(ctx: Context, b: list[int]) -> tuple[list[int], list[int]]:
    """Greedily reflect at the smallest negative pairing until dominant.

    Mutates and returns (applied indices in application order, final vector).
    Raises OutOfSupportError as soon as any coefficient would go negative,
    which certifies that the weight lies outside the support.
    """
    applied: list[int] = []
    while True:
        for i in range(ctx.e):
            p = _pairing(ctx, b, i)
            if p < 0:
                b[i] += p
                if b[i] < 0:
                    raise OutOfSupportError(
                        f"coefficient at residue {i} went negative while dominantizing"
                    )
                applied.append(i)
                break
        else:
            return applied, b


def in_support(block: Block) -> bool:
    """Whether the block's weight lies in the support of its context.

    Greedy dominantization: the weight is in the support exactly when the walk
    to the dominant chamber never drives a coefficient negative.
    """
    if any(x < 0 for x in block.b):
        return False
    try:
        _dominantize(block.ctx, list(block.b))
    except OutOfSupportError:
        return False
    return True
