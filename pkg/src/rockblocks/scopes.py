"""Scopes chambers, RoCK tests, and RoCK block construction.

The dominant chamber of a block's orbit is cut by finitely many affine wall
families q_i - q_j = m; a block is RoCK exactly when the alcove of its minimal
dominantizing Weyl element avoids all of them.  Everything here is exact
integer/rational arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .blocks import is_dominant
from .root_system import (
    Block,
    DomainError,
    Point,
    Root,
    _dominantize,
    add_root,
    base_point,
    coroot_pairing,
    in_support,
    reflect_block,
    reflect_point,
)

WeylWord = tuple[int, ...]


def find_dominant(block: Block) -> tuple[WeylWord, Block]:
    """Reduced word for the minimal w making the block dominant, plus w(block).

    The word lists reflections in the order they are applied.  The greedy
    loop reflects at the smallest residue with a negative pairing; the
    resulting Weyl element is the unique minimal one, independent of that
    tie-break.
    """
    if any(x < 0 for x in block.b):
        raise DomainError("block coefficients must be non-negative")
    applied, dom = _dominantize(block.ctx, list(block.b))
    return tuple(applied), Block(block.ctx, tuple(dom))


def find_dom_w_chamber(block: Block) -> tuple[Point, Block]:
    """Dominantize the block while co-tracking the base alcove point.

    Every reflection applied to the block is simultaneously applied to the
    tracked point, so the returned point is w(p0) for the minimal
    dominantizing w and identifies the Scopes chamber of the block.
    """
    word, dom = find_dominant(block)
    p = base_point(block.ctx.e)
    for i in word:
        p = reflect_point(p, i)
    return p, dom


@dataclass(frozen=True)
class WallBounds:
    """Maximal root heights k+_{ij}, keyed by ordered coordinate pairs (i, j)."""

    entries: dict[tuple[int, int], int]

    def kplus(self, i: int, j: int) -> int:
        return self.entries[(i, j)]

    def kminus(self, i: int, j: int) -> int:
        return self.entries[(j, i)]


def _interval_entries(b: tuple[int, ...], i: int, j: int) -> tuple[list[int], list[int]]:
    """Split coefficients into the residue interval of the pair and the rest."""
    lo, hi = (i, j) if i < j else (j, i)
    inside = [b[r] for r in range(lo, hi)]
    outside = [b[r] for r in range(len(b)) if not lo <= r < hi]
    return inside, outside


def _height_cap(b: tuple[int, ...], i: int, j: int) -> int:
    """Largest height that keeps every coefficient of add_root non-negative."""
    inside, outside = _interval_entries(b, i, j)
    if i < j:
        return min(min(inside) - 1, min(outside))
    return min(min(inside) + 1, min(outside))


def find_n(dominant: Block) -> WallBounds:
    """Maximal heights k+_{ij} of roots that keep the dominant weight in support.

    For each ordered coordinate pair the search walks the height down from the
    arithmetic cap and stops at the first success; with no success the bound
    is the empty-range floor (-1 for i < j, 0 for i > j).
    """
    if any(x < 0 for x in dominant.b):
        raise DomainError("block coefficients must be non-negative")
    if not is_dominant(dominant):
        raise DomainError("wall bounds are defined for dominant blocks only")
    e = dominant.ctx.e
    entries: dict[tuple[int, int], int] = {}
    for i in range(1, e + 1):
        for j in range(1, e + 1):
            if i == j:
                continue
            legal_min, floor = (0, -1) if i < j else (1, 0)
            k = floor
            for n in range(_height_cap(dominant.b, i, j), legal_min - 1, -1):
                if in_support(add_root(dominant, Root(i, j, n))):
                    k = n
                    break
            entries[(i, j)] = k
    return WallBounds(entries)


@dataclass(frozen=True)
class PairCheck:
    """One wall-family check of a RoCK test: is q_i - q_j outside [-k+, k-]?"""

    i: int
    j: int
    value: Fraction
    lower: int
    upper: int
    ok: bool


@dataclass(frozen=True)
class RockReport:
    """Full outcome of a RoCK test: per-pair checks plus the verdict."""

    point: Point
    dominant: Block
    checks: tuple[PairCheck, ...]
    is_rock: bool


def test_rock(block: Block) -> RockReport:
    """Test whether the block's Scopes chamber avoids every wall family."""
    point, dom = find_dom_w_chamber(block)
    bounds = find_n(dom)
    e = block.ctx.e
    checks = []
    verdict = True
    for i in range(1, e + 1):
        for j in range(i + 1, e + 1):
            value = point[i - 1] - point[j - 1]
            lower = -bounds.kplus(i, j)
            upper = bounds.kminus(i, j)
            ok = not (lower <= value <= upper)
            verdict = verdict and ok
            checks.append(PairCheck(i, j, value, lower, upper, ok))
    return RockReport(point=point, dominant=dom, checks=tuple(checks), is_rock=verdict)


def render_report(report: RockReport) -> str:
    """One line per coordinate pair, followed by the verdict."""
    lines = [
        f"pair [{c.i}, {c.j}]: value {c.value} range [{c.lower}, {c.upper}] -> "
        + ("OK" if c.ok else "PROBLEM")
        for c in report.checks
    ]
    lines.append("verdict: RoCK" if report.is_rock else "verdict: not RoCK")
    return "\n".join(lines)


def _violated_constraint(point: Point) -> int | None:
    """Residue of a fundamental-alcove constraint the point violates, if any."""
    e = len(point)
    if 1 + point[-1] - point[0] < 0:
        return 0
    for i in range(1, e):
        if point[i - 1] - point[i] < 0:
            return i
    return None


def _rock_from_chamber(point: Point, dominant: Block, bounds: WallBounds) -> Block:
    """RoCK block for the chamber of `point`, built from the dominant block.

    The chamber is read off as the descending coordinate order of the point.
    Consecutive gaps start at the k- bound of each adjacent pair and longer
    spans are repaired left-greedily, so the representative point clears every
    wall family by construction; walking it back into the fundamental alcove
    while reflecting the dominant block in lockstep yields the block whose
    chamber it is.
    """
    e = len(point)
    order = sorted(range(e), key=point.__getitem__, reverse=True)
    gaps = [bounds.kminus(order[t] + 1, order[t + 1] + 1) for t in range(e - 1)]
    for span in range(2, e):
        for start in range(e - span):
            need = bounds.kminus(order[start] + 1, order[start + span] + 1)
            short = need - sum(gaps[start : start + span])
            if short > 0:
                gaps[start + span - 1] += short
    step = Fraction(1, len(point))
    values = [Fraction(0)]
    for g in gaps:
        values.append(values[-1] - g - step)
    offset = (sum(base_point(e)) - sum(values)) / e
    rep = [Fraction(0)] * e
    for slot, pos in enumerate(order):
        rep[pos] = values[slot] + offset
    p: Point = tuple(rep)
    b = dominant
    while (i := _violated_constraint(p)) is not None:
        p = reflect_point(p, i)
        b = reflect_block(b, i)
    return b


def rock_weight(point, block: Block) -> Block:
    """Closest RoCK block for the orbit of `block` in the chamber of `point`."""
    e = block.ctx.e
    p = tuple(Fraction(x) for x in point)
    if len(p) != e:
        raise DomainError(f"point must have {e} coordinates, got {len(p)}")
    if len(set(p)) != e:
        raise DomainError("point lies on a chamber wall: coordinates must be distinct")
    _, dom = find_dominant(block)
    return _rock_from_chamber(p, dom, find_n(dom))


def all_rocks(block: Block) -> dict[Point, Block]:
    """One RoCK block per Weyl chamber, keyed by the permuted base point."""
    _, dom = find_dominant(block)
    bounds = find_n(dom)
    return {
        perm: _rock_from_chamber(perm, dom, bounds)
        for perm in itertools.permutations(base_point(block.ctx.e))
    }


@dataclass(frozen=True)
class ChamberSignature:
    """Scopes chamber of a block: dominant weight plus wall-side signs.

    signs holds one entry (i, j, m, sign) per wall q_i - q_j = m of the
    dominant weight's wall system, sorted, with sign = +1 or -1.
    """

    dominant: Block
    signs: tuple[tuple[int, int, int, int], ...]


def _signs_at(point: Point, bounds: WallBounds, e: int) -> tuple[tuple[int, int, int, int], ...]:
    signs = []
    for i in range(1, e + 1):
        for j in range(i + 1, e + 1):
            value = point[i - 1] - point[j - 1]
            for m in range(-bounds.kplus(i, j), bounds.kminus(i, j) + 1):
                signs.append((i, j, m, 1 if value > m else -1))
    return tuple(signs)


def scopes_signature(block: Block) -> ChamberSignature:
    """Wall-side signature of the block's tracked chamber point."""
    point, dom = find_dom_w_chamber(block)
    bounds = find_n(dom)
    return ChamberSignature(dominant=dom, signs=_signs_at(point, bounds, block.ctx.e))


def _stabilizer_orbit(dominant: Block, point: Point) -> set[Point]:
    """Orbit of the point under the parabolic stabilizer of the dominant weight."""
    gens = [i for i in range(dominant.ctx.e) if coroot_pairing(dominant, i) == 0]
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for i in gens:
                q = reflect_point(p, i)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def canonical_scopes_signature(block: Block) -> ChamberSignature:
    """Signature canonicalized over the stabilizer orbit of the chamber point.

    Blocks whose chambers differ by the stabilizer of the dominant weight get
    identical canonical signatures (the lexicographically smallest sign vector
    over the orbit).
    """
    point, dom = find_dom_w_chamber(block)
    bounds = find_n(dom)
    e = block.ctx.e
    best = min(_signs_at(p, bounds, e) for p in _stabilizer_orbit(dom, point))
    return ChamberSignature(dominant=dom, signs=best)


def scopes_equivalent(a: Block, b: Block, up_to_stabilizer: bool = False) -> bool:
    """Whether two blocks lie in the same Scopes chamber.

    Strict by default: same dominant weight and identical wall-side signature.
    With up_to_stabilizer=True, chambers related by the stabilizer of the
    dominant weight are identified as well.
    """
    if a.ctx != b.ctx:
        raise DomainError("blocks live in different contexts")
    if up_to_stabilizer:
        sa, sb = canonical_scopes_signature(a), canonical_scopes_signature(b)
    else:
        sa, sb = scopes_signature(a), scopes_signature(b)
    return sa == sb
