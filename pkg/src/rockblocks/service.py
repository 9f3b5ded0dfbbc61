"""HTTP service exposing every engine operation as a JSON request/response.

The handler functions are plain request-model -> dict functions so the CLI can
call them in-process; the FastAPI app wires the same handlers to POST routes.
Rationals travel as reduced fraction strings, blocks as residue -> count
objects with keys in ascending residue order.
"""

from __future__ import annotations

import os
from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .abacus import abacus_from_multipartition, render_ascii, runner_census
from .blocks import block_of_multipartition, weight_from_block
from .oracle import EnumerationBudget, oracle_in_support, oracle_wall_bounds
from .root_system import Block, Context, DomainError, Point
from .scopes import (
    WallBounds,
    all_rocks,
    find_dom_w_chamber,
    find_dominant,
    find_n,
    rock_weight,
    scopes_equivalent,
    test_rock,
)


class ParseError(ValueError):
    """A malformed value in an otherwise well-shaped request."""


# ---------------------------------------------------------------------------
# wire helpers


def block_json(block: Block) -> dict[str, int]:
    return {str(r): v for r, v in sorted(block.counts().items())}


def point_json(point: Point) -> list[str]:
    return [str(q) for q in point]


def point_key(point: Point) -> str:
    return ",".join(str(q) for q in point)


def bounds_json(bounds: WallBounds) -> dict[str, int]:
    return {f"{i},{j}": bounds.entries[(i, j)] for (i, j) in sorted(bounds.entries)}


def parse_rational(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def _parse_block(ctx: Context, mapping) -> Block:
    counts: dict[int, int] = {}
    for key, value in mapping.items():
        r = int(key) % ctx.e
        if r in counts:
            raise ParseError(f"residues {key} and {r} collide modulo {ctx.e}")
        counts[r] = int(value)
    return Block.from_counts(ctx, counts)


def _default_max_boxes() -> int:
    return int(os.environ.get("ROCKBLOCKS_MAX_BOXES", "10"))


# ---------------------------------------------------------------------------
# request models


class ProblemRequest(BaseModel):
    e: int = Field(ge=2)
    multicharge: list[int] = Field(min_length=1)

    def context(self) -> Context:
        return Context(self.e, tuple(k % self.e for k in self.multicharge))


class MultipartitionRequest(ProblemRequest):
    multipartition: list[list[int]]


class BlockRequest(ProblemRequest):
    block: dict[int, int]

    def to_block(self) -> Block:
        return _parse_block(self.context(), self.block)


class RockWeightRequest(BlockRequest):
    point: list[int | str]


class WeightFromBlockRequest(BlockRequest):
    shift: int


class AbacusRequest(MultipartitionRequest):
    shift: int
    rows: int | None = None


class OracleRequest(BlockRequest):
    max_boxes: int | None = None
    max_seconds: float | None = None

    def budget(self) -> EnumerationBudget:
        boxes = self.max_boxes if self.max_boxes is not None else _default_max_boxes()
        return EnumerationBudget(max_boxes=boxes, max_seconds=self.max_seconds)


class EquivalenceRequest(ProblemRequest):
    block: dict[int, int]
    other: dict[int, int]
    up_to_stabilizer: bool = False


# ---------------------------------------------------------------------------
# handlers (shared by the HTTP app and the in-process CLI)


def handle_block(req: MultipartitionRequest) -> dict:
    blk = block_of_multipartition(req.context(), req.multipartition)
    return {"block": block_json(blk)}


def handle_find_dominant(req: BlockRequest) -> dict:
    word, dom = find_dominant(req.to_block())
    return {"word": list(word), "dominant": block_json(dom)}


def handle_chamber(req: BlockRequest) -> dict:
    point, dom = find_dom_w_chamber(req.to_block())
    return {"point": point_json(point), "dominant": block_json(dom)}


def handle_find_n(req: BlockRequest) -> dict:
    return {"bounds": bounds_json(find_n(req.to_block()))}


def handle_test_rock(req: BlockRequest) -> dict:
    report = test_rock(req.to_block())
    return {
        "rock": report.is_rock,
        "point": point_json(report.point),
        "dominant": block_json(report.dominant),
        "pairs": [
            {
                "i": c.i,
                "j": c.j,
                "value": str(c.value),
                "range": [c.lower, c.upper],
                "ok": c.ok,
            }
            for c in report.checks
        ],
    }


def handle_rock_weight(req: RockWeightRequest) -> dict:
    point = [parse_rational(x) for x in req.point]
    return {"block": block_json(rock_weight(point, req.to_block()))}


def handle_all_rocks(req: BlockRequest) -> dict:
    rocks = all_rocks(req.to_block())
    return {"rocks": {point_key(p): block_json(b) for p, b in rocks.items()}}


def handle_weight_from_block(req: WeightFromBlockRequest) -> dict:
    coords = weight_from_block(req.to_block(), req.shift)
    return {"t": list(coords.t), "reference": list(coords.reference), "shift": coords.shift}


def handle_abacus(req: AbacusRequest) -> dict:
    ab = abacus_from_multipartition(req.context(), req.multipartition, req.shift, rows=req.rows)
    return {
        "beta_numbers": [sorted(comp) for comp in ab.components],
        "rows": ab.rows,
        "census": list(runner_census(ab)),
        "ascii": render_ascii(ab),
    }


def handle_oracle_support(req: OracleRequest) -> dict:
    return {"in_support": oracle_in_support(req.to_block(), req.budget())}


def handle_oracle_walls(req: OracleRequest) -> dict:
    return {"bounds": bounds_json(oracle_wall_bounds(req.to_block(), req.budget()))}


def handle_scopes_equivalent(req: EquivalenceRequest) -> dict:
    ctx = req.context()
    a = _parse_block(ctx, req.block)
    b = _parse_block(ctx, req.other)
    return {"equivalent": scopes_equivalent(a, b, up_to_stabilizer=req.up_to_stabilizer)}


# ---------------------------------------------------------------------------
# FastAPI app

ROUTES: list[tuple[str, type[BaseModel], object]] = [
    ("/block", MultipartitionRequest, handle_block),
    ("/find-dominant", BlockRequest, handle_find_dominant),
    ("/chamber", BlockRequest, handle_chamber),
    ("/find-n", BlockRequest, handle_find_n),
    ("/test-rock", BlockRequest, handle_test_rock),
    ("/rock-weight", RockWeightRequest, handle_rock_weight),
    ("/all-rocks", BlockRequest, handle_all_rocks),
    ("/weight-from-block", WeightFromBlockRequest, handle_weight_from_block),
    ("/abacus", AbacusRequest, handle_abacus),
    ("/oracle-support", OracleRequest, handle_oracle_support),
    ("/oracle-walls", OracleRequest, handle_oracle_walls),
    ("/scopes-equivalent", EquivalenceRequest, handle_scopes_equivalent),
]


def create_app() -> FastAPI:
    app = FastAPI(title="rockblocks", version=__version__)

    for path, model, handler in ROUTES:
        def endpoint(req, _handler=handler):
            return _handler(req)

        # postponed annotation evaluation would leave the loop variable
        # unresolvable, so attach the model class directly
        endpoint.__annotations__ = {"req": model, "return": dict}
        endpoint.__name__ = "post_" + path.strip("/").replace("-", "_")
        app.post(path)(endpoint)

    @app.exception_handler(DomainError)
    async def _domain_error(_request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"error": "domain", "detail": str(exc)})

    @app.exception_handler(ParseError)
    async def _parse_error(_request: Request, exc: ParseError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"error": "usage", "detail": str(exc)})

    return app


app = create_app()
