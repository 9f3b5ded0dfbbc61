"""Command-line client for the block engine.

Every subcommand builds the same JSON payload the HTTP service accepts and
routes it through the in-process handlers, or over HTTP when --server is
given, then prints a single JSON document (or a text report for the verbose
and ascii modes).  Exit codes: 0 success, 1 usage errors, 2 domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import pydantic

from . import service
from .root_system import DomainError

USAGE_EXIT = 1
DOMAIN_EXIT = 2


class _Parser(argparse.ArgumentParser):
    """argparse with the usage exit code remapped from 2 to 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


class UsageError(ValueError):
    pass


def _parse_multicharge(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"malformed multicharge {text!r}; expected e.g. '2,0'") from exc


def _parse_block_arg(text: str) -> dict[str, int]:
    block: dict[str, int] = {}
    try:
        for item in text.split(","):
            if item.strip() == "":
                continue
            key, value = item.split(":")
            block[key.strip()] = int(value)
    except ValueError as exc:
        raise UsageError(f"malformed block {text!r}; expected e.g. '0:25,1:32'") from exc
    return block


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from exc


def _block_payload(args) -> dict[str, int]:
    if args.input is not None:
        data = _load_json(args.input)
        if not isinstance(data, dict):
            raise UsageError(f"{args.input} must hold a JSON object of residue counts")
        return data
    if args.block is None:
        raise UsageError("one of --block or --input is required")
    return _parse_block_arg(args.block)


def _parse_multipartition(text: str) -> list[list[int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed multipartition JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(comp, list) for comp in data):
        raise UsageError("multipartition must be a JSON list of lists")
    return data


def _parse_point(text: str) -> list[str]:
    return [part.strip() for part in text.split(",")]


def render_pair_lines(result: dict) -> str:
    """Text report matching the library's renderer, built from the JSON payload."""
    lines = [
        "pair [{i}, {j}]: value {value} range [{lo}, {hi}] -> {status}".format(
            i=pair["i"],
            j=pair["j"],
            value=pair["value"],
            lo=pair["range"][0],
            hi=pair["range"][1],
            status="OK" if pair["ok"] else "PROBLEM",
        )
        for pair in result["pairs"]
    ]
    lines.append("verdict: RoCK" if result["rock"] else "verdict: not RoCK")
    return "\n".join(lines)


def _dispatch(args, path: str, model: type, payload: dict) -> dict:
    if args.server:
        import httpx

        response = httpx.post(args.server.rstrip("/") + path, json=payload, timeout=300.0)
        body = response.json()
        if response.status_code == 200:
            return body
        if response.status_code == 422:
            kind = body.get("error") if isinstance(body, dict) else None
            if kind == "domain":
                print(json.dumps(body, indent=2))
                raise SystemExit(DOMAIN_EXIT)
            raise UsageError(body.get("detail", str(body)) if isinstance(body, dict) else str(body))
        raise UsageError(f"server error {response.status_code}: {response.text}")
    try:
        request = model(**payload)
    except pydantic.ValidationError as exc:
        raise UsageError(str(exc)) from exc
    handler = dict((p, h) for p, _m, h in service.ROUTES)[path]
    return handler(request)


def _run(args) -> int:
    base = {"e": args.e, "multicharge": _parse_multicharge(args.multicharge)}

    if args.command == "block":
        payload = base | {"multipartition": _parse_multipartition(args.multipartition)}
        out = _dispatch(args, "/block", service.MultipartitionRequest, payload)
    elif args.command == "find-dominant":
        payload = base | {"block": _block_payload(args)}
        out = _dispatch(args, "/find-dominant", service.BlockRequest, payload)
    elif args.command == "chamber":
        payload = base | {"block": _block_payload(args)}
        out = _dispatch(args, "/chamber", service.BlockRequest, payload)
    elif args.command == "find-n":
        payload = base | {"block": _block_payload(args)}
        out = _dispatch(args, "/find-n", service.BlockRequest, payload)
    elif args.command == "test-rock":
        payload = base | {"block": _block_payload(args)}
        out = _dispatch(args, "/test-rock", service.BlockRequest, payload)
        if args.verbose:
            print(render_pair_lines(out))
            return 0
        out = {"rock": out["rock"]}
    elif args.command == "rock-weight":
        payload = base | {"block": _block_payload(args), "point": _parse_point(args.point)}
        out = _dispatch(args, "/rock-weight", service.RockWeightRequest, payload)
    elif args.command == "all-rocks":
        payload = base | {"block": _block_payload(args)}
        out = _dispatch(args, "/all-rocks", service.BlockRequest, payload)
    elif args.command == "weight-from-block":
        payload = base | {"block": _block_payload(args), "shift": args.shift}
        out = _dispatch(args, "/weight-from-block", service.WeightFromBlockRequest, payload)
    elif args.command == "abacus":
        payload = base | {
            "multipartition": _parse_multipartition(args.multipartition),
            "shift": args.shift,
            "rows": args.rows,
        }
        out = _dispatch(args, "/abacus", service.AbacusRequest, payload)
        if args.ascii:
            print(out["ascii"])
            return 0
    elif args.command == "oracle-support":
        payload = base | {
            "block": _block_payload(args),
            "max_boxes": args.max_boxes,
            "max_seconds": args.max_seconds,
        }
        out = _dispatch(args, "/oracle-support", service.OracleRequest, payload)
    elif args.command == "oracle-walls":
        payload = base | {
            "block": _block_payload(args),
            "max_boxes": args.max_boxes,
            "max_seconds": args.max_seconds,
        }
        out = _dispatch(args, "/oracle-walls", service.OracleRequest, payload)
    elif args.command == "scopes-equivalent":
        payload = base | {
            "block": _block_payload(args),
            "other": _parse_block_arg(args.other),
            "up_to_stabilizer": args.up_to_stabilizer,
        }
        out = _dispatch(args, "/scopes-equivalent", service.EquivalenceRequest, payload)
    else:  # pragma: no cover - argparse enforces the choices
        raise UsageError(f"unknown command {args.command!r}")

    print(json.dumps(out, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rockblocks", description=__doc__)
    parser.add_argument("--server", help="route requests to a running service at this URL")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, block_input: bool = True) -> None:
        p.add_argument("--e", type=int, required=True, help="quantum characteristic")
        p.add_argument("--multicharge", required=True, help="comma-separated charges, e.g. '2,0'")
        if block_input:
            p.add_argument("--block", help="comma-separated residue:count pairs, e.g. '0:25,1:32'")
            p.add_argument("--input", help="path to a JSON object of residue counts")

    p = sub.add_parser("block", help="residue census of a multipartition")
    common(p, block_input=False)
    p.add_argument("--multipartition", required=True, help="JSON list of partitions")

    for name in ("find-dominant", "chamber", "find-n", "all-rocks"):
        common(sub.add_parser(name))

    p = sub.add_parser("test-rock", help="test whether the block is RoCK")
    common(p)
    p.add_argument("--verbose", action="store_true", help="print the per-pair report")

    p = sub.add_parser("rock-weight", help="RoCK block for the chamber of a point")
    common(p)
    p.add_argument("--point", required=True, help="comma-separated rationals, e.g. '3/2,-3,15/4,-3/4'")

    p = sub.add_parser("weight-from-block", help="bead counts of a block")
    common(p)
    p.add_argument("--shift", type=int, required=True)

    p = sub.add_parser("abacus", help="abacus display of a multipartition")
    common(p, block_input=False)
    p.add_argument("--multipartition", required=True, help="JSON list of partitions")
    p.add_argument("--shift", type=int, required=True)
    p.add_argument("--rows", type=int)
    p.add_argument("--ascii", action="store_true", help="print the board instead of JSON")

    for name in ("oracle-support", "oracle-walls"):
        p = sub.add_parser(name, help="brute-force " + ("support test" if "support" in name else "wall bounds"))
        common(p)
        p.add_argument("--max-boxes", type=int, dest="max_boxes")
        p.add_argument("--max-seconds", type=float, dest="max_seconds")

    p = sub.add_parser("scopes-equivalent", help="compare the Scopes chambers of two blocks")
    common(p)
    p.add_argument("--other", required=True, help="second block as residue:count pairs")
    p.add_argument("--up-to-stabilizer", action="store_true", dest="up_to_stabilizer")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except UsageError as exc:
        print(f"rockblocks: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except service.ParseError as exc:
        print(f"rockblocks: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except DomainError as exc:
        print(json.dumps({"error": "domain", "detail": str(exc)}, indent=2))
        return DOMAIN_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
