"""Command-line interface.

By default commands run in-process against the core package.  With
``--server URL`` they act as a thin client against a running service and
derive exit codes from HTTP status.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canon import canonical_dump_bytes
from .errors import InputError, MalformedFileError, SizeGuardError
from .ops import run_distance, run_precompact, run_variation, run_verify
from .report import TOOL_VERSION

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_SIZE = 3


def _read_json(path: str):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedFileError(f"{path}: invalid JSON: {exc}") from exc


def _emit(report_obj: dict, out: str | None) -> None:
    data = canonical_dump_bytes(report_obj)
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _status_exit(status: str) -> int:
    return EXIT_OK if status in ("pass", "computed", "ok") else EXIT_FAIL


def _post(server: str, endpoint: str, payload: dict) -> dict:
    import httpx

    resp = httpx.post(server.rstrip("/") + endpoint, json=payload, timeout=600.0)
    if resp.status_code == 422:
        raise InputError(resp.json().get("detail", "input error"))
    if resp.status_code == 413:
        raise SizeGuardError(resp.json().get("detail", "size guard"))
    resp.raise_for_status()
    return resp.json()


def _cmd_variation(args) -> int:
    payload = {
        "function": _read_json(args.function_file),
        "family_config": _read_json(args.family_config),
        "method": args.method,
    }
    if args.server:
        obj = _post(args.server, "/variation", payload)
    else:
        obj = run_variation(
            payload["function"], payload["family_config"], args.method
        ).to_json()
    _emit(obj, args.out)
    return _status_exit(obj["status"])


def _cmd_distance(args) -> int:
    payload = {
        "function_a": _read_json(args.function_file_a),
        "function_b": _read_json(args.function_file_b),
        "family_config": _read_json(args.family_config),
        "method": args.method,
    }
    if args.server:
        obj = _post(args.server, "/distance", payload)
    else:
        obj = run_distance(
            payload["function_a"],
            payload["function_b"],
            payload["family_config"],
            args.method,
        ).to_json()
    _emit(obj, args.out)
    return _status_exit(obj["status"])


def _cmd_verify(args) -> int:
    payload = {"suite": args.suite, "seed": args.seed, "count": args.count}
    if args.server:
        obj = _post(args.server, "/verify", payload)
    else:
        obj = run_verify(args.suite, args.seed, args.count).to_json()
    _emit(obj, args.out)
    return _status_exit(obj["status"])


def _cmd_precompact(args) -> int:
    payload = {
        "family": _read_json(args.family_file),
        "epsilon": args.epsilon,
        "family_config": _read_json(args.family_config),
    }
    if args.server:
        obj = _post(args.server, "/precompact", payload)
    else:
        obj = run_precompact(
            payload["family"], args.epsilon, payload["family_config"]
        ).to_json()
    _emit(obj, args.out)
    return _status_exit(obj["status"])


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bvgrid",
        description="Bounded-variation functionals and precompactness "
        "certificates for grid functions into metric semigroups.",
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, method=True):
        if method:
            p.add_argument("--method", default="auto", help="search method")
        p.add_argument("--out", default=None, help="report file (default stdout)")
        p.add_argument("--server", default=None, help="base URL of a running service")

    p = sub.add_parser("variation", help="variation breakdown of a grid function")
    p.add_argument("function_file")
    p.add_argument("--family-config", required=True)
    common(p)
    p.set_defaults(func=_cmd_variation)

    p = sub.add_parser("distance", help="distance between two grid functions")
    p.add_argument("function_file_a")
    p.add_argument("function_file_b")
    p.add_argument("--family-config", required=True)
    common(p)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("suite", choices=["axioms", "lemmas", "semigroup", "search-oracle"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    common(p, method=False)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("precompact", help="equivariation certificate and epsilon-net")
    p.add_argument("family_file")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--family-config", required=True)
    common(p, method=False)
    p.set_defaults(func=_cmd_precompact)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
