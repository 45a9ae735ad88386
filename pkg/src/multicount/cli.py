"""Command-line front end.

Each subcommand is a thin client of the HTTP service: arguments become a
request model, the response envelope is rendered as text (or emitted
verbatim with --json).  By default the service runs in-process over an
ASGI transport; --server points the same client at a running instance.

Exit codes: 0 success, 1 a checked claim failed (identity failure or
counterexample found), 2 usage error, 3 corrupt checkpoint.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import json
import sys
from typing import Any, Optional

import httpx

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_CORRUPT_CHECKPOINT = 3


def _post(server: Optional[str], path: str, payload: dict) -> tuple[int, Any]:
    """POST to the service, in-process unless a server URL is given."""

    async def go() -> tuple[int, Any]:
        if server is None:
            from .service import create_app

            transport = httpx.ASGITransport(app=create_app())
            base = "http://multicount.local"
        else:
            transport = None
            base = server
        async with httpx.AsyncClient(
            transport=transport, base_url=base, timeout=None
        ) as client:
            resp = await client.post(path, json=payload)
            try:
                body = resp.json()
            except ValueError:
                body = {"detail": resp.text}
            return resp.status_code, body

    return asyncio.run(go())


def _render_detail(detail: Any) -> str:
    if isinstance(detail, list):  # pydantic validation errors
        parts = []
        for err in detail:
            loc = ".".join(str(x) for x in err.get("loc", []) if x != "body")
            parts.append(f"{loc}: {err.get('msg', 'invalid')}" if loc else str(err))
        return "; ".join(parts)
    if isinstance(detail, dict):
        return str(detail.get("message", detail))
    return str(detail)


def _error_exit(status: int, body: Any) -> int:
    detail = body.get("detail") if isinstance(body, dict) else body
    print(f"error: {_render_detail(detail)}", file=sys.stderr)
    if status == 409 and isinstance(detail, dict) and detail.get("code") == "corrupt-checkpoint":
        return EXIT_CORRUPT_CHECKPOINT
    return EXIT_USAGE


def _ascending(parts: list[int]) -> str:
    return "+".join(str(p) for p in sorted(parts))


def cmd_mcount(args: argparse.Namespace) -> int:
    payload = {
        "m": args.m,
        "n": args.n,
        "k": args.k,
        "witnesses": args.witnesses,
        "method": args.method,
    }
    status, body = _post(args.server, "/mcount", payload)
    if status != 200:
        return _error_exit(status, body)
    if args.as_json:
        print(json.dumps(body, indent=2))
        return EXIT_OK
    result = body["result"]
    print(f"count = {result['count']}  [{body['method']}, {body['elapsed']:.3f}s]")
    if result.get("witnesses") is not None:
        shown = ", ".join(_ascending(w) for w in result["witnesses"])
        print(f"witnesses: {shown}" if shown else "witnesses: (none)")
    return EXIT_OK


def cmd_fine(args: argparse.Namespace) -> int:
    status, body = _post(args.server, "/fine", {"n_max": args.n_max})
    if status != 200:
        return _error_exit(status, body)
    if args.as_json:
        print(json.dumps(body, indent=2))
        return EXIT_OK if body["result"]["ok"] else EXIT_CLAIM_FAILED
    result = body["result"]
    if result["ok"]:
        print(
            f"partition-sum identity holds for all 1 <= k <= n <= {args.n_max} "
            f"({result['pairs_checked']} pairs, {body['elapsed']:.3f}s)"
        )
        return EXIT_OK
    n, k = result["first_failure"]
    print(f"FAIL: identity breaks at n={n}, k={k}")
    return EXIT_CLAIM_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    payload = {
        "mode": args.mode,
        "n_max": args.n_max,
        "workers": args.workers,
        "checkpoint": args.checkpoint,
        "resume": args.resume,
    }
    status, body = _post(args.server, "/verify", payload)
    if status != 200:
        return _error_exit(status, body)
    result = body["result"]
    failed = bool(result["counterexamples"])
    if result.get("checkpoint_error"):
        print(f"warning: checkpoint write failed: {result['checkpoint_error']}", file=sys.stderr)
    if args.as_json:
        print(json.dumps(body, indent=2))
        return EXIT_CLAIM_FAILED if failed else EXIT_OK
    print(f"mode:            {args.mode}")
    print(f"verified up to:  {result['verified_up_to']}")
    print(f"pairs checked:   {result['pairs_checked']}")
    print(f"fast path hits:  {result['fast_path_hits']}")
    if failed:
        shown = ", ".join(f"({n},{k})" for n, k in result["counterexamples"])
        print(f"counterexamples: {shown}")
    else:
        print("counterexamples: none")
    print(f"elapsed:         {body['elapsed']:.3f}s")
    return EXIT_CLAIM_FAILED if failed else EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    status, body = _post(args.server, "/table", {"m": args.m, "n_max": args.n_max})
    if status != 200:
        return _error_exit(status, body)
    if args.format == "json":
        print(json.dumps(body, indent=2))
        return EXIT_OK
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "k", "count", "method"])
    for row in body["result"]["rows"]:
        writer.writerow([row["n"], row["k"], row["count"], row["method"]])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multicount",
        description=(
            "Count multinomial coefficients with a prescribed value over the "
            "partitions of n into k parts, and run verification sweeps over "
            "binomial-coefficient claims."
        ),
        epilog=(
            "The MULTICOUNT_SIEVE_BOUND environment variable overrides the "
            "factorization sieve bound (default 2**20)."
        ),
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="base URL of a running service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pm = sub.add_parser("mcount", help="count k-part partitions of n with multinomial value m")
    pm.add_argument("m", type=int, help="target multinomial value (arbitrary precision)")
    pm.add_argument("n", type=int, help="weight being partitioned")
    pm.add_argument("k", type=int, help="number of parts")
    pm.add_argument("--witnesses", action="store_true", help="list the matching partitions")
    pm.add_argument("--method", choices=["auto", "closed", "brute"], default="auto")
    pm.add_argument("--json", dest="as_json", action="store_true")
    pm.set_defaults(func=cmd_mcount)

    pf = sub.add_parser("fine", help="check the multinomial/binomial partition-sum identity")
    pf.add_argument("n_max", type=int, help="check all 1 <= k <= n <= n_max")
    pf.add_argument("--json", dest="as_json", action="store_true")
    pf.set_defaults(func=cmd_fine)

    pv = sub.add_parser("verify", help="sweep a claim over 2 <= k <= n/2 up to n_max")
    pv.add_argument("mode", choices=["gcd-conjecture", "lemma1"])
    pv.add_argument("n_max", type=int)
    pv.add_argument("--workers", type=int, default=1, metavar="N")
    pv.add_argument("--checkpoint", metavar="PATH", default=None)
    pv.add_argument("--resume", action="store_true")
    pv.add_argument("--json", dest="as_json", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("table", help="tabulate nonzero counts for a fixed m up to n_max")
    pt.add_argument("m", type=int)
    pt.add_argument("n_max", type=int)
    pt.add_argument("--format", choices=["csv", "json"], default="csv")
    pt.set_defaults(func=cmd_table)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
