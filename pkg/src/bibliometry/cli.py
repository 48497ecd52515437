"""Thin command-line client for the bibliometry service.

Every verb maps onto a service endpoint. By default the CLI binds to the
app in-process (no socket); pass --server to talk to a running instance
instead. Exit codes: 0 ok, 2 config error, 3 network error or partial
harvest, 4 data error.
"""
from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from pathlib import Path

import httpx

CONTACT_EMAIL_ENV = "BIBLIOMETRY_CONTACT_EMAIL"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NETWORK = 3
EXIT_DATA = 4

_EXIT_BY_CATEGORY = {"config": EXIT_CONFIG, "network": EXIT_NETWORK,
                     "data": EXIT_DATA}

_STAGE_VERBS = {
    "harvest": ["harvest"],
    "build": ["build"],
    "metrics": ["metrics"],
    "export": ["export"],
    "all": None,   # use the config's stage list
}


def _request(server: str | None, method: str, path: str, payload: dict | None):
    """One HTTP round trip, against a remote server or the in-process app."""
    if server:
        try:
            with httpx.Client(base_url=server, timeout=None) as client:
                return client.request(method, path, json=payload)
        except httpx.HTTPError as exc:
            print(f"error: cannot reach {server}: {exc}", file=sys.stderr)
            raise SystemExit(EXIT_NETWORK)

    from .service.app import create_app

    async def go():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, timeout=None,
                                     base_url="http://bibliometry.internal") as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _print_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _body(response) -> dict:
    try:
        return response.json()
    except ValueError:
        print(f"error: non-JSON response (HTTP {response.status_code}) - "
              f"is this a bibliometry server?", file=sys.stderr)
        raise SystemExit(EXIT_NETWORK)


def _fail_from_error_body(body: dict) -> int:
    category = body.get("category", "data")
    message = body.get("message") or json.dumps(body)
    print(f"error ({category}): {message}", file=sys.stderr)
    return _EXIT_BY_CATEGORY.get(category, EXIT_DATA)


def _config_payload(args) -> dict:
    config_path = Path(args.config)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error (config): cannot read {config_path}: {exc}",
              file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)
    return {"config_toml": text,
            "base_dir": str(config_path.parent.resolve())}


def cmd_validate_config(args) -> int:
    payload = _config_payload(args)
    response = _request(args.server, "POST", "/config/validate", payload)
    body = _body(response)
    if response.status_code != 200:
        return _fail_from_error_body(body)
    if args.json:
        _print_json(body)
    elif body["valid"]:
        print(f"config ok: stages={body['stages']} "
              f"output_dir={body['output_dir']}")
    else:
        for error in body["errors"]:
            print(f"config error: {error}", file=sys.stderr)
    return EXIT_OK if body["valid"] else EXIT_CONFIG


def cmd_run(args, verb: str) -> int:
    payload = _config_payload(args)
    if _STAGE_VERBS[verb] is not None:
        payload["stages"] = _STAGE_VERBS[verb]
    if args.output_dir:
        payload["output_dir"] = args.output_dir
    if args.corpus:
        payload["corpus"] = args.corpus
    contact = args.contact_email or os.environ.get(CONTACT_EMAIL_ENV)
    if contact:
        payload["contact_email"] = contact

    response = _request(args.server, "POST", "/pipeline/run", payload)
    body = _body(response)
    if response.status_code != 200:
        return _fail_from_error_body(body)
    if args.json:
        _print_json(body)
    else:
        for stage in body["stages"]:
            outputs = ", ".join(stage["outputs"]) or "-"
            print(f"[{stage['status']}] {stage['stage']} "
                  f"({stage['duration_seconds']:.2f}s) -> {outputs}")
            for reason, count in sorted(stage["skip_counts"].items()):
                print(f"    skipped {count}: {reason}")
        if body["status"] == "failed":
            print(f"failed at {body['failing_stage']}: {body['message']}",
                  file=sys.stderr)

    if body["status"] == "failed":
        return _EXIT_BY_CATEGORY.get(body.get("error_category") or "data",
                                     EXIT_DATA)
    if body["status"] == "partial":
        # distinguishes complete from partial harvests
        return EXIT_NETWORK
    return EXIT_OK


def cmd_indicators(args) -> int:
    response = _request(args.server, "GET", "/indicators", None)
    body = _body(response)
    if args.json:
        _print_json(body)
    else:
        for metric in body["metrics"]:
            print(f"{metric['metric_id']:32s} {metric['statistic']:7s} "
                  f"{metric['indicator']} [{metric['dimension']}]")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bibliometry",
        description="Windowed bibliometric indicators over conference corpora")
    parser.add_argument("--server", default="",
                        help="base URL of a running service; default runs "
                             "the service in-process")
    parser.add_argument("--json", action="store_true",
                        help="print raw JSON responses")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config_args(p):
        p.add_argument("--config", required=True, help="TOML run config")
        p.add_argument("--output-dir", default="",
                       help="override run.output_dir")
        p.add_argument("--corpus", default="", help="override build.corpus")
        p.add_argument("--contact-email", default="",
                       help=f"override harvest.contact_email "
                            f"(or set {CONTACT_EMAIL_ENV})")

    validate = sub.add_parser("validate-config",
                              help="parse and validate a run config")
    validate.add_argument("--config", required=True)

    for verb in ("harvest", "build", "metrics", "export", "all"):
        p = sub.add_parser(verb, help=f"run the {verb} stage(s)")
        add_config_args(p)

    sub.add_parser("indicators", help="list the registered indicators")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8300)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "validate-config":
        args.json = getattr(args, "json", False)
        return cmd_validate_config(args)
    if args.command == "indicators":
        return cmd_indicators(args)
    if args.command == "serve":
        return cmd_serve(args)
    return cmd_run(args, args.command)


if __name__ == "__main__":
    sys.exit(main())
