"""Command line client for the HTTP service.

The CLI builds the same JSON bodies the service accepts and posts them,
by default to an in-process app instance, or to a running server when
--server is given. Results go to stdout as canonical JSON, one document
per invocation; diagnostics go to stderr.

Exit codes: 0 on success (and clean/accepted reports), 1 when a check
suite reports violations or a graph is rejected, 2 on input or transport
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .jsonio import canonical_dumps


class CliError(Exception):
    pass


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from exc


def _element_arg(raw: str) -> Any:
    """A point argument: a scene name, inline JSON, or @file.json."""
    if raw.startswith("@"):
        return _load_json(raw[1:])
    if raw.lstrip().startswith("{"):
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CliError(f"inline element is not valid JSON: {exc}") from exc
    return raw


def _post(args: argparse.Namespace, path: str, payload: dict) -> Any:
    if args.server:
        import httpx

        try:
            resp = httpx.post(
                args.server.rstrip("/") + path, json=payload, timeout=120.0
            )
        except httpx.HTTPError as exc:
            raise CliError(f"cannot reach {args.server}: {exc}") from exc
    else:
        from fastapi.testclient import TestClient

        from .service.app import app

        with TestClient(app, raise_server_exceptions=False) as client:
            resp = client.post(path, json=payload)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        if not isinstance(detail, str):
            detail = json.dumps(detail)
        raise CliError(f"request failed ({resp.status_code}): {detail}")
    return resp.json()


def _emit(doc: Any) -> None:
    sys.stdout.write(canonical_dumps(doc) + "\n")


def cmd_dist(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    payload = {"scene": scene, "f": _element_arg(args.f), "g": _element_arg(args.g)}
    _emit(_post(args, "/dist", payload)["dist"])
    return 0


def cmd_geodesic(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    payload = {
        "scene": scene,
        "f": _element_arg(args.f),
        "g": _element_arg(args.g),
        "t": args.t,
    }
    _emit(_post(args, "/geodesic", payload))
    return 0


def cmd_concat(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    payload = {"scene": scene, "f": _element_arg(args.f), "g": _element_arg(args.g)}
    _emit(_post(args, "/concat", payload))
    return 0


def cmd_restrict(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    payload = {"scene": scene, "f": _element_arg(args.f), "x": args.x}
    _emit(_post(args, "/restrict", payload))
    return 0


def cmd_project(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    payload = {
        "scene": scene,
        "r": _element_arg(args.r),
        "base": _element_arg(args.base),
        "piece": args.piece,
        "label": args.label,
    }
    _emit(_post(args, "/project", payload))
    return 0


def cmd_stretch(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    payload = {"scene": scene, "f": _element_arg(args.f)}
    _emit(_post(args, "/stretch", payload))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    payload = {
        "scene": scene,
        "suite": args.suite,
        "samples": args.samples,
        "seed": args.seed,
    }
    report = _post(args, "/check", payload)
    _emit(report)
    return 0 if report.get("clean") else 1


def cmd_verify_graph(args: argparse.Namespace) -> int:
    payload = {"graph": _load_json(args.graph), "cap": args.cap}
    verdict = _post(args, "/verify-graph", payload)
    _emit(verdict)
    return 0 if verdict.get("accepted") else 1


def cmd_realize(args: argparse.Namespace) -> int:
    scene = _load_json(args.scene)
    try:
        labels = [int(tok) for tok in args.labels.replace(",", " ").split()]
    except ValueError as exc:
        raise CliError(f"labels must be integers: {exc}") from exc
    payload = {"scene": scene, "word": _load_json(args.word), "labels": labels}
    _emit(_post(args, "/realize", payload))
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treegraded",
        description="Exact geometry on tree-graded spaces over a JSON scene.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def scene_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--scene", required=True, help="scene JSON file")
        p.add_argument("--server", help="base URL of a running service")
        return p

    p = scene_cmd("dist", "distance between two elements")
    p.add_argument("f", help="element: scene name, inline JSON, or @file")
    p.add_argument("g", help="element: scene name, inline JSON, or @file")
    p.set_defaults(func=cmd_dist)

    p = scene_cmd("geodesic", "point at parameter t on the canonical path")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("t", help="parameter in [0, dist], e.g. 3/2")
    p.set_defaults(func=cmd_geodesic)

    p = scene_cmd("concat", "append one element's segments to another")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_concat)

    p = scene_cmd("restrict", "initial part of an element up to length x")
    p.add_argument("f")
    p.add_argument("x", help="cut length, e.g. 5/2")
    p.set_defaults(func=cmd_restrict)

    p = scene_cmd("project", "closest-point projection onto an embedded piece")
    p.add_argument("r", help="element to project")
    p.add_argument("--base", required=True, help="stem element of the piece location")
    p.add_argument("--piece", type=int, required=True, help="piece id")
    p.add_argument("--label", type=int, required=True, help="copy label")
    p.set_defaults(func=cmd_project)

    p = scene_cmd("stretch", "push an element through the scene's stretch maps")
    p.add_argument("f")
    p.set_defaults(func=cmd_stretch)

    p = scene_cmd("check", "run a sampled invariant suite against the scene")
    p.add_argument(
        "suite", choices=["metric", "geodesic", "projections", "stretch", "realtree"]
    )
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-graph", help="decide whether a weighted graph fits")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--cap", type=int, default=10_000, help="geodesic enumeration cap")
    p.add_argument("--server", help="base URL of a running service")
    p.set_defaults(func=cmd_verify_graph)

    p = scene_cmd("realize", "distinct-label copies of one admissible step word")
    p.add_argument("--word", required=True, help="step word JSON file")
    p.add_argument("--labels", required=True, help="labels, e.g. 0,1,2")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
