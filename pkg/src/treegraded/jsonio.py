"""Wire formats: canonical JSON for every domain type.

Rationals travel as canonical "n/d" strings, coordinate points as arrays
of rationals, tree points as arrays of [branch, length] pairs. Dumping is
canonical (sorted keys, fixed separators), so equal values always encode
to byte-equal JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import ShapeError
from .pieces import (
    COORD_SCALE,
    IDENTITY,
    L1,
    LINE,
    SCALE,
    TREE,
    BilipschitzMap,
    Piece,
    PieceFamily,
    PiecePoint,
    reduce_word,
)
from .pgeodesic import PGeodesic, PStep
from .stretch import StretchContext
from .universal import UPoint, USegment
from .verifier import MetricGraph, PieceCover


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(raw: Any) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ShapeError(f"rationals must be strings or integers, got {raw!r}")
    if isinstance(raw, (int, str, Fraction)):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ShapeError(f"bad rational {raw!r}: {exc}") from None
    raise ShapeError(f"rationals must be strings or integers, got {raw!r}")


def point_to_json(piece: Piece, p: PiecePoint) -> list:
    if piece.kind == TREE:
        return [[b, format_rational(l)] for b, l in p]
    return [format_rational(x) for x in p]


def point_from_json(piece: Piece, raw: Any) -> PiecePoint:
    if not isinstance(raw, (list, tuple)):
        raise ShapeError(f"points must be arrays, got {raw!r}")
    if piece.kind == TREE:
        letters = []
        for item in raw:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise ShapeError("tree points are arrays of [branch, length] pairs")
            branch, length = item
            if isinstance(branch, bool) or not isinstance(branch, int):
                raise ShapeError("branch ids must be integers")
            letters.append((branch, parse_rational(length)))
        return piece.check_point(reduce_word(letters))
    return piece.check_point(tuple(parse_rational(x) for x in raw))


def family_to_json(family: PieceFamily) -> dict:
    out = []
    for p in family.pieces:
        entry: dict[str, Any] = {"id": p.id, "kind": p.kind}
        if p.kind == L1:
            entry["dim"] = p.dim
        out.append(entry)
    return {"pieces": out}


def family_from_json(raw: Any) -> PieceFamily:
    if not isinstance(raw, dict) or not isinstance(raw.get("pieces"), list):
        raise ShapeError("a family is an object with a 'pieces' array")
    pieces = []
    for entry in raw["pieces"]:
        if not isinstance(entry, dict):
            raise ShapeError("each piece is an object")
        kind = entry.get("kind")
        if kind not in (LINE, L1, TREE):
            raise ShapeError(f"unknown piece kind {kind!r}")
        dim = entry.get("dim", 1)
        if isinstance(dim, bool) or not isinstance(dim, int):
            raise ShapeError("piece dimensions must be integers")
        pieces.append(Piece(int(entry.get("id", len(pieces))), kind, dim))
    return PieceFamily(tuple(pieces))


def pgeodesic_to_json(g: PGeodesic) -> dict:
    return {
        "steps": [
            {
                "len": format_rational(s.length),
                "piece": s.piece_id,
                "value": point_to_json(g.family.piece(s.piece_id), s.value),
            }
            for s in g.steps
        ]
    }


def pgeodesic_from_json(family: PieceFamily, raw: Any) -> PGeodesic:
    if not isinstance(raw, dict) or not isinstance(raw.get("steps"), list):
        raise ShapeError("a step sequence is an object with a 'steps' array")
    steps = []
    for entry in raw["steps"]:
        piece = family.piece(_expect_int(entry, "piece"))
        steps.append(
            PStep(
                parse_rational(entry.get("len")),
                piece.id,
                point_from_json(piece, entry.get("value")),
            )
        )
    g = PGeodesic(family, tuple(steps))
    g.check()
    return g


def upoint_to_json(f: UPoint) -> dict:
    return {
        "segments": [
            {
                "len": format_rational(s.length),
                "piece": s.piece_id,
                "value": point_to_json(f.family.piece(s.piece_id), s.value),
                "label": s.label,
            }
            for s in f.segments
        ]
    }


def upoint_from_json(family: PieceFamily, raw: Any) -> UPoint:
    if not isinstance(raw, dict) or not isinstance(raw.get("segments"), list):
        raise ShapeError("an element is an object with a 'segments' array")
    segments = []
    for entry in raw["segments"]:
        if not isinstance(entry, dict):
            raise ShapeError("each segment is an object")
        piece = family.piece(_expect_int(entry, "piece"))
        segments.append(
            USegment(
                parse_rational(entry.get("len")),
                piece.id,
                point_from_json(piece, entry.get("value")),
                _expect_int(entry, "label"),
            )
        )
    return UPoint(family, tuple(segments))


def _expect_int(entry: Any, key: str) -> int:
    if not isinstance(entry, dict):
        raise ShapeError(f"expected an object with key {key!r}")
    value = entry.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ShapeError(f"field {key!r} must be an integer, got {value!r}")
    return value


_MAP_FIELDS = {IDENTITY: None, SCALE: "lambda", COORD_SCALE: "lambdas"}


def stretch_to_json(ctx: StretchContext) -> dict:
    maps = []
    for m in ctx.maps:
        entry: dict[str, Any] = {"src": m.source, "dst": m.target, "kind": m.kind}
        if m.kind == SCALE:
            entry["lambda"] = format_rational(m.factors[0])
        elif m.kind == COORD_SCALE:
            entry["lambdas"] = [format_rational(f) for f in m.factors]
        maps.append(entry)
    out: dict[str, Any] = {"maps": maps}
    if ctx.target != ctx.source:
        out["target"] = family_to_json(ctx.target)
    return out


def stretch_from_json(source: PieceFamily, raw: Any) -> StretchContext:
    if not isinstance(raw, dict) or not isinstance(raw.get("maps"), list):
        raise ShapeError("a stretch context is an object with a 'maps' array")
    target = family_from_json(raw["target"]) if "target" in raw else source
    maps = []
    for entry in raw["maps"]:
        kind = entry.get("kind", IDENTITY) if isinstance(entry, dict) else None
        if kind not in _MAP_FIELDS:
            raise ShapeError(f"unknown map kind {kind!r}")
        if kind == SCALE:
            factors = (parse_rational(entry.get("lambda")),)
        elif kind == COORD_SCALE:
            raw_factors = entry.get("lambdas")
            if not isinstance(raw_factors, list):
                raise ShapeError("per-axis maps need a 'lambdas' array")
            factors = tuple(parse_rational(f) for f in raw_factors)
        else:
            factors = ()
        maps.append(
            BilipschitzMap(
                _expect_int(entry, "src"), _expect_int(entry, "dst"), kind, factors
            )
        )
    return StretchContext(source, target, tuple(maps))


def graph_from_json(raw: Any) -> tuple[MetricGraph, PieceCover]:
    if not isinstance(raw, dict):
        raise ShapeError("a graph is an object with 'n', 'edges', and 'pieces'")
    n = raw.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise ShapeError("'n' must be an integer")
    edges = []
    for entry in raw.get("edges", []):
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ShapeError("each edge is a [u, v, weight] triple")
        u, v, w = entry
        for x in (u, v):
            if isinstance(x, bool) or not isinstance(x, int):
                raise ShapeError("edge endpoints must be integers")
        edges.append((u, v, parse_rational(w)))
    pieces = raw.get("pieces")
    if not isinstance(pieces, list):
        raise ShapeError("'pieces' must be an array of vertex arrays")
    cover = PieceCover(tuple(frozenset(int(x) for x in p) for p in pieces))
    graph = MetricGraph(n, tuple(edges))
    cover.check_covers(graph)
    return graph, cover


def graph_to_json(graph: MetricGraph, cover: PieceCover) -> dict:
    return {
        "n": graph.n,
        "edges": [[u, v, format_rational(w)] for u, v, w in graph.edges],
        "pieces": [sorted(p) for p in cover.pieces],
    }


@dataclass(frozen=True)
class Scene:
    """A family, a label capacity, optional stretch maps, and named elements."""

    family: PieceFamily
    capacity: Optional[int] = None
    stretch: Optional[StretchContext] = None
    points: dict[str, UPoint] = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.points is None:
            object.__setattr__(self, "points", {})


def scene_from_json(raw: Any) -> Scene:
    if not isinstance(raw, dict) or "family" not in raw:
        raise ShapeError("a scene is an object with at least a 'family'")
    family = family_from_json(raw["family"])
    capacity = raw.get("capacity")
    if capacity is not None and (isinstance(capacity, bool) or not isinstance(capacity, int) or capacity < 0):
        raise ShapeError("capacity must be a natural number or null")
    stretch = stretch_from_json(family, raw["stretch"]) if raw.get("stretch") else None
    points = {}
    for name, entry in (raw.get("points") or {}).items():
        points[str(name)] = upoint_from_json(family, entry)
    return Scene(family, capacity, stretch, points)


def scene_to_json(scene: Scene) -> dict:
    out: dict[str, Any] = {"family": family_to_json(scene.family)}
    out["capacity"] = scene.capacity
    if scene.stretch is not None:
        out["stretch"] = stretch_to_json(scene.stretch)
    if scene.points:
        out["points"] = {k: upoint_to_json(v) for k, v in sorted(scene.points.items())}
    return out


def canonical_dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed separators, ASCII only."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
