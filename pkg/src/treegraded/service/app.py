"""HTTP front end for the core operations.

Every endpoint is stateless: the request carries the scene (family,
capacity, stretch maps, named elements) alongside the arguments, and the
response is plain JSON in the same wire formats the CLI reads and writes.
Domain errors map to 400 with a human-readable detail string.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..checks import run_suite
from ..errors import ShapeError, TreeGradedError
from ..jsonio import (
    Scene,
    format_rational,
    parse_rational,
    pgeodesic_from_json,
    scene_from_json,
    upoint_from_json,
    upoint_to_json,
)
from ..stretch import psi_point
from ..structure import PieceRef, project
from ..universal import (
    UPoint,
    concat,
    dist,
    explicit_geodesic,
    realize_class,
    urestrict,
    validate,
)
from ..verifier import MetricGraph, PieceCover, verify
from .models import (
    CheckRequest,
    ConcatRequest,
    DistRequest,
    ElementRef,
    GeodesicRequest,
    ProjectRequest,
    RealizeRequest,
    RestrictRequest,
    StretchRequest,
    VerifyGraphRequest,
)

app = FastAPI(title="treegraded", version=__version__)


@app.exception_handler(TreeGradedError)
async def _domain_error(request: Request, exc: TreeGradedError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _scene(model) -> Scene:
    return scene_from_json(model.model_dump(by_alias=True, exclude_none=True))


def _element(scene: Scene, ref: ElementRef) -> UPoint:
    if isinstance(ref, str):
        if ref not in scene.points:
            raise ShapeError(f"scene has no point named {ref!r}")
        f = scene.points[ref]
    else:
        f = upoint_from_json(scene.family, ref.model_dump())
    bad = validate(f, scene.capacity)
    if bad is not None:
        raise ShapeError(f"segment {bad.segment}: {bad.message}")
    return f


@app.get("/health")
async def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/dist")
async def post_dist(req: DistRequest) -> dict:
    scene = _scene(req.scene)
    f = _element(scene, req.f)
    g = _element(scene, req.g)
    return {"dist": format_rational(dist(f, g))}


@app.post("/geodesic")
async def post_geodesic(req: GeodesicRequest) -> dict:
    scene = _scene(req.scene)
    f = _element(scene, req.f)
    g = _element(scene, req.g)
    geo = explicit_geodesic(f, g)
    point = geo.at(parse_rational(req.t))
    out = upoint_to_json(point)
    out["length"] = format_rational(geo.length)
    return out


@app.post("/concat")
async def post_concat(req: ConcatRequest) -> dict:
    scene = _scene(req.scene)
    f = _element(scene, req.f)
    g = _element(scene, req.g)
    return upoint_to_json(concat(f, g))


@app.post("/restrict")
async def post_restrict(req: RestrictRequest) -> dict:
    scene = _scene(req.scene)
    f = _element(scene, req.f)
    return upoint_to_json(urestrict(f, parse_rational(req.x)))


@app.post("/project")
async def post_project(req: ProjectRequest) -> dict:
    scene = _scene(req.scene)
    r = _element(scene, req.r)
    base = _element(scene, req.base)
    scene.family.piece(req.piece)
    if req.label < 0 or (scene.capacity is not None and req.label >= scene.capacity):
        raise ShapeError(f"label {req.label} outside the capacity")
    return upoint_to_json(project(r, PieceRef(base, req.piece, req.label)))


@app.post("/stretch")
async def post_stretch(req: StretchRequest) -> dict:
    scene = _scene(req.scene)
    if scene.stretch is None:
        raise ShapeError("the scene has no stretch maps")
    f = _element(scene, req.f)
    return upoint_to_json(psi_point(scene.stretch, f))


@app.post("/check")
async def post_check(req: CheckRequest) -> dict:
    scene = _scene(req.scene)
    return run_suite(scene, req.suite, req.samples, req.seed)


@app.post("/verify-graph")
async def post_verify_graph(req: VerifyGraphRequest) -> dict:
    raw = req.graph.model_dump()
    edges = tuple((u, v, parse_rational(w)) for u, v, w in raw["edges"])
    graph = MetricGraph(raw["n"], edges)
    cover = PieceCover(tuple(frozenset(p) for p in raw["pieces"]))
    cover.check_covers(graph)
    return verify(graph, cover, cap=req.cap).to_json()


@app.post("/realize")
async def post_realize(req: RealizeRequest) -> dict:
    scene = _scene(req.scene)
    word = pgeodesic_from_json(scene.family, req.word.model_dump())
    points = realize_class(word, req.labels, scene.capacity)
    return {"points": [upoint_to_json(p) for p in points]}
