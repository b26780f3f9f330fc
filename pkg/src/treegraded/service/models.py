"""Request and response bodies for the HTTP service.

The models mirror the wire formats one to one: rationals are "n/d"
strings, coordinate points are arrays of rationals, tree points arrays of
[branch, length] pairs. Elements in requests are either inline bodies or
names bound in the scene.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

PointJson = Union[list[str], list[tuple[int, str]]]


class PieceModel(BaseModel):
    id: int
    kind: Literal["line", "l1", "tree"]
    dim: Optional[int] = None


class FamilyModel(BaseModel):
    pieces: list[PieceModel]


class SegmentModel(BaseModel):
    len: str
    piece: int
    value: PointJson
    label: int


class ElementModel(BaseModel):
    segments: list[SegmentModel] = Field(default_factory=list)


class StepModel(BaseModel):
    len: str
    piece: int
    value: PointJson


class WordModel(BaseModel):
    steps: list[StepModel] = Field(default_factory=list)


class StretchMapModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    src: int
    dst: int
    kind: Literal["identity", "scale", "coordscale"] = "identity"
    lam: Optional[str] = Field(default=None, alias="lambda")
    lambdas: Optional[list[str]] = None


class StretchModel(BaseModel):
    maps: list[StretchMapModel]
    target: Optional[FamilyModel] = None


class SceneModel(BaseModel):
    family: FamilyModel
    capacity: Optional[int] = None
    stretch: Optional[StretchModel] = None
    points: dict[str, ElementModel] = Field(default_factory=dict)


ElementRef = Union[str, ElementModel]


class DistRequest(BaseModel):
    scene: SceneModel
    f: ElementRef
    g: ElementRef


class GeodesicRequest(BaseModel):
    scene: SceneModel
    f: ElementRef
    g: ElementRef
    t: str


class ConcatRequest(BaseModel):
    scene: SceneModel
    f: ElementRef
    g: ElementRef


class RestrictRequest(BaseModel):
    scene: SceneModel
    f: ElementRef
    x: str


class ProjectRequest(BaseModel):
    scene: SceneModel
    r: ElementRef
    base: ElementRef
    piece: int
    label: int


class StretchRequest(BaseModel):
    scene: SceneModel
    f: ElementRef


class CheckRequest(BaseModel):
    scene: SceneModel
    suite: Literal["metric", "geodesic", "projections", "stretch", "realtree"]
    samples: int
    seed: int


class GraphModel(BaseModel):
    n: int
    edges: list[tuple[int, int, str]]
    pieces: list[list[int]]


class VerifyGraphRequest(BaseModel):
    graph: GraphModel
    cap: int = 10_000


class RealizeRequest(BaseModel):
    scene: SceneModel
    word: WordModel
    labels: list[int]
