"""Replacing pieces through distance-distorting maps.

A stretch context assigns to every source piece a bilipschitz map into a
target piece, hitting every target piece at least once. Step sequences and
whole elements are pushed through the maps segment by segment; the induced
reparametrization of a step sequence is piecewise linear, and lengths are
distorted by at most the context constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FamilyMismatchError, OutOfRangeError, ShapeError
from .pieces import COORD_SCALE, TREE, BilipschitzMap, PieceFamily
from .pgeodesic import PGeodesic, PStep
from .universal import UPoint, USegment


@dataclass(frozen=True)
class StretchContext:
    source: PieceFamily
    target: PieceFamily
    maps: tuple[BilipschitzMap, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for m in self.maps:
            src = self.source.piece(m.source)
            dst = self.target.piece(m.target)
            if m.source in seen:
                raise ShapeError(f"piece {m.source} has more than one map")
            seen.add(m.source)
            if src.kind != dst.kind or src.dim != dst.dim:
                raise ShapeError(
                    f"map {m.source} -> {m.target} changes the piece shape"
                )
            if m.kind == COORD_SCALE:
                if src.kind == TREE:
                    raise ShapeError("per-axis maps do not apply to tree pieces")
                if len(m.factors) != src.dim:
                    raise ShapeError("per-axis maps need one factor per axis")
        missing = {p.id for p in self.source.pieces} - seen
        if missing:
            raise ShapeError(f"source pieces {sorted(missing)} have no map")
        unhit = {p.id for p in self.target.pieces} - {m.target for m in self.maps}
        if unhit:
            raise ShapeError(f"target pieces {sorted(unhit)} are never hit")

    @property
    def constant(self) -> Fraction:
        """The worst distortion over all maps; at least 1."""
        return max(m.constant for m in self.maps)

    def map_for(self, piece_id: int) -> BilipschitzMap:
        for m in self.maps:
            if m.source == piece_id:
                return m
        raise ShapeError(f"no map for piece {piece_id}")


def identity_context(family: PieceFamily) -> StretchContext:
    """The context that keeps every piece in place unchanged."""
    return StretchContext(
        family, family, tuple(BilipschitzMap(p.id, p.id) for p in family.pieces)
    )


def _stretched_step(ctx: StretchContext, length: Fraction, piece_id: int, value):
    m = ctx.map_for(piece_id)
    dst = ctx.target.piece(m.target)
    image = m.apply(value)
    return dst.distance(dst.basepoint, image), m.target, image


def stretch_function(ctx: StretchContext, g: PGeodesic, t: Fraction) -> Fraction:
    """Reparametrized position of t after pushing g through the maps.

    Piecewise linear: each step interval maps onto its stretched image with
    constant slope. Zero at zero, strictly increasing, and the total length
    maps to the stretched total, so increments are distorted by at most the
    context constant.
    """
    if g.family != ctx.source:
        raise FamilyMismatchError("step sequence is not over the source family")
    t = Fraction(t)
    if t < 0 or t > g.length:
        raise OutOfRangeError(f"parameter {t} outside [0, {g.length}]")
    acc = Fraction(0)
    start = Fraction(0)
    for s in g.steps:
        end = start + s.length
        stretched, _, _ = _stretched_step(ctx, s.length, s.piece_id, s.value)
        if t < end:
            return acc + (t - start) / s.length * stretched
        acc += stretched
        start = end
    return acc


def psi(ctx: StretchContext, g: PGeodesic) -> PGeodesic:
    """Push a step sequence through the maps, stretching each step."""
    if g.family != ctx.source:
        raise FamilyMismatchError("step sequence is not over the source family")
    steps = []
    for s in g.steps:
        stretched, target_id, image = _stretched_step(ctx, s.length, s.piece_id, s.value)
        steps.append(PStep(stretched, target_id, image))
    return PGeodesic(ctx.target, tuple(steps))


def psi_point(ctx: StretchContext, f: UPoint) -> UPoint:
    """Push a whole element through the maps, keeping labels.

    Acts segment by segment, sends the basepoint element to the basepoint
    element, and respects concatenation. When distinct source pieces go to
    distinct targets, distances are distorted by at most the context
    constant; merging two source pieces into one target can collapse
    distances further.
    """
    if f.family != ctx.source:
        raise FamilyMismatchError("element is not over the source family")
    segments = []
    for s in f.segments:
        stretched, target_id, image = _stretched_step(ctx, s.length, s.piece_id, s.value)
        segments.append(USegment(stretched, target_id, image, s.label))
    return UPoint(ctx.target, tuple(segments))
