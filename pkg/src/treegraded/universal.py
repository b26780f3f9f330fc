"""Points of the universal glued space and its exact metric.

A point is a finite list of labeled segments. Each segment travels through
one piece to a recorded exit point and carries a natural-number label that
distinguishes parallel copies of the piece glued at the same spot. Two
points are compared along their longest shared segment prefix: if both
continue past it in the same piece with the same label, the in-piece
distance bridges their straddling segments; otherwise both tails must be
traversed in full. All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Optional, Sequence

from .errors import (
    AdmissibilityError,
    FamilyMismatchError,
    OutOfRangeError,
    ShapeError,
)
from .pgeodesic import PGeodesic, PStep, is_admissible
from .pieces import PieceFamily, PiecePoint

SAME_PIECE = "same_piece"
SPLIT = "split"


@dataclass(frozen=True)
class USegment:
    length: Fraction
    piece_id: int
    value: PiecePoint
    label: int


@dataclass(frozen=True)
class UPoint:
    family: PieceFamily
    segments: tuple[USegment, ...] = ()

    @property
    def length(self) -> Fraction:
        """Total travel: the distance from the basepoint element."""
        return sum((s.length for s in self.segments), Fraction(0))

    def boundaries(self) -> tuple[Fraction, ...]:
        return tuple(accumulate((s.length for s in self.segments), initial=Fraction(0)))

    def profile(self) -> PGeodesic:
        """The underlying step sequence, labels dropped."""
        return PGeodesic(
            self.family, tuple(PStep(s.length, s.piece_id, s.value) for s in self.segments)
        )


def basepoint(family: PieceFamily) -> UPoint:
    """The zero-length element."""
    return UPoint(family)


@dataclass(frozen=True)
class Violation:
    condition: int
    segment: Optional[int]
    message: str


def validate(f: UPoint, capacity: Optional[int] = None) -> Optional[Violation]:
    """Check the element conditions; None when everything holds.

    Reported by first failure: segment lengths must be positive (condition
    2), each exit point must lie at exactly the segment length from its
    piece's basepoint (condition 3), and labels must be naturals below the
    capacity when it is finite (condition 6).
    """
    for i, seg in enumerate(f.segments):
        if not isinstance(seg.length, Fraction) or seg.length <= 0:
            return Violation(2, i, "segment lengths must be positive fractions")
        try:
            piece = f.family.piece(seg.piece_id)
            d = piece.distance(piece.basepoint, seg.value)
        except ShapeError as exc:
            return Violation(3, i, str(exc))
        if d != seg.length:
            return Violation(
                3, i, f"exit point lies at distance {d}, not {seg.length}"
            )
        if not isinstance(seg.label, int) or seg.label < 0:
            return Violation(6, i, "labels must be natural numbers")
        if capacity is not None and seg.label >= capacity:
            return Violation(6, i, f"label {seg.label} reaches the capacity {capacity}")
    return None


def single(family: PieceFamily, piece_id: int, x: PiecePoint, label: int) -> UPoint:
    """One-segment element through the given piece to the point x."""
    piece = family.piece(piece_id)
    x = piece.check_point(x)
    d = piece.distance(piece.basepoint, x)
    if d == 0:
        raise ShapeError("a segment cannot end at the piece basepoint")
    if not isinstance(label, int) or label < 0:
        raise ShapeError("labels must be natural numbers")
    return UPoint(family, (USegment(d, piece_id, x, label),))


def _same_family(f: UPoint, g: UPoint) -> None:
    if f.family != g.family:
        raise FamilyMismatchError("elements belong to different piece families")


def concat(f: UPoint, g: UPoint) -> UPoint:
    _same_family(f, g)
    return UPoint(f.family, f.segments + g.segments)


@dataclass(frozen=True)
class SeparationData:
    """Where two elements stop agreeing, and how.

    s is the total length of the longest shared segment prefix. When both
    elements continue past s in the same piece with the same label, the
    case is SAME_PIECE and u, v mark the far ends of the two straddling
    segments, whose exit points are f_value and g_value. Otherwise the
    case is SPLIT and u = v = s.
    """

    s: Fraction
    u: Fraction
    v: Fraction
    case: str
    piece_id: Optional[int] = None
    label: Optional[int] = None
    f_value: Optional[PiecePoint] = None
    g_value: Optional[PiecePoint] = None


def separation(f: UPoint, g: UPoint) -> SeparationData:
    _same_family(f, g)
    k = 0
    s = Fraction(0)
    limit = min(len(f.segments), len(g.segments))
    while k < limit and f.segments[k] == g.segments[k]:
        s += f.segments[k].length
        k += 1
    if (
        k < len(f.segments)
        and k < len(g.segments)
        and f.segments[k].piece_id == g.segments[k].piece_id
        and f.segments[k].label == g.segments[k].label
    ):
        a, b = f.segments[k], g.segments[k]
        return SeparationData(
            s, s + a.length, s + b.length, SAME_PIECE, a.piece_id, a.label, a.value, b.value
        )
    return SeparationData(s, s, s, SPLIT)


def dist(f: UPoint, g: UPoint) -> Fraction:
    """Exact distance between two elements over the same family."""
    return _dist(f, g, separation(f, g))


def _dist(f: UPoint, g: UPoint, sep: SeparationData) -> Fraction:
    spread = (f.length - sep.s) + (g.length - sep.s)
    if sep.case == SPLIT:
        return spread
    piece = f.family.piece(sep.piece_id)
    gap = piece.distance(sep.f_value, sep.g_value)
    return spread + gap - (sep.u - sep.s) - (sep.v - sep.s)


def leq(f: UPoint, g: UPoint) -> bool:
    """Is f an initial portion of g, segment for segment?"""
    _same_family(f, g)
    return f.segments == g.segments[: len(f.segments)]


def urestrict(f: UPoint, x: Fraction) -> UPoint:
    """Initial portion of f up to total length x.

    A segment straddling x is cut along the chosen geodesic from its
    piece's basepoint to its exit point and keeps its label.
    """
    x = Fraction(x)
    if x < 0 or x > f.length:
        raise OutOfRangeError(f"cut point {x} outside [0, {f.length}]")
    out = []
    start = Fraction(0)
    for seg in f.segments:
        end = start + seg.length
        if end <= x:
            out.append(seg)
        elif start < x:
            piece = f.family.piece(seg.piece_id)
            cut = x - start
            out.append(
                USegment(
                    cut,
                    seg.piece_id,
                    piece.geodesic(piece.basepoint, seg.value, cut),
                    seg.label,
                )
            )
        else:
            break
        start = end
    return UPoint(f.family, tuple(out))


@dataclass(frozen=True)
class ExplicitGeodesic:
    """The canonical distance-realizing path between two elements.

    Evaluation retracts the first endpoint onto the shared portion, then
    crosses the bridging piece when the separation keeps both elements in
    the same piece, and finally rebuilds the second endpoint. Endpoint
    evaluations return the inputs exactly.
    """

    f: UPoint
    g: UPoint
    sep: SeparationData
    length: Fraction

    def at(self, t: Fraction) -> UPoint:
        t = Fraction(t)
        if t < 0 or t > self.length:
            raise OutOfRangeError(f"parameter {t} outside [0, {self.length}]")
        f, g, sep = self.f, self.g, self.sep
        down = f.length - sep.u
        if t <= down:
            return urestrict(f, f.length - t)
        if sep.case == SAME_PIECE:
            piece = f.family.piece(sep.piece_id)
            gap = piece.distance(sep.f_value, sep.g_value)
            if t <= down + gap:
                x = piece.geodesic(sep.f_value, sep.g_value, t - down)
                stem = urestrict(f, sep.s)
                if x == piece.basepoint:
                    return stem
                return concat(stem, single(f.family, sep.piece_id, x, sep.label))
            rise = t - down - gap
        else:
            rise = t - down
        return urestrict(g, sep.v + rise)


def explicit_geodesic(f: UPoint, g: UPoint) -> ExplicitGeodesic:
    sep = separation(f, g)
    return ExplicitGeodesic(f, g, sep, _dist(f, g, sep))


def realize_class(
    w: PGeodesic, labels: Sequence[int], capacity: Optional[int] = None
) -> list[UPoint]:
    """Parallel copies of one step sequence, one element per label.

    The copies share every step but differ in label from the first segment
    on, so they split right at the basepoint: any two lie at distance twice
    the total step length, and the paths from the basepoint to them are
    distinct from the first moment.
    """
    if not w.steps:
        raise AdmissibilityError("cannot realize the empty step sequence")
    if not is_admissible(w):
        raise AdmissibilityError("step sequence runs through tree pieces back to back")
    labels = [int(k) for k in labels]
    if len(set(labels)) != len(labels):
        raise ShapeError("labels must be distinct")
    out = []
    for k in labels:
        if k < 0 or (capacity is not None and k >= capacity):
            raise ShapeError(f"label {k} outside the capacity")
        out.append(
            UPoint(
                w.family,
                tuple(USegment(s.length, s.piece_id, s.value, k) for s in w.steps),
            )
        )
    return out
