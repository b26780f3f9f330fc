"""Step sequences: piecewise records of travel through pieces.

A step sequence tiles [0, L) with consecutive half-open intervals, one per
step. Each step records the piece traversed and an exit point whose
distance from that piece's basepoint equals the step length, so the
sequence reads as a path that enters every piece at its basepoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Optional

from .errors import AdmissibilityError, OutOfRangeError, ShapeError
from .pieces import PieceFamily, PiecePoint


@dataclass(frozen=True)
class PStep:
    length: Fraction
    piece_id: int
    value: PiecePoint


@dataclass(frozen=True)
class PGeodesic:
    family: PieceFamily
    steps: tuple[PStep, ...] = ()

    @property
    def length(self) -> Fraction:
        return sum((s.length for s in self.steps), Fraction(0))

    def boundaries(self) -> tuple[Fraction, ...]:
        """Prefix sums 0 = p_0 < p_1 < ... < p_n = total length."""
        return tuple(accumulate((s.length for s in self.steps), initial=Fraction(0)))

    def check(self) -> None:
        """Raise unless every step satisfies the length/exit-point identity."""
        for i, s in enumerate(self.steps):
            piece = self.family.piece(s.piece_id)
            if not isinstance(s.length, Fraction) or s.length <= 0:
                raise ShapeError(f"step {i}: length must be a positive fraction")
            if piece.distance(piece.basepoint, s.value) != s.length:
                raise ShapeError(
                    f"step {i}: exit point must lie at distance {s.length} "
                    "from the basepoint"
                )


def pgeodesic(family: PieceFamily, steps: Iterable[tuple]) -> PGeodesic:
    """Build and validate a step sequence from (length, piece_id, value) triples."""
    g = PGeodesic(
        family, tuple(PStep(Fraction(l), int(p), v) for l, p, v in steps)
    )
    g.check()
    return g


def reverse(g: PGeodesic) -> PGeodesic:
    """Traverse the steps backwards, recentering each exit point.

    The new exit point of a step is the image of the old entry point (the
    basepoint) under the isometry that moves the old exit point home.
    Reversing twice returns the original sequence.
    """
    out = []
    for s in reversed(g.steps):
        piece = g.family.piece(s.piece_id)
        out.append(PStep(s.length, s.piece_id, piece.recenter(s.value, piece.basepoint)))
    return PGeodesic(g.family, tuple(out))


def restrict_open(g: PGeodesic, x: Fraction, y: Fraction) -> PGeodesic:
    """Steps lying inside [x, y], re-based at zero.

    x and y must be step boundaries; cutting through the interior of a step
    is not defined for this operation.
    """
    x, y = Fraction(x), Fraction(y)
    bounds = g.boundaries()
    if not 0 <= x <= y <= bounds[-1]:
        raise OutOfRangeError(f"window [{x}, {y}] outside [0, {bounds[-1]}]")
    if x not in bounds or y not in bounds:
        raise OutOfRangeError("window ends must be step boundaries")
    return PGeodesic(g.family, g.steps[bounds.index(x) : bounds.index(y)])


def restrict_closed(g: PGeodesic, x: Fraction) -> PGeodesic:
    """Initial part of the sequence up to x, cutting a straddling step.

    The cut step keeps its piece and is shortened along the chosen geodesic
    from the basepoint to its exit point, which preserves the length/exit
    identity exactly.
    """
    x = Fraction(x)
    if x < 0 or x > g.length:
        raise OutOfRangeError(f"cut point {x} outside [0, {g.length}]")
    out = []
    start = Fraction(0)
    for s in g.steps:
        end = start + s.length
        if end <= x:
            out.append(s)
        elif start < x:
            piece = g.family.piece(s.piece_id)
            cut = x - start
            out.append(
                PStep(cut, s.piece_id, piece.geodesic(piece.basepoint, s.value, cut))
            )
        else:
            break
        start = end
    return PGeodesic(g.family, tuple(out))


def _closed_steps(g: PGeodesic, x: Fraction) -> list[tuple]:
    out = []
    start = Fraction(0)
    for s in g.steps:
        end = start + s.length
        if end > x:
            break
        out.append((start, end, s.piece_id, s.value))
        start = end
    return out


def _straddling(g: PGeodesic, x: Fraction) -> Optional[PStep]:
    start = Fraction(0)
    for s in g.steps:
        end = start + s.length
        if start < x < end:
            return s
        start = end
    return None


def same_pattern_until(g1: PGeodesic, g2: PGeodesic, x: Fraction) -> bool:
    """Do the two sequences agree as patterns over [0, x]?

    Agreement means the steps finishing by x coincide (boundaries, pieces,
    exit points), and if a step of g1 starts strictly before x and ends
    strictly after it, then some step of g2 does too, in the same piece.
    """
    x = Fraction(x)
    if x <= 0:
        raise OutOfRangeError("the pattern window must have positive length")
    if _closed_steps(g1, x) != _closed_steps(g2, x):
        return False
    strad1 = _straddling(g1, x)
    if strad1 is not None:
        strad2 = _straddling(g2, x)
        if strad2 is None or strad2.piece_id != strad1.piece_id:
            return False
    return True


def same_initial_pattern(g1: PGeodesic, g2: PGeodesic) -> bool:
    """Is there a positive window over which the two sequences share a pattern?

    For finite tilings the answer only depends on the first steps: any
    window shorter than both first steps contains no finished step, so the
    conditions reduce to the first steps running through the same piece.
    """
    if not g1.steps or not g2.steps:
        raise AdmissibilityError("initial patterns need non-empty sequences")
    witness = min(g1.steps[0].length, g2.steps[0].length) / 2
    return same_pattern_until(g1, g2, witness)


def is_admissible(g: PGeodesic, tree_piece_ids: Optional[frozenset[int]] = None) -> bool:
    """No two consecutive steps both run through a designated tree piece."""
    ids = g.family.tree_piece_ids if tree_piece_ids is None else frozenset(tree_piece_ids)
    return all(
        a.piece_id not in ids or b.piece_id not in ids
        for a, b in zip(g.steps, g.steps[1:])
    )
