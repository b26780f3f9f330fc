"""Exact-arithmetic piece spaces.

A piece is a pointed geodesic metric space over the rationals. Three kinds
are provided: the rational line, finite-dimensional rational space with the
taxicab metric, and a homogeneous tree whose points are reduced words of
(branch, length) letters. Every operation is exact; no floating point is
involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import OutOfRangeError, ShapeError

Scalar = Fraction

LINE = "line"
L1 = "l1"
TREE = "tree"

KINDS = (LINE, L1, TREE)

CoordPoint = tuple[Fraction, ...]
Letter = tuple[int, Fraction]
TreeWord = tuple[Letter, ...]
PiecePoint = Union[CoordPoint, TreeWord]


def coords(*values: int | str | Fraction) -> CoordPoint:
    """Build a coordinate point from ints, strings, or fractions."""
    return tuple(Fraction(v) for v in values)


def word(*letters: tuple[int, int | str | Fraction]) -> TreeWord:
    """Build a reduced tree word from (branch, length) pairs."""
    return reduce_word((int(b), Fraction(l)) for b, l in letters)


def reduce_word(letters: Iterable[Letter]) -> TreeWord:
    """Reduce a letter sequence to canonical form.

    Adjacent letters on the same branch merge; letters on opposite branches
    (ids a and -a) cancel as far as their lengths overlap. The result does
    not depend on the order in which overlapping reductions are applied, so
    it can serve as a normal form for tree points.
    """
    out: list[Letter] = []
    for branch, length in letters:
        if branch == 0:
            raise ShapeError("branch ids must be nonzero")
        if length < 0:
            raise ShapeError("letter lengths must be nonnegative")
        while length > 0 and out:
            top_branch, top_length = out[-1]
            if top_branch == branch:
                out[-1] = (branch, top_length + length)
                length = Fraction(0)
            elif top_branch == -branch:
                if top_length > length:
                    out[-1] = (top_branch, top_length - length)
                    length = Fraction(0)
                else:
                    out.pop()
                    length = length - top_length
            else:
                break
        if length > 0:
            out.append((branch, length))
    return tuple(out)


def invert_word(w: TreeWord) -> TreeWord:
    return tuple((-b, l) for b, l in reversed(w))


def word_length(w: TreeWord) -> Fraction:
    return sum((l for _, l in w), Fraction(0))


def word_prefix(w: TreeWord, t: Fraction) -> TreeWord:
    """Initial subword of w with total length exactly t."""
    total = word_length(w)
    if t < 0 or t > total:
        raise OutOfRangeError(f"prefix length {t} outside [0, {total}]")
    out: list[Letter] = []
    left = t
    for branch, length in w:
        if left == 0:
            break
        take = min(length, left)
        out.append((branch, take))
        left -= take
    return tuple(out)


def _is_word(p: PiecePoint) -> bool:
    return bool(p) and isinstance(p[0], tuple)


@dataclass(frozen=True)
class Piece:
    """One pointed geodesic space in a family.

    The basepoint is the origin: zero coordinates for the line and taxicab
    kinds, the empty word for trees. `dim` is only meaningful for the
    taxicab kind; lines always have dimension 1.
    """

    id: int
    kind: str
    dim: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ShapeError(f"unknown piece kind {self.kind!r}")
        if self.kind in (LINE, TREE) and self.dim != 1:
            raise ShapeError(f"{self.kind} pieces have dimension 1")
        if self.kind == L1 and self.dim < 1:
            raise ShapeError("taxicab pieces need dimension >= 1")

    @property
    def basepoint(self) -> PiecePoint:
        if self.kind == TREE:
            return ()
        return (Fraction(0),) * self.dim

    def check_point(self, p: PiecePoint) -> PiecePoint:
        """Validate shape and canonical form; returns the point unchanged."""
        if not isinstance(p, tuple):
            raise ShapeError(f"points are tuples, got {type(p).__name__}")
        if self.kind == TREE:
            for letter in p:
                if not (isinstance(letter, tuple) and len(letter) == 2):
                    raise ShapeError("tree points are tuples of (branch, length) pairs")
                branch, length = letter
                if not isinstance(branch, int) or branch == 0:
                    raise ShapeError("branch ids must be nonzero integers")
                if not isinstance(length, Fraction) or length <= 0:
                    raise ShapeError("letter lengths must be positive fractions")
            for (b1, _), (b2, _) in zip(p, p[1:]):
                if abs(b1) == abs(b2):
                    raise ShapeError("tree words must be reduced")
            return p
        if len(p) != self.dim:
            raise ShapeError(f"expected {self.dim} coordinates, got {len(p)}")
        for x in p:
            if not isinstance(x, Fraction):
                raise ShapeError("coordinates must be fractions")
        return p

    def distance(self, a: PiecePoint, b: PiecePoint) -> Fraction:
        a = self.check_point(a)
        b = self.check_point(b)
        if self.kind == TREE:
            return word_length(reduce_word(invert_word(a) + b))
        return sum((abs(x - y) for x, y in zip(a, b)), Fraction(0))

    def geodesic(self, a: PiecePoint, b: PiecePoint, t: Fraction) -> PiecePoint:
        """Point at arc length t on the chosen geodesic from a to b.

        Coordinates interpolate linearly; tree words walk the reduced
        connecting word. Both choices are deterministic, so repeated calls
        agree bit for bit.
        """
        t = Fraction(t)
        total = self.distance(a, b)
        if t < 0 or t > total:
            raise OutOfRangeError(f"arc length {t} outside [0, {total}]")
        if self.kind == TREE:
            path = reduce_word(invert_word(a) + b)
            return reduce_word(a + word_prefix(path, t))
        if total == 0:
            return a
        return tuple(x + (y - x) * t / total for x, y in zip(a, b))

    def recenter(self, x: PiecePoint, y: PiecePoint) -> PiecePoint:
        """Image of y under the chosen isometry taking x to the basepoint.

        Coordinates translate; tree words multiply by the inverse word on
        the left. Recentering x at x always yields the basepoint.
        """
        x = self.check_point(x)
        y = self.check_point(y)
        if self.kind == TREE:
            return reduce_word(invert_word(x) + y)
        return tuple(v - u for u, v in zip(x, y))


@dataclass(frozen=True)
class PieceFamily:
    """The indexed collection of pieces a space is glued from."""

    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ShapeError("a family needs at least one piece")
        ids = [p.id for p in self.pieces]
        if len(set(ids)) != len(ids):
            raise ShapeError("piece ids must be unique")

    def piece(self, piece_id: int) -> Piece:
        for p in self.pieces:
            if p.id == piece_id:
                return p
        raise ShapeError(f"no piece with id {piece_id}")

    @property
    def tree_piece_ids(self) -> frozenset[int]:
        return frozenset(p.id for p in self.pieces if p.kind == TREE)


def make_family(*specs: str | tuple[str, int]) -> PieceFamily:
    """Family from kind names in id order, e.g. make_family("tree", "line", ("l1", 2))."""
    pieces = []
    for i, spec in enumerate(specs):
        if isinstance(spec, str):
            kind, dim = spec, 1
        else:
            kind, dim = spec
        pieces.append(Piece(i, kind, dim))
    return PieceFamily(tuple(pieces))


IDENTITY = "identity"
SCALE = "scale"
COORD_SCALE = "coordscale"

MAP_KINDS = (IDENTITY, SCALE, COORD_SCALE)


@dataclass(frozen=True)
class BilipschitzMap:
    """A distance-distorting map between two pieces of the same kind.

    `factors` holds the scale factor (one entry for `scale`, one per axis
    for `coordscale`, none for `identity`). The map fixes basepoints, and
    its distortion constant is the worst factor or inverse factor.
    """

    source: int
    target: int
    kind: str = IDENTITY
    factors: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in MAP_KINDS:
            raise ShapeError(f"unknown map kind {self.kind!r}")
        if self.kind == IDENTITY and self.factors:
            raise ShapeError("identity maps take no factors")
        if self.kind == SCALE and len(self.factors) != 1:
            raise ShapeError("scale maps take exactly one factor")
        if self.kind == COORD_SCALE and not self.factors:
            raise ShapeError("per-axis maps need at least one factor")
        if any(not isinstance(f, Fraction) or f <= 0 for f in self.factors):
            raise ShapeError("scale factors must be positive fractions")

    @property
    def constant(self) -> Fraction:
        k = Fraction(1)
        for f in self.factors:
            k = max(k, f, 1 / f)
        return k

    def apply(self, point: PiecePoint) -> PiecePoint:
        if self.kind == IDENTITY:
            return point
        if self.kind == SCALE:
            f = self.factors[0]
            if _is_word(point):
                return tuple((b, l * f) for b, l in point)
            return tuple(x * f for x in point)
        if _is_word(point):
            raise ShapeError("per-axis scaling only applies to coordinate points")
        if len(point) != len(self.factors):
            raise ShapeError(f"expected {len(self.factors)} coordinates, got {len(point)}")
        return tuple(x * f for x, f in zip(point, self.factors))
