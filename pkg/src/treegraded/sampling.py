"""Seeded generators for exact test data.

Everything is driven through one random.Random instance, so a sample
stream is reproducible from the seed alone. Values stay small (numerators
and denominators of a few bits) to keep exact arithmetic legible in
reports and witnesses.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .pieces import TREE, Piece, PieceFamily, PiecePoint, reduce_word
from .pgeodesic import PGeodesic, PStep, is_admissible
from .universal import UPoint, basepoint, concat, single

PAIR_MODES = ("any", "same_piece", "split", "prefix")
TRIPLE_MODES = ("any", "nested", "disjoint_same", "disjoint_split")


class Sampler:
    """Random elements, pairs, and triples over one piece family."""

    def __init__(
        self,
        family: PieceFamily,
        capacity: Optional[int] = None,
        seed: int = 0,
        max_segments: int = 3,
    ) -> None:
        self.family = family
        self.capacity = capacity
        self.rng = random.Random(seed)
        self.max_segments = max_segments

    @property
    def label_bound(self) -> int:
        return self.capacity if self.capacity is not None else 6

    def rational(self, max_num: int = 8, max_den: int = 4) -> Fraction:
        return Fraction(self.rng.randint(1, max_num), self.rng.randint(1, max_den))

    def signed_rational(self, max_num: int = 8, max_den: int = 4) -> Fraction:
        return self.rational(max_num, max_den) * self.rng.choice((-1, 1))

    def parameter(self, lo: Fraction, hi: Fraction) -> Fraction:
        """A rational drawn from [lo, hi], endpoints included."""
        den = self.rng.randint(1, 16)
        num = self.rng.randint(0, den)
        return lo + (hi - lo) * Fraction(num, den)

    def label(self) -> int:
        return self.rng.randrange(self.label_bound)

    def piece(self) -> Piece:
        return self.rng.choice(self.family.pieces)

    def point(self, piece: Piece, nonzero: bool = True) -> PiecePoint:
        if piece.kind == TREE:
            while True:
                letters = [
                    (self.rng.choice((-3, -2, -1, 1, 2, 3)), self.rational())
                    for _ in range(self.rng.randint(1, 3))
                ]
                p = reduce_word(letters)
                if p or not nonzero:
                    return p
        while True:
            p = tuple(
                self.rng.choice((Fraction(0), self.signed_rational()))
                for _ in range(piece.dim)
            )
            if any(p) or not nonzero:
                return p

    def piece_points(self, piece_id: int, count: int) -> list[PiecePoint]:
        piece = self.family.piece(piece_id)
        return [self.point(piece) for _ in range(count)]

    def different_point(self, piece: Piece, x: PiecePoint) -> PiecePoint:
        for _ in range(8):
            y = self.point(piece)
            if y != x:
                return y
        if piece.kind == TREE:
            branch = max((abs(b) for b, _ in x), default=0) + 1
            return reduce_word(tuple(x) + ((branch, Fraction(1)),))
        return (x[0] + 1,) + tuple(x[1:])

    def segment_single(self) -> UPoint:
        piece = self.piece()
        return single(self.family, piece.id, self.point(piece), self.label())

    def upoint(self, n_segments: Optional[int] = None) -> UPoint:
        n = self.rng.randint(0, self.max_segments) if n_segments is None else n_segments
        out = basepoint(self.family)
        for _ in range(n):
            out = concat(out, self.segment_single())
        return out

    def nonempty_upoint(self) -> UPoint:
        return self.upoint(self.rng.randint(1, self.max_segments))

    def pgeodesic(
        self, n_steps: Optional[int] = None, admissible: bool = False
    ) -> PGeodesic:
        n = self.rng.randint(1, self.max_segments) if n_steps is None else n_steps
        while True:
            steps = []
            for _ in range(n):
                piece = self.piece()
                x = self.point(piece)
                steps.append(PStep(piece.distance(piece.basepoint, x), piece.id, x))
            g = PGeodesic(self.family, tuple(steps))
            if not admissible or is_admissible(g):
                return g

    def _heads(self, count: int) -> list[UPoint]:
        """One-segment elements that pairwise differ in some field."""
        same_piece = self.rng.random() < 0.5
        piece = self.piece()
        lab = self.label()
        used: list = []
        out = []
        for _ in range(count):
            if same_piece:
                x = self.point(piece)
                while x in used:
                    x = self.different_point(piece, x)
                used.append(x)
                out.append(single(self.family, piece.id, x, lab))
            else:
                while True:
                    p = self.piece()
                    k = self.label()
                    x = self.point(p)
                    if (p.id, k, x) not in used:
                        break
                used.append((p.id, k, x))
                out.append(single(self.family, p.id, x, k))
        return out

    def _fork(self, prefix: UPoint, count: int) -> list[UPoint]:
        """Elements sharing the prefix whose next segments pairwise differ."""
        return [
            concat(concat(prefix, head), self.upoint(self.rng.randint(0, 1)))
            for head in self._heads(count)
        ]

    def upoint_pair(self, mode: str = "any") -> tuple[UPoint, UPoint]:
        if mode == "any":
            return self.upoint(), self.upoint()
        prefix = self.upoint(self.rng.randint(0, 2))
        if mode == "prefix":
            return prefix, concat(prefix, self.upoint(self.rng.randint(1, 2)))
        piece = self.piece()
        lab = self.label()
        x = self.point(piece)
        f = concat(
            concat(prefix, single(self.family, piece.id, x, lab)),
            self.upoint(self.rng.randint(0, 1)),
        )
        if mode == "same_piece":
            y = self.different_point(piece, x)
            head = single(self.family, piece.id, y, lab)
        else:
            other = self.piece()
            if other.id != piece.id:
                head = single(self.family, other.id, self.point(other), self.label())
            elif self.label_bound > 1:
                head = single(
                    self.family, piece.id, self.point(piece), (lab + 1) % self.label_bound
                )
            else:
                return f, prefix
        return f, concat(concat(prefix, head), self.upoint(self.rng.randint(0, 1)))

    def upoint_triple(self, mode: str = "any") -> tuple[UPoint, UPoint, UPoint]:
        if mode == "any":
            return self.upoint(), self.upoint(), self.upoint()
        if mode == "nested":
            stem = self.upoint(self.rng.randint(0, 1))
            mid = self.segment_single()
            f, g = self._fork(concat(stem, mid), 2)
            seg = mid.segments[0]
            piece = self.family.piece(seg.piece_id)
            head = single(
                self.family, piece.id, self.different_point(piece, seg.value), seg.label
            )
            h = concat(concat(stem, head), self.upoint(self.rng.randint(0, 1)))
            return f, g, h
        prefix = self.upoint(self.rng.randint(0, 2))
        if mode == "disjoint_same":
            piece = self.piece()
            lab = self.label()
            xs: list[PiecePoint] = []
            while len(xs) < 3:
                x = self.point(piece)
                while x in xs:
                    x = self.different_point(piece, x)
                xs.append(x)
            heads = [single(self.family, piece.id, x, lab) for x in xs]
        else:
            piece = self.piece()
            pool = list(range(self.label_bound))
            self.rng.shuffle(pool)
            labs = (pool * 3)[:3]
            heads = [
                single(self.family, piece.id, self.point(piece), k) for k in labs
            ]
        f, g, h = (
            concat(concat(prefix, head), self.upoint(self.rng.randint(0, 1)))
            for head in heads
        )
        return f, g, h

    def piece_ref(self):
        from .structure import PieceRef

        return PieceRef(
            self.upoint(self.rng.randint(0, 2)), self.piece().id, self.label()
        )

    def piece_ref_pair(self):
        """Two distinct piece references, mixing shared and unrelated bases."""
        from .structure import PieceRef, embed

        p = self.piece_ref()
        style = self.rng.randrange(3)
        if style == 0:
            slots = [
                (pc.id, lab)
                for pc in self.family.pieces
                for lab in range(self.label_bound)
                if (pc.id, lab) != (p.piece_id, p.label)
            ]
            if slots:
                pid, lab = self.rng.choice(slots)
                return p, PieceRef(p.base, pid, lab)
            style = 1
        if style == 1:
            q_base = embed(p, self.point(self.family.piece(p.piece_id)))
            return p, PieceRef(q_base, self.piece().id, self.label())
        q = self.piece_ref()
        while (q.base, q.piece_id, q.label) == (p.base, p.piece_id, p.label):
            q = self.piece_ref()
        return p, q

    def upoint_near(self, ref) -> UPoint:
        """An element biased to interact with the referenced piece."""
        from .structure import embed

        style = self.rng.randrange(4)
        if style == 0:
            return self.upoint()
        anchor = embed(ref, self.point(self.family.piece(ref.piece_id)))
        if style == 1:
            return anchor
        return concat(anchor, self.upoint(self.rng.randint(1, 2)))

    def distinct_projection_pair(self, ref) -> tuple[UPoint, UPoint]:
        """Two elements guaranteed to project to different points of the piece."""
        from .structure import embed

        piece = self.family.piece(ref.piece_id)
        x = self.point(piece)
        y = self.different_point(piece, x)
        r1 = concat(embed(ref, x), self.upoint(self.rng.randint(0, 2)))
        r2 = concat(embed(ref, y), self.upoint(self.rng.randint(0, 2)))
        return r1, r2
