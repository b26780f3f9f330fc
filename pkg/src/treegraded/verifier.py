"""Exhaustive verification of the gluing axioms on finite metric graphs.

Vertices stand for points, positive rational edge weights for distances,
and a cover of vertex subsets for the candidate pieces. All shortest paths
are enumerated exactly (with a cap against geodesic-rich graphs), so every
check below is a complete decision for the given instance, not a sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from .errors import CapExceededError, ShapeError

DEFAULT_CAP = 10_000


@dataclass(frozen=True)
class MetricGraph:
    """Connected undirected graph with positive rational edge weights."""

    n: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ShapeError("graphs need at least one vertex")
        seen = set()
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ShapeError(f"edge ({u}, {v}) leaves the vertex range")
            if u == v:
                raise ShapeError("self-loops are not allowed")
            if not isinstance(w, Fraction) or w <= 0:
                raise ShapeError("edge weights must be positive fractions")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ShapeError(f"duplicate edge {key}")
            seen.add(key)
        if any(d is None for row in self.dist for d in row):
            raise ShapeError("graph must be connected")

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
        table: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            table[u].append((v, w))
            table[v].append((u, w))
        return tuple(tuple(sorted(row)) for row in table)

    @cached_property
    def dist(self) -> tuple[tuple[Fraction | None, ...], ...]:
        """All-pairs shortest distances, exact; None marks disconnection."""
        d: list[list[Fraction | None]] = [
            [None] * self.n for _ in range(self.n)
        ]
        for i in range(self.n):
            d[i][i] = Fraction(0)
        for u, v, w in self.edges:
            if d[u][v] is None or w < d[u][v]:
                d[u][v] = d[v][u] = w
        for k in range(self.n):
            for i in range(self.n):
                dik = d[i][k]
                if dik is None:
                    continue
                for j in range(self.n):
                    dkj = d[k][j]
                    if dkj is None:
                        continue
                    if d[i][j] is None or dik + dkj < d[i][j]:
                        d[i][j] = dik + dkj
        return tuple(tuple(row) for row in d)


@dataclass(frozen=True)
class PieceCover:
    """Candidate pieces: nonempty vertex subsets that jointly cover the graph."""

    pieces: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if any(not p for p in self.pieces):
            raise ShapeError("pieces must be nonempty")

    def check_covers(self, graph: MetricGraph) -> None:
        covered = frozenset().union(*self.pieces) if self.pieces else frozenset()
        if covered != frozenset(range(graph.n)):
            raise ShapeError("pieces must cover every vertex")


def all_geodesics(
    graph: MetricGraph, u: int, v: int, cap: int = DEFAULT_CAP
) -> list[tuple[int, ...]]:
    """Every shortest path from u to v as a vertex tuple, in sorted order.

    Walks only edges that stay on some shortest path. Raises when the count
    exceeds the cap rather than returning a truncated list.
    """
    d = graph.dist
    total = d[u][v]
    out: list[tuple[int, ...]] = []

    def grow(path: list[int]) -> None:
        a = path[-1]
        if a == v:
            if len(out) >= cap:
                raise CapExceededError(
                    f"more than {cap} geodesics between {u} and {v}"
                )
            out.append(tuple(path))
            return
        for b, w in graph.adjacency[a]:
            if d[u][a] + w == d[u][b] and d[u][b] + d[b][v] == total:
                path.append(b)
                grow(path)
                path.pop()

    grow([u])
    return sorted(out)


def _violation(axiom: str, **witness) -> dict:
    return {"axiom": axiom, "witness": witness}


def check_T1(graph: MetricGraph, cover: PieceCover) -> list[dict]:
    """Two distinct pieces may share at most one vertex."""
    out = []
    for (i, p), (j, q) in combinations(enumerate(cover.pieces), 2):
        shared = sorted(p & q)
        if len(shared) > 1:
            out.append(_violation("T1", pieces=[i, j], shared=shared))
    return out


def check_convexity(
    graph: MetricGraph, cover: PieceCover, cap: int = DEFAULT_CAP
) -> list[dict]:
    """Every geodesic between two vertices of a piece stays inside the piece."""
    out = []
    for i, piece in enumerate(cover.pieces):
        for u, v in combinations(sorted(piece), 2):
            for path in all_geodesics(graph, u, v, cap):
                stray = [x for x in path if x not in piece]
                if stray:
                    out.append(
                        _violation(
                            "geodesic-subset", piece=i, path=list(path), outside=stray
                        )
                    )
    return out


def _nearest(graph: MetricGraph, piece: frozenset[int], z: int) -> list[int]:
    best = min(graph.dist[z][p] for p in piece)
    return sorted(p for p in piece if graph.dist[z][p] == best)


def check_projection_system(
    graph: MetricGraph, cover: PieceCover, include_p3: bool = True
) -> list[dict]:
    """Nearest-point projections are single points satisfying the gate identity.

    For every piece, each vertex must have a unique nearest vertex in the
    piece (members project to themselves), and whenever two vertices
    project to distinct points, the distance between them must split into
    the three legs through their projections. With include_p3, projections
    of one whole piece onto another must also be a single vertex.
    """
    out = []
    d = graph.dist
    projections: list[list[int | None]] = []
    for i, piece in enumerate(cover.pieces):
        proj: list[int | None] = []
        for z in range(graph.n):
            near = _nearest(graph, piece, z)
            if len(near) > 1:
                out.append(_violation("unique-projection", piece=i, vertex=z, nearest=near))
                proj.append(None)
                continue
            proj.append(near[0])
            if z in piece and near[0] != z:
                out.append(_violation("P'1", piece=i, vertex=z, nearest=near))
        projections.append(proj)
        for z1, z2 in combinations(range(graph.n), 2):
            p1, p2 = proj[z1], proj[z2]
            if p1 is None or p2 is None or p1 == p2:
                continue
            through = d[z1][p1] + d[p1][p2] + d[p2][z2]
            if d[z1][z2] != through:
                out.append(
                    _violation(
                        "P'2",
                        piece=i,
                        z1=z1,
                        z2=z2,
                        projections=[p1, p2],
                        lhs=str(d[z1][z2]),
                        rhs=str(through),
                    )
                )
    if include_p3:
        for (i, p), (j, q) in combinations(enumerate(cover.pieces), 2):
            for a, b in ((i, q), (j, p)):
                images = {projections[a][z] for z in sorted(b)}
                if None in images:
                    continue
                if len(images) > 1:
                    out.append(
                        _violation(
                            "P3", piece=a, source=sorted(b), images=sorted(images)
                        )
                    )
    return out


def _is_transverse(path: tuple[int, ...], cover: PieceCover) -> bool:
    vertices = set(path)
    return all(len(vertices & piece) <= 1 for piece in cover.pieces)


def _meeting_point(side_a: tuple[int, ...], side_b: tuple[int, ...]) -> int:
    """Last shared vertex of the common prefix of two paths from one corner."""
    m = side_a[0]
    for x, y in zip(side_a, side_b):
        if x != y:
            break
        m = x
    return m


def _is_tripod(
    ab: tuple[int, ...], bc: tuple[int, ...], ca: tuple[int, ...]
) -> bool:
    """Do the three sides pairwise share prefixes meeting in one vertex?

    From each corner the two incident sides must run together up to a
    common center; shortest paths cannot re-cross afterwards, so equality
    of the three centers characterizes the tripod shape.
    """
    m_a = _meeting_point(ab, tuple(reversed(ca)))
    m_b = _meeting_point(tuple(reversed(ab)), bc)
    m_c = _meeting_point(tuple(reversed(bc)), ca)
    return m_a == m_b == m_c


def check_transverse_free(
    graph: MetricGraph, cover: PieceCover, cap: int = DEFAULT_CAP
) -> list[dict]:
    """Triangles whose sides all meet every piece in at most one vertex
    must be tripods."""
    out = []
    for a, b, c in combinations(range(graph.n), 3):
        sides = []
        for u, v in ((a, b), (b, c), (c, a)):
            sides.append(
                [p for p in all_geodesics(graph, u, v, cap) if _is_transverse(p, cover)]
            )
        if not all(sides):
            continue
        count = 0
        for ab, bc, ca in product(*sides):
            count += 1
            if count > cap:
                raise CapExceededError(
                    f"more than {cap} transverse triangles on {(a, b, c)}"
                )
            if not _is_tripod(ab, bc, ca):
                out.append(
                    _violation(
                        "transverse-free",
                        triple=[a, b, c],
                        sides=[list(ab), list(bc), list(ca)],
                    )
                )
    return out


def check_unique_transverse_geodesic(
    graph: MetricGraph, cover: PieceCover, cap: int = DEFAULT_CAP
) -> list[dict]:
    """A pair joined by some transverse geodesic is joined by no other geodesic."""
    out = []
    for u, v in combinations(range(graph.n), 2):
        paths = all_geodesics(graph, u, v, cap)
        if len(paths) > 1 and any(_is_transverse(p, cover) for p in paths):
            out.append(
                _violation(
                    "unique-transverse",
                    pair=[u, v],
                    paths=[list(p) for p in paths[:2]],
                )
            )
    return out


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    violations: tuple[dict, ...]

    def to_json(self) -> dict:
        return {"accepted": self.accepted, "violations": list(self.violations)}


def verify(graph: MetricGraph, cover: PieceCover, cap: int = DEFAULT_CAP) -> Verdict:
    """Decide whether the cover makes the graph tree-graded.

    Conjunction of: pieces pairwise share at most one vertex, pieces are
    geodesic subsets (checked as convexity), nearest-point projections form
    a projection system with the gate identity, and every fully transverse
    geodesic triangle is a tripod.
    """
    cover.check_covers(graph)
    violations = (
        check_T1(graph, cover)
        + check_convexity(graph, cover, cap)
        + check_projection_system(graph, cover, include_p3=False)
        + check_transverse_free(graph, cover, cap)
    )
    return Verdict(not violations, tuple(violations))
