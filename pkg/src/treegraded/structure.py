"""Pieces of the glued space as first-class objects.

Each (base element, piece id, label) triple names an isometric copy of a
piece sitting directly above the base: its points are the base itself and
every one-segment extension of the base through that piece under that
label. Membership, charts, the closest-point projection, and sampled
verification of the projection identities live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ShapeError
from .pieces import PieceFamily, PiecePoint
from .universal import (
    SAME_PIECE,
    UPoint,
    concat,
    dist,
    explicit_geodesic,
    leq,
    single,
    urestrict,
)


@dataclass(frozen=True)
class PieceRef:
    base: UPoint
    piece_id: int
    label: int


def member(g: UPoint, ref: PieceRef) -> bool:
    """Does g lie on the referenced copy of the piece?"""
    if g == ref.base:
        return True
    if not leq(ref.base, g):
        return False
    extra = g.segments[len(ref.base.segments) :]
    return (
        len(extra) == 1
        and extra[0].piece_id == ref.piece_id
        and extra[0].label == ref.label
    )


def embed(ref: PieceRef, x: PiecePoint) -> UPoint:
    """Chart from the piece into the space; the basepoint goes to the base."""
    piece = ref.base.family.piece(ref.piece_id)
    x = piece.check_point(x)
    if x == piece.basepoint:
        return ref.base
    return concat(ref.base, single(ref.base.family, ref.piece_id, x, ref.label))


def coords(ref: PieceRef, g: UPoint) -> PiecePoint:
    """Inverse chart; g must be a member of the referenced piece."""
    if not member(g, ref):
        raise ShapeError("element is not on the referenced piece")
    if g == ref.base:
        return ref.base.family.piece(ref.piece_id).basepoint
    return g.segments[-1].value


def project(r: UPoint, ref: PieceRef) -> UPoint:
    """Closest-point projection onto the referenced piece.

    Members stay fixed. A non-member that extends the base through a
    segment matching the reference retracts to the far end of that
    segment; every other element lands on the base.
    """
    if member(r, ref):
        return r
    base = ref.base
    k = len(base.segments)
    if len(r.segments) > k and leq(base, r):
        nxt = r.segments[k]
        if nxt.piece_id == ref.piece_id and nxt.label == ref.label:
            return urestrict(r, base.length + nxt.length)
    return base


def _membership_breakpoints(geo) -> list[Fraction]:
    """Parameters along the path from r to the base where membership can change.

    These are the segment boundaries of both endpoints plus the bridging
    phase transitions (including a crossing of the bridging piece's
    basepoint, where the evaluated element degenerates to the shared stem).
    """
    sep = geo.sep
    f, g = geo.f, geo.g
    down = f.length - sep.u
    cands = {Fraction(0), geo.length, down}
    for b in f.boundaries():
        t = f.length - b
        if 0 <= t <= down:
            cands.add(t)
    gap = Fraction(0)
    if sep.case == SAME_PIECE:
        piece = f.family.piece(sep.piece_id)
        gap = piece.distance(sep.f_value, sep.g_value)
        cands.add(down + gap)
        to_origin = piece.distance(sep.f_value, piece.basepoint)
        if to_origin + piece.distance(piece.basepoint, sep.g_value) == gap:
            cands.add(down + to_origin)
    for b in g.boundaries():
        if b >= sep.v:
            t = down + gap + (b - sep.v)
            if 0 <= t <= geo.length:
                cands.add(t)
    return sorted(cands)


def scan_projection(r: UPoint, ref: PieceRef) -> UPoint:
    """First member of the piece along the explicit path from r to the base.

    Membership along the path switches only at the breakpoint parameters,
    and holds on a closed final stretch, so scanning breakpoints in order
    finds the entry point exactly. Serves as an independent cross-check of
    project(), which computes the same element in closed form.
    """
    geo = explicit_geodesic(r, ref.base)
    for t in _membership_breakpoints(geo):
        p = geo.at(t)
        if member(p, ref):
            return p
    raise AssertionError("unreachable: the base itself is always a member")


def _piece_intersection(p: PieceRef, q: PieceRef) -> list[UPoint]:
    """Common members of two distinct piece references, by case analysis.

    Two copies can only meet where one base extends the other by exactly
    the matching segment; the result has at most one element.
    """
    if p.base == q.base:
        if (p.piece_id, p.label) == (q.piece_id, q.label):
            raise ShapeError("piece references must be distinct")
        return [p.base]
    for outer, inner in ((p, q), (q, p)):
        if leq(outer.base, inner.base):
            if member(inner.base, outer):
                return [inner.base]
            return []
    return []


def check_axioms(
    family: PieceFamily,
    sampler=None,
    n_samples: int = 500,
    seed: int = 0,
    capacity: Optional[int] = None,
) -> dict:
    """Sampled exact verification of the projection identities.

    Covers: projections are idempotent onto the piece (P'1); the distance
    between two points with distinct projections splits into the three legs
    through them (P'2), and the explicit path between the points passes
    through both projections at the predicted parameters; one piece
    projects onto another in a single point (P3); two distinct piece
    references share at most one element (T1); and the closed-form
    projection agrees with the path-scan oracle on every sampled pair.
    """
    from .sampling import Sampler

    smp = sampler or Sampler(family, capacity=capacity, seed=seed)
    from .jsonio import upoint_to_json

    def witness(**kw):
        return {
            k: upoint_to_json(v) if isinstance(v, UPoint) else v for k, v in kw.items()
        }

    p1_bad: list[dict] = []
    scan_bad: list[dict] = []
    for _ in range(n_samples):
        ref = smp.piece_ref()
        r = smp.upoint_near(ref)
        p = project(r, ref)
        if not member(p, ref) or project(p, ref) != p:
            p1_bad.append(witness(point=r, projection=p))
        if scan_projection(r, ref) != p:
            scan_bad.append(witness(point=r, projection=p))

    p2_bad: list[dict] = []
    claim_bad: list[dict] = []
    made = 0
    while made < n_samples:
        ref = smp.piece_ref()
        if made % 2 == 0:
            r1, r2 = smp.distinct_projection_pair(ref)
        else:
            r1, r2 = smp.upoint_near(ref), smp.upoint_near(ref)
        pr1, pr2 = project(r1, ref), project(r2, ref)
        if pr1 == pr2:
            continue
        made += 1
        through = dist(r1, pr1) + dist(pr1, pr2) + dist(pr2, r2)
        if dist(r1, r2) != through:
            p2_bad.append(witness(z1=r1, z2=r2, p1=pr1, p2=pr2))
            continue
        geo = explicit_geodesic(r1, r2)
        t1 = dist(r1, pr1)
        if geo.at(t1) != pr1 or geo.at(t1 + dist(pr1, pr2)) != pr2:
            claim_bad.append(witness(z1=r1, z2=r2, p1=pr1, p2=pr2))

    n_pairs = max(1, n_samples // 5)
    p3_bad: list[dict] = []
    t1_bad: list[dict] = []
    for _ in range(n_pairs):
        p, q = smp.piece_ref_pair()
        targets = {project(q.base, p)}
        for x in smp.piece_points(q.piece_id, 5):
            targets.add(project(embed(q, x), p))
        if len(targets) != 1:
            shots = sorted((upoint_to_json(t) for t in targets), key=repr)
            p3_bad.append({"base": upoint_to_json(p.base), "projections": shots})
        common = _piece_intersection(p, q)
        if len(common) > 1:
            t1_bad.append(witness(base_p=p.base, base_q=q.base))
        for c in common:
            if not (member(c, p) and member(c, q)):
                t1_bad.append(witness(candidate=c))
        for x in smp.piece_points(q.piece_id, 3):
            m = embed(q, x)
            if member(m, p) and m not in common:
                t1_bad.append(witness(unexpected=m))

    checks = [
        {"axiom": "P'1", "samples": n_samples, "violations": p1_bad},
        {"axiom": "P'2", "samples": n_samples, "violations": p2_bad},
        {"axiom": "claim", "samples": n_samples, "violations": claim_bad},
        {"axiom": "P3", "samples": n_pairs, "violations": p3_bad},
        {"axiom": "T1", "samples": n_pairs, "violations": t1_bad},
        {"axiom": "scan", "samples": n_samples, "violations": scan_bad},
    ]
    return {
        "seed": seed,
        "samples": n_samples,
        "checks": checks,
        "clean": all(not c["violations"] for c in checks),
    }
