"""Seeded invariant suites with deterministic JSON reports.

Each suite draws a reproducible sample stream, checks exact identities
(never approximate ones), and returns a report listing, per named check,
how many samples ran and which violations occurred. Reports are plain
JSON-ready dictionaries; identical inputs and seeds give identical
reports, byte for byte, under canonical dumping.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .errors import TreeGradedError
from .jsonio import Scene, family_to_json, upoint_to_json
from .pgeodesic import same_initial_pattern
from .pieces import TREE, PieceFamily
from .sampling import TRIPLE_MODES, Sampler
from .stretch import StretchContext, psi, psi_point, stretch_function
from .structure import check_axioms
from .universal import (
    SAME_PIECE,
    UPoint,
    dist,
    explicit_geodesic,
    separation,
)

SUITES = ("metric", "geodesic", "projections", "stretch", "realtree")


def _fragment(axiom: str, samples: int, violations: list) -> dict:
    return {"axiom": axiom, "samples": samples, "violations": violations}


def _pair_witness(f: UPoint, g: UPoint, **extra) -> dict:
    out = {"f": upoint_to_json(f), "g": upoint_to_json(g)}
    out.update(extra)
    return out


def run_metric(
    family: PieceFamily, capacity: Optional[int], samples: int, seed: int
) -> dict:
    """Metric axioms plus the distance-form identities on stratified triples.

    Exact checks per triple: symmetry, indiscernibility, the triangle
    inequality all three ways, the two equivalent forms of the bridged
    distance, the two-sided tail bounds, and transport of separations.
    Tallies how often each comparison case and triple shape occurred.
    """
    smp = Sampler(family, capacity=capacity, seed=seed)
    modes = [m for m in TRIPLE_MODES if m != "any"] + ["any"]
    bad: dict[str, list] = {
        k: []
        for k in ("symmetry", "identity", "triangle", "case-a-forms", "sandwich", "transport")
    }
    stats = {
        "case_a_pairs": 0,
        "case_b_pairs": 0,
        "nested_triples": 0,
        "disjoint_triples": 0,
    }
    for i in range(samples):
        f, g, h = smp.upoint_triple(modes[i % len(modes)])
        trio = (f, g, h)
        seps = {}
        dists = {}
        for a in range(3):
            for b in range(a + 1, 3):
                x, y = trio[a], trio[b]
                sep = separation(x, y)
                seps[(a, b)] = sep
                dists[(a, b)] = dist(x, y)
                if sep.case == SAME_PIECE:
                    stats["case_a_pairs"] += 1
                else:
                    stats["case_b_pairs"] += 1
                if dist(y, x) != dists[(a, b)]:
                    bad["symmetry"].append(_pair_witness(x, y))
                if (dists[(a, b)] == 0) != (x == y):
                    bad["identity"].append(_pair_witness(x, y))
                lower = (x.length - sep.u) + (y.length - sep.v)
                upper = (x.length - sep.s) + (y.length - sep.s)
                if not lower <= dists[(a, b)] <= upper:
                    bad["sandwich"].append(_pair_witness(x, y))
                if sep.case == SAME_PIECE:
                    piece = family.piece(sep.piece_id)
                    gap = piece.distance(sep.f_value, sep.g_value)
                    direct = upper + gap - (sep.u - sep.s) - (sep.v - sep.s)
                    rewritten = lower + gap
                    if not dists[(a, b)] == direct == rewritten:
                        bad["case-a-forms"].append(_pair_witness(x, y))
        for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            ab = dists[(min(a, b), max(a, b))]
            bc = dists[(min(b, c), max(b, c))]
            ac = dists[(min(a, c), max(a, c))]
            if ac > ab + bc:
                bad["triangle"].append(
                    _pair_witness(trio[a], trio[c], via=upoint_to_json(trio[b]))
                )
            s_ab = seps[(min(a, b), max(a, b))].s
            s_bc = seps[(min(b, c), max(b, c))].s
            s_ac = seps[(min(a, c), max(a, c))].s
            if s_ab < s_bc and s_ac != s_ab:
                bad["transport"].append(_pair_witness(trio[a], trio[c]))
        s_values = sorted(sep.s for sep in seps.values())
        if s_values[0] == s_values[2]:
            stats["disjoint_triples"] += 1
        else:
            stats["nested_triples"] += 1
    checks = [_fragment(k, samples, v) for k, v in bad.items()]
    return {
        "checks": checks,
        "stats": stats,
        "clean": all(not v for v in bad.values()),
    }


def run_geodesic(
    family: PieceFamily, capacity: Optional[int], samples: int, seed: int
) -> dict:
    """Explicit paths realize the distance with exact endpoint recovery.

    Per sampled pair: the path length equals the distance, both endpoint
    evaluations reproduce the inputs byte for byte under canonical JSON,
    and five random parameter pairs a < b satisfy d(path(a), path(b)) =
    b - a exactly.
    """
    from .jsonio import canonical_dumps

    smp = Sampler(family, capacity=capacity, seed=seed)
    length_bad: list = []
    endpoint_bad: list = []
    param_bad: list = []
    pair_modes = ("any", "same_piece", "split", "prefix")
    made = 0
    while made < samples:
        f, g = smp.upoint_pair(pair_modes[made % len(pair_modes)])
        if f == g:
            continue
        made += 1
        geo = explicit_geodesic(f, g)
        if geo.length != dist(f, g):
            length_bad.append(_pair_witness(f, g))
            continue
        start = canonical_dumps(upoint_to_json(geo.at(Fraction(0))))
        end = canonical_dumps(upoint_to_json(geo.at(geo.length)))
        if start != canonical_dumps(upoint_to_json(f)) or end != canonical_dumps(
            upoint_to_json(g)
        ):
            endpoint_bad.append(_pair_witness(f, g))
        for _ in range(5):
            a = smp.parameter(Fraction(0), geo.length)
            b = smp.parameter(Fraction(0), geo.length)
            if a == b:
                continue
            a, b = min(a, b), max(a, b)
            if dist(geo.at(a), geo.at(b)) != b - a:
                param_bad.append(_pair_witness(f, g, a=str(a), b=str(b)))
    checks = [
        _fragment("length", samples, length_bad),
        _fragment("endpoints", samples, endpoint_bad),
        _fragment("parametrization", samples, param_bad),
    ]
    return {"checks": checks, "clean": all(not c["violations"] for c in checks)}


def run_projections(
    family: PieceFamily, capacity: Optional[int], samples: int, seed: int
) -> dict:
    return check_axioms(family, n_samples=samples, seed=seed, capacity=capacity)


def run_stretch(
    ctx: StretchContext, capacity: Optional[int], samples: int, seed: int
) -> dict:
    """Distortion stays within the context constant, exactly.

    Per sampled step sequence: increments of the reparametrization lie in
    [dt/k, k*dt]; the pushed sequence is valid over the target family and
    preserves initial patterns. Per sampled element pair (three for every
    five samples): distances distort within [d/k, k*d]; for k = 1 this
    forces exact preservation.
    """
    smp = Sampler(ctx.source, capacity=capacity, seed=seed)
    k = ctx.constant
    slope_bad: list = []
    push_bad: list = []
    pattern_bad: list = []
    point_bad: list = []
    for _ in range(samples):
        g = smp.pgeodesic()
        t1 = smp.parameter(Fraction(0), g.length)
        t2 = smp.parameter(Fraction(0), g.length)
        t1, t2 = min(t1, t2), max(t1, t2)
        ds = stretch_function(ctx, g, t2) - stretch_function(ctx, g, t1)
        dt = t2 - t1
        if not dt / k <= ds <= k * dt:
            slope_bad.append({"steps": len(g.steps), "t1": str(t1), "t2": str(t2)})
        image = psi(ctx, g)
        try:
            image.check()
        except TreeGradedError as exc:
            push_bad.append({"steps": len(g.steps), "error": str(exc)})
        if stretch_function(ctx, g, g.length) != image.length:
            push_bad.append({"steps": len(g.steps), "error": "total length mismatch"})
        other = smp.pgeodesic()
        if same_initial_pattern(g, other) and not same_initial_pattern(
            image, psi(ctx, other)
        ):
            pattern_bad.append({"steps": [len(g.steps), len(other.steps)]})
    n_points = samples * 3 // 5
    for _ in range(n_points):
        f, g = smp.upoint_pair("any")
        d = dist(f, g)
        d_image = dist(psi_point(ctx, f), psi_point(ctx, g))
        if not d / k <= d_image <= k * d:
            point_bad.append(_pair_witness(f, g, image_distance=str(d_image)))
    checks = [
        _fragment("reparametrization", samples, slope_bad),
        _fragment("pushforward", samples, push_bad),
        _fragment("pattern", samples, pattern_bad),
        _fragment("point-distortion", n_points, point_bad),
    ]
    return {"checks": checks, "clean": all(not c["violations"] for c in checks)}


def run_realtree(
    family: PieceFamily, capacity: Optional[int], samples: int, seed: int
) -> dict:
    """Zero-hyperbolicity on tree-only families.

    For every sampled quadruple the two largest of the three pairing sums
    are equal, the four-point condition with vanishing defect. Refuses
    families containing non-tree pieces.
    """
    if any(p.kind != TREE for p in family.pieces):
        raise TreeGradedError("the realtree suite needs a tree-only family")
    smp = Sampler(family, capacity=capacity, seed=seed)
    bad: list = []
    for _ in range(samples):
        quad = [smp.upoint() for _ in range(4)]
        w, x, y, z = quad
        sums = sorted(
            (
                dist(w, x) + dist(y, z),
                dist(w, y) + dist(x, z),
                dist(w, z) + dist(x, y),
            )
        )
        if sums[1] != sums[2]:
            bad.append({"quadruple": [upoint_to_json(q) for q in quad]})
    checks = [_fragment("four-point", samples, bad)]
    return {"checks": checks, "clean": not bad}


def run_suite(scene: Scene, suite: str, samples: int, seed: int) -> dict:
    """Dispatch a named suite and wrap its result in a reproducible envelope."""
    if suite not in SUITES:
        raise TreeGradedError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if samples < 1:
        raise TreeGradedError("suites need a positive sample count")
    if suite == "stretch":
        if scene.stretch is None:
            raise TreeGradedError("the stretch suite needs a scene with stretch maps")
        body = run_stretch(scene.stretch, scene.capacity, samples, seed)
    elif suite == "metric":
        body = run_metric(scene.family, scene.capacity, samples, seed)
    elif suite == "geodesic":
        body = run_geodesic(scene.family, scene.capacity, samples, seed)
    elif suite == "projections":
        body = run_projections(scene.family, scene.capacity, samples, seed)
    else:
        body = run_realtree(scene.family, scene.capacity, samples, seed)
    report = {
        "suite": suite,
        "samples": samples,
        "seed": seed,
        "family": family_to_json(scene.family),
        "capacity": scene.capacity,
        "checks": body["checks"],
        "clean": body["clean"],
    }
    if "stats" in body:
        report["stats"] = body["stats"]
    return report
