from fractions import Fraction

import pytest

from treegraded import (
    PieceRef,
    ShapeError,
    UPoint,
    USegment,
    basepoint,
    check_axioms,
    coords,
    dist,
    embed,
    explicit_geodesic,
    make_family,
    member,
    project,
    word,
)
from treegraded.sampling import Sampler
from treegraded.structure import _piece_intersection, scan_projection

F = Fraction


@pytest.fixture
def family():
    return make_family("tree", "line")


def seg(length, piece, value, label):
    return USegment(F(length), piece, value, label)


@pytest.fixture
def stem(family):
    return UPoint(family, (seg(2, 1, coords(2), 0),))


@pytest.fixture
def ref(family, stem):
    # the tree copy labeled 1 hanging off the stem
    return PieceRef(stem, 0, 1)


def test_member(family, stem, ref):
    assert member(stem, ref)  # the base sits inside, at the piece basepoint
    inside = UPoint(family, stem.segments + (seg(1, 0, word((1, F(1))), 1),))
    assert member(inside, ref)
    wrong_label = UPoint(family, stem.segments + (seg(1, 0, word((1, F(1))), 2),))
    assert not member(wrong_label, ref)
    deeper = UPoint(
        family,
        stem.segments
        + (seg(1, 0, word((1, F(1))), 1), seg(1, 1, coords(1), 0)),
    )
    assert not member(deeper, ref)


def test_embed_and_coords_roundtrip(family, ref):
    x = word((2, F(3)))
    p = embed(ref, x)
    assert member(p, ref)
    assert p.segments[-1].value == x
    assert embed(ref, family.piece(0).basepoint) == ref.base


def test_embed_is_isometric(family, ref):
    piece = family.piece(0)
    x, y = word((1, F(2))), word((1, F(1)), (2, F(1)))
    assert dist(embed(ref, x), embed(ref, y)) == piece.distance(x, y)


def test_project_member_is_identity(family, ref):
    p = embed(ref, word((1, F(1))))
    assert project(p, ref) == p


def test_project_from_behind_hits_the_base(family, stem, ref):
    r = UPoint(family, (seg(1, 1, coords(1), 0),))
    assert project(r, ref) == stem


def test_project_overshoot_lands_at_entry(family, stem, ref):
    r = UPoint(
        family,
        stem.segments
        + (seg(1, 0, word((1, F(1))), 1), seg(2, 1, coords(-2), 3)),
    )
    assert project(r, ref) == UPoint(
        family, stem.segments + (seg(1, 0, word((1, F(1))), 1),)
    )


def test_project_divergent_branch_lands_at_base(family, stem, ref):
    r = UPoint(family, stem.segments + (seg(1, 1, coords(1), 2),))
    assert project(r, ref) == stem


def test_projection_is_nearest_point(family, ref):
    sampler = Sampler(family, capacity=4, seed=5)
    for _ in range(150):
        r = sampler.upoint()
        p = project(r, ref)
        assert member(p, ref)
        q = embed(ref, sampler.point(family.piece(ref.piece_id)))
        assert dist(r, p) <= dist(r, q)


def test_scan_projection_agrees_with_closed_form(family):
    sampler = Sampler(family, capacity=4, seed=19)
    for _ in range(200):
        ref = sampler.piece_ref()
        r = sampler.upoint_near(ref)
        assert scan_projection(r, ref) == project(r, ref)


def test_piece_intersection_shares_at_most_one_point(family, stem):
    a = PieceRef(stem, 0, 1)
    with pytest.raises(ShapeError):
        _piece_intersection(a, PieceRef(stem, 0, 1))  # not distinct copies
    sibling = PieceRef(stem, 0, 2)
    assert _piece_intersection(a, sibling) == [stem]
    child_base = UPoint(family, stem.segments + (seg(1, 0, word((1, F(1))), 1),))
    child = PieceRef(child_base, 1, 0)
    hits = _piece_intersection(a, child)
    assert hits == [child_base]


def test_check_axioms_clean(family):
    report = check_axioms(family, n_samples=120, seed=3, capacity=4)
    assert report["clean"]
    names = {c["axiom"] for c in report["checks"]}
    assert names == {"P'1", "P'2", "claim", "P3", "T1", "scan"}


def test_check_axioms_is_deterministic(family):
    a = check_axioms(family, n_samples=60, seed=9, capacity=4)
    b = check_axioms(family, n_samples=60, seed=9, capacity=4)
    assert a == b


def test_embed_rejects_wrong_shape(family, ref):
    with pytest.raises(ShapeError):
        embed(ref, coords(1))  # coordinates into a tree piece


def test_coords_rejects_non_members(family, ref):
    from treegraded.structure import coords as chart_coords

    outside = UPoint(family, (seg(1, 1, coords(1), 5),))
    with pytest.raises(ShapeError):
        chart_coords(ref, outside)
