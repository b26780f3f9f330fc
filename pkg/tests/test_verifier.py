from fractions import Fraction

import pytest

from treegraded import (
    CapExceededError,
    MetricGraph,
    PieceCover,
    ShapeError,
    all_geodesics,
    verify,
)
from treegraded.verifier import (
    check_convexity,
    check_projection_system,
    check_T1,
    check_transverse_free,
)

F = Fraction

W = F(1)


def graph(n, *edges):
    return MetricGraph(n, tuple((u, v, F(w)) for u, v, w in edges))


@pytest.fixture
def bowtie():
    # two triangles joined at vertex 2
    g = graph(
        5, (0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 4, 1), (4, 2, 1)
    )
    cover = PieceCover((frozenset({0, 1, 2}), frozenset({2, 3, 4})))
    return g, cover


@pytest.fixture
def square():
    return graph(4, (0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1))


def test_graph_validation():
    with pytest.raises(ShapeError):
        graph(2, (0, 0, 1))
    with pytest.raises(ShapeError):
        graph(2, (0, 1, 0))
    with pytest.raises(ShapeError):
        graph(3, (0, 1, 1))  # vertex 2 unreachable
    with pytest.raises(ShapeError):
        graph(2, (0, 1, 1), (1, 0, 2))  # duplicate edge


def test_distances_are_exact(square):
    assert square.dist[0][2] == 2
    assert square.dist[0][3] == 1


def test_all_geodesics_enumeration(square):
    paths = all_geodesics(square, 0, 2, cap=10)
    assert paths == [(0, 1, 2), (0, 3, 2)]
    assert all_geodesics(square, 0, 0, cap=10) == [(0,)]


def test_all_geodesics_cap():
    # a ladder of parallel two-edge routes multiplies geodesic counts
    edges = []
    for i in range(6):
        a, top, bot, b = 3 * i, 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(a, top, 1), (top, b, 1), (a, bot, 1), (bot, b, 1)]
    g = graph(19, *edges)
    assert len(all_geodesics(g, 0, 18, cap=64)) == 64
    with pytest.raises(CapExceededError):
        all_geodesics(g, 0, 18, cap=63)


def test_bowtie_accepted(bowtie):
    verdict = verify(*bowtie)
    assert verdict.accepted and verdict.violations == ()


def test_star_accepted():
    g = graph(4, (0, 1, 1), (0, 2, 2), (0, 3, 1))
    cover = PieceCover(
        (frozenset({0, 1}), frozenset({0, 2}), frozenset({0, 3}))
    )
    assert verify(g, cover).accepted


def test_square_opposite_edges_fails_the_gate_identity(square):
    cover = PieceCover((frozenset({0, 1}), frozenset({2, 3})))
    verdict = verify(square, cover)
    assert not verdict.accepted
    axioms = {v["axiom"] for v in verdict.violations}
    assert "P'2" in axioms


def test_square_singletons_fails_transverse_freeness(square):
    cover = PieceCover(tuple(frozenset({i}) for i in range(4)))
    report = check_projection_system(square, cover, include_p3=False)
    assert report == []
    violations = check_transverse_free(square, cover, cap=100)
    assert violations and violations[0]["axiom"] == "transverse-free"


def test_check_T1_flags_overlapping_pieces(square):
    cover = PieceCover((frozenset({0, 1, 2}), frozenset({1, 2, 3})))
    violations = check_T1(square, cover)
    assert violations and violations[0]["axiom"] == "T1"


def test_convexity_requires_geodesics_inside_pieces(square):
    cover = PieceCover((frozenset({0, 1, 2}), frozenset({0, 2, 3})))
    violations = check_convexity(square, cover, cap=100)
    # 0 to 2 has a geodesic through 3, leaving the first piece
    assert violations and violations[0]["axiom"] == "geodesic-subset"


def test_cover_must_cover(square):
    cover = PieceCover((frozenset({0, 1}),))
    with pytest.raises(ShapeError):
        cover.check_covers(square)


def test_verdict_to_json_is_stable(bowtie):
    verdict = verify(*bowtie)
    assert verdict.to_json() == {"accepted": True, "violations": []}
