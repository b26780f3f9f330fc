import pytest

from treegraded import TreeGradedError, make_family
from treegraded.checks import SUITES, run_suite
from treegraded.jsonio import Scene, canonical_dumps


@pytest.fixture
def scene(mixed_family):
    return Scene(mixed_family, capacity=6)


@pytest.fixture
def stretch_scene(mixed_family, scale_context):
    return Scene(mixed_family, capacity=6, stretch=scale_context)


@pytest.mark.parametrize("suite", ["metric", "geodesic", "projections"])
def test_suites_run_clean(scene, suite):
    report = run_suite(scene, suite, samples=80, seed=5)
    assert report["clean"]
    assert report["suite"] == suite
    assert report["samples"] == 80
    assert report["seed"] == 5


def test_stretch_suite_needs_maps(scene, stretch_scene):
    with pytest.raises(TreeGradedError):
        run_suite(scene, "stretch", samples=20, seed=1)
    report = run_suite(stretch_scene, "stretch", samples=60, seed=2)
    assert report["clean"]


def test_realtree_suite_requires_tree_only(scene, tree_family):
    with pytest.raises(TreeGradedError):
        run_suite(scene, "realtree", samples=20, seed=1)
    report = run_suite(Scene(tree_family, capacity=4), "realtree", samples=80, seed=3)
    assert report["clean"]


def test_metric_suite_logs_case_statistics(scene):
    report = run_suite(scene, "metric", samples=200, seed=0)
    stats = report["stats"]
    for key in (
        "case_a_pairs",
        "case_b_pairs",
        "nested_triples",
        "disjoint_triples",
    ):
        assert stats[key] > 0


def test_reports_are_reproducible(scene):
    a = run_suite(scene, "metric", samples=60, seed=42)
    b = run_suite(scene, "metric", samples=60, seed=42)
    assert canonical_dumps(a) == canonical_dumps(b)
    c = run_suite(scene, "metric", samples=60, seed=43)
    assert c != a


def test_unknown_suite_and_bad_samples(scene):
    with pytest.raises(TreeGradedError):
        run_suite(scene, "nope", samples=10, seed=0)
    with pytest.raises(TreeGradedError):
        run_suite(scene, "metric", samples=0, seed=0)


def test_every_listed_suite_is_runnable(stretch_scene):
    for suite in SUITES:
        if suite == "realtree":
            continue
        assert run_suite(stretch_scene, suite, samples=30, seed=7)["clean"]
