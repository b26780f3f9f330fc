import json

import pytest

from treegraded.cli import main

SCENE = {
    "family": {"pieces": [{"id": 0, "kind": "tree"}, {"id": 1, "kind": "line"}]},
    "capacity": 4,
    "stretch": {
        "maps": [
            {"src": 0, "dst": 0, "kind": "scale", "lambda": "2/1"},
            {"src": 1, "dst": 1, "kind": "scale", "lambda": "2/1"},
        ]
    },
    "points": {
        "f": {
            "segments": [
                {"len": "2/1", "piece": 1, "value": ["2/1"], "label": 0},
                {"len": "1/1", "piece": 1, "value": ["1/1"], "label": 1},
            ]
        },
        "g": {
            "segments": [
                {"len": "2/1", "piece": 1, "value": ["2/1"], "label": 0},
                {"len": "3/1", "piece": 1, "value": ["-3/1"], "label": 1},
            ]
        },
    },
}


@pytest.fixture
def scene_file(tmp_path):
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(SCENE))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dist_prints_bare_rational(scene_file, capsys):
    code, out, _ = run(capsys, "dist", "--scene", scene_file, "f", "g")
    assert code == 0
    assert out == '"4/1"\n'


def test_dist_inline_json(scene_file, capsys):
    inline = json.dumps(
        {"segments": [{"len": "1/1", "piece": 1, "value": ["1/1"], "label": 0}]}
    )
    code, out, _ = run(capsys, "dist", "--scene", scene_file, inline, "f")
    assert code == 0
    assert out == '"2/1"\n'


def test_dist_element_from_file(scene_file, tmp_path, capsys):
    blob = tmp_path / "h.json"
    blob.write_text(
        json.dumps(
            {"segments": [{"len": "1/1", "piece": 1, "value": ["-1/1"], "label": 0}]}
        )
    )
    code, out, _ = run(capsys, "dist", "--scene", scene_file, f"@{blob}", "f")
    assert code == 0
    assert out == '"4/1"\n'


def test_geodesic_output_is_canonical_json(scene_file, capsys):
    code, out, _ = run(
        capsys, "geodesic", "--scene", scene_file, "f", "g", "2/1"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["length"] == "4/1"
    assert out == json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def test_project(scene_file, capsys):
    code, out, _ = run(
        capsys,
        "project",
        "--scene",
        scene_file,
        "g",
        "--base",
        '{"segments":[]}',
        "--piece",
        "1",
        "--label",
        "0",
    )
    assert code == 0
    assert json.loads(out)["segments"][0]["len"] == "2/1"


def test_check_exit_zero_and_determinism(scene_file, capsys):
    code1, out1, _ = run(
        capsys, "check", "--scene", scene_file, "metric", "--samples", "50", "--seed", "4"
    )
    code2, out2, _ = run(
        capsys, "check", "--scene", scene_file, "metric", "--samples", "50", "--seed", "4"
    )
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["clean"] is True


def test_verify_graph_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(
        json.dumps(
            {
                "n": 3,
                "edges": [[0, 1, "1/1"], [1, 2, "1/1"], [2, 0, "1/1"]],
                "pieces": [[0, 1, 2]],
            }
        )
    )
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "n": 4,
                "edges": [[0, 1, "1/1"], [1, 2, "1/1"], [2, 3, "1/1"], [3, 0, "1/1"]],
                "pieces": [[0, 1], [2, 3]],
            }
        )
    )
    code, out, _ = run(capsys, "verify-graph", str(good))
    assert code == 0 and json.loads(out)["accepted"] is True
    code, out, _ = run(capsys, "verify-graph", str(bad))
    assert code == 1 and json.loads(out)["accepted"] is False


def test_realize(scene_file, tmp_path, capsys):
    word = tmp_path / "word.json"
    word.write_text(
        json.dumps(
            {
                "steps": [
                    {"len": "1/1", "piece": 1, "value": ["1/1"]},
                    {"len": "1/1", "piece": 0, "value": [[2, "1/1"]]},
                ]
            }
        )
    )
    code, out, _ = run(
        capsys, "realize", "--scene", scene_file, "--word", str(word), "--labels", "0,1,2"
    )
    assert code == 0
    assert len(json.loads(out)["points"]) == 3


def test_unknown_point_is_exit_two(scene_file, capsys):
    code, out, err = run(capsys, "dist", "--scene", scene_file, "zzz", "g")
    assert code == 2
    assert out == ""
    assert "zzz" in err


def test_missing_scene_file_is_exit_two(capsys):
    code, _, err = run(capsys, "dist", "--scene", "no-such.json", "f", "g")
    assert code == 2
    assert "no-such.json" in err


def test_stretch_roundtrip(scene_file, capsys):
    code, out, _ = run(capsys, "stretch", "--scene", scene_file, "f")
    assert code == 0
    assert json.loads(out)["segments"][0]["len"] == "4/1"
