import json

import pytest

from holoperiods.cli import RunConfig, canonical_json, main, run


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def inputs(tmp_path):
    return {
        "neg": write(tmp_path, "neg.json", {"name": "neg", "h": {"1": [[-1]]}}),
        "phi3": write(tmp_path, "phi3.json", {"h": {"1": [[0, -1], [1, -1]]}}),
        "torus": write(tmp_path, "torus.json", {"h": {"1": [[1]], "2": [[1]]}}),
        "big": write(tmp_path, "big.json", {"h": {"1": [["9007199254740993"]]}}),
    }


def test_classify_text(inputs, capsys):
    assert main(["classify", inputs["neg"]]) == 0
    out = capsys.readouterr().out
    assert "forced case (a)" in out
    assert "witness m=2" in out


def test_lefschetz_table(inputs, capsys):
    assert main(["lefschetz", "--max-m", "3", inputs["phi3"]]) == 0
    rows = [line.split() for line in capsys.readouterr().out.splitlines()[1:]]
    assert [r[1] for r in rows] == ["2", "2", "-1"]


def test_shape_exit_code(inputs, capsys):
    assert main(["classify", inputs["torus"]]) == 2
    assert "H_2 nonzero" in capsys.readouterr().err


def test_malformed_exit_code(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", {"h": {"1": [[1, 2]]}})
    assert main(["classify", bad]) == 1
    assert "h.1" in capsys.readouterr().err
    assert main(["classify", str(tmp_path / "missing.json")]) == 1
    (tmp_path / "junk.json").write_text("{not json")
    assert main(["spectrum", str(tmp_path / "junk.json")]) == 1


def test_witness_not_found_exit_code(tmp_path):
    path = write(tmp_path, "c1.json", {"h": {"1": [[0, 0, -1], [1, 0, 0], [0, 1, -1]]}})
    assert main(["classify", "--cap", "1", "--max-m", "1", path]) == 3


def test_theorem_violation_exit_code(tmp_path, capsys):
    path = write(tmp_path, "wrong.json", {"family": "disk_affine", "a": [0.5, 0], "action": {"h": {"1": [[1]]}}})
    assert main(["harness", path]) == 4
    assert "m=1" in capsys.readouterr().err


def test_max_m_above_cap_rejected(inputs):
    assert main(["lefschetz", "--max-m", "10", "--cap", "5", inputs["phi3"]]) == 1


def test_json_round_trip_and_determinism(inputs, capsys):
    for sub in ("classify", "lefschetz", "zeta", "spectrum"):
        assert main([sub, "--format", "json", inputs["phi3"]]) == 0
        first = capsys.readouterr().out
        assert canonical_json(json.loads(first)) == first
        assert main([sub, "--format", "json", inputs["phi3"]]) == 0
        assert capsys.readouterr().out == first


def test_json_fragments(inputs, capsys):
    main(["classify", "--format", "json", inputs["neg"]])
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "forced_a"
    assert report["witness_m"] == 2
    assert report["witness_kind"] == "FixedPointPersistence"
    assert report["proof_case"] == "3b"
    assert report["spectrum"]["unity_orders"] == [2]
    main(["zeta", "--format", "json", inputs["neg"]])
    assert json.loads(capsys.readouterr().out)["zeta"] == {"num": [1, 1], "den": [1, -1]}


def test_big_integers_become_strings(inputs, capsys):
    main(["lefschetz", "--format", "json", "--max-m", "2", inputs["big"]])
    report = json.loads(capsys.readouterr().out)
    assert report["L"] == [str(1 - 9007199254740993), str(1 - 9007199254740993**2)]
    assert report["zeta"]["num"] == [1, "-9007199254740993"]


def test_harness_builtin(capsys):
    assert main(["harness", "builtin:half", "--format", "json", "--grid", "32"]) == 0
    first = capsys.readouterr().out
    report = json.loads(first)
    assert report["pass"] and len(report["iterates"]) == 8
    assert all(it["count"] == 1 and it["L"] == 1 for it in report["iterates"])
    assert canonical_json(report) == first
    assert main(["harness", "builtin:half", "--format", "json", "--grid", "32"]) == 0
    assert capsys.readouterr().out == first


def test_directory_mode(inputs, tmp_path):
    out = tmp_path / "reports"
    code = run(RunConfig("classify", str(tmp_path), out=str(out)))
    assert code == 2  # torus.json is rejected, the rest succeed
    assert sorted(p.name for p in out.iterdir()) == ["big.txt", "neg.txt", "phi3.txt"]
    assert "witness m=3" in (out / "phi3.txt").read_text()


def test_out_file(inputs, tmp_path):
    target = tmp_path / "z.txt"
    assert main(["zeta", inputs["neg"], "--out", str(target)]) == 0
    assert target.read_text() == "zeta(t) = (1 + t) / (1 - t)\n"
