"""Command line interface: documents, exit codes, golden round-trips."""

import json
import subprocess
import sys

import pytest

from mtfan.cli import RunConfig, main, run
from mtfan.fan import build_mtf_fan, wall_cone
from mtfan.presets import preset_module
from mtfan.serialize import cone_from_doc


def run_cli(args, tmp_path, name="out.json"):
    """Invoke the CLI in-process, writing to a file; return (code, text)."""
    out = tmp_path / name
    code = main(args + ["--output", str(out)])
    return code, out.read_text(encoding="utf-8") if out.exists() else ""


A2_SPEC = {
    "p": 2,
    "vertices": ["1", "2"],
    "arrows": [{"name": "a", "from": "1", "to": "2"}],
    "relations": [],
    "module": {"dims": {"1": 1, "2": 1}, "maps": {"a": [[1]]}},
}


def test_newton_document(tmp_path):
    code, text = run_cli(["newton", "--preset", "a2-P1"], tmp_path)
    assert code == 0
    doc = json.loads(text)
    assert doc["vertices"] == [["0", "0"], ["0", "1"], ["1", "1"]]
    assert len(doc["faces"]) == 7
    dims = [f["dim"] for f in doc["faces"]]
    assert dims == sorted(dims)


def test_fan_document_and_cone_roundtrip(tmp_path):
    code, text = run_cli(["fan", "--preset", "a2-P1"], tmp_path)
    assert code == 0
    doc = json.loads(text)
    assert doc["p"] == 2 and doc["n"] == 2
    assert len(doc["cones"]) == 7
    mtf = build_mtf_fan(preset_module("a2-P1"))
    for cdoc in doc["cones"]:
        rebuilt = cone_from_doc(cdoc, doc["n"])
        assert rebuilt == mtf.cones[cdoc["id"]]
        assert cdoc["newton_face_id"] == cdoc["id"]
    classes = {tuple(c["class"]["t"]) for c in doc["cones"]}
    assert ("1", "1") in classes and ("0", "0") in classes


def test_wall_document(tmp_path):
    code, text = run_cli(["wall", "--preset", "square-lambda"], tmp_path)
    assert code == 0
    doc = json.loads(text)
    assert doc["wall"]["dim"] == 3
    assert doc["wall"]["rays"] == [
        ["0", "0", "1", "-1"],
        ["0", "1", "0", "-1"],
        ["1", "-1", "0", "0"],
        ["1", "0", "-1", "0"],
    ]
    mtf = build_mtf_fan(preset_module("square-lambda"))
    assert cone_from_doc(doc["wall"], 4) == wall_cone(mtf)


def test_classify_document(tmp_path):
    code, text = run_cli(
        ["classify", "--preset", "a2-P1", "--theta", "1/2,-1/2"], tmp_path
    )
    assert code == 0
    doc = json.loads(text)
    assert doc["theta"] == ["1/2", "-1/2"]
    assert doc["class"]["w"] == ["1", "1"]
    assert doc["class"]["supp"] == [["1", "1"]]


def test_paths_document(tmp_path):
    code, text = run_cli(["paths", "--preset", "nakayama2-121"], tmp_path)
    assert code == 0
    doc = json.loads(text)
    ends = {
        (tuple(p[0]), tuple(p[-1])) for p in doc["maximal_newton_paths"]
    }
    assert ends == {(("0", "0"), ("2", "1"))}
    assert len(doc["maximal_paths"]) == 2


def test_verify_document(tmp_path):
    code, text = run_cli(
        ["verify", "--preset", "a2-P1", "--grid-bound", "2", "--seed", "5"],
        tmp_path,
    )
    assert code == 0
    doc = json.loads(text)
    assert doc["ok"] is True
    assert doc["oracle"]["violations"] == []
    assert doc["dim_formula"]["ok"] is True
    assert doc["fan_validation"]["ok"] is True
    assert doc["grid_bound"] == 2 and doc["seed"] == 5


def test_input_file_and_p_override(tmp_path):
    path = tmp_path / "mod.json"
    path.write_text(json.dumps(A2_SPEC), encoding="utf-8")
    code, text = run_cli(["fan", "--input", str(path)], tmp_path)
    assert code == 0
    assert len(json.loads(text)["cones"]) == 7
    code, text = run_cli(
        ["newton", "--input", str(path), "--p", "5"], tmp_path, "p5.json"
    )
    assert code == 0
    assert json.loads(text)["vertices"] == [["0", "0"], ["0", "1"], ["1", "1"]]


def test_svg_output(tmp_path):
    code, text = run_cli(["svg", "--preset", "a2-P1"], tmp_path, "fan.svg")
    assert code == 0
    assert text.startswith("<svg")
    assert text.count("<polygon") == 3  # three chambers
    assert text.count("<line") == 3  # three rays
    code, text = run_cli(["svg", "--preset", "a2-S1"], tmp_path, "s1.svg")
    assert code == 0
    assert text.count("<polygon") == 2  # two half-planes
    assert text.count("<line") == 1  # one full line


def test_svg_zero_module(tmp_path):
    spec = dict(A2_SPEC, module={"dims": {"1": 0, "2": 0}, "maps": {}})
    path = tmp_path / "zero.json"
    path.write_text(json.dumps(spec), encoding="utf-8")
    code, text = run_cli(["svg", "--input", str(path)], tmp_path, "z.svg")
    assert code == 0
    assert text.count("<polygon") == 1  # the whole plane, one class
    assert text.count("<line") == 0


def test_svg_rejects_higher_rank(tmp_path, capsys):
    code = main(["svg", "--preset", "square-lambda"])
    assert code == 2
    assert "rank" in capsys.readouterr().err


def test_exit_code_2_on_bad_inputs(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  \"p\": 2,", encoding="utf-8")
    assert main(["fan", "--input", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "line" in err and "column" in err

    incomplete = tmp_path / "incomplete.json"
    incomplete.write_text(json.dumps({"p": 2, "vertices": ["1"]}))
    assert main(["fan", "--input", str(incomplete)]) == 2

    not_prime = tmp_path / "notprime.json"
    not_prime.write_text(json.dumps(dict(A2_SPEC, p=4)), encoding="utf-8")
    assert main(["fan", "--input", str(not_prime)]) == 2

    assert main(["fan", "--preset", "a2-P1", "--input", str(bad)]) == 2
    assert main(["classify", "--preset", "a2-P1"]) == 2  # no --theta
    assert main(["classify", "--preset", "a2-P1", "--theta", "x,y"]) == 2
    assert main(["svg", "--preset", "a2-P1", "--p", "3"]) == 2


def test_run_config_direct():
    cfg = RunConfig(command="wall", preset="a2-P1", output="/dev/null")
    assert run(cfg) == 0


def test_module_invocation_subprocess(tmp_path):
    out = tmp_path / "doc.json"
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "mtfan.cli",
            "fan",
            "--preset",
            "nakayama2-121",
            "--output",
            str(out),
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert len(doc["cones"]) == 9
    assert doc["module_dims"] == ["2", "1"]


def test_subprocess_verify_exit_zero():
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "mtfan.cli",
            "verify",
            "--preset",
            "a2-S1",
            "--grid-bound",
            "2",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["ok"] is True
