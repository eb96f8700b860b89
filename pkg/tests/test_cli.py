import json
import subprocess
import sys

import pytest

from hypercolor.cli import parse_input, run
from hypercolor.core import cycle, from_dict, to_dict

C5 = to_dict(cycle(5))


@pytest.fixture
def write(tmp_path):
    def _write(obj, name="in.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return _write


def report(capsys):
    return json.loads(capsys.readouterr().out)


def test_parse_valid(write):
    inst = parse_input(write(C5))
    assert inst.H.order == 5 and inst.lists is None


def test_color_c5_not_two_choosable(write, capsys):
    lists = write({v: [1, 2] for v in C5["vertices"]}, "lists.json")
    assert run(["color", write(C5), "--property", "O", "--lists", lists]) == 0
    assert report(capsys) == {"property": "O", "colorable": False, "coloring": None}


def test_color_without_lists(write, capsys):
    assert run(["color", write(C5), "--property", "O"]) == 0
    out = report(capsys)
    assert out["chi"] == 3 and out["chi_list"] == 3


def test_hardpair_certificate(write, capsys):
    inst = {**C5, "f": {v: [1, 1] for v in C5["vertices"]}}
    assert run(["hardpair", write(inst)]) == 0
    cert = report(capsys)["certificate"]
    assert cert["type"] == "C" and cert["t"] == 1 and cert["n"] == 5 and cert["pair"] == [1, 2]


def test_blocks_and_degeneracy(write, capsys):
    assert run(["blocks", write(C5)]) == 0
    out = report(capsys)
    assert out["blocks"][0]["brick"] == {"kind": "tCn", "t": 1, "n": 5}
    assert run(["degeneracy", write(C5), "--k", "2"]) == 0
    out = report(capsys)
    assert out["least_strict_degeneracy"] == 3 and out["strictly_k_degenerate"]["value"] is False


def test_critical(write, capsys):
    inst = {**C5, "lists": {v: [1, 2] for v in C5["vertices"]}}
    assert run(["critical", write(inst), "--property", "O"]) == 0
    out = report(capsys)
    assert out["is_critical"] and len(out["low_vertices"]) == 5


@pytest.mark.parametrize(
    "payload, needle",
    [
        ('{"vertices": ["a", "b"], "edges": [["a"]]}', "incidence cardinality < 2"),
        ('{"vertices": ["a", "b"], "edges": [["a", "b"]]', "malformed JSON"),
        ('{"vertices": ["a", "b"], "edges": [["a", "b"]], "lists": {"z": [1]}}', "z"),
    ],
)
def test_input_errors(write, capsys, payload, needle):
    assert run(["color", write(payload), "--property", "O"]) == 2
    assert needle in capsys.readouterr().err


def test_missing_lists_and_bad_property(write, capsys):
    assert run(["critical", write(C5), "--property", "O"]) == 2
    assert run(["color", write(C5), "--property", "Q"]) == 2


def test_precondition_exit(write, capsys):
    inst = {**C5, "lists": {v: [1] for v in C5["vertices"]}}
    assert run(["verify", "theorem6", write(inst), "--property", "O"]) == 2
    assert "r|L(v)| >= d(v)" in capsys.readouterr().err


def test_verify_single_instances(write, capsys):
    inst = {**C5, "lists": {v: [1, 2] for v in C5["vertices"]}}
    assert run(["verify", "theorem3", write(inst), "--property", "O"]) == 0
    assert report(capsys)["passed"]
    assert run(["verify", "sigma-lemmas", write(C5), "--delta", "4"]) == 0
    assert report(capsys)["sigma"] == {"num": 15, "den": 2}


def test_verify_theorem4_sweep(capsys):
    assert run(["verify", "theorem4", "--bounds", "order=3"]) == 0
    out = report(capsys)
    assert out["passed"] and out["instances"] > 0


def test_enumerate_ndjson(capsys):
    assert run(["enumerate", "--max-order", "3", "--connected"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    for line in lines:
        H = from_dict(json.loads(line))
        assert H.order <= 3


def test_enumerate_critical(capsys):
    assert run(["enumerate", "--max-order", "2", "--property", "O", "--k", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["lists"] == {"0": [1], "1": [1]}


def test_out_file_and_determinism(write, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    src = write({**C5, "lists": {v: [1, 2] for v in C5["vertices"]}})
    run(["critical", src, "--property", "O", "--out", str(a)])
    run(["critical", src, "--property", "O", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_round_trip(write):
    inst = parse_input(write(C5))
    assert to_dict(inst.H) == C5
    assert to_dict(parse_input(write(to_dict(inst.H))).H) == C5


def test_stdin_and_console_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "hypercolor", "blocks", "-"],
        input=json.dumps(C5),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["separating_vertices"] == []
