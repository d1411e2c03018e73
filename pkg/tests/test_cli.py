import json
import subprocess
import sys

import pytest

import samples
from cftree.cli import run
from cftree.jsonio import automaton_to_doc, dumps, tree_to_doc
from cftree import unfold_pdfa


@pytest.fixture
def fig_files(tmp_path):
    files = {}
    files["fig1"] = tmp_path / "fig1.json"
    files["fig1"].write_text(dumps(automaton_to_doc(samples.one_state_two_loops(), root="p")))
    files["fig2"] = tmp_path / "fig2.json"
    files["fig2"].write_text(dumps(automaton_to_doc(samples.astar_bstar_pdfa(), root="p")))
    files["ray"] = tmp_path / "ray.json"
    files["ray"].write_text(dumps(automaton_to_doc(samples.ray(), root="u")))
    files["interior"] = tmp_path / "interior.json"
    files["interior"].write_text(dumps(automaton_to_doc(samples.ray_from_interior(), root="r")))
    return files


def invoke(args):
    proc = subprocess.run(
        [sys.executable, "-m", "cftree.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_iso_rooted_same_state(fig_files):
    f = str(fig_files["fig2"])
    assert run(["iso", f, "--state", "p", f, "--state", "p", "--rooted"]) == 0


def test_iso_rooted_witness_printed(fig_files, capsys):
    f = str(fig_files["fig2"])
    code = run(["iso", f, "--state", "p", f, "--state", "q", "--rooted", "--witness"])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out.strip() == "a"


def test_iso_unrooted(fig_files):
    assert (
        run(
            [
                "iso",
                str(fig_files["ray"]),
                "--state",
                "u",
                str(fig_files["interior"]),
                "--state",
                "r",
                "--unrooted",
            ]
        )
        == 0
    )


def test_iso_defaults_to_document_roots(fig_files):
    f = str(fig_files["fig2"])
    assert run(["iso", f, f]) == 0


def test_unfold_dot_has_seven_nodes(fig_files, capsys):
    code = run(["unfold", str(fig_files["fig1"]), "--state", "p", "--radius", "2", "--dot"])
    captured = capsys.readouterr()
    assert code == 0
    node_lines = [l for l in captured.out.splitlines() if "label" in l and "->" not in l]
    assert len(node_lines) == 7
    assert captured.out.count("->") == 6


def test_unfold_json_round_trips_through_compress(fig_files, tmp_path, capsys):
    code = run(["unfold", str(fig_files["fig2"]), "--state", "p", "--radius", "3"])
    captured = capsys.readouterr()
    assert code == 0
    tree_file = tmp_path / "tree.json"
    tree_file.write_text(captured.out)
    code = run(["compress", str(tree_file)])
    captured = capsys.readouterr()
    assert code == 0
    doc = json.loads(captured.out)
    assert doc["kind"] == "pdfa"
    assert "root" in doc


def test_validate_ok_and_exit_codes(fig_files, tmp_path, capsys):
    assert run(["validate", str(fig_files["fig2"])]) == 0
    capsys.readouterr()
    bad = automaton_to_doc(samples.one_state_two_loops())
    bad["transitions"][0]["label"] = "zz"
    bad_file = tmp_path / "bad.json"
    bad_file.write_text(dumps(bad))
    assert run(["validate", str(bad_file)]) == 1
    captured = capsys.readouterr()
    assert "UNKNOWN_LABEL" in captured.out


def test_invalid_inputs_exit_2(fig_files, tmp_path, capsys):
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{oops")
    assert run(["validate", str(garbage)]) == 2
    assert run(["unfold", str(fig_files["fig2"]), "--state", "ghost", "--radius", "2"]) == 2
    assert run(["unfold", str(fig_files["fig2"]), "--state", "p", "--radius", "-1"]) == 2
    assert run(["iso", str(fig_files["fig1"]), str(fig_files["fig1"])]) == 2  # not deterministic
    assert run(["reroot", str(fig_files["ray"]), "--word", "a^-1"]) == 2  # not in language
    capsys.readouterr()


def test_reroot_pipes_from_witness(fig_files, capsys):
    code = run(
        [
            "iso",
            str(fig_files["interior"]),
            "--state",
            "r",
            str(fig_files["ray"]),
            "--state",
            "u",
            "--unrooted",
            "--witness",
        ]
    )
    captured = capsys.readouterr()
    assert code == 0
    witness = captured.out.strip()
    assert witness == "a"
    code = run(["reroot", str(fig_files["ray"]), "--state", "u", "--word", witness])
    captured = capsys.readouterr()
    assert code == 0
    doc = json.loads(captured.out)
    assert doc["kind"] == "pdfa"
    assert "root" in doc


def test_reduce_2gap_and_lift(tmp_path, capsys):
    gap_file = tmp_path / "gap.json"
    gap_file.write_text(json.dumps({"n": 2, "edges": [[0, 1]]}))
    out_a, out_b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["reduce-2gap", str(gap_file), "--out-a", str(out_a), "--out-b", str(out_b)]) == 0
    capsys.readouterr()
    assert run(["iso", str(out_a), str(out_b), "--rooted"]) == 1  # path exists -> not isomorphic
    capsys.readouterr()
    lift_a, lift_b = tmp_path / "la.json", tmp_path / "lb.json"
    assert (
        run(
            [
                "lift-nonrooted",
                str(out_a),
                str(out_b),
                "--out-a",
                str(lift_a),
                "--out-b",
                str(lift_b),
            ]
        )
        == 0
    )
    capsys.readouterr()
    assert run(["iso", str(lift_a), str(lift_b), "--unrooted"]) == 1
    capsys.readouterr()


def test_minimize_cli(fig_files, capsys):
    assert run(["minimize", str(fig_files["fig2"])]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "pdfa"
    assert len(doc["states"]) == 2


def test_byte_identical_output(fig_files):
    args = ["unfold", str(fig_files["fig2"]), "--state", "p", "--radius", "3", "--dot"]
    code1, out1, _ = invoke(args)
    code2, out2, _ = invoke(args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_console_entry_point_runs(fig_files):
    code, out, err = invoke(["validate", str(fig_files["fig2"])])
    assert code == 0
    assert "ok" in out
