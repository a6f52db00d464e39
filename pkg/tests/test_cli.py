import json
import pathlib

import pytest

from clusterglue.cli import main

SEEDS = pathlib.Path(__file__).resolve().parent.parent / "seeds"
LEFT = str(SEEDS / "path_left.json")
RIGHT = str(SEEDS / "path_right.json")
MARKOV = str(SEEDS / "markov.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mutate_prints_resulting_seed(capsys):
    code, out, _ = run(capsys, "mutate", LEFT, "x1")
    assert code == 0
    assert "x1^-1*x2 + x1^-1*x3" in out
    assert "deg   0" in out


def test_mutate_involution_round_trip(capsys):
    code, out, _ = run(capsys, "mutate", LEFT, "x1", "x1")
    assert code == 0
    code2, out2, _ = run(capsys, "mutate", LEFT, "x1", "x1")
    assert out == out2


def test_mutate_frozen_vertex_is_validation_error(capsys):
    code, _, err = run(capsys, "mutate", LEFT, "x2")
    assert code == 3
    assert "frozen" in err


def test_missing_file_is_parse_error(capsys):
    code, _, err = run(capsys, "mutate", "no-such-file.json", "x1")
    assert code == 2


def test_glue_prints_path_quiver(capsys):
    code, out, _ = run(capsys, "glue", LEFT, "x3", RIGHT, "y3")
    assert code == 0
    assert "quiver: x1 -> z, x2 -> x1, y1 -> y2, z -> y1" in out
    assert "proxy: z" in out


def test_glue_json_document_reloadable(capsys, tmp_path):
    code, out, _ = run(capsys, "glue", LEFT, "x3", RIGHT, "y3", "--json")
    assert code == 0
    payload = json.loads(out)
    doc = tmp_path / "glued.json"
    doc.write_text(json.dumps(payload["document"]) + "\n")
    code2, out2, _ = run(capsys, "enumerate", str(doc), "--max-nodes", "100", "--max-depth", "10", "--json")
    assert code2 == 0
    stats = json.loads(out2)
    assert stats["kappa"] == 7
    assert stats["K"] == 4


def test_glue_degree_mismatch_exit_code(capsys, tmp_path):
    other = tmp_path / "deg2.json"
    other.write_text(
        json.dumps(
            {
                "variables": [
                    {"name": "y1", "frozen": False, "degree": 2},
                    {"name": "y2", "frozen": True, "degree": 2},
                    {"name": "y3", "frozen": True, "degree": 2},
                ],
                "arrows": [
                    {"from": "y3", "to": "y1", "mult": 1},
                    {"from": "y1", "to": "y2", "mult": 1},
                ],
            }
        )
    )
    code, _, err = run(capsys, "glue", LEFT, "x3", str(other), "y3")
    assert code == 3
    assert "degree mismatch" in err


def test_enumerate_exhausted(capsys):
    code, out, _ = run(capsys, "enumerate", LEFT, "--max-nodes", "10", "--max-depth", "5")
    assert code == 0
    assert "status: exhausted" in out
    assert "kappa: 4" in out
    assert "K: 2" in out


def test_enumerate_truncated_exit_code(capsys):
    code, out, _ = run(
        capsys, "enumerate", MARKOV, "--max-nodes", "20", "--max-depth", "4"
    )
    assert code == 5
    assert "status: truncated" in out


def test_enumerate_graph_export(capsys):
    code, out, _ = run(
        capsys,
        "enumerate",
        LEFT,
        "--max-nodes",
        "10",
        "--max-depth",
        "5",
        "--json",
        "--graph",
    )
    payload = json.loads(out)
    assert len(payload["graph"]["nodes"]) == 2
    assert len(payload["graph"]["edges"]) == 1
    assert payload["graph"]["edges"][0][0] != payload["graph"]["edges"][0][2]


def test_verify_theorem_ok(capsys):
    code, out, _ = run(
        capsys, "verify", "theorem", LEFT, "x3", RIGHT, "y3", "--depth", "4"
    )
    assert code == 0
    assert "status: ok" in out
    assert "map: exact" in out


def test_verify_theorem_force_degree_two_fails(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "theorem",
        LEFT,
        "x3",
        RIGHT,
        "y3",
        "--depth",
        "3",
        "--force-degree",
        "2",
    )
    assert code == 4
    assert "status: mismatch" in out
    assert "map: modified" in out
    assert "expected" in out  # a concrete witness is printed


def test_verify_corollary_output(capsys):
    code, out, _ = run(capsys, "verify", "corollary", LEFT, "x3", RIGHT, "y3")
    assert code == 0
    assert "kappa: 7 = 4 + 4 - 1" in out
    assert "K: 4 = 2 * 2" in out


def test_verify_corollary_inconclusive(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "corollary",
        MARKOV,
        "f",
        RIGHT,
        "y3",
        "--max-nodes",
        "30",
        "--max-depth",
        "6",
    )
    assert code == 5
    assert "status: inconclusive" in out


def test_verify_correspondence_ok(capsys):
    code, out, _ = run(capsys, "verify", "correspondence", LEFT, "x3", RIGHT, "y3")
    assert code == 0
    assert "glued clusters: 4" in out


def test_json_outputs_are_reproducible(capsys):
    args = ("verify", "corollary", LEFT, "x3", RIGHT, "y3", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert (code1, out1) == (code2, out2)
    payload = json.loads(out1)
    assert set(payload) >= {"status", "kappa", "K", "witnesses", "bounds"}
