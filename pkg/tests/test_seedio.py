import random

import pytest

from clusterglue.seedio import (
    SeedDocumentError,
    document_from_seed,
    parse_seed,
    parse_seed_document,
    render_seed,
    seed_state,
    state_summary,
)
from clusterglue.seeds import mutate_seed

from seedgen import random_factor


ARROW_DOC = """
{
  "variables": [
    {"name": "x1", "frozen": false, "degree": 1},
    {"name": "x2", "frozen": true, "degree": 1},
    {"name": "x3", "frozen": true, "degree": 1}
  ],
  "arrows": [
    {"from": "x2", "to": "x1"},
    {"from": "x1", "to": "x3", "mult": 1}
  ]
}
"""

MATRIX_DOC = """
{
  "variables": [
    {"name": "x1", "frozen": false, "degree": 1},
    {"name": "x2", "frozen": true, "degree": 1},
    {"name": "x3", "frozen": true, "degree": 1}
  ],
  "matrix": [[0], [1], [-1]]
}
"""


def test_parse_path_example(left_path):
    assert parse_seed(ARROW_DOC) == left_path


def test_arrow_and_matrix_forms_agree():
    assert parse_seed(ARROW_DOC) == parse_seed(MATRIX_DOC)


def test_syntax_error_reports_position():
    with pytest.raises(SeedDocumentError) as err:
        parse_seed('{\n  "variables": [,]\n}')
    assert err.value.line == 2
    assert "line 2" in str(err.value)


def test_both_bodies_rejected():
    with pytest.raises(SeedDocumentError, match="exactly one"):
        parse_seed_document(
            '{"variables": [], "matrix": [], "arrows": []}'
        )


def test_validation_failure_reported():
    bad = MATRIX_DOC.replace('"matrix": [[0], [1], [-1]]', '"matrix": [[0], [1], [-2]]')
    with pytest.raises(SeedDocumentError, match="B\\^T G != 0"):
        parse_seed(bad)


def test_non_skew_matrix_reported():
    doc = """
    {
      "variables": [
        {"name": "x1", "frozen": false, "degree": 0},
        {"name": "x2", "frozen": false, "degree": 0},
        {"name": "f", "frozen": true, "degree": 1}
      ],
      "matrix": [[0, 1], [1, 0], [0, 0]]
    }
    """
    with pytest.raises(SeedDocumentError, match="skew"):
        parse_seed(doc)


def test_render_parse_roundtrip_byte_identical():
    rng = random.Random(17)
    for _ in range(100):
        seed = random_factor(rng, max_mutables=3, max_frozens=2)
        text = render_seed(seed)
        assert parse_seed(text) == seed
        assert render_seed(parse_seed(text)) == text


def test_matrix_form_roundtrip(left_path):
    text = render_seed(left_path, form="matrix")
    assert parse_seed(text) == left_path
    assert render_seed(parse_seed(text), form="matrix") == text


def test_metadata_preserved(left_path):
    text = render_seed(left_path, metadata={"label": "demo"})
    doc = parse_seed_document(text)
    assert doc.metadata == {"label": "demo"}
    assert doc.to_json() == text


def test_mutated_seed_not_document_representable(left_path):
    mutated = mutate_seed(left_path, "x1")
    with pytest.raises(SeedDocumentError, match="initial seeds"):
        document_from_seed(mutated)


def test_state_payload(left_path):
    state = seed_state(mutate_seed(left_path, "x1"))
    assert state["vertices"][0] == {
        "name": "x1",
        "frozen": False,
        "degree": 0,
        "value": "x1^-1*x2 + x1^-1*x3",
    }
    assert {"from": "x1", "to": "x2", "mult": 1} in state["arrows"]
    assert state["proxy"] is None
    text = state_summary(state)
    assert "x1^-1*x2 + x1^-1*x3" in text


def test_committed_sample_files_parse():
    import pathlib

    root = pathlib.Path(__file__).resolve().parent.parent / "seeds"
    for name in ("path_left.json", "path_right.json", "a2.json", "markov.json"):
        seed = parse_seed((root / name).read_text())
        assert seed.variables
