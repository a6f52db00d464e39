"""The seed document format and the shared state rendering.

A seed document is JSON with a variable list plus exactly one of a matrix
body or an arrow body; both parse to identical seeds. Rendering is
canonical (sorted keys, fixed indentation), so render/parse round-trips
are byte-identical. Documents describe initial seeds only: mutated values
are reported through the state payload, never re-serialized as documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .gluing import GluedSeed
from .seeds import Seed, SeedError, arrows_from_matrix, initial_seed


class SeedDocumentError(ValueError):
    """Malformed document text or schema."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass
class SeedDocument:
    variables: list[dict[str, Any]]
    matrix: list[list[int]] | None = None
    arrows: list[dict[str, Any]] | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_seed(self) -> Seed:
        triples = [(v["name"], bool(v["frozen"]), int(v["degree"])) for v in self.variables]
        try:
            if self.arrows is not None:
                return initial_seed(
                    triples,
                    arrows=[(a["from"], a["to"], int(a.get("mult", 1))) for a in self.arrows],
                )
            return initial_seed(triples, matrix=self.matrix)
        except SeedError as exc:
            raise SeedDocumentError(str(exc)) from exc

    def to_json(self) -> str:
        body: dict[str, Any] = {"variables": self.variables, "metadata": self.metadata}
        if self.arrows is not None:
            body["arrows"] = self.arrows
        else:
            body["matrix"] = self.matrix
        return json.dumps(body, sort_keys=True, indent=2) + "\n"


def parse_seed_document(text: str) -> SeedDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SeedDocumentError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        ) from None
    if not isinstance(raw, dict):
        raise SeedDocumentError("document must be a JSON object")
    if "variables" not in raw or not isinstance(raw["variables"], list):
        raise SeedDocumentError("document needs a 'variables' list")
    has_matrix = "matrix" in raw
    has_arrows = "arrows" in raw
    if has_matrix == has_arrows:
        raise SeedDocumentError("document needs exactly one of 'matrix' or 'arrows'")
    variables = []
    for i, v in enumerate(raw["variables"]):
        if not isinstance(v, dict) or not {"name", "frozen", "degree"} <= set(v):
            raise SeedDocumentError(
                f"variable #{i} must be an object with name/frozen/degree"
            )
        variables.append(
            {"name": str(v["name"]), "frozen": bool(v["frozen"]), "degree": int(v["degree"])}
        )
    arrows = None
    matrix = None
    if has_arrows:
        arrows = []
        for i, a in enumerate(raw["arrows"]):
            if not isinstance(a, dict) or not {"from", "to"} <= set(a):
                raise SeedDocumentError(f"arrow #{i} must be an object with from/to")
            arrows.append(
                {"from": str(a["from"]), "to": str(a["to"]), "mult": int(a.get("mult", 1))}
            )
        arrows.sort(key=lambda a: (a["from"], a["to"]))
    else:
        matrix = [[int(e) for e in row] for row in raw["matrix"]]
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict):
        raise SeedDocumentError("'metadata' must be an object")
    return SeedDocument(variables=variables, matrix=matrix, arrows=arrows, metadata=metadata)


def parse_seed(text: str) -> Seed:
    return parse_seed_document(text).to_seed()


def document_from_seed(
    seed: Seed, *, metadata: dict[str, Any] | None = None, form: str = "arrows"
) -> SeedDocument:
    """Document form of an initial seed (values must still be generators)."""
    for sv in seed.variables:
        if sv.value != seed.universe.gen(sv.var):
            raise SeedDocumentError(
                "only initial seeds are document-representable; "
                f"the value of {sv.var.name} is {sv.value.render()}"
            )
    variables = [
        {"name": sv.var.name, "frozen": sv.frozen, "degree": g}
        for sv, g in zip(seed.variables, seed.grading)
    ]
    doc = SeedDocument(variables=variables, metadata=metadata or {})
    if form == "arrows":
        doc.arrows = [
            {"from": a.name, "to": b.name, "mult": m}
            for a, b, m in arrows_from_matrix(seed.matrix, seed.frozen_vars())
        ]
        doc.arrows.sort(key=lambda a: (a["from"], a["to"]))
    elif form == "matrix":
        doc.matrix = [list(row) for row in seed.matrix.entries]
    else:
        raise ValueError(f"unknown document form {form!r}")
    return doc


def render_seed(seed: Seed, *, metadata: dict[str, Any] | None = None, form: str = "arrows") -> str:
    return document_from_seed(seed, metadata=metadata, form=form).to_json()


# -- state payloads (shared verbatim by the CLI and the service) -----------------


def seed_state(seed: Seed, *, glued: GluedSeed | None = None) -> dict[str, Any]:
    vertices = [
        {
            "name": sv.var.name,
            "frozen": sv.frozen,
            "degree": g,
            "value": sv.value.render(),
        }
        for sv, g in zip(seed.variables, seed.grading)
    ]
    arrows = [
        {"from": a.name, "to": b.name, "mult": m}
        for a, b, m in arrows_from_matrix(seed.matrix, seed.frozen_vars())
    ]
    arrows.sort(key=lambda a: (a["from"], a["to"]))
    state: dict[str, Any] = {
        "vertices": vertices,
        "arrows": arrows,
        "proxy": glued.proxy.name if glued is not None else None,
    }
    return state


def state_summary(state: dict[str, Any]) -> str:
    """Human-readable rendering of a state payload."""
    lines = []
    arrow_bits = []
    for a in state["arrows"]:
        suffix = f" *{a['mult']}" if a["mult"] != 1 else ""
        arrow_bits.append(f"{a['from']} -> {a['to']}{suffix}")
    lines.append("quiver: " + (", ".join(arrow_bits) if arrow_bits else "(no arrows)"))
    if state.get("proxy"):
        lines.append(f"proxy: {state['proxy']}")
    lines.append("variables:")
    width = max(len(v["name"]) for v in state["vertices"])
    for v in state["vertices"]:
        kind = "frozen " if v["frozen"] else "mutable"
        lines.append(
            f"  {v['name']:<{width}}  {kind}  deg {v['degree']:>3}  {v['value']}"
        )
    return "\n".join(lines) + "\n"
