"""Session-oriented HTTP API for the interactive playground.

A session holds the document(s) it was created from plus the list of
mutations applied so far; the current seed is always recomputed by
replaying that history, so undo is just dropping the last entry. Every
response is a pure function of the session content. Verification
endpoints clamp their bounds to keep requests interactive.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .gluing import GluedSeed, GluePair, GlueError, make_glue_pair, verify_tensor_map
from .explore import verify_correspondence, verify_counts
from .seedio import SeedDocument, SeedDocumentError, parse_seed_document, seed_state
from .seeds import MutationError, Seed, SeedError, mutate_seed

MAX_VERIFY_DEPTH = 6
MAX_VERIFY_NODES = 10_000


class CreateSessionRequest(BaseModel):
    seeds: list[dict]
    glue: Optional[dict] = None  # {"left": vertex, "right": vertex}


class MutateRequest(BaseModel):
    vertex: str


class GluePreviewRequest(BaseModel):
    left_session: str
    right_session: str
    left_vertex: str
    right_vertex: str


class VerifyRequest(BaseModel):
    kind: str  # theorem | corollary | correspondence
    depth: int = 4
    max_nodes: int = 1000
    max_depth: int = 16


@dataclass
class Session:
    id: str
    documents: list[SeedDocument]
    glue_pair: Optional[tuple[str, str]]
    history: list[str] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def factors(self) -> list[Seed]:
        return [doc.to_seed() for doc in self.documents]

    def initial(self) -> tuple[Seed, Optional[GluedSeed]]:
        seeds = self.factors()
        if self.glue_pair is not None:
            pair = make_glue_pair(
                seeds[0], self.glue_pair[0], seeds[1], self.glue_pair[1]
            )
            return pair.glued.seed, pair.glued
        return seeds[0], None

    def current(self) -> tuple[Seed, Optional[GluedSeed]]:
        seed, glued = self.initial()
        for vertex in self.history:
            seed = mutate_seed(seed, vertex)
        return seed, glued

    def pair(self) -> GluePair:
        if self.glue_pair is None:
            raise HTTPException(
                status_code=422,
                detail={"reason": "session is not a glued session"},
            )
        seeds = self.factors()
        return make_glue_pair(seeds[0], self.glue_pair[0], seeds[1], self.glue_pair[1])


def _state_payload(session: Session) -> dict[str, Any]:
    seed, glued = session.current()
    state = seed_state(seed, glued=glued)
    state["history"] = list(session.history)
    return {"session": session.id, "state": state}


def create_app() -> FastAPI:
    app = FastAPI(title="clusterglue", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def get_session(session_id: str) -> Session:
        with registry_lock:
            session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail={"reason": "unknown session"})
        return session

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionRequest) -> dict[str, Any]:
        if len(body.seeds) not in (1, 2):
            raise HTTPException(
                status_code=422, detail={"reason": "provide one or two seed documents"}
            )
        if (len(body.seeds) == 2) != (body.glue is not None):
            raise HTTPException(
                status_code=422,
                detail={"reason": "two documents need a glue pair, one document forbids it"},
            )
        try:
            documents = [
                parse_seed_document(_as_json_text(doc)) for doc in body.seeds
            ]
            glue_pair = None
            if body.glue is not None:
                glue_pair = (str(body.glue["left"]), str(body.glue["right"]))
            session = Session(
                id=uuid.uuid4().hex,
                documents=documents,
                glue_pair=glue_pair,
            )
            session.initial()  # validate now, not on first use
        except (SeedDocumentError, SeedError) as exc:
            raise HTTPException(status_code=422, detail={"reason": str(exc)})
        except GlueError as exc:
            raise HTTPException(status_code=422, detail=_glue_error_payload(exc))
        except KeyError as exc:
            raise HTTPException(
                status_code=422, detail={"reason": f"glue pair needs {exc} entry"}
            )
        with registry_lock:
            sessions[session.id] = session
        return _state_payload(session)

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str) -> dict[str, Any]:
        return _state_payload(get_session(session_id))

    @app.post("/sessions/{session_id}/mutate")
    def mutate(session_id: str, body: MutateRequest) -> dict[str, Any]:
        session = get_session(session_id)
        with session.lock:
            seed, _ = session.current()
            try:
                seed.resolve(body.vertex)
            except MutationError:
                raise HTTPException(
                    status_code=422, detail={"reason": f"unknown vertex {body.vertex!r}"}
                )
            if seed.is_frozen(body.vertex):
                raise HTTPException(
                    status_code=409,
                    detail={
                        "reason": "frozen vertex cannot be mutated",
                        "vertex": body.vertex,
                    },
                )
            session.history.append(body.vertex)
            return _state_payload(session)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str) -> dict[str, Any]:
        session = get_session(session_id)
        with session.lock:
            if not session.history:
                raise HTTPException(
                    status_code=409, detail={"reason": "nothing to undo"}
                )
            session.history.pop()
            return _state_payload(session)

    @app.post("/glue-preview")
    def glue_preview(body: GluePreviewRequest) -> dict[str, Any]:
        left = get_session(body.left_session)
        right = get_session(body.right_session)
        s1, g1 = left.current()
        s2, g2 = right.current()
        if g1 is not None or g2 is not None:
            raise HTTPException(
                status_code=422, detail={"reason": "glue-preview expects factor sessions"}
            )
        try:
            pair = make_glue_pair(s1, body.left_vertex, s2, body.right_vertex)
        except GlueError as exc:
            raise HTTPException(status_code=422, detail=_glue_error_payload(exc))
        state = seed_state(pair.glued.seed, glued=pair.glued)
        return {"state": state}

    @app.post("/sessions/{session_id}/verify")
    def verify(session_id: str, body: VerifyRequest) -> dict[str, Any]:
        session = get_session(session_id)
        if session.glue_pair is None:
            raise HTTPException(
                status_code=422,
                detail={"reason": "verification needs a glued session"},
            )
        seeds = session.factors()
        x, y = session.glue_pair
        depth = min(body.depth, MAX_VERIFY_DEPTH)
        max_nodes = min(body.max_nodes, MAX_VERIFY_NODES)
        max_depth = min(body.max_depth, MAX_VERIFY_NODES)
        try:
            if body.kind == "theorem":
                report = verify_tensor_map(seeds[0], x, seeds[1], y, depth=depth)
            elif body.kind == "corollary":
                report = verify_counts(seeds[0], x, seeds[1], y, max_nodes, max_depth)
            elif body.kind == "correspondence":
                report = verify_correspondence(
                    seeds[0], x, seeds[1], y, max_nodes, max_depth
                )
            else:
                raise HTTPException(
                    status_code=422, detail={"reason": f"unknown check {body.kind!r}"}
                )
        except GlueError as exc:
            raise HTTPException(status_code=422, detail=_glue_error_payload(exc))
        return report.to_dict()

    ui_dir = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"
    if ui_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def _as_json_text(doc: dict) -> str:
    import json

    return json.dumps(doc)


def _glue_error_payload(exc: GlueError) -> dict[str, Any]:
    import re

    payload: dict[str, Any] = {"reason": str(exc)}
    m = re.search(r"degree mismatch: deg\(\w+\) = (-?\d+) but deg\(\w+\) = (-?\d+)", str(exc))
    if m:
        payload.update(
            {"reason": "degree mismatch", "left": int(m.group(1)), "right": int(m.group(2))}
        )
    return payload


app = create_app()
