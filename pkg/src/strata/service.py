"""Local HTTP facade: sessions over a proof document, move listing, apply and
undo, projections, and document export.

Sessions are in-memory. Mutations on one session are serialized behind a
lock; distinct sessions are independent. The state always equals the replay
of the recorded steps from the document's start diagram.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .diagram import Diagram, well_defined
from .errors import KernelError, StepInapplicable
from .homotopy import moves_at
from .proofdoc import (
    Proof,
    ProofDocument,
    Step,
    apply_step,
    diagram_to_expr,
    parse_document,
    serialize_document,
)
from .render import project, scene_to_svg


@dataclass
class Session:
    id: str
    doc: ProofDocument
    start_name: str
    states: list          # diagrams, oldest first; last is current
    steps: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def state(self) -> Diagram:
        return self.states[-1]


def _state_payload(session: Session) -> dict:
    state = session.state
    return {
        "session": session.id,
        "diagram": diagram_to_expr(state),
        "dim": state.dim,
        "height": len(state),
        "steps": [dict({"move": s.move}, **s.data) for s in session.steps],
    }


def create_app(default_document: Optional[str] = None,
               frontend_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="strata service")
    sessions: dict[str, Session] = {}

    def fetch(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise Lookup(session_id)
        return session

    class Lookup(Exception):
        def __init__(self, sid):
            self.sid = sid

    @app.exception_handler(Lookup)
    async def missing_session(_, exc: Lookup):
        return JSONResponse({"error": f"unknown session {exc.sid!r}"}, status_code=404)

    @app.post("/sessions")
    async def create_session(request: Request):
        raw = (await request.body()).decode("utf-8", errors="replace").strip()
        text = raw or (default_document or "")
        if not text:
            return JSONResponse({"error": "no document supplied"}, status_code=400)
        try:
            doc = parse_document(text)
        except KernelError as err:
            return JSONResponse({"error": str(err)}, status_code=422)
        if doc.proof is not None:
            start_name = doc.proof.start
        elif len(doc.diagrams) == 1:
            start_name = next(iter(doc.diagrams))
        else:
            return JSONResponse(
                {"error": "document needs a proof section or a single diagram"},
                status_code=422)
        session = Session(id=uuid.uuid4().hex[:12], doc=doc, start_name=start_name,
                          states=[doc.diagrams[start_name]])
        sessions[session.id] = session
        return JSONResponse(_state_payload(session), status_code=201)

    @app.get("/sessions/{session_id}/state")
    async def get_state(session_id: str):
        return _state_payload(fetch(session_id))

    @app.get("/sessions/{session_id}/moves")
    async def list_moves(session_id: str, height: int = 0, coords: str = ""):
        session = fetch(session_id)
        try:
            parsed = tuple(int(c) for c in coords.split(",") if c != "")
        except ValueError:
            return JSONResponse({"error": f"malformed coords {coords!r}"}, status_code=400)
        found = moves_at(session.state, height, parsed)
        return {"height": height, "coords": list(parsed), "moves": found}

    @app.post("/sessions/{session_id}/apply")
    async def apply(session_id: str, request: Request):
        session = fetch(session_id)
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "malformed step body"}, status_code=400)
        if not isinstance(body, dict) or "move" not in body:
            return JSONResponse({"error": "step body needs a 'move' field"}, status_code=400)
        step = Step(move=body["move"], data={k: v for k, v in body.items() if k != "move"})
        with session.lock:
            state = session.state
            try:
                new_state = apply_step(state, step, session.doc.signature)
            except StepInapplicable as err:
                return JSONResponse({"error": str(err)}, status_code=409)
            if step.move == "homotopy" and (new_state.source != state.source
                                            or new_state.target() != state.target()):
                return JSONResponse({"error": "move would change the boundary"},
                                    status_code=409)
            if not well_defined(new_state, session.doc.signature):
                return JSONResponse({"error": "step produced an ill-defined diagram"},
                                    status_code=409)
            session.states.append(new_state)
            session.steps.append(step)
        return _state_payload(session)

    @app.post("/sessions/{session_id}/undo")
    async def undo(session_id: str):
        session = fetch(session_id)
        with session.lock:
            if len(session.states) == 1:
                return JSONResponse({"error": "history is empty"}, status_code=409)
            session.states.pop()
            session.steps.pop()
        return _state_payload(session)

    @app.get("/sessions/{session_id}/projection")
    async def projection(session_id: str):
        session = fetch(session_id)
        return project(session.state, session.doc.signature).to_json()

    @app.get("/sessions/{session_id}/projection.svg")
    async def projection_svg(session_id: str):
        session = fetch(session_id)
        svg = scene_to_svg(project(session.state, session.doc.signature))
        return PlainTextResponse(svg, media_type="image/svg+xml")

    @app.get("/sessions/{session_id}/document")
    async def export(session_id: str):
        session = fetch(session_id)
        with session.lock:
            doc = session.doc
            diagrams = dict(doc.diagrams)
            diagrams["current"] = session.state
            out = ProofDocument(
                version=doc.version, signature=doc.signature, diagrams=diagrams,
                proof=Proof(start=session.start_name, goal="current",
                            steps=list(session.steps)))
            text = serialize_document(out)
        return PlainTextResponse(text, media_type="application/json")

    if frontend_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="ui")

    return app
