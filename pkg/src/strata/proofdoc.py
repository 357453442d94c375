"""Proof documents: serialization of signatures, diagrams and proof scripts,
plus batch checking by replay.

The on-disk format (.hdprf) is JSON. A 0-diagram is {"g": id}; an n-diagram is
{"source": expr, "entries": [{"g": id, "e": [heights...]}...]}. The canonical
form uses two-space indentation, generators ordered by dimension then name,
and diagram names in sorted order, so serialize(parse(text)) is a fixed point
and parse(serialize(doc)) returns an equal document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .compose import compose
from .diagram import Diagram, rewrite, well_defined, well_defined_embedding
from .errors import (
    DocumentSyntaxError,
    IllDefinedDiagram,
    KernelError,
    StepInapplicable,
    UnknownReference,
)
from .homotopy import (
    BACKWARD,
    FORWARD,
    LEFT_DOWN,
    RIGHT_DOWN,
    MoveKind,
    MoveLocation,
    apply_higher_move,
    apply_interchange,
    apply_pullthrough,
    expand_interchange,
    expand_pullthrough,
    replay_move,
)
from .signature import InvertibilityData, Signature

FORMAT_VERSION = 1


@dataclass
class Step:
    move: str          # attach | homotopy | invert_intro
    data: dict = field(default_factory=dict)


@dataclass
class Proof:
    start: str
    goal: str
    steps: list


@dataclass
class ProofDocument:
    version: int
    signature: Signature
    diagrams: dict
    proof: Optional[Proof] = None

    def __eq__(self, other):
        if not isinstance(other, ProofDocument):
            return NotImplemented
        return serialize_document(self) == serialize_document(other)


# -- diagram expressions -----------------------------------------------------


def diagram_to_expr(d: Diagram) -> dict:
    if d.dim == 0:
        return {"g": d.generator}
    return {"source": diagram_to_expr(d.source),
            "entries": [{"g": g, "e": list(e)} for g, e in d.entries]}


def expr_to_diagram(expr, sig: Signature) -> Diagram:
    if not isinstance(expr, dict):
        raise DocumentSyntaxError(f"diagram expression must be an object, got {type(expr).__name__}")
    if "g" in expr and "source" not in expr:
        name = expr["g"]
        if name not in sig:
            raise UnknownReference(f"unknown generator {name!r}")
        return Diagram.point(sig, name)
    try:
        source = expr_to_diagram(expr["source"], sig)
        entries = [(item["g"], tuple(item["e"])) for item in expr.get("entries", [])]
    except (KeyError, TypeError) as err:
        raise DocumentSyntaxError(f"malformed diagram expression: {err}") from None
    for gen, _ in entries:
        if gen not in sig:
            raise UnknownReference(f"unknown generator {gen!r}")
    return Diagram.layered(source, entries)


# -- documents ----------------------------------------------------------------


def _generator_record(sig, record) -> dict:
    out = {"name": record.name, "dim": record.dim}
    if record.dim > 0:
        out["source"] = diagram_to_expr(record.source)
        out["target"] = diagram_to_expr(record.target)
    if record.invertibility is not None:
        data = record.invertibility
        inv = {"inverse": data.inverse}
        if data.unit_witness is not None:
            inv["unit_witness"] = data.unit_witness
        if data.counit_witness is not None:
            inv["counit_witness"] = data.counit_witness
        out["invertible"] = inv
    tag = record.tag
    if tag is not None:
        out["move"] = {"family": tag.family, "primed": tag.primed, "inverse": tag.inverse}
    return out


def serialize_document(doc: ProofDocument) -> str:
    generators = sorted(doc.signature.generators(), key=lambda g: (g.dim, g.name))
    body = {
        "version": doc.version,
        "signature": {
            "top_dim": doc.signature.top_dim,
            "generators": [_generator_record(doc.signature, g) for g in generators],
        },
        "diagrams": {name: diagram_to_expr(doc.diagrams[name])
                     for name in sorted(doc.diagrams)},
    }
    if doc.proof is not None:
        body["proof"] = {
            "start": doc.proof.start,
            "goal": doc.proof.goal,
            "steps": [dict({"move": s.move}, **s.data) for s in doc.proof.steps],
        }
    return json.dumps(body, indent=2, ensure_ascii=False) + "\n"


def parse_document(text: str) -> ProofDocument:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentSyntaxError(f"line {err.lineno}, column {err.colno}: {err.msg}") from None
    if not isinstance(body, dict):
        raise DocumentSyntaxError("document root must be an object")
    version = body.get("version", FORMAT_VERSION)
    sig_body = body.get("signature")
    if not isinstance(sig_body, dict) or "generators" not in sig_body:
        raise DocumentSyntaxError("missing signature section")
    records = sorted(sig_body["generators"], key=lambda g: (g.get("dim", 0), g.get("name", "")))
    sig = Signature(int(sig_body.get("top_dim", max((g.get("dim", 0) for g in records), default=0))))
    for item in records:
        try:
            name, dim = item["name"], int(item["dim"])
        except (KeyError, TypeError, ValueError) as err:
            raise DocumentSyntaxError(f"malformed generator record: {err}") from None
        source = target = None
        if dim > 0:
            if "source" not in item or "target" not in item:
                raise DocumentSyntaxError(f"generator {name!r} lacks boundaries")
            source = expr_to_diagram(item["source"], sig)
            target = expr_to_diagram(item["target"], sig)
        tag = None
        if "move" in item:
            move = item["move"]
            tag = MoveKind(move["family"], primed=bool(move.get("primed")),
                           inverse=bool(move.get("inverse")))
        try:
            sig.add_generator(name, dim, source=source, target=target, tag=tag, extend=True)
        except KernelError as err:
            raise IllDefinedDiagram(f"generator {name!r}: {err}") from None
    for item in records:
        inv = item.get("invertible")
        if inv:
            if inv["inverse"] not in sig:
                raise UnknownReference(f"unknown inverse {inv['inverse']!r}")
            sig.generator(item["name"]).invertibility = InvertibilityData(
                inverse=inv["inverse"],
                unit_witness=inv.get("unit_witness"),
                counit_witness=inv.get("counit_witness"),
            )
    diagrams = {}
    for name, expr in body.get("diagrams", {}).items():
        d = expr_to_diagram(expr, sig)
        result = well_defined(d, sig)
        if not result:
            raise IllDefinedDiagram(f"diagram {name!r} is ill-defined: {result.reason}")
        diagrams[name] = d
    proof = None
    if "proof" in body:
        proof_body = body["proof"]
        try:
            steps = [Step(move=item["move"],
                          data={k: v for k, v in item.items() if k != "move"})
                     for item in proof_body.get("steps", [])]
            proof = Proof(start=proof_body["start"], goal=proof_body["goal"], steps=steps)
        except (KeyError, TypeError) as err:
            raise DocumentSyntaxError(f"malformed proof section: {err}") from None
        for name in (proof.start, proof.goal):
            if name not in diagrams:
                raise UnknownReference(f"proof references unknown diagram {name!r}")
    return ProofDocument(version=version, signature=sig, diagrams=diagrams, proof=proof)


# -- replay --------------------------------------------------------------------


def apply_step(state: Diagram, step: Step, sig: Signature) -> Diagram:
    """One proof step: attach a generator at a boundary, apply a homotopy
    move, or introduce coinductive witness cells."""
    try:
        if step.move == "attach":
            return _apply_attach(state, step.data, sig)
        if step.move == "homotopy":
            return _apply_homotopy(state, step.data, sig)
        if step.move == "invert_intro":
            return _apply_invert_intro(state, step.data, sig)
    except StepInapplicable:
        raise
    except KernelError as err:
        raise StepInapplicable(f"{step.move}: {err}") from None
    except (KeyError, TypeError, ValueError) as err:
        raise StepInapplicable(f"{step.move}: malformed step data ({err})") from None
    raise StepInapplicable(f"unknown step kind {step.move!r}")


def _apply_attach(state, data, sig):
    record = sig.generator(data["generator"])
    if record.dim != state.dim:
        raise StepInapplicable(
            f"attach needs a {state.dim}-cell, {record.name!r} has dimension {record.dim}")
    e = tuple(data.get("e", ()))
    side = data.get("side", "target")
    if side == "target":
        boundary = state.target()
        if not well_defined_embedding(e, record.source, boundary):
            raise StepInapplicable(f"{record.name!r} does not embed in the target boundary")
        layer = Diagram.layered(boundary, [(record.name, e)])
        return compose(state, layer)
    if side == "source":
        boundary = state.source
        if not well_defined_embedding(e, record.target, boundary):
            raise StepInapplicable(f"{record.name!r} target does not embed in the source boundary")
        below = rewrite(boundary, e, record.target, record.source)
        layer = Diagram.layered(below, [(record.name, e)])
        return compose(layer, state)
    raise StepInapplicable(f"unknown attach side {side!r}")


def _apply_homotopy(state, data, sig):
    family = data["family"]
    direction = data.get("direction", FORWARD)
    height = int(data["height"])
    composite = data.get("composite", "atomic")
    if family == "I":
        if composite == "tilde":
            for inst in expand_interchange(state, (height, int(data["left"]), int(data["right"]))):
                state = replay_move(state, inst)
            return state
        down = LEFT_DOWN if direction == FORWARD else RIGHT_DOWN
        out, _ = apply_interchange(state, height, down)
        return out
    if family == "II":
        variant = data.get("variant", "front")
        if data.get("primed") and not variant.startswith("primed"):
            variant = "primed-" + variant
        if composite == "tilde":
            block = (height, int(data["cells"]), int(data["crossings"]))
            for inst in expand_pullthrough(state, block, variant):
                state = replay_move(state, inst)
            return state
        out, _ = apply_pullthrough(state, height, variant, direction)
        return out
    if family in ("III", "IV", "V", "VI"):
        kind = MoveKind(family, primed=bool(data.get("primed")))
        loc = MoveLocation(height, tuple(data.get("coords", ())))
        out, _ = apply_higher_move(state, loc, kind, direction)
        return out
    raise StepInapplicable(f"unknown move family {family!r}")


def _apply_invert_intro(state, data, sig):
    record = sig.generator(data["cell"])
    if record.invertibility is None:
        raise StepInapplicable(f"{record.name!r} is not marked invertible")
    if record.dim + 1 <= sig.top_dim:
        sig.unit_witness(record.name)
        sig.counit_witness(record.name)
    return state


@dataclass
class StepReport:
    index: int
    move: str
    height: int

    def line(self) -> str:
        return f"  step {self.index}: {self.move} -> height {self.height}"


@dataclass
class Report:
    ok: bool
    steps: list
    failure: Optional[str] = None
    failed_at: Optional[int] = None
    goal_matched: bool = False

    def text(self) -> str:
        lines = [step.line() for step in self.steps]
        if self.failure is not None:
            lines.append(f"  FAILED at step {self.failed_at}: {self.failure}")
        lines.append("  result: " + ("success" if self.ok else "failure"))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "steps": [{"index": s.index, "move": s.move, "height": s.height}
                      for s in self.steps],
            "failure": self.failure,
            "failed_at": self.failed_at,
            "goal_matched": self.goal_matched,
        }


def check_document(doc: ProofDocument) -> Report:
    """Replay the proof script from the start diagram; succeed when every
    step applies and the final diagram equals the goal."""
    if doc.proof is None:
        return Report(ok=False, steps=[], failure="document has no proof section")
    state = doc.diagrams[doc.proof.start]
    reports = []
    for index, step in enumerate(doc.proof.steps):
        try:
            next_state = apply_step(state, step, doc.signature)
        except StepInapplicable as err:
            return Report(ok=False, steps=reports, failure=str(err), failed_at=index)
        if step.move == "homotopy":
            if next_state.source != state.source or next_state.target() != state.target():
                return Report(ok=False, steps=reports,
                              failure="homotopy step changed the boundary", failed_at=index)
        state = next_state
        reports.append(StepReport(index=index, move=step.move, height=len(state)))
    matched = state == doc.diagrams[doc.proof.goal]
    return Report(ok=matched, steps=reports, goal_matched=matched,
                  failure=None if matched else "final diagram differs from the goal",
                  failed_at=None if matched else len(doc.proof.steps))
