import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from strata import Diagram, Signature
from strata.errors import (
    DocumentSyntaxError,
    IllDefinedDiagram,
    StepInapplicable,
    UnknownReference,
)
from strata.fuzz import random_diagram, random_signature
from strata.proofdoc import (
    Proof,
    ProofDocument,
    Step,
    apply_step,
    check_document,
    diagram_to_expr,
    expr_to_diagram,
    parse_document,
    serialize_document,
)

CORPUS = Path(__file__).resolve().parents[1] / "src" / "strata" / "corpus"

from conftest import wire_word


def minimal_doc():
    sig = Signature(0)
    sig.add_generator("pt", 0)
    return ProofDocument(version=1, signature=sig,
                         diagrams={"only": Diagram.point(sig, "pt")})


def star_doc(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    return ProofDocument(version=1, signature=star_sig, diagrams={"d": d})


def test_minimal_document_round_trip():
    text = serialize_document(minimal_doc())
    doc = parse_document(text)
    assert doc.proof is None
    assert serialize_document(doc) == text


def test_embedding_lists_round_trip(star_sig):
    text = serialize_document(star_doc(star_sig))
    doc = parse_document(text)
    assert doc.diagrams["d"].entries[1].embedding == (1,)
    assert serialize_document(doc) == text


def test_dangling_reference_reported(star_sig):
    text = serialize_document(star_doc(star_sig))
    broken = text.replace('"g": "s"', '"g": "ghost"', 1)
    with pytest.raises(UnknownReference) as err:
        parse_document(broken)
    assert "ghost" in str(err.value)


def test_syntax_error_carries_position():
    with pytest.raises(DocumentSyntaxError) as err:
        parse_document("{\n  broken\n}")
    assert "line" in str(err.value)


def test_ill_defined_diagram_rejected(star_sig):
    doc = star_doc(star_sig)
    doc.diagrams["bad"] = Diagram.layered(wire_word(star_sig, 2), [("m", (2,))])
    with pytest.raises(IllDefinedDiagram):
        parse_document(serialize_document(doc))


def test_empty_diagrams_map_serializes_explicitly():
    sig = Signature(0)
    sig.add_generator("pt", 0)
    text = serialize_document(ProofDocument(version=1, signature=sig, diagrams={}))
    assert '"diagrams": {}' in text


def test_generator_ordering_is_canonical(star_sig):
    text = serialize_document(star_doc(star_sig))
    names = [line.split('"')[3] for line in text.splitlines() if '"name"' in line]
    records = [(star_sig.generator(n).dim, n) for n in names]
    assert records == sorted(records)


def test_serialize_is_canonicalizing(star_sig):
    text = serialize_document(star_doc(star_sig))
    scrambled = json.dumps(json.loads(text), indent=4, sort_keys=True)
    again = serialize_document(parse_document(scrambled))
    assert again == text


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_random_documents_round_trip(seed):
    rng = random.Random(seed)
    sig = random_signature(rng)
    diagrams = {f"d{i}": random_diagram(rng, sig, rng.randint(1, 3))
                for i in range(rng.randint(0, 3))}
    text = serialize_document(ProofDocument(version=1, signature=sig, diagrams=diagrams))
    doc = parse_document(text)
    assert serialize_document(doc) == text
    for name, d in diagrams.items():
        assert diagram_to_expr(doc.diagrams[name]) == diagram_to_expr(d)


def test_expr_round_trip(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (1,)), ("s", (0,))])
    assert expr_to_diagram(diagram_to_expr(d), star_sig) == d


# -- steps and replay ----------------------------------------------------


def test_attach_at_target_grows_height(star_sig):
    state = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    out = apply_step(state, Step("attach", {"generator": "s", "side": "target", "e": [0]}),
                     star_sig)
    assert len(out) == len(state) + 1
    assert out.entries[-1] == ("s", (0,))


def test_attach_at_source_prepends(star_sig):
    state = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    out = apply_step(state, Step("attach", {"generator": "m", "side": "source", "e": [0]}),
                     star_sig)
    assert out.source == wire_word(star_sig, 2)
    assert out.entries[0] == ("m", (0,))
    assert out.target() == state.target()


def test_homotopy_step_swaps(star_sig):
    state = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    out = apply_step(state, Step("homotopy", {"family": "I", "height": 0,
                                              "direction": "backward"}), star_sig)
    assert out == Diagram.layered(wire_word(star_sig, 2), [("s", (1,)), ("s", (0,))])


def test_invert_intro_requires_marked_cell(star_sig):
    state = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    with pytest.raises(StepInapplicable):
        apply_step(state, Step("invert_intro", {"cell": "s"}), star_sig)
    star_sig.mark_invertible("s")
    out = apply_step(state, Step("invert_intro", {"cell": "s"}), star_sig)
    assert out == state
    assert star_sig.generator("s").invertibility.unit_witness is not None


def test_zero_step_proof_succeeds(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,))])
    doc = ProofDocument(version=1, signature=star_sig, diagrams={"d": d},
                        proof=Proof(start="d", goal="d", steps=[]))
    assert check_document(doc).ok


def test_interchange_and_inverse_script(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    doc = ProofDocument(version=1, signature=star_sig, diagrams={"d": d},
                        proof=Proof(start="d", goal="d", steps=[
                            Step("homotopy", {"family": "I", "height": 0,
                                              "direction": "backward"}),
                            Step("homotopy", {"family": "I", "height": 0,
                                              "direction": "forward"}),
                        ]))
    report = check_document(doc)
    assert report.ok and [s.height for s in report.steps] == [2, 2]


def test_out_of_range_step_fails_with_index(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    doc = ProofDocument(version=1, signature=star_sig, diagrams={"d": d},
                        proof=Proof(start="d", goal="d", steps=[
                            Step("homotopy", {"family": "I", "height": 0,
                                              "direction": "backward"}),
                            Step("homotopy", {"family": "I", "height": 7,
                                              "direction": "forward"}),
                        ]))
    report = check_document(doc)
    assert not report.ok and report.failed_at == 1


def test_replay_determinism(star_sig):
    text = (CORPUS / "interchange_demo.hdprf").read_text()
    first = check_document(parse_document(text)).to_json()
    second = check_document(parse_document(text)).to_json()
    assert first == second


@pytest.mark.parametrize("name", ["interchange_demo.hdprf", "pullthrough_demo.hdprf",
                                  "adjunction_demo.hdprf"])
def test_corpus_documents_check(name):
    golden = json.loads((Path(__file__).parent / "golden" / "corpus_heights.json").read_text())
    text = (CORPUS / name).read_text()
    doc = parse_document(text)
    assert serialize_document(doc) == text  # before replay extends the signature
    report = check_document(doc)
    assert report.ok == golden[name]["ok"]
    assert [s.height for s in report.steps] == golden[name]["heights"]
