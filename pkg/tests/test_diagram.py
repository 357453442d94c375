"""Kernel operations on small hand-checked diagrams.

Derived expectations below were computed by unfolding the definitions by hand
(splicing generator lists for rewrites, recursive unfolding for embedding
composition) before being frozen into assertions.
"""

import pytest

from strata import (
    Diagram,
    compose_embeddings,
    equivalent,
    embeddings_into,
    globular,
    identity_embedding,
    lift,
    rewrite,
    well_defined,
    well_defined_embedding,
    window,
)
from strata.errors import (
    DimensionMismatch,
    EmbeddingIllDefined,
    HeightOutOfRange,
    NotGlobular,
)

from conftest import wire_word


def compose_literal(f, e, mid):
    """Literal recursive unfolding of embedding composition: the top heights
    add and the tails compose across the slice of the middle diagram at e's
    height. Kept independent of the kernel's elementwise-sum shortcut."""
    if len(f) == 0:
        return ()
    lifted_tail = tuple(f[1:])  # lift keeps the height data
    return (e[0] + f[0],) + compose_literal(lifted_tail, e[1:], mid.slice(e[0]))


def test_slice_zero_is_source(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (0,)), ("m", (0,))])
    assert d.slice(0) == wire_word(star_sig, 3)


def test_slice_splices_by_hand(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (0,)), ("m", (0,))])
    assert d.slice(1) == wire_word(star_sig, 2)
    assert d.slice(2) == wire_word(star_sig, 1)


def test_slice_of_endomorphism_entry(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("s", (1,))])
    assert d.slice(1) == wire_word(star_sig, 3)


def test_slice_out_of_range(star_sig):
    d = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    with pytest.raises(HeightOutOfRange):
        d.slice(2)


def test_target_of_identity_is_source(star_sig):
    word = wire_word(star_sig, 2)
    ident = Diagram(2, None, word, (), star_sig)
    assert ident.target() == word


def test_target_by_hand(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (0,)), ("m", (0,))])
    assert d.target() == wire_word(star_sig, 1)
    assert star_sig.atom("m").target() == wire_word(star_sig, 1)


def test_rewrite_identity(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (0,)), ("m", (0,))])
    sub, e = window(d, 0, 1)
    assert rewrite(d, e, sub, sub) == d


def test_rewrite_size_law(star_sig):
    # |D| = 4, |S| = 2, |T| = 1 gives |result| = 3
    d = wire_word(star_sig, 4)
    s, t = wire_word(star_sig, 2), wire_word(star_sig, 1)
    assert len(rewrite(d, (1,), s, t)) == 4 - 2 + 1


def test_rewrite_wire_splice(star_sig):
    d = wire_word(star_sig, 3)
    out = rewrite(d, (1,), wire_word(star_sig, 1), wire_word(star_sig, 2))
    assert out == wire_word(star_sig, 4)


def test_rewrite_insertion_at_top(star_sig):
    # zero-height removed diagram at the top height is a legal insertion
    d = wire_word(star_sig, 2)
    empty = Diagram(1, None, Diagram.point(star_sig, "⋆"), (), star_sig)
    out = rewrite(d, (2,), empty, wire_word(star_sig, 1))
    assert out == wire_word(star_sig, 3)


def test_rewrite_rejects_non_globular(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,))])
    sub, e = window(d, 0, 1)
    other = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    with pytest.raises(NotGlobular):
        rewrite(d, e, sub, other)


def test_rewrite_rejects_overrun(star_sig):
    d = wire_word(star_sig, 2)
    with pytest.raises(EmbeddingIllDefined):
        rewrite(d, (1,), wire_word(star_sig, 2), wire_word(star_sig, 2))


def test_rewrite_rejects_deep_mismatch(star_sig):
    # bounds fit but the entry data does not match at the deeper level
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (1,))])
    pattern = star_sig.atom("s")
    with pytest.raises(EmbeddingIllDefined):
        rewrite(d, (0, 0), pattern, pattern)


def test_lift_keeps_height_data(star_sig):
    t = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    assert lift((1, 0), t) == (1, 0)
    assert lift(identity_embedding(t), t) == (0, 0)


def test_lift_checks_globularity(star_sig):
    t = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    s = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    with pytest.raises(NotGlobular):
        lift((0, 0), t, source=s)


def test_compose_embeddings_one_level():
    assert compose_embeddings((2,), (1,)) == (3,)


def test_compose_embeddings_matches_literal_recursion(star_sig):
    # [1,0] after [2,3] gives [3,3]; checked against the recursive definition
    d = Diagram.layered(wire_word(star_sig, 6), [("s", (3,)), ("s", (5,))])
    f, e = (1, 0), (0, 3)
    assert compose_embeddings(f, e) == (1, 3) == compose_literal(f, e, d)
    assert compose_embeddings((1, 0), (2, 3)) == (3, 3)


def test_compose_embeddings_dim_mismatch():
    with pytest.raises(DimensionMismatch):
        compose_embeddings((1,), (1, 0))


def test_identity_embedding_shapes(star_sig):
    assert identity_embedding(Diagram.point(star_sig, "⋆")) == ()
    two = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    assert identity_embedding(two) == (0, 0)


def test_identity_embedding_cancels(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    sub, e = window(d, 1, 2)
    assert compose_embeddings(identity_embedding(d), e) == e
    assert compose_embeddings(e, identity_embedding(sub)) == e


def test_equivalence(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    other = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (0,))])
    assert equivalent(d, d)
    assert not equivalent(d, other)
    sub, e = window(d, 0, 2)
    assert equivalent(rewrite(d, e, sub, sub), d)


def test_well_defined_atoms(star_sig):
    for name in ("⋆", "f", "m"):
        assert well_defined(star_sig.atom(name)).ok


def test_well_defined_embedding_overrun(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (2,))])
    result = well_defined(d)
    assert not result.ok
    assert result.path == (0,)


def test_well_defined_two_entries(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (0,)), ("m", (0,))])
    assert well_defined(d).ok


def test_well_defined_unknown_generator(star_sig):
    assert not well_defined(Diagram.point(star_sig, "ghost")).ok


def test_well_defined_failure_path_descends_sources(star_sig):
    bad_word = Diagram.layered(Diagram.point(star_sig, "ghost"), [("f", ())])
    d = Diagram(2, None, bad_word, (), star_sig)
    result = well_defined(d)
    assert not result.ok
    assert result.path[0] == "source"
    assert "ghost" in result.reason


def test_well_defined_embedding_examples(star_sig):
    inner = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    outer = Diagram.layered(wire_word(star_sig, 2), [("s", (1,))])
    assert well_defined_embedding((0, 1), inner, outer)
    assert not well_defined_embedding((1, 1), inner, outer)
    assert well_defined_embedding(identity_embedding(outer), outer, outer)


def test_globular_examples(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    assert globular(d, d)
    assert globular(d, star_sig.atom("m"))
    assert globular(wire_word(star_sig, 1), wire_word(star_sig, 2))
    with pytest.raises(DimensionMismatch):
        globular(d, wire_word(star_sig, 1))


def test_embeddings_into_enumerates(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("s", (0,)), ("s", (1,)), ("s", (2,))])
    single = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    found = embeddings_into(single, d)
    assert found == [(0, 0), (1, 1), (2, 2)]
    for e in found:
        assert well_defined_embedding(e, single, d)


def test_window_roundtrip(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (0,)), ("s", (1,)), ("s", (0,))])
    sub, e = window(d, 1, 3)
    assert len(sub) == 2
    assert well_defined_embedding(e, sub, d)
    assert rewrite(d, e, sub, sub) == d
