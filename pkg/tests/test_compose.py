import pytest

from strata import (
    Diagram,
    boundary_iter,
    compose,
    identity_diagram,
    inclusion,
    inclusion_rev,
    well_defined,
    well_defined_embedding,
)
from strata.errors import BoundaryMismatch, DepthOutOfRange

from conftest import wire_word


def test_vertical_composition_concatenates(star_sig):
    top = Diagram.layered(wire_word(star_sig, 3), [("m", (0,))])
    bottom = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    out = compose(top, bottom)
    assert out == Diagram.layered(wire_word(star_sig, 3), [("m", (0,)), ("m", (0,))])
    assert well_defined(out).ok


def test_vertical_composition_checks_boundary(star_sig):
    a = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    with pytest.raises(BoundaryMismatch):
        compose(a, a)


def test_whisker_shifts_embeddings(star_sig):
    wire = wire_word(star_sig, 1)
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    out = compose(wire, d)
    assert out == Diagram.layered(wire_word(star_sig, 3), [("m", (1,))])
    assert well_defined(out).ok


def test_identity_diagram_is_left_unit(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    point_id = identity_diagram(Diagram.point(star_sig, "⋆"))
    assert compose(point_id, d) == d
    assert compose(d, point_id) == d


def test_composed_slices_concatenate(star_sig):
    top = Diagram.layered(wire_word(star_sig, 3), [("m", (1,))])
    bottom = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    out = compose(top, bottom)
    for j in range(len(top) + 1):
        assert out.slice(j) == top.slice(j)
    for j in range(len(bottom) + 1):
        assert out.slice(j + len(top)) == bottom.slice(j)


def test_inclusion_equal_dims(star_sig):
    s = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    d = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    e = inclusion(s, d)
    assert e == (1, 0)
    assert well_defined_embedding(e, d, compose(s, d))


def test_inclusion_whisker_depth(star_sig):
    wire = wire_word(star_sig, 1)
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    e = inclusion(wire, d)
    assert e == (0, 1)
    assert well_defined_embedding(e, d, compose(wire, d))


def test_inclusion_of_identity_is_identity(star_sig):
    empty = Diagram(2, None, wire_word(star_sig, 2), (), star_sig)
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    assert inclusion(empty, d) == (0, 0)


def test_inclusion_rev_is_zero_vector(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    wire = wire_word(star_sig, 1)
    e = inclusion_rev(d, wire)
    assert e == (0, 0)
    assert well_defined_embedding(e, d, compose(d, wire))


def test_identity_diagram_shape(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    ident = identity_diagram(d)
    assert len(ident.entries) == 0
    assert ident.target() == d
    assert well_defined(ident).ok


def test_boosting_composition(star_sig):
    # composing with a boosted diagram boosts the composite
    wire = wire_word(star_sig, 1)
    d = Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    assert compose(wire, identity_diagram(d)) == identity_diagram(compose(wire, d))
    top = Diagram.layered(wire_word(star_sig, 1), [("s", (0,))])
    assert compose(identity_diagram(d), top) == identity_diagram(compose(d, top))


def test_boundary_iter(star_sig):
    m_atom = star_sig.atom("m")
    assert boundary_iter(m_atom, "source", 0) == m_atom
    assert boundary_iter(m_atom, "target", 2) == Diagram.point(star_sig, "⋆")
    assert boundary_iter(m_atom, "target", 1) == wire_word(star_sig, 1)
    with pytest.raises(DepthOutOfRange):
        boundary_iter(m_atom, "source", 3)


def test_boundary_iter_matches_repeats(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (1,)), ("s", (0,))])
    assert boundary_iter(d, "target", 2) == d.target().target()
    assert boundary_iter(d, "source", 2) == d.source.source
