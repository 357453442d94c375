import pytest

from strata import Diagram, Signature, compose, identity_diagram, well_defined
from strata.errors import (
    BoundaryIllDefined,
    BoundaryIllTyped,
    DuplicateName,
    UnknownGenerator,
)

from conftest import wire_word


def test_add_zero_cell():
    sig = Signature(2)
    assert sig.add_generator("⋆", 0) == "⋆"
    info = sig.generator("⋆")
    assert info.dim == 0 and info.source is None and info.target is None


def test_add_zero_cell_rejects_boundaries():
    sig = Signature(1)
    sig.add_generator("⋆", 0)
    with pytest.raises(BoundaryIllTyped):
        sig.add_generator("x", 0, source=Diagram.point(sig, "⋆"))


def test_add_two_cell_checks_globularity(star_sig):
    # m was accepted by the fixture; both 0-boundaries of its source agree
    m = star_sig.generator("m")
    assert m.source.source == Diagram.point(star_sig, "⋆")
    assert m.source.target() == Diagram.point(star_sig, "⋆")


def test_add_two_cell_rejects_mismatched_boundaries():
    sig = Signature(2)
    sig.add_generator("a", 0)
    sig.add_generator("b", 0)
    pa, pb = Diagram.point(sig, "a"), Diagram.point(sig, "b")
    sig.add_generator("f", 1, source=pa, target=pb)
    sig.add_generator("f'", 1, source=pb, target=pa)
    src = Diagram.layered(pa, [("f", ())])
    tgt = Diagram.layered(pb, [("f'", ())])
    with pytest.raises(BoundaryIllTyped):
        sig.add_generator("bad", 2, source=src, target=tgt)


def test_add_rejects_duplicates_and_bad_boundaries(star_sig):
    with pytest.raises(DuplicateName):
        star_sig.add_generator("m", 0)
    ghost = Diagram.layered(Diagram.point(star_sig, "⋆"), [("ghost", ())])
    with pytest.raises(BoundaryIllDefined):
        star_sig.add_generator("u", 2, source=ghost, target=ghost)
    with pytest.raises(BoundaryIllTyped):
        star_sig.add_generator("deep", 9, source=ghost, target=ghost)


def test_atom_diagrams(star_sig):
    assert star_sig.atom("⋆") == Diagram.point(star_sig, "⋆")
    assert star_sig.atom("f") == Diagram.layered(Diagram.point(star_sig, "⋆"), [("f", ())])
    assert star_sig.atom("m") == Diagram.layered(wire_word(star_sig, 2), [("m", (0,))])
    with pytest.raises(UnknownGenerator):
        star_sig.atom("ghost")


def test_mark_invertible_creates_inverse(star_sig):
    data = star_sig.mark_invertible("s")
    inv = star_sig.generator(data.inverse)
    assert inv.source == star_sig.generator("s").target
    assert inv.target == star_sig.generator("s").source
    assert star_sig.generator(data.inverse).invertibility.inverse == "s"


def test_mark_invertible_idempotent(star_sig):
    first = star_sig.mark_invertible("s")
    second = star_sig.mark_invertible("s")
    assert first is second


def test_unit_witness_boundaries(star_sig):
    wit = star_sig.unit_witness("s")
    record = star_sig.generator(wit)
    data = star_sig.generator("s").invertibility
    forward, backward = star_sig.atom("s"), star_sig.atom(data.inverse)
    assert record.source == compose(forward, backward)
    assert record.target == identity_diagram(star_sig.generator("s").source)
    assert record.invertible
    assert star_sig.unit_witness("s") == wit


def test_counit_witness_boundaries(star_sig):
    wit = star_sig.counit_witness("s")
    record = star_sig.generator(wit)
    data = star_sig.generator("s").invertibility
    forward, backward = star_sig.atom("s"), star_sig.atom(data.inverse)
    assert record.source == identity_diagram(star_sig.generator("s").target)
    assert record.target == compose(backward, forward)


def test_top_dimension_cell_gets_no_witnesses():
    sig = Signature(1)
    sig.add_generator("⋆", 0)
    p = Diagram.point(sig, "⋆")
    sig.add_generator("f", 1, source=p, target=p)
    data = sig.mark_invertible("f")
    assert data.inverse in sig
    with pytest.raises(BoundaryIllTyped):
        sig.unit_witness("f")


def test_generator_info(star_sig):
    m = star_sig.generator("m")
    assert m.dim == 2 and len(m.source) == 2 and len(m.target) == 1
    star = star_sig.generator("⋆")
    assert star.dim == 0 and star.source is None
    with pytest.raises(UnknownGenerator):
        star_sig.generator("nope")


def test_prefix_is_valid_signature(star_sig):
    prefix = star_sig.prefix(star_sig.top_dim - 1)
    assert prefix.top_dim == star_sig.top_dim - 1
    for g in prefix.generators():
        if g.dim > 0:
            assert well_defined(g.source, prefix).ok
            assert well_defined(g.target, prefix).ok


def test_boundary_globularity_invariant(star_sig):
    for g in star_sig.generators():
        if g.dim > 1:
            assert g.source.source == g.target.source
            assert g.source.target() == g.target.target()


def test_inverse_boundary_invariant(star_sig):
    star_sig.mark_invertible("s")
    for g in star_sig.generators():
        if g.invertibility is not None:
            inv = star_sig.generator(g.invertibility.inverse)
            assert g.source == inv.target and g.target == inv.source
