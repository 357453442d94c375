import pytest

from strata import Diagram, Signature


@pytest.fixture
def star_sig():
    """One 0-cell, one 1-cell loop, the multiplication 2-cell and a pair of
    scalar-ish 2-cell endomorphisms of the wire. Top dimension 3 leaves room
    for interchanger cells."""
    sig = Signature(3)
    sig.add_generator("⋆", 0)
    star = Diagram.point(sig, "⋆")
    sig.add_generator("f", 1, source=star, target=star)
    word = lambda k: Diagram.layered(star, [("f", ())] * k)
    sig.add_generator("m", 2, source=word(2), target=word(1))
    sig.add_generator("s", 2, source=word(1), target=word(1))
    sig.add_generator("t", 2, source=word(1), target=word(1))
    return sig


def wire_word(sig, k):
    star = Diagram.point(sig, "⋆")
    return Diagram.layered(star, [("f", ())] * k)
