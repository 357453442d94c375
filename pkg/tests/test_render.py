import pytest

from strata import Diagram
from strata.homotopy import RIGHT_DOWN, apply_interchange
from strata.render import project, scene_to_svg

from conftest import wire_word


def test_identity_projection_has_no_vertices(star_sig):
    ident = Diagram(2, None, wire_word(star_sig, 3), (), star_sig)
    scene = project(ident)
    assert scene.vertices == []
    assert len(scene.wires) == 3
    assert all(p[0] == w.points[0][0] for w in scene.wires for p in w.points)


def test_single_vertex_projection(star_sig):
    scene = project(star_sig.atom("m"))
    # two inputs joining at one vertex into one output
    assert len(scene.vertices) == 1
    assert len(scene.wires) == 3
    assert scene.vertices[0].label == "m"
    assert scene.vertices[0].y == 0.5 and scene.vertices[0].x == 1.0


def test_vertex_layout_offsets(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    scene = project(d)
    assert [(v.x, v.y) for v in scene.vertices] == [(0.5, 0.5), (1.5, 1.5)]


def test_vertex_count_and_order(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (1,)), ("m", (0,))])
    scene = project(d)
    assert len(scene.vertices) == len(d)
    assert [v.y for v in scene.vertices] == sorted(v.y for v in scene.vertices)


def test_projection_of_interchange_swaps_two_heights(star_sig):
    d = Diagram.layered(wire_word(star_sig, 2), [("s", (0,)), ("s", (1,))])
    out, _ = apply_interchange(d, 0, RIGHT_DOWN)
    before = {(v.x, v.y) for v in project(d).vertices}
    after = {(v.x, v.y) for v in project(out).vertices}
    assert before == {(0.5, 0.5), (1.5, 1.5)}
    assert after == {(1.5, 0.5), (0.5, 1.5)}


def test_region_label_is_deep_source(star_sig):
    scene = project(star_sig.atom("m"))
    assert [r.label for r in scene.regions] == ["⋆"]


def test_empty_scene_svg_is_valid(star_sig):
    ident = Diagram(2, None, Diagram.layered(Diagram.point(star_sig, "⋆"), []), (), star_sig)
    svg = scene_to_svg(project(ident))
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")
    assert "<circle" not in svg


def test_svg_element_counts(star_sig):
    svg = scene_to_svg(project(star_sig.atom("m")))
    assert svg.count("<circle") == 1
    assert svg.count("<path") == 3


def test_svg_byte_stable(star_sig):
    d = Diagram.layered(wire_word(star_sig, 3), [("m", (1,)), ("s", (0,))])
    assert scene_to_svg(project(d)) == scene_to_svg(project(d))


def test_projection_of_higher_dimensional_diagram(star_sig):
    d3 = Diagram(3, None, Diagram.layered(wire_word(star_sig, 2), [("m", (0,))]), (), star_sig)
    scene = project(d3)
    # top two dimensions only: the single 2-cell of the source is a wire here
    assert scene.vertices == []
    assert len(scene.wires) == 1 and scene.wires[0].label == "m"
