"""2-projected graphical scenes and SVG output.

Only the top two dimensions of a diagram are drawn: slice i contributes a row
of wire anchors at height i, and the entry between slices i and i+1 becomes a
vertex centred over the interval it consumes. Wire x-coordinates are the
index within the slice, uniformly spaced; cells below the projected
dimensions are not depicted, except for one ambient region label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .compose import boundary_iter
from .diagram import Diagram, well_defined
from .errors import IllDefinedAt, KernelError


@dataclass
class Wire:
    label: str
    points: list  # (x, y) anchors, one per slice level the wire spans


@dataclass
class Vertex:
    label: str
    x: float
    y: float


@dataclass
class Region:
    label: str


@dataclass
class Scene:
    width: float
    height: float
    wires: list = field(default_factory=list)
    vertices: list = field(default_factory=list)
    regions: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "wires": [{"label": w.label, "points": [[x, y] for x, y in w.points]}
                      for w in self.wires],
            "vertices": [{"label": v.label, "x": v.x, "y": v.y} for v in self.vertices],
            "regions": [{"label": r.label} for r in self.regions],
        }


def _anchors(level: Diagram):
    if level.dim == 0:
        return [level.generator]
    return [gen for gen, _ in level.entries]


def _entry_profile(d: Diagram, i: int):
    gen, emb = d.entries[i]
    record = d.sig.generator(gen)
    h = emb[0] if emb else 0
    consumed = len(record.source) if record.source is not None else 1
    produced = len(record.target) if record.target is not None else 1
    return gen, h, consumed, produced


def project(d: Diagram, sig=None) -> Scene:
    """Scene for the top two dimensions of a well-defined diagram."""
    sig = sig if sig is not None else d.sig
    if d.dim < 1:
        raise KernelError("projection needs a diagram of dimension at least 1")
    result = well_defined(d, sig)
    if not result:
        raise IllDefinedAt(result.path[0] if result.path else 0, result.reason)
    levels = list(d.slices()) if d.dim >= 1 else []
    rows = len(d.entries)
    height = float(max(rows, 1))
    width = float(max((len(level) for level in levels), default=1))
    scene = Scene(width=width, height=height)

    deep = boundary_iter(d, "source", d.dim)
    scene.regions.append(Region(label=deep.generator))

    open_wires = [Wire(label, [(float(j), 0.0)])
                  for j, label in enumerate(_anchors(levels[0]))]
    finished = []
    for i in range(rows):
        gen, h, consumed, produced = _entry_profile(d, i)
        vx = h + (consumed / 2.0 if consumed else 0.0)
        vy = i + 0.5
        scene.vertices.append(Vertex(label=gen, x=vx, y=vy))
        for wire in open_wires[h:h + consumed]:
            wire.points.append((vx, vy))
        finished.extend(open_wires[h:h + consumed])
        next_labels = _anchors(levels[i + 1])
        born = [Wire(next_labels[h + t], [(vx, vy), (float(h + t), float(i + 1))])
                for t in range(produced)]
        for j, wire in enumerate(open_wires[:h]):
            wire.points.append((float(j), float(i + 1)))
        for j, wire in enumerate(open_wires[h + consumed:]):
            wire.points.append((float(h + produced + j), float(i + 1)))
        open_wires = open_wires[:h] + born + open_wires[h + consumed:]
    top = height
    for wire in open_wires:
        x = wire.points[-1][0]
        if wire.points[-1][1] != top:
            wire.points.append((x, top))
    scene.wires = finished + open_wires
    return scene


SCALE = 48.0
MARGIN = 24.0


def _sx(x: float) -> float:
    return MARGIN + SCALE * x


def _sy(y: float, height: float) -> float:
    # flip so diagram height grows upward
    return MARGIN + SCALE * (height - y)


def _wire_path(wire: Wire, height: float) -> str:
    pts = [(_sx(x), _sy(y, height)) for x, y in wire.points]
    parts = [f"M {pts[0][0]:.1f} {pts[0][1]:.1f}"]
    for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
        if x1 == x2:
            parts.append(f"L {x2:.1f} {y2:.1f}")
        else:
            my = (y1 + y2) / 2.0
            parts.append(f"C {x1:.1f} {my:.1f}, {x2:.1f} {my:.1f}, {x2:.1f} {y2:.1f}")
    return " ".join(parts)


def scene_to_svg(scene: Scene) -> str:
    """Standalone SVG text; byte-stable for equal scenes."""
    w = int(2 * MARGIN + SCALE * scene.width)
    h = int(2 * MARGIN + SCALE * scene.height)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'  <rect width="{w}" height="{h}" fill="white"/>',
    ]
    for region in scene.regions:
        lines.append(f'  <text x="{MARGIN / 2:.1f}" y="{MARGIN:.1f}" font-size="12" '
                     f'fill="#999">{region.label}</text>')
    for wire in scene.wires:
        lines.append(f'  <path d="{_wire_path(wire, scene.height)}" fill="none" '
                     f'stroke="#334" stroke-width="2"/>')
    for vertex in scene.vertices:
        x, y = _sx(vertex.x), _sy(vertex.y, scene.height)
        lines.append(f'  <circle cx="{x:.1f}" cy="{y:.1f}" r="10" fill="#fff" '
                     f'stroke="#113" stroke-width="1.5"/>')
        lines.append(f'  <text x="{x:.1f}" y="{y + 4:.1f}" font-size="11" '
                     f'text-anchor="middle">{vertex.label}</text>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"
