"""Homotopy-generator moves: recognition, application and boundary assembly.

Every move follows one recipe: extract the minimal window subdiagram around
the interacting entries, synthesize (or look up) the invertible cell whose
boundaries are the window before and after the move, then rewrite the ambient
diagram along the window embedding. Synthesized cells are memoized in the
signature, keyed by family and source diagram, so equivalent redexes share
one generator.

Conventions fixed here (the pictures in the source material leave them open):

- The canonical interchanger cell has as source the configuration whose lower
  entry sits right and upper entry sits left; the forward move drops the left
  cell. Applicability is the arithmetic disjointness of the two top-level
  support intervals.
- A crossing is an interchanger of two single-entry strands. Pull-through
  variants: front/rear say which side of the migrating strand the vertex's
  leg bundle sits; primed variants run the staircase through inversely
  applied interchangers.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .compose import compose, identity_diagram
from .diagram import (
    Diagram,
    Entry,
    compose_embeddings,
    globular,
    rewrite,
    well_defined,
    well_defined_embedding,
    window,
)
from .errors import (
    DimensionMismatch,
    EmbeddingIllDefined,
    KernelError,
    MalformedParams,
    NoMatchAtLocation,
    NotABlock,
    NotACrossingPattern,
    NotARedex,
    NotGlobular,
    PathsNotGlobular,
    VariantMismatch,
)

LEFT_DOWN = "left-down"    # forward interchange: the upper-left cell descends
RIGHT_DOWN = "right-down"  # inverse interchange: the upper-right cell descends

FORWARD = "forward"
BACKWARD = "backward"

VARIANTS = ("front", "rear", "primed-front", "primed-rear")

FAMILIES = ("I", "II", "III", "IV", "V", "VI")


@dataclass(frozen=True)
class MoveKind:
    family: str
    primed: bool = False
    inverse: bool = False
    composite: str = "atomic"  # atomic | tilde | hat

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise MalformedParams(f"unknown move family {self.family!r}")
        if self.composite == "hat" and self.family != "I":
            raise MalformedParams("rearrangement composites exist only for family I")
        if self.composite == "tilde" and self.family not in ("I", "II"):
            raise MalformedParams("tilde composites exist only for families I and II")
        if self.primed and self.family == "I":
            raise MalformedParams("family I has no primed variant")

    def inverted(self) -> "MoveKind":
        return replace(self, inverse=not self.inverse)


@dataclass(frozen=True)
class MoveLocation:
    height: int
    coords: tuple = ()


@dataclass(frozen=True)
class MoveInstance:
    kind: MoveKind
    cell: str
    location: MoveLocation


def _pad(vec: tuple, length: int) -> tuple:
    return tuple(vec) + (0,) * (length - len(vec))


def _loc_embedding(d: Diagram, loc: MoveLocation) -> tuple:
    return _pad((loc.height,) + tuple(loc.coords), d.dim)


def replay_move(d: Diagram, inst: MoveInstance) -> Diagram:
    """Apply a recorded move to a diagram by rewriting with the cell's
    boundaries, honouring the recorded direction."""
    record = d.sig.generator(inst.cell)
    src, tgt = record.source, record.target
    if inst.kind.inverse:
        src, tgt = tgt, src
    e = _loc_embedding(d, inst.location)
    try:
        return rewrite(d, e, src, tgt)
    except (EmbeddingIllDefined, DimensionMismatch) as err:
        raise NoMatchAtLocation(inst.location.height, str(err)) from None


def inverse_of(sig, name: str) -> str:
    data = sig.generator(name).invertibility
    if data is None:
        data = sig.mark_invertible(name)
    return data.inverse


# -- type I: interchangers --------------------------------------------------


def _entry_profile(d: Diagram, i: int):
    gen, emb = d.entries[i]
    record = d.sig.generator(gen)
    return emb[0], len(record.source), len(record.target)


def interchange_redexes(d: Diagram):
    """All (height, direction) pairs where adjacent entries have disjoint
    top-level supports and may trade heights."""
    if d.dim < 2:
        return []
    found = []
    for i in range(len(d.entries) - 1):
        u, _, ta = _entry_profile(d, i)
        v, sb, _ = _entry_profile(d, i + 1)
        if v >= u + ta:
            found.append((i, RIGHT_DOWN))
        if v + sb <= u:
            found.append((i, LEFT_DOWN))
    return found


def apply_interchange(d: Diagram, i: int, direction: str):
    """Swap entries i and i+1. LEFT_DOWN drops the upper-left cell (the
    forward move); RIGHT_DOWN drops the upper-right cell (its inverse)."""
    if d.dim < 2:
        raise NotARedex("interchanges need diagrams of dimension at least 2")
    if not 0 <= i < len(d.entries) - 1:
        raise NotARedex(f"no adjacent pair at height {i}")
    (ga, ea), (gb, eb) = d.entries[i], d.entries[i + 1]
    u, sa, ta = _entry_profile(d, i)
    v, sb, tb = _entry_profile(d, i + 1)
    if direction == RIGHT_DOWN:
        if v < u + ta:
            raise NotARedex(f"supports overlap at height {i} for {direction}")
        lo, hi = u, v - ta + sa + sb
        first = Entry(gb, (v - ta + sa - lo,) + eb[1:])
        second = Entry(ga, (u - lo,) + ea[1:])
    elif direction == LEFT_DOWN:
        if v + sb > u:
            raise NotARedex(f"supports overlap at height {i} for {direction}")
        lo, hi = v, u + sa
        first = Entry(gb, (v - lo,) + eb[1:])
        second = Entry(ga, (u - sb + tb - lo,) + ea[1:])
    else:
        raise NotARedex(f"unknown direction {direction!r}")
    base = d.slice(i)
    wnd, _ = window(base, lo, hi)
    before = Diagram(d.dim, None, wnd,
                     (Entry(ga, (u - lo,) + ea[1:]), Entry(gb, (v - lo,) + eb[1:])), d.sig)
    after = Diagram(d.dim, None, wnd, (first, second), d.sig)
    if direction == LEFT_DOWN:
        cell_source, cell_target, inverse = before, after, False
    else:
        cell_source, cell_target, inverse = after, before, True
    cell = _register_move_cell(d.sig, MoveKind("I"), cell_source, cell_target)
    emb = (i, lo) + (0,) * (d.dim - 2)
    try:
        out = rewrite(d, emb, before, after)
    except (EmbeddingIllDefined, NotGlobular) as err:
        raise NotARedex(str(err)) from None
    inst = MoveInstance(MoveKind("I", inverse=inverse), cell, MoveLocation(i, (lo,)))
    return out, inst


def _register_move_cell(sig, kind: MoveKind, source: Diagram, target: Diagram) -> str:
    if not globular(source, target):
        raise PathsNotGlobular(f"{kind.family} cell boundaries are not globular")
    key = (kind.family, kind.primed, source)

    def build():
        name = sig.fresh_name(kind.family)
        sig.add_generator(name, source.dim + 1, source=source, target=target,
                          tag=kind, extend=True)
        sig.mark_invertible(name)
        return name

    return sig.move_cell(key, build)


def expand_interchange(d: Diagram, block):
    """Peel a (left stack x right stack) block one interchange at a time.

    block = (height, left_count, right_count): entries [height, height+right)
    form the lower right-hand stack, the next left_count entries the upper
    left-hand stack, which descends.
    """
    h, left, right = block
    if left < 1 or right < 1 or h < 0 or h + left + right > len(d.entries):
        raise NotABlock(f"block {block} does not fit a diagram of height {len(d.entries)}")
    moves = []
    cur = d
    for j in range(left):
        for t in reversed(range(h + j, h + j + right)):
            try:
                cur, inst = apply_interchange(cur, t, LEFT_DOWN)
            except NotARedex as err:
                raise NotABlock(f"block {block} is not pairwise interchangeable: {err}") from None
            moves.append(inst)
    return moves


# -- type II: pull-throughs --------------------------------------------------


def _beside(left: Diagram, right: Diagram, lower: str) -> Diagram:
    """Place two equal-dimensional diagrams side by side; `lower` names the
    operand whose entries come first."""
    if lower == "left":
        a = compose(left, right.source)
        b = compose(left.target(), right)
    else:
        a = compose(left.source, right)
        b = compose(left, right.target())
    return compose(a, b)


def _row(parts, lower: str) -> Diagram:
    """Equal-dimensional diagrams side by side, left to right; entry order
    starts from the left or the right end as requested."""
    out = parts[-1]
    for part in reversed(parts[:-1]):
        out = _beside(part, out, lower=lower)
    return out


def _stack_on_strand(sig, strand: str, bundle: Diagram, variant: str,
                     gap: Optional[Diagram] = None):
    """The uncrossed window holding the leg bundle and the strand, with any
    interposing wires between them, per variant geometry."""
    d_atom = sig.atom(strand)
    mid = [] if gap is None or len(gap) == 0 else [identity_diagram(gap)]
    if variant == "front":
        return _row([bundle] + mid + [d_atom], lower="right")
    if variant == "rear":
        return _row([d_atom] + mid + [bundle], lower="right")
    if variant == "primed-front":
        return _row([d_atom] + mid + [bundle], lower="left")
    if variant == "primed-rear":
        return _row([bundle] + mid + [d_atom], lower="left")
    raise VariantMismatch(f"unknown variant {variant!r}")


class PathBuilder:
    """Accumulates move applications as entries of one higher diagram."""

    def __init__(self, start: Diagram):
        self.start = start
        self.state = start
        self.entries = []

    def record(self, inst: MoveInstance, new_state: Diagram):
        sig = self.start.sig
        cell = inst.cell if not inst.kind.inverse else inverse_of(sig, inst.cell)
        self.entries.append(Entry(cell, _loc_embedding(self.state, inst.location)))
        self.state = new_state

    def interchange(self, i: int, direction: str):
        new_state, inst = apply_interchange(self.state, i, direction)
        self.record(inst, new_state)

    def interchange_any(self, i: int):
        for direction in (LEFT_DOWN, RIGHT_DOWN):
            try:
                return self.interchange(i, direction)
            except NotARedex:
                continue
        raise NotARedex(f"entries {i} and {i + 1} do not interchange")

    def pull(self, i: int, variant: str, direction: str):
        new_state, inst = apply_pullthrough(self.state, i, variant, direction)
        self.record(inst, new_state)

    def cell(self, name: str, emb: tuple, inverse: bool = False):
        record = self.start.sig.generator(name)
        src, tgt = record.source, record.target
        used = name
        if inverse:
            src, tgt = tgt, src
            used = inverse_of(self.start.sig, name)
        self.state = rewrite(self.state, emb, src, tgt)
        self.entries.append(Entry(used, tuple(emb)))

    def build(self) -> Diagram:
        return Diagram(self.start.dim + 1, None, self.start, tuple(self.entries),
                       self.start.sig)


def build_pull_sequence_pair(sig, strand: str, vertices, variant: str,
                             gap: Optional[Diagram] = None):
    """Pull-through pair for a chain of vertices on one strand site: before
    puts the staircase of the first vertex's legs below the chain, after
    fires the chain first and lets the last vertex's outputs cross. `gap`
    holds interposing wires kept between the bundle and the strand."""
    records = [sig.generator(v) for v in vertices]
    if not records:
        raise MalformedParams("need at least one vertex to pull through")
    for record in records:
        if record.dim < 3:
            raise MalformedParams("pull-through vertices live in dimension 3 or higher")
        if record.source is None or len(record.source) < 1 or len(record.target) < 1:
            raise MalformedParams("pull-through needs at least one leg on each side")
    bundle = records[0].source
    out_bundle = records[-1].target
    strand_rec = sig.generator(strand)
    if strand_rec.dim != records[0].dim - 1:
        raise MalformedParams("strand must live one dimension below the vertices")
    w0 = _stack_on_strand(sig, strand, bundle, variant, gap)

    def staircase(builder: PathBuilder, legs: int):
        direction = LEFT_DOWN if not variant.startswith("primed") else RIGHT_DOWN
        if variant in ("front", "primed-front"):
            for t in range(legs):  # the descending cell meets each leg in turn
                builder.interchange(t, direction)
        else:
            for t in reversed(range(legs)):
                builder.interchange(t, direction)

    def fire(builder: PathBuilder, height: int):
        for record in records:
            deep = tuple(x - y for x, y in zip(builder.state.entries[height].embedding,
                                               record.source.entries[0].embedding))
            if any(x < 0 for x in deep):
                raise NotARedex("vertex legs sit left of the window")
            builder.cell(record.name, (height,) + deep)

    before = PathBuilder(w0)
    staircase(before, len(bundle))
    fire(before, 0 if variant in ("front", "primed-front") else 1)
    redex = before.build()

    after = PathBuilder(w0)
    fire(after, 1 if variant in ("front", "primed-front") else 0)
    staircase(after, len(out_bundle))
    resolved = after.build()

    if not globular(redex, resolved):
        raise PathsNotGlobular("pull-through boundaries disagree")
    return redex, resolved


def build_pullthrough_redex(sig, strand: str, alpha: str, variant: str,
                            gap: Optional[Diagram] = None):
    """The atomic pull-through pair (before, after) for a single vertex."""
    return build_pull_sequence_pair(sig, strand, [alpha], variant, gap)


def apply_pullthrough(d: Diagram, i: int, variant: str, direction: str):
    """Commute a vertex with the crossing block carrying its legs past one
    strand. Forward pulls the vertex below the block; backward undoes it."""
    if variant not in VARIANTS:
        raise VariantMismatch(f"unknown variant {variant!r}")
    if d.dim < 3:
        raise NotARedex("pull-throughs need diagrams of dimension at least 3")
    out = _try_pullthrough(d, i, variant, direction)
    if out is not None:
        return out
    for other in VARIANTS:
        if other != variant and _try_pullthrough(d, i, other, direction) is not None:
            raise VariantMismatch(
                f"entries at height {i} match variant {other!r}, not {variant!r}")
    raise NotARedex(f"no {variant} pull-through pattern at height {i}")


def _try_pullthrough(d: Diagram, i: int, variant: str, direction: str):
    sig = d.sig
    primed = variant.startswith("primed")
    limit = len(d.entries)

    def crossing_ok(name: str) -> bool:
        record = sig.generator(name)
        tag = record.tag
        if tag is None or tag.family != "I":
            return False
        return tag.inverse == primed

    span = 1
    while True:
        if direction == FORWARD:
            vertex_at = i + span
        else:
            vertex_at = i
        block = [i + 1 + t for t in range(span)] if direction == BACKWARD \
            else [i + t for t in range(span)]
        if max(block + [vertex_at]) >= limit:
            return None
        if not all(crossing_ok(d.entries[t].generator) for t in block):
            return None
        alpha = d.entries[vertex_at].generator
        record = sig.generator(alpha)
        if record.tag is not None and record.tag.family == "I":
            # a crossing can itself be the vertex only when its leg count
            # matches the block, checked below like any other cell
            pass
        if record.source is None:
            return None
        legs = len(record.source) if direction == FORWARD else len(record.target)
        if legs == span:
            result = _match_pullthrough(d, i, variant, direction, alpha)
            if result is not None:
                return result
        if legs < span or span > limit:
            return None
        span += 1


def _crossing_layouts(sig, crossing: str):
    """Candidate (strand, gap) pairs read off a crossing cell: either strand
    cell may be the migrating one, and any contiguous window of the crossing's
    base may hold the interposing wires. Exact window matching filters the
    candidates, so over-approximating here is safe."""
    record = sig.generator(crossing)
    (g1, _), (g2, _) = record.source.entries
    base = record.source.source
    gaps = [None]
    seen = {None}
    for lo in range(len(base) + 1):
        for hi in range(lo + 1, len(base) + 1):
            gap = window(base, lo, hi)[0]
            if gap not in seen:
                seen.add(gap)
                gaps.append(gap)
    gaps.sort(key=lambda g: 0 if g is None else len(g.entries))
    return [(strand, gap) for gap in gaps for strand in (g1, g2)]


def _match_pullthrough(d: Diagram, i: int, variant: str, direction: str, alpha: str):
    sig = d.sig
    record = sig.generator(alpha)
    if direction == BACKWARD:
        block_entries = d.entries[i + 1: i + 1 + len(record.target)]
        adjacent = block_entries[0]
    else:
        block_entries = d.entries[i: i + len(record.source)]
        adjacent = block_entries[-1]
    seen = set()
    candidates = []
    for gen, _ in [adjacent] + list(block_entries):
        cross = sig.generator(gen)
        if not variant.startswith("primed"):
            base_cell = gen
        else:
            base_cell = cross.invertibility.inverse if cross.invertibility else gen
        for strand, gap in _crossing_layouts(sig, base_cell):
            key = (strand, gap)
            if key not in seen:
                seen.add(key)
                candidates.append((strand, gap))
    for strand, gap in candidates:
        try:
            redex, resolved = build_pullthrough_redex(sig, strand, alpha, variant, gap)
        except (KernelError, ValueError):
            continue
        before, after = (redex, resolved) if direction == FORWARD else (resolved, redex)
        shift = _window_shift(d, i, before)
        if shift is None:
            continue
        emb = (i,) + shift
        if not well_defined_embedding(emb, before, d):
            continue
        out = rewrite(d, emb, before, after, validate=False)
        kind = MoveKind("II", primed=variant.startswith("primed"),
                        inverse=(direction == BACKWARD))
        cell = _register_move_cell(sig, replace(kind, inverse=False), redex, resolved)
        inst = MoveInstance(kind, cell, MoveLocation(i, shift))
        return out, inst
    return None


def _window_shift(d: Diagram, i: int, pattern: Diagram):
    """Constant offset by which the pattern's entries sit inside d starting
    at height i, or None."""
    if i + len(pattern.entries) > len(d.entries):
        return None
    shift = None
    for t, (gen, emb) in enumerate(pattern.entries):
        other = d.entries[i + t]
        if other.generator != gen:
            return None
        delta = tuple(x - y for x, y in zip(other.embedding, emb))
        if any(x < 0 for x in delta):
            return None
        if shift is None:
            shift = delta
        elif shift != delta:
            return None
    return shift


def expand_pullthrough(d: Diagram, block, variant: str = "front"):
    """Composite pull-through: a stack of vertices past one crossing site, or
    one vertex past a stack of crossing sites, one atomic move at a time."""
    h, cells, crossings = block
    if cells < 1 or crossings < 1:
        raise NotABlock(f"block {block} needs at least one cell and one crossing")
    moves = []
    cur = d
    try:
        if cells >= 1 and crossings == 1:
            at = h
            for _ in range(cells):
                cur, inst = apply_pullthrough(cur, at, variant, FORWARD)
                moves.append(inst)
                at += 1
        elif cells == 1:
            at = h
            while at < len(d.entries):
                tag = d.sig.generator(d.entries[at].generator).tag
                if tag is None or tag.family != "I":
                    break
                at += 1
            if at >= len(d.entries):
                raise NotABlock("no vertex after the crossing block")
            legs = len(d.sig.generator(d.entries[at].generator).source)
            if at - h != crossings * legs:
                raise NotABlock(
                    f"expected {crossings} sites of {legs} crossings, found {at - h}")
            for t in reversed(range(crossings)):
                cur, inst = apply_pullthrough(cur, h + t * legs, variant, FORWARD)
                moves.append(inst)
        else:
            raise NotABlock("blocks mix several cells with several crossing sites")
    except (NotARedex, VariantMismatch) as err:
        raise NotABlock(str(err)) from None
    return moves


# -- rearrangement of crossing sequences ------------------------------------


def rearrange_crossings(d: Diagram, span):
    """Reorder a by-strand staircase of crossings into the by-wire order,
    as a sequence of composite interchanges."""
    h, length = span
    if h < 0 or h + length > len(d.entries):
        raise NotACrossingPattern(f"span {span} does not fit the diagram")
    if length <= 1:
        return []
    for t in range(h, h + length):
        tag = d.sig.generator(d.entries[t].generator).tag
        if tag is None or tag.family != "I":
            raise NotACrossingPattern(f"entry {t} is not a crossing cell")
    tops = [d.entries[t].embedding[0] for t in range(h, h + length)]
    runs = []
    run = 1
    for t in range(1, length):
        if tops[t] == tops[t - 1] + 1:
            run += 1
        else:
            runs.append(run)
            run = 1
    runs.append(run)
    wires = runs[0]
    if any(r != wires for r in runs):
        raise NotACrossingPattern(f"staircase runs {runs} are not uniform")
    starts = [tops[j * wires] for j in range(len(runs))]
    if any(b != a - 1 for a, b in zip(starts, starts[1:])):
        raise NotACrossingPattern(f"strand starting heights {starts} do not descend")
    strands = length // wires
    moves = []
    cur = d
    base = h
    for level in range(wires - 1):
        width = wires - level
        for j in range(1, strands):
            stack = j * (width - 1)
            try:
                step = expand_interchange(cur, (base + j, 1, stack))
            except NotABlock as err:
                raise NotACrossingPattern(str(err)) from None
            for inst in step:
                cur = replay_move(cur, inst)
            moves.extend(step)
        base += strands
    return moves


# -- families III to VI ------------------------------------------------------


def _window_embedding(state: Diagram, height: int, sub: Diagram) -> tuple:
    """Embedding of a nonempty same-dimensional window starting at an entry
    height of the state, derived from the first entry pair."""
    if len(sub.entries) == 0:
        raise MalformedParams("cannot derive the offset of an empty window")
    tail = tuple(x - y for x, y in zip(state.entries[height].embedding,
                                       sub.entries[0].embedding))
    if any(x < 0 for x in tail):
        raise MalformedParams("window sits left of the ambient context")
    return (height,) + tail


def build_pull_block(sig, strand: str, stack: Diagram, variant: str,
                     gap: Optional[Diagram] = None) -> Diagram:
    """Corner diagram for a stack pulled through a strand: the staircase of
    crossings for the stack's input wires, then the stack itself."""
    if len(stack.source) < 1:
        raise MalformedParams("the stack needs at least one input wire")
    w0 = _stack_on_strand(sig, strand, stack.source, variant, gap)
    chain = PathBuilder(w0)
    _staircase(chain, variant, len(stack.source))
    vh = 0 if variant in ("front", "primed-front") else 1
    shift = _window_embedding(chain.state, vh, stack.source)
    for g, e in stack.entries:
        chain.cell(g, compose_embeddings(shift, e))
    return chain.build()


def _staircase(builder: PathBuilder, variant: str, legs: int):
    direction = LEFT_DOWN if not variant.startswith("primed") else RIGHT_DOWN
    if variant in ("front", "primed-front"):
        for t in range(legs):
            builder.interchange(t, direction)
    else:
        for t in reversed(range(legs)):
            builder.interchange(t, direction)


def higher_move_boundary(kind: MoveKind, params: dict):
    """Assemble the source/target path diagrams of one constructed higher
    move. Params name the participating cells per family; the signature is
    passed as params['sig']."""
    try:
        sig = params["sig"]
    except KeyError:
        raise MalformedParams("params must carry the signature under 'sig'") from None
    builder = {
        "III": _boundary_iii,
        "IV": _boundary_iv,
        "V": _boundary_v,
        "VI": _boundary_vi,
    }.get(kind.family)
    if builder is None:
        raise MalformedParams(f"no boundary assembly for family {kind.family}")
    source, target = builder(sig, params, kind)
    if not globular(source, target):
        raise PathsNotGlobular(f"{kind.family} paths disagree on their boundaries")
    for side in (source, target):
        result = well_defined(side, sig)
        if not result:
            raise PathsNotGlobular(f"{kind.family} path is ill-defined: {result.reason}")
    return source, target


def _variant_of(kind: MoveKind, params) -> str:
    sheet = params.get("sheet", "front")
    return ("primed-" + sheet) if kind.primed else sheet


def _boundary_iii(sig, params, kind):
    """Naturality square: pull the stack through then rewrite by the cell,
    against rewriting first and pulling the image through."""
    mu = params["cell"]
    strand = params["strand"]
    variant = _variant_of(kind, params)
    record = sig.generator(mu)
    if record.dim < 4:
        raise MalformedParams("family III lives on cells of dimension 4 or higher")
    stack, out_stack = record.source, record.target
    if len(stack) < 1 or len(out_stack) < 1:
        raise MalformedParams("family III needs nonempty stacks on both sides")
    corner = build_pull_block(sig, strand, stack, variant)
    stair = len(corner.entries) - len(stack.entries)

    first = PathBuilder(corner)
    at = 0
    for _ in range(len(stack.entries)):
        first.pull(at, variant, FORWARD)
        at += 1
    first.cell(mu, _window_embedding(first.state, 0, stack))
    source = first.build()

    second = PathBuilder(corner)
    second.cell(mu, _window_embedding(second.state, stair, stack))
    at = 0
    for _ in range(len(out_stack.entries)):
        second.pull(at, variant, FORWARD)
        at += 1
    target = second.build()
    return source, target


def _try_variants(action):
    last = None
    for variant in VARIANTS:
        try:
            return action(variant)
        except (KernelError, ValueError) as err:
            last = err
    raise MalformedParams(f"no variant fits the configuration: {last}")


def _boundary_iv(sig, params, kind):
    """Both resolutions of the three-strand configuration: pull the top
    crossing down past the far strand, or pull the bottom crossing up."""
    x, y, z = params["strands"]
    row = _row([sig.atom(x), sig.atom(y), sig.atom(z)], lower="right")
    chain = PathBuilder(row)
    chain.interchange(1, LEFT_DOWN)   # x descends past y
    chain.interchange(0, LEFT_DOWN)   # x descends past z
    chain.interchange(1, LEFT_DOWN)   # y descends past z
    corner = chain.build()

    def forward(variant):
        first = PathBuilder(corner)
        first.pull(0, variant, FORWARD)
        return first.build()

    def backward(variant):
        second = PathBuilder(corner)
        second.pull(0, variant, BACKWARD)
        return second.build()

    return _try_variants(forward), _try_variants(backward)


def _boundary_v(sig, params, kind):
    """The two orders of pulling two vertices on distinct strands through one
    crossing; the longer path reorders the vertices before and after."""
    alpha, beta = params["cells"]
    ra, rb = sig.generator(alpha), sig.generator(beta)
    for rec in (ra, rb):
        if rec.source is None or len(rec.source) != 1 or len(rec.target) != 1:
            raise MalformedParams("family V assembly uses single-leg vertices")
    c = ra.source.entries[0].generator
    d = rb.source.entries[0].generator
    variant = _variant_of(kind, params)
    w0 = _stack_on_strand(sig, d, sig.atom(c), variant)
    chain = PathBuilder(w0)
    _staircase(chain, variant, 1)
    pos_c = 0 if variant in ("front", "primed-front") else 1
    pos_d = 1 - pos_c
    chain.cell(alpha, _window_embedding(chain.state, pos_c, ra.source))
    chain.cell(beta, _window_embedding(chain.state, pos_d, rb.source))
    corner = chain.build()
    sheet_b = _other_sheet(variant)

    first = PathBuilder(corner)
    first.pull(0, variant, FORWARD)
    first.pull(1, sheet_b, FORWARD)
    source = first.build()

    second = PathBuilder(corner)
    second.interchange_any(1)
    second.pull(0, sheet_b, FORWARD)
    second.pull(1, variant, FORWARD)
    second.interchange_any(0)
    target = second.build()
    return source, target


def _other_sheet(variant: str) -> str:
    prefix = "primed-" if variant.startswith("primed") else ""
    sheet = variant.removeprefix("primed-")
    return prefix + ("rear" if sheet == "front" else "front")


def _boundary_vi(sig, params, kind):
    """One pull-through against the detour: insert an inverse crossing pair,
    pull through the inserted crossing, cancel the leftover pair."""
    alpha = params["cell"]
    strand = params["strand"]
    variant = _variant_of(kind, params)
    record = sig.generator(alpha)
    if record.source is None or len(record.source) != 1 or len(record.target) != 1:
        raise MalformedParams("family VI assembly uses single-leg vertices")
    redex, _ = build_pullthrough_redex(sig, strand, alpha, variant)

    first = PathBuilder(redex)
    first.pull(0, variant, FORWARD)
    source = first.build()

    crossing = redex.entries[0].generator
    lifted = tuple(redex.entries[0].embedding)  # the pair inserts over the crossing's window
    second = PathBuilder(redex)
    second.cell(sig.counit_witness(crossing), (1,) + lifted)
    second.pull(2, variant, FORWARD)
    second.cell(sig.unit_witness(crossing), (0,) + lifted)
    target = second.build()
    return source, target


def apply_higher_move(d: Diagram, loc: MoveLocation, kind: MoveKind, direction: str):
    """Rewrite at loc by a registered higher move cell whose boundary matches
    the window there."""
    if kind.family not in ("III", "IV", "V", "VI"):
        raise MalformedParams(f"apply_higher_move handles families III..VI, not {kind.family}")
    sig = d.sig
    for record in sig.generators():
        tag = record.tag
        if tag is None or tag.family != kind.family or tag.primed != kind.primed:
            continue
        if record.source is None or record.source.dim != d.dim:
            continue
        src, tgt = record.source, record.target
        if direction == BACKWARD:
            src, tgt = tgt, src
        emb = _loc_embedding(d, loc)
        if emb[0] + len(src) > len(d.entries):
            continue
        if well_defined_embedding(emb, src, d):
            out = rewrite(d, emb, src, tgt, validate=False)
            inst = MoveInstance(replace(kind, inverse=(direction == BACKWARD)),
                                record.name, loc)
            return out, inst
    mismatch = _first_mismatch_height(d, loc, kind, direction)
    raise NoMatchAtLocation(loc.height, f"no {kind.family} cell matches at height "
                                        f"{loc.height} (first differing height {mismatch})")


def _first_mismatch_height(d, loc, kind, direction):
    sig = d.sig
    for record in sig.generators():
        tag = record.tag
        if tag is None or tag.family != kind.family:
            continue
        if record.source is None or record.source.dim != d.dim:
            continue
        src = record.source if direction == FORWARD else record.target
        for t, (gen, _) in enumerate(src.entries):
            at = loc.height + t
            if at >= len(d.entries) or d.entries[at].generator != gen:
                return at
    return loc.height


def synthesize_higher_cell(sig, kind: MoveKind, params: dict) -> str:
    """Build the boundary pair for a constructed move and register its cell."""
    source, target = higher_move_boundary(kind, dict(params, sig=sig))
    return _register_move_cell(sig, replace(kind, inverse=False), source, target)


def moves_at(d: Diagram, height: int, coords=()):
    """Applicable moves at a location: families I and II by redex search,
    registered higher cells by boundary matching."""
    found = []
    for i, direction in interchange_redexes(d):
        if i == height:
            found.append({"family": "I", "height": i,
                          "direction": FORWARD if direction == LEFT_DOWN else BACKWARD,
                          "variant": None})
    if d.dim >= 3:
        for variant in VARIANTS:
            for direction in (FORWARD, BACKWARD):
                try:
                    _, inst = apply_pullthrough(d, height, variant, direction)
                except (NotARedex, VariantMismatch, KernelError):
                    continue
                found.append({"family": "II", "height": height, "direction": direction,
                              "variant": variant})
    for family in ("III", "IV", "V", "VI"):
        for primed in (False, True):
            for direction in (FORWARD, BACKWARD):
                try:
                    kind = MoveKind(family, primed=primed)
                    apply_higher_move(d, MoveLocation(height, tuple(coords)), kind, direction)
                except (NoMatchAtLocation, MalformedParams, KernelError):
                    continue
                found.append({"family": family, "height": height, "direction": direction,
                              "variant": "primed" if primed else None})
    return found
