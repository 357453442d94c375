"""Random well-defined structures and the executable metatheory properties.

Generation is constructive wherever possible: diagrams grow by attaching
generators at enumerated embeddings, contexts wrap an embedded subdiagram via
composition and inclusions, and diagrams with a prescribed target grow
backwards by un-rewriting. Globular partners fall back to the diagram itself
when rejection sampling misses, which keeps every property total.
"""

from __future__ import annotations

import random
import time
from typing import Callable, Optional

from .compose import boundary_iter, compose, identity_diagram, inclusion, inclusion_rev
from .diagram import (
    Diagram,
    Entry,
    compose_embeddings,
    embeddings_into,
    identity_embedding,
    lift,
    rewrite,
    well_defined,
    well_defined_embedding,
)
from .errors import KernelError
from .signature import Signature

MAX_DIM = 3
MAX_HEIGHT = 4
GENS_PER_DIM = 3


# -- random structures ----------------------------------------------------


def random_signature(rng: random.Random, max_dim: int = MAX_DIM,
                     gens_per_dim: int = GENS_PER_DIM) -> Signature:
    sig = Signature(max_dim)
    points = ["x"] if rng.random() < 0.5 else ["x", "y"]
    for p in points:
        sig.add_generator(p, 0)
    # one guaranteed loop keeps higher boundaries easy to match
    base = rng.choice(points)
    sig.add_generator("f0", 1, source=Diagram.point(sig, base), target=Diagram.point(sig, base))
    for k in range(1, max_dim + 1):
        want = rng.randint(1, gens_per_dim) if k > 1 else rng.randint(0, gens_per_dim - 1)
        for i in range(want):
            name = f"g{k}_{i}"
            if k == 1:
                src = Diagram.point(sig, rng.choice(points))
                tgt = Diagram.point(sig, rng.choice(points))
                sig.add_generator(name, 1, source=src, target=tgt)
                continue
            src = random_diagram(rng, sig, k - 1, max_height=2)
            tgt = random_globular_partner(rng, sig, src)
            sig.add_generator(name, k, source=src, target=tgt)
    return sig


def random_diagram(rng: random.Random, sig: Signature, dim: int,
                   max_height: int = MAX_HEIGHT,
                   source: Optional[Diagram] = None) -> Diagram:
    """A well-defined diagram grown by attaching generators at random
    embeddings; well-defined by construction."""
    if dim == 0:
        zero = [g.name for g in sig.generators(0)]
        return Diagram.point(sig, rng.choice(zero))
    src = source if source is not None else random_diagram(rng, sig, dim - 1, max_height=2)
    entries = []
    cur = src
    want = min(max_height, rng.choice((0, 1, 1, 2, 2, 3, 4)))
    for _ in range(want):
        options = []
        for g in sig.generators(dim):
            for e in embeddings_into(g.source, cur):
                options.append((g, e))
        if not options:
            break
        g, e = rng.choice(options)
        entries.append((g.name, e))
        cur = rewrite(cur, e, g.source, g.target, validate=False)
    return Diagram(dim, None, src, tuple(Diagram.layered(src, entries).entries), sig) \
        if entries else Diagram(dim, None, src, (), sig)


def random_diagram_with_target(rng: random.Random, sig: Signature, dim: int,
                               target: Diagram, max_height: int = MAX_HEIGHT) -> Diagram:
    """Grow a diagram backwards from its prescribed target by un-rewriting."""
    entries = []
    src = target
    for _ in range(rng.randint(0, max_height)):
        options = []
        for g in sig.generators(dim):
            for e in embeddings_into(g.target, src):
                options.append((g, e))
        if not options:
            break
        g, e = rng.choice(options)
        entries.insert(0, (g.name, e))
        src = rewrite(src, e, g.target, g.source, validate=False)
    return Diagram(dim, None, src, tuple(Diagram.layered(src, entries).entries), sig) \
        if entries else Diagram(dim, None, src, (), sig)


def random_globular_partner(rng: random.Random, sig: Signature, s: Diagram,
                            tries: int = 8) -> Diagram:
    """A diagram globular with s: rejection sampling from the same source,
    falling back to s itself."""
    if s.dim == 0:
        return s
    goal = s.target()
    for _ in range(tries):
        cand = random_diagram(rng, sig, s.dim, max_height=MAX_HEIGHT, source=s.source)
        if cand.target() == goal:
            return cand
    return s


def random_embedded_pair(rng: random.Random, sig: Signature, dim: int,
                         start: Optional[Diagram] = None, wraps: int = 3):
    """(S, D, e) with e: S -> D well-defined, built by wrapping S in random
    composition contexts so the height vectors get interesting."""
    s = start if start is not None else random_diagram(rng, sig, dim, max_height=2)
    d, e = s, identity_embedding(s)
    for _ in range(rng.randint(0, wraps)):
        kind = rng.random()
        if kind < 0.4:
            before = random_diagram_with_target(rng, sig, d.dim, d.source, max_height=2)
            if len(before):
                e = compose_embeddings(inclusion(before, d), e)
                d = compose(before, d)
        elif kind < 0.7:
            after = random_diagram(rng, sig, d.dim, max_height=2, source=d.target())
            if len(after):
                e = compose_embeddings(inclusion_rev(d, after), e)
                d = compose(d, after)
        elif d.dim >= 2:
            w_dim = rng.randint(1, d.dim - 1)
            side = rng.random() < 0.5
            if side:
                anchor = boundary_iter(d, "source", d.dim - w_dim + 1)
                w = random_diagram_with_target(rng, sig, w_dim, anchor, max_height=2)
                e = compose_embeddings(inclusion(w, d), e)
                d = compose(w, d)
            else:
                anchor = boundary_iter(d, "target", d.dim - w_dim + 1)
                w = random_diagram(rng, sig, w_dim, max_height=2, source=anchor)
                e = compose_embeddings(inclusion_rev(d, w), e)
                d = compose(d, w)
    return s, d, e


def random_rewrite_data(rng: random.Random, sig: Signature, dim: int):
    """(A, e, S, T) ready for a rewrite."""
    s, a, e = random_embedded_pair(rng, sig, dim)
    t = random_globular_partner(rng, sig, s)
    return a, e, s, t


# -- metatheory properties -------------------------------------------------


def _dims(rng, sig):
    return rng.randint(1, sig.top_dim)


def check_identity_rewrites(rng, sig):
    s, d, e = random_embedded_pair(rng, sig, _dims(rng, sig))
    assert rewrite(d, e, s, s) == d


def check_well_defined_rewrites(rng, sig):
    a, e, s, t = random_rewrite_data(rng, sig, _dims(rng, sig))
    out = rewrite(a, e, s, t)
    assert len(out) == len(a) - len(s) + len(t)
    assert well_defined(out).ok


def check_well_defined_lifts(rng, sig):
    a, e, s, t = random_rewrite_data(rng, sig, _dims(rng, sig))
    lifted = lift(e, t, source=s)
    assert well_defined_embedding(lifted, t, rewrite(a, e, s, t))


def check_well_defined_composite_embeddings(rng, sig):
    dim = _dims(rng, sig)
    s, d, e = random_embedded_pair(rng, sig, dim, wraps=2)
    _, a, f = random_embedded_pair(rng, sig, dim, start=d, wraps=2)
    composite = compose_embeddings(f, e)
    assert well_defined_embedding(composite, s, a)


def check_globularity_on_slices(rng, sig):
    dim = rng.randint(2, sig.top_dim)
    d = random_diagram(rng, sig, dim)
    for i in range(len(d) + 1):
        cut = d.slice(i)
        assert cut.source == d.source.source
        assert cut.target() == d.source.target()


def check_explicit_rewrites(rng, sig):
    a, e, s, t = random_rewrite_data(rng, sig, _dims(rng, sig))
    out = rewrite(a, e, s, t)
    h = e[0] if e else 0
    for j in range(len(out) + 1):
        if a.dim == 0:
            break
        if j <= h:
            assert out.slice(j) == a.slice(j)
        if h <= j <= h + len(t):
            expected = rewrite(a.slice(h), e[1:], s.source, t.slice(j - h)) \
                if a.dim >= 1 and t.dim >= 1 else t
            assert out.slice(j) == expected
        if j >= h + len(t):
            assert out.slice(j) == a.slice(j + len(s) - len(t))


def check_composite_lifts(rng, sig):
    dim = _dims(rng, sig)
    s, a, e = random_embedded_pair(rng, sig, dim, wraps=2)
    t = random_globular_partner(rng, sig, s)
    c = random_globular_partner(rng, sig, a)
    _, b, f = random_embedded_pair(rng, sig, dim, start=c, wraps=2)
    lhs = lift(compose_embeddings(lift(f, a, source=c), e), t, source=s)
    rhs = compose_embeddings(lift(f, rewrite(a, e, s, t), source=c), lift(e, t, source=s))
    assert lhs == rhs
    assert well_defined_embedding(
        lhs, t, rewrite(rewrite(b, f, c, a), compose_embeddings(lift(f, a), e), s, t))


def check_composite_rewrites(rng, sig):
    dim = _dims(rng, sig)
    s, a, e = random_embedded_pair(rng, sig, dim, wraps=2)
    t = random_globular_partner(rng, sig, s)
    c = random_globular_partner(rng, sig, a)
    _, b, f = random_embedded_pair(rng, sig, dim, start=c, wraps=2)
    lhs = rewrite(b, f, c, rewrite(a, e, s, t))
    rhs = rewrite(rewrite(b, f, c, a), compose_embeddings(lift(f, a, source=c), e), s, t)
    assert lhs == rhs


def check_associative_composite_embeddings(rng, sig):
    dim = _dims(rng, sig)
    s, d, e = random_embedded_pair(rng, sig, dim, wraps=2)
    _, m, f = random_embedded_pair(rng, sig, dim, start=d, wraps=2)
    _, n, g = random_embedded_pair(rng, sig, dim, start=m, wraps=2)
    lhs = compose_embeddings(g, compose_embeddings(f, e))
    rhs = compose_embeddings(compose_embeddings(g, f), e)
    assert lhs == rhs
    assert well_defined_embedding(lhs, s, n)


def _composable_pair(rng, sig, m, n):
    """S of dimension m and D of dimension n with compose(S, D) defined."""
    if m <= n:
        d = random_diagram(rng, sig, n)
        anchor = boundary_iter(d, "source", n - m + 1)
        s = random_diagram_with_target(rng, sig, m, anchor)
    else:
        s = random_diagram(rng, sig, m)
        anchor = boundary_iter(s, "target", m - n + 1)
        d = random_diagram(rng, sig, n, source=anchor)
    return s, d


def check_well_defined_composition(rng, sig):
    n = _dims(rng, sig)
    m = rng.randint(1, sig.top_dim)
    s, d = _composable_pair(rng, sig, m, n)
    assert well_defined(compose(s, d)).ok


def check_well_defined_inclusions(rng, sig):
    n = _dims(rng, sig)
    m = rng.randint(1, n)
    s, d = _composable_pair(rng, sig, m, n)
    assert well_defined_embedding(inclusion(s, d), d, compose(s, d))
    ss, dd = _composable_pair(rng, sig, rng.randint(n, sig.top_dim), n)
    assert well_defined_embedding(inclusion_rev(ss, dd), ss, compose(ss, dd))


def check_well_behaved_whiskering(rng, sig):
    n = rng.randint(2, sig.top_dim)
    m = rng.randint(1, n - 1)
    s, d = _composable_pair(rng, sig, m, n)
    out = compose(s, d)
    for i in range(len(d) + 1):
        assert out.slice(i) == compose(s, d.slice(i))
    # mirrored: higher-dimensional first operand
    s2, d2 = _composable_pair(rng, sig, n, m)
    out2 = compose(s2, d2)
    for i in range(len(s2) + 1):
        assert out2.slice(i) == compose(s2.slice(i), d2)


def check_lifts_vs_inclusions(rng, sig):
    n = rng.randint(2, sig.top_dim)
    m = rng.randint(1, n - 1)
    s, d = _composable_pair(rng, sig, m, n)
    e = inclusion(s, d)
    for i in range(len(d)):
        assert inclusion(s, d.slice(i)) == lift(e[1:], d.slice(i))
    s2, d2 = _composable_pair(rng, sig, n, m)
    e2 = inclusion_rev(s2, d2)
    for i in range(len(s2)):
        assert inclusion_rev(s2.slice(i), d2) == lift(e2[1:], s2.slice(i))


def check_associative_composition(rng, sig):
    n = _dims(rng, sig)
    l = rng.randint(n, sig.top_dim)
    m_diag = random_diagram(rng, sig, l)
    anchor = boundary_iter(m_diag, "source", l - n + 1) if l > n else m_diag.source
    d = random_diagram_with_target(rng, sig, n, anchor)
    s = random_diagram_with_target(rng, sig, n, d.source)
    lhs = compose(s, compose(d, m_diag))
    rhs = compose(compose(s, d), m_diag)
    assert lhs == rhs
    if n >= 2:
        # equal-dimensional whiskers on both sides of a higher diagram
        m = rng.randint(1, n - 1)
        right = random_diagram(rng, sig, m, source=boundary_iter(d, "target", n - m + 1))
        dm = compose(d, right)
        left = random_diagram_with_target(rng, sig, m,
                                          boundary_iter(dm, "source", n - m + 1))
        assert compose(left, compose(d, right)) == compose(compose(left, d), right)


def check_composition_of_inclusions(rng, sig):
    n = _dims(rng, sig)
    l = rng.randint(min(n + 1, sig.top_dim), sig.top_dim)
    if l == n:
        return  # no gap available at the dimension cap; next case covers it
    m_diag = random_diagram(rng, sig, l)
    anchor = boundary_iter(m_diag, "source", l - n + 1)
    d = random_diagram_with_target(rng, sig, n, anchor)
    s = random_diagram_with_target(rng, sig, n, d.source)
    lhs = compose_embeddings(inclusion(s, compose(d, m_diag)), inclusion(d, m_diag))
    assert lhs == inclusion(compose(s, d), m_diag)


def check_distributive_composition(rng, sig):
    n = rng.randint(2, sig.top_dim)
    m = rng.randint(1, n - 1)
    d = random_diagram(rng, sig, n)
    mid = random_diagram(rng, sig, n, source=d.target())
    s = random_diagram_with_target(rng, sig, m, boundary_iter(d, "source", n - m + 1))
    lhs = compose(s, compose(d, mid))
    rhs = compose(compose(s, d), compose(s, mid))
    assert lhs == rhs
    # mirrored law: right whiskering distributes over vertical composition
    w = random_diagram(rng, sig, m, source=boundary_iter(d, "target", n - m + 1))
    assert compose(compose(d, mid), w) == compose(compose(d, w), compose(mid, w))


def check_triple_inclusion(rng, sig):
    n = rng.randint(2, sig.top_dim)
    m = rng.randint(1, n - 1)
    d = random_diagram(rng, sig, n)
    mid = random_diagram(rng, sig, n, source=d.target())
    s = random_diagram_with_target(rng, sig, m, boundary_iter(d, "source", n - m + 1))
    lhs = compose_embeddings(inclusion(s, compose(d, mid)), inclusion(d, mid))
    rhs = compose_embeddings(inclusion(compose(s, d), compose(s, mid)), inclusion(s, mid))
    assert lhs == rhs


def check_identity_embedding_cancellation(rng, sig):
    dim = _dims(rng, sig)
    s, d, e = random_embedded_pair(rng, sig, dim)
    assert compose_embeddings(identity_embedding(d), e) == e
    assert compose_embeddings(e, identity_embedding(s)) == e


def check_identity_diagram_units(rng, sig):
    n = rng.randint(2, sig.top_dim)
    d = random_diagram(rng, sig, n)
    j = rng.randint(1, n - 1)
    left = identity_diagram(boundary_iter(d, "source", j + 1))
    assert compose(left, d) == d
    right = identity_diagram(boundary_iter(d, "target", j + 1))
    assert compose(d, right) == d
    # boosting: composing under an identity boosts the composite
    m = rng.randint(1, n - 1)
    s = random_diagram_with_target(rng, sig, m, boundary_iter(d, "source", n - m + 1))
    assert compose(s, identity_diagram(d)) == identity_diagram(compose(s, d))


# -- homotopy move fuzzing ---------------------------------------------------


def move_signature(rng: random.Random) -> Signature:
    """A word signature with strand cells and vertices for move fuzzing."""
    sig = Signature(4)
    sig.add_generator("x", 0)
    point = Diagram.point(sig, "x")
    sig.add_generator("f", 1, source=point, target=point)
    words = {k: Diagram(1, None, point, tuple(Entry("f", ()) for _ in range(k)), sig)
             for k in range(0, 5)}
    strands = []
    for i in range(rng.randint(2, 4)):
        a, b = rng.randint(1, 2), rng.randint(1, 2)
        name = f"w{i}"
        sig.add_generator(name, 2, source=words[a], target=words[b])
        strands.append(name)
    vertices = []
    for i in range(rng.randint(1, 3)):
        src = random_diagram(rng, sig, 2, max_height=2)
        if len(src) == 0:
            src = sig.atom(rng.choice(strands))
        tgt = random_globular_partner(rng, sig, src)
        if len(tgt) == 0:
            tgt = src
        name = f"v{i}"
        sig.add_generator(name, 3, source=src, target=tgt)
        vertices.append(name)
    return sig


def random_interchange_case(rng: random.Random, tries: int = 60):
    """(diagram, height, direction) with a valid interchange redex, found by
    scanning randomly grown diagrams over wide enough base words."""
    from .homotopy import interchange_redexes
    for _ in range(tries):
        sig = move_signature(rng)
        dim = rng.choice((2, 2, 3))
        point = Diagram.point(sig, "x")
        base = Diagram(1, None, point,
                       tuple(Entry("f", ()) for _ in range(rng.randint(3, 5))), sig)
        source = base if dim == 2 else random_diagram(rng, sig, 2, max_height=2, source=base)
        d = random_diagram(rng, sig, dim, max_height=4, source=source)
        redexes = interchange_redexes(d)
        if redexes:
            i, direction = rng.choice(redexes)
            return d, i, direction
    raise AssertionError("no interchange redex found; generator too weak")


def random_pullthrough_case(rng: random.Random, variant: str, tries: int = 40):
    """(diagram, height) holding a pull-through redex of the given variant,
    wrapped in random composition context."""
    from .homotopy import build_pullthrough_redex
    for _ in range(tries):
        sig = move_signature(rng)
        strands = [g.name for g in sig.generators(2)]
        vertices = [g.name for g in sig.generators(3)]
        if not vertices:
            continue
        strand = rng.choice(strands)
        alpha = rng.choice(vertices)
        gap = None
        if rng.random() < 0.4:
            gap = random_diagram(rng, sig, 1, max_height=2)
            if len(gap) == 0:
                gap = None
        try:
            redex, _ = build_pullthrough_redex(sig, strand, alpha, variant, gap)
        except KernelError:
            continue
        _, ambient, emb = random_embedded_pair(rng, sig, 3, start=redex, wraps=2)
        return ambient, emb[0]
    raise AssertionError("no pull-through redex found; generator too weak")


PROPERTIES: dict[str, Callable] = {
    "identity_rewrites": check_identity_rewrites,
    "well_defined_rewrites": check_well_defined_rewrites,
    "well_defined_lifts": check_well_defined_lifts,
    "well_defined_composite_embeddings": check_well_defined_composite_embeddings,
    "globularity_on_slices": check_globularity_on_slices,
    "explicit_rewrites": check_explicit_rewrites,
    "composite_lifts": check_composite_lifts,
    "composite_rewrites": check_composite_rewrites,
    "associative_composite_embeddings": check_associative_composite_embeddings,
    "well_defined_composition": check_well_defined_composition,
    "well_defined_inclusions": check_well_defined_inclusions,
    "well_behaved_whiskering": check_well_behaved_whiskering,
    "lifts_vs_inclusions": check_lifts_vs_inclusions,
    "associative_composition": check_associative_composition,
    "composition_of_inclusions": check_composition_of_inclusions,
    "distributive_composition": check_distributive_composition,
    "triple_inclusion": check_triple_inclusion,
    "identity_embedding_cancellation": check_identity_embedding_cancellation,
    "identity_diagram_units": check_identity_diagram_units,
}


def run_property(name: str, cases: int, seed: int, max_dim: int = MAX_DIM) -> dict:
    """Run one named property on fresh random structures; returns a summary."""
    check = PROPERTIES[name]
    rng = random.Random(f"{seed}:{name}")
    started = time.perf_counter()
    sigs = [random_signature(rng, max_dim=max_dim) for _ in range(8)]
    for i in range(cases):
        check(rng, sigs[i % len(sigs)])
    return {"name": name, "cases": cases, "seconds": time.perf_counter() - started}


def run_all(cases: int = 500, seed: int = 0, max_dim: int = MAX_DIM):
    return [run_property(name, cases, seed, max_dim) for name in PROPERTIES]
