"""Diagram composition, inclusion embeddings and identity diagrams.

Two diagrams compose in exactly one way, determined by their dimensions: equal
dimensions concatenate entry lists, otherwise the lower-dimensional operand is
whiskered along the iterated boundary of the higher one. The inclusion
embeddings locate each operand inside the composite.
"""

from __future__ import annotations

from .diagram import (
    Diagram,
    Embedding,
    Entry,
    compose_embeddings,
    identity_embedding,
)
from .errors import BoundaryMismatch, DepthOutOfRange, DimensionMismatch


def boundary_iter(d: Diagram, side: str, k: int) -> Diagram:
    """k-fold source or target of a diagram."""
    if side not in ("source", "target"):
        raise ValueError(f"side must be 'source' or 'target', got {side!r}")
    if not 0 <= k <= d.dim:
        raise DepthOutOfRange(f"cannot take {k} boundaries of a {d.dim}-diagram")
    for _ in range(k):
        d = d.source if side == "source" else d.target()
    return d


def identity_diagram(d: Diagram) -> Diagram:
    """The (n+1)-diagram with source d and no entries."""
    return Diagram(d.dim + 1, None, d, (), d.sig)


def _check_composable(s: Diagram, d: Diagram) -> None:
    if s.dim < 1 or d.dim < 1:
        raise DimensionMismatch("composition needs diagrams of dimension at least 1")
    if s.dim <= d.dim:
        if boundary_iter(d, "source", d.dim - s.dim + 1) != s.target():
            raise BoundaryMismatch(
                f"target of the {s.dim}-diagram does not match the iterated source")
    else:
        if boundary_iter(s, "target", s.dim - d.dim + 1) != d.source:
            raise BoundaryMismatch(
                f"iterated target of the {s.dim}-diagram does not match the source")


def compose(s: Diagram, d: Diagram) -> Diagram:
    """The composite of s followed by d along their shared boundary.

    Equal dimensions: concatenation. s lower: d's entries survive, shifted by
    the inclusion of s into each slice. s higher: s's entries survive
    unchanged and the gluing happens in the source.
    """
    _check_composable(s, d)
    m, n = s.dim, d.dim
    if m == n:
        return Diagram(n, None, s.source, s.entries + d.entries, d.sig)
    if m < n:
        shift = _inclusion_vector(len(s), n - 1, m)
        entries = tuple(Entry(g, compose_embeddings(shift, e)) for g, e in d.entries)
        return Diagram(n, None, compose(s, d.source), entries, d.sig)
    return Diagram(m, None, compose(s.source, d), s.entries, s.sig)


def _inclusion_vector(size: int, length: int, m: int) -> Embedding:
    # zeros except `size` at the depth where the dimensions meet
    vec = [0] * length
    if length:
        vec[length - m] = size
    return tuple(vec)


def inclusion(s: Diagram, d: Diagram) -> Embedding:
    """The embedding of d into compose(s, d), for dim(s) <= dim(d).

    At equal dimensions the top height is |s|; below that the recursion only
    touches the level where the dimensions meet, so the vector is zeros with
    |s| at depth dim(d) - dim(s).
    """
    if s.dim > d.dim:
        raise DimensionMismatch("inclusion expects the first diagram to be lower-dimensional")
    _check_composable(s, d)
    return _inclusion_vector(len(s), d.dim, s.dim)


def inclusion_rev(s: Diagram, d: Diagram) -> Embedding:
    """The embedding of s into compose(s, d), for dim(s) >= dim(d).

    s occupies the initial segment of the composite at every level, so the
    height data is the identity embedding of s.
    """
    if s.dim < d.dim:
        raise DimensionMismatch("inclusion_rev expects the first diagram to be higher-dimensional")
    _check_composable(s, d)
    return identity_embedding(s)
