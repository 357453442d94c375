"""Recursive diagram values and the trusted rewriting core.

A 0-diagram is a single generator. An n-diagram is a source (n-1)-diagram
together with an ordered list of entries, each entry naming a generating
n-cell and the embedding of its source into the slice at that height. An
embedding between k-diagrams is stored as a flat vector of k heights; the
recursive (h, e.e) view of the definition is the (head, tail) view of this
vector.

Diagrams are immutable values. Slices are memoized per instance, which is
safe because nothing can mutate a diagram after construction.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional, Union

from .errors import (
    DimensionMismatch,
    EmbeddingIllDefined,
    HeightOutOfRange,
    IllDefinedAt,
    NotGlobular,
    UnknownGenerator,
)

Embedding = tuple  # vector of k naturals for an embedding between k-diagrams


class Entry(NamedTuple):
    generator: str
    embedding: Embedding


class Diagram:
    """An n-diagram over a signature.

    Use :meth:`point` for 0-diagrams and :meth:`layered` for everything else;
    the constructor is shared plumbing.
    """

    __slots__ = ("dim", "generator", "source", "entries", "sig",
                 "_slices", "_bad", "_hash", "__weakref__")

    def __init__(self, dim, generator, source, entries, sig):
        self.dim = dim
        self.generator = generator
        self.source = source
        self.entries = entries
        self.sig = sig
        self._slices = None
        self._bad = None
        self._hash = None

    @classmethod
    def point(cls, sig, generator: str) -> "Diagram":
        return cls(0, generator, None, (), sig)

    @classmethod
    def layered(cls, source: "Diagram", entries) -> "Diagram":
        entries = tuple(Entry(g, tuple(e)) for g, e in entries)
        for g, e in entries:
            if len(e) != source.dim:
                raise DimensionMismatch(
                    f"entry embedding {e} has {len(e)} heights, expected {source.dim}")
        return cls(source.dim + 1, None, source, entries, source.sig)

    def __len__(self):
        # |D|; a 0-diagram has exactly one cell.
        return 1 if self.dim == 0 else len(self.entries)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.dim == other.dim
                and self.generator == other.generator
                and self.entries == other.entries
                and self.source == other.source)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.generator, self.entries, self.source))
        return self._hash

    def __repr__(self):
        if self.dim == 0:
            return f"<{self.generator}>"
        inner = ", ".join(f"({g}, {list(e)})" for g, e in self.entries)
        return f"<{self.source!r}; [{inner}]>"

    # -- slicing --------------------------------------------------------

    def slice(self, i: int) -> "Diagram":
        """The intermediate (n-1)-diagram after the first i entries.

        slice(0) is the source; slice(i+1) rewrites slice(i) along entry i.
        Raises HeightOutOfRange for bad i and IllDefinedAt(j) when entry j
        cannot be applied.
        """
        if self.dim == 0:
            raise DimensionMismatch("0-diagrams have no slices")
        if not 0 <= i <= len(self.entries):
            raise HeightOutOfRange(f"slice {i} of a diagram of height {len(self.entries)}")
        if self._slices is None:
            self._slices = [self.source]
        while len(self._slices) <= i:
            j = len(self._slices) - 1
            if self._bad is not None and self._bad[0] == j:
                raise IllDefinedAt(j, self._bad[1])
            cur = self._slices[j]
            gen, emb = self.entries[j]
            try:
                record = self.sig.generator(gen)
            except UnknownGenerator:
                self._bad = (j, f"unknown generator {gen!r}")
                raise IllDefinedAt(j, self._bad[1]) from None
            if record.dim != self.dim:
                self._bad = (j, f"generator {gen!r} has dimension {record.dim}, expected {self.dim}")
                raise IllDefinedAt(j, self._bad[1])
            if not well_defined_embedding(emb, record.source, cur):
                self._bad = (j, f"embedding {list(emb)} of {gen!r} does not fit the slice")
                raise IllDefinedAt(j, self._bad[1])
            self._slices.append(rewrite(cur, emb, record.source, record.target, validate=False))
        return self._slices[i]

    def target(self) -> "Diagram":
        """The final slice."""
        return self.slice(len(self.entries))

    def slices(self) -> Iterator["Diagram"]:
        for i in range(len(self.entries) + 1):
            yield self.slice(i)


def identity_embedding(d: Diagram) -> Embedding:
    """The all-zero embedding of a diagram into itself."""
    return (0,) * d.dim


def compose_embeddings(f: Embedding, e: Embedding) -> Embedding:
    """Composite of e: S -> D and f: D -> A, as an embedding S -> A.

    Unfolding the recursive definition level by level shows the height data
    of the composite is the elementwise sum; the test suite checks this
    against the literal recursion on random instances.
    """
    if len(f) != len(e):
        raise DimensionMismatch(f"cannot compose embeddings of lengths {len(f)} and {len(e)}")
    return tuple(a + b for a, b in zip(f, e))


def lift(e: Embedding, replacement: Diagram, source: Optional[Diagram] = None) -> Embedding:
    """Embedding of the replacement into the rewritten diagram.

    Numerically identical to e. When the removed diagram is supplied, the
    globularity precondition is checked.
    """
    if source is not None and not globular(source, replacement):
        raise NotGlobular("lift requires a globular source/replacement pair")
    if len(e) != replacement.dim:
        raise DimensionMismatch(
            f"embedding of length {len(e)} cannot lift a {replacement.dim}-diagram")
    return tuple(e)


def rewrite(d: Diagram, e: Embedding, removed: Diagram, replacement: Diagram,
            validate: bool = True) -> Diagram:
    """Replace the image of `removed` under e inside d by `replacement`.

    The result keeps d's source and has height |d| - |removed| + |replacement|:
    the entries below e stay, the replacement's entries come in with their
    embeddings composed with the lifted e, and the tail of d stays.
    """
    if not d.dim == removed.dim == replacement.dim == len(e):
        raise DimensionMismatch(
            f"rewrite dimensions disagree: {d.dim}, {removed.dim}, {replacement.dim}, |e|={len(e)}")
    if d.dim == 0:
        if d.generator != removed.generator:
            raise EmbeddingIllDefined(
                f"0-diagram {d.generator!r} does not contain {removed.generator!r}")
        return Diagram.point(d.sig, replacement.generator)
    if not globular(removed, replacement):
        raise NotGlobular("rewrite requires a globular removed/replacement pair")
    h = e[0]
    if h + len(removed) > len(d):
        raise EmbeddingIllDefined(
            f"embedding at height {h} with {len(removed)} entries overruns height {len(d)}")
    if validate and not well_defined_embedding(e, removed, d):
        raise EmbeddingIllDefined(f"embedding {list(e)} is not well-defined")
    deep = e[1:]
    middle = tuple(Entry(g, compose_embeddings(deep, emb)) for g, emb in replacement.entries)
    entries = d.entries[:h] + middle + d.entries[h + len(removed):]
    return Diagram(d.dim, None, d.source, entries, d.sig)


def equivalent(a: Union[Diagram, Embedding], b: Union[Diagram, Embedding]) -> bool:
    """Structural equality of diagrams or of embedding height vectors."""
    return a == b


def globular(s: Diagram, t: Diagram) -> bool:
    """Whether two diagrams share source and target.

    Any two 0-diagrams are globular.
    """
    if s.dim != t.dim:
        raise DimensionMismatch(f"globularity needs equal dimensions, got {s.dim} and {t.dim}")
    if s.dim == 0:
        return True
    return s.source == t.source and s.target() == t.target()


def well_defined_embedding(e: Embedding, s: Diagram, d: Diagram) -> bool:
    """Whether e embeds s into d: matching generators at shifted heights and
    compatible entry embeddings, recursively."""
    if s.dim != d.dim:
        raise DimensionMismatch(f"embedding between dimensions {s.dim} and {d.dim}")
    if len(e) != s.dim:
        raise DimensionMismatch(f"embedding vector {list(e)} for {s.dim}-diagrams")
    if s.dim == 0:
        return s.generator == d.generator
    h, deep = e[0], e[1:]
    if h + len(s.entries) > len(d.entries) or h < 0:
        return False
    try:
        base = d.slice(h)
    except IllDefinedAt:
        return False
    if not well_defined_embedding(deep, s.source, base):
        return False
    for i, (gen, emb) in enumerate(s.entries):
        other = d.entries[i + h]
        if gen != other.generator:
            return False
        if compose_embeddings(deep, emb) != other.embedding:
            return False
    return True


class WellDefinedResult(NamedTuple):
    ok: bool
    path: tuple
    reason: str

    def __bool__(self):
        return self.ok


def well_defined(d: Diagram, sig=None) -> WellDefinedResult:
    """Check a diagram bottom-up; on failure the path locates the first bad
    height, descending through sources where needed."""
    sig = sig if sig is not None else d.sig
    if d.dim == 0:
        try:
            record = sig.generator(d.generator)
        except UnknownGenerator:
            return WellDefinedResult(False, (), f"unknown generator {d.generator!r}")
        if record.dim != 0:
            return WellDefinedResult(False, (), f"{d.generator!r} is not a 0-cell")
        return WellDefinedResult(True, (), "")
    inner = well_defined(d.source, sig)
    if not inner.ok:
        return WellDefinedResult(False, ("source",) + inner.path, inner.reason)
    try:
        d.slice(len(d.entries))
    except IllDefinedAt as err:
        return WellDefinedResult(False, (err.height,), err.reason)
    return WellDefinedResult(True, (), "")


def embeddings_into(s: Diagram, d: Diagram) -> list:
    """All well-defined embeddings of s into d, by exhaustive search."""
    if s.dim != d.dim:
        raise DimensionMismatch(f"embedding between dimensions {s.dim} and {d.dim}")
    if s.dim == 0:
        return [()] if s.generator == d.generator else []
    found = []
    for h in range(len(d.entries) - len(s.entries) + 1):
        if any(s.entries[i].generator != d.entries[i + h].generator
               for i in range(len(s.entries))):
            continue
        try:
            base = d.slice(h)
        except IllDefinedAt:
            continue
        for deep in embeddings_into(s.source, base):
            e = (h,) + deep
            if well_defined_embedding(e, s, d):
                found.append(e)
    return found


def window(d: Diagram, lo: int, hi: int) -> tuple:
    """The subdiagram spanning entry heights [lo, hi), with its embedding.

    The window keeps every entry untouched, so it is well-defined whenever d
    is, and embeds back at height lo with all deeper offsets zero.
    """
    if d.dim == 0:
        raise DimensionMismatch("0-diagrams have no windows")
    if not 0 <= lo <= hi <= len(d.entries):
        raise HeightOutOfRange(f"window [{lo}, {hi}) of a diagram of height {len(d.entries)}")
    sub = Diagram(d.dim, None, d.slice(lo), d.entries[lo:hi], d.sig)
    return sub, (lo,) + (0,) * (d.dim - 1)
