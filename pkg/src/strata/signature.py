"""Catalogs of generating cells, indexed by dimension.

A signature stores, per dimension, the generating cells with their globular
boundary diagrams. Invertible cells carry an InvertibilityData record whose
witness cells are synthesized lazily; the coinductive tower is cut off at the
signature's top dimension since witnesses of k-cells live in dimension k+1.

Signatures are append-only: generators are never removed, so diagrams built
earlier stay valid. Homotopy move cells synthesized during rewriting are
registered here too, memoized by their source diagram.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from typing import Optional

from .compose import compose as _compose_diagrams, identity_diagram as _identity_diagram
from .diagram import Diagram, identity_embedding, globular, well_defined
from .errors import (
    BoundaryIllDefined,
    BoundaryIllTyped,
    DuplicateName,
    UnknownGenerator,
)


@dataclass
class InvertibilityData:
    inverse: str
    unit_witness: Optional[str] = None
    counit_witness: Optional[str] = None


@dataclass
class Generator:
    name: str
    dim: int
    source: Optional[Diagram] = None
    target: Optional[Diagram] = None
    invertibility: Optional[InvertibilityData] = None
    tag: Optional[object] = None  # MoveKind for synthesized homotopy cells

    @property
    def invertible(self) -> bool:
        return self.invertibility is not None


class Signature:
    def __init__(self, top_dim: int):
        if top_dim < 0:
            raise ValueError("top_dim must be a natural number")
        self.levels = [dict() for _ in range(top_dim + 1)]
        self._index: dict[str, Generator] = {}
        self._move_cells: dict = {}
        self._lock = threading.RLock()

    @property
    def top_dim(self) -> int:
        return len(self.levels) - 1

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def generator(self, name: str) -> Generator:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(f"no generator named {name!r}") from None

    def generators(self, dim: Optional[int] = None):
        if dim is None:
            return [g for level in self.levels for g in level.values()]
        if not 0 <= dim <= self.top_dim:
            return []
        return list(self.levels[dim].values())

    def prefix(self, dim: int) -> "Signature":
        """The sub-signature of levels 0..dim, sharing generator records."""
        if not 0 <= dim <= self.top_dim:
            raise ValueError(f"no prefix of dimension {dim}")
        out = Signature(dim)
        for k in range(dim + 1):
            out.levels[k] = self.levels[k]
        out._index = {g.name: g for level in out.levels for g in level.values()}
        return out

    def fresh_name(self, base: str) -> str:
        if base not in self._index:
            return base
        k = 2
        while f"{base}#{k}" in self._index:
            k += 1
        return f"{base}#{k}"

    # -- construction ----------------------------------------------------

    def add_generator(self, name: str, dim: int,
                      source: Optional[Diagram] = None,
                      target: Optional[Diagram] = None,
                      tag: Optional[object] = None,
                      extend: bool = False) -> str:
        """Register a cell. Boundaries are required exactly for dim > 0 and
        must be well-defined; for dim > 1 they must form a globular pair.

        `extend` lets synthesized move cells grow the level list; user cells
        stay within the declared top dimension.
        """
        with self._lock:
            if name in self._index:
                raise DuplicateName(f"generator {name!r} already registered")
            if dim > self.top_dim:
                if not extend:
                    raise BoundaryIllTyped(
                        f"dimension {dim} exceeds the signature's top dimension {self.top_dim}")
                self.ensure_level(dim)
            if dim == 0:
                if source is not None or target is not None:
                    raise BoundaryIllTyped("0-cells carry no boundary data")
                record = Generator(name, 0)
            else:
                if source is None or target is None:
                    raise BoundaryIllTyped(f"{dim}-cells need source and target diagrams")
                if source.dim != dim - 1 or target.dim != dim - 1:
                    raise BoundaryIllTyped(
                        f"boundaries of a {dim}-cell must be {dim - 1}-diagrams")
                for side, d in (("source", source), ("target", target)):
                    result = well_defined(d, self)
                    if not result:
                        raise BoundaryIllDefined(
                            f"{side} of {name!r} is ill-defined: {result.reason}")
                if dim > 1 and not globular(source, target):
                    raise BoundaryIllTyped(
                        f"boundaries of {name!r} do not share source and target")
                record = Generator(name, dim, source, target)
            record.tag = tag
            self.levels[dim][name] = record
            self._index[name] = record
            if tag is not None and not getattr(tag, "inverse", False):
                # keep synthesized-cell lookups stable across serialization
                key = (tag.family, getattr(tag, "primed", False), source)
                self._move_cells.setdefault(key, name)
            return name

    def ensure_level(self, dim: int) -> None:
        while self.top_dim < dim:
            self.levels.append({})

    def atom(self, name: str) -> Diagram:
        """The height-1 diagram consisting of one generator."""
        g = self.generator(name)
        if g.dim == 0:
            return Diagram.point(self, name)
        return Diagram.layered(g.source, [(name, identity_embedding(g.source))])

    # -- invertibility ----------------------------------------------------

    def mark_invertible(self, name: str) -> InvertibilityData:
        """Equip a cell with an inverse, creating the inverse generator when
        absent. Witness cells appear lazily via unit_witness/counit_witness."""
        with self._lock:
            g = self.generator(name)
            if g.dim < 1:
                raise BoundaryIllTyped("0-cells cannot be marked invertible")
            if g.invertibility is not None:
                return g.invertibility
            inv_tag = None
            if g.tag is not None and hasattr(g.tag, "inverted"):
                inv_tag = g.tag.inverted()
            inv_name = self.fresh_name(name + "⁻¹")
            self.add_generator(inv_name, g.dim, source=g.target, target=g.source,
                               tag=inv_tag, extend=True)
            g.invertibility = InvertibilityData(inverse=inv_name)
            self.generator(inv_name).invertibility = InvertibilityData(inverse=name)
            return g.invertibility

    def unit_witness(self, name: str) -> str:
        """The cell contracting [g] then [g⁻¹] to the identity on g.source."""
        return self._witness(name, unit=True)

    def counit_witness(self, name: str) -> str:
        """The cell expanding the identity on g.target to [g⁻¹] then [g]."""
        return self._witness(name, unit=False)

    def _witness(self, name: str, unit: bool) -> str:
        with self._lock:
            g = self.generator(name)
            data = g.invertibility
            if data is None:
                data = self.mark_invertible(name)
            if g.dim + 1 > self.top_dim:
                raise BoundaryIllTyped(
                    f"witnesses of {name!r} would exceed the top dimension {self.top_dim}")
            existing = data.unit_witness if unit else data.counit_witness
            if existing is not None:
                return existing
            forward, backward = self.atom(name), self.atom(data.inverse)
            if unit:
                source = _compose_diagrams(forward, backward)
                target = _identity_diagram(g.source)
                wit = self.fresh_name(name + "′")
            else:
                source = _identity_diagram(g.target)
                target = _compose_diagrams(backward, forward)
                wit = self.fresh_name(name + "″")
            self.add_generator(wit, g.dim + 1, source=source, target=target, extend=True)
            if unit:
                data.unit_witness = wit
            else:
                data.counit_witness = wit
            self.mark_invertible(wit)
            return wit

    # -- synthesized move cells -------------------------------------------

    def move_cell(self, key, builder) -> str:
        """Get-or-create a synthesized homotopy cell, memoized by key.

        The key embeds the move kind and the source diagram, so requesting an
        equivalent redex yields the same generator.
        """
        with self._lock:
            if key in self._move_cells:
                return self._move_cells[key]
            name = builder()
            self._move_cells[key] = name
            return name


def add_generator(sig: Signature, name: str, dim: int,
                  source: Optional[Diagram] = None,
                  target: Optional[Diagram] = None) -> str:
    return sig.add_generator(name, dim, source, target)


def atom_diagram(sig: Signature, name: str) -> Diagram:
    return sig.atom(name)


def mark_invertible(sig: Signature, name: str) -> InvertibilityData:
    return sig.mark_invertible(name)


def generator_info(sig: Signature, name: str) -> Generator:
    """A copy of the generator record; mutating it cannot corrupt the
    signature's append-only store."""
    return replace(sig.generator(name))
