"""Kernel and tooling for layered globular diagrams: signatures, recursive
diagram values, rewriting, homotopy moves, proof documents, rendering and a
local HTTP service."""

from .diagram import (
    Diagram,
    Embedding,
    Entry,
    compose_embeddings,
    embeddings_into,
    equivalent,
    globular,
    identity_embedding,
    lift,
    rewrite,
    well_defined,
    well_defined_embedding,
    window,
)
from .compose import (
    boundary_iter,
    compose,
    identity_diagram,
    inclusion,
    inclusion_rev,
)
from .signature import (
    Generator,
    InvertibilityData,
    Signature,
    add_generator,
    atom_diagram,
    generator_info,
    mark_invertible,
)

__all__ = [
    "Diagram", "Embedding", "Entry", "Generator", "InvertibilityData", "Signature",
    "add_generator", "atom_diagram", "boundary_iter", "compose",
    "compose_embeddings", "embeddings_into", "equivalent", "generator_info",
    "globular", "identity_diagram", "identity_embedding", "inclusion",
    "inclusion_rev", "lift", "mark_invertible", "rewrite", "well_defined",
    "well_defined_embedding", "window",
]
