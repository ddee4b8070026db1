"""Frozen facet list of the 15-vertex tight 4-manifold triangulation.

This copy is kept deliberately separate from the generative construction
in constructions.build_m4_15 so that transcription and construction check
each other: the generated facet set must equal this one exactly.
"""

from __future__ import annotations

M4_15_FACETS: tuple[str, ...] = (
    "a1 a2 b1 b2 c1", "a1 b1 b2 c1 c2", "a1 a2 b1 c1 c2",
    "a1 a2 a4 b1 c2", "a2 b1 b2 b4 c1", "a1 b2 c1 c2 c4",
    "a1 a2 a4 b2 c2", "a2 b1 b2 b4 c2", "a2 b2 c1 c2 c4",
    "a1 a4 b1 b2 c2", "a2 b1 b4 c1 c2", "a1 a2 b2 c1 c4",
    "a1 a2 b2 c2 c4", "a2 a4 b1 b2 c2", "a2 b2 b4 c1 c2",
    "a1 a2 a3 a4 b2", "b1 b2 b3 b4 c2", "a2 c1 c2 c3 c4",
    "a1 a2 a3 b1 b2", "b1 b2 b3 c1 c2", "a1 a2 c1 c2 c3",
    "a1 a2 c1 c3 c4", "a1 a3 a4 b1 b2", "b1 b3 b4 c1 c2",
    "a1 a2 c2 c3 c4", "a2 a3 a4 b1 b2", "b2 b3 b4 c1 c2",
    "a1 a2 a3 a5 b1", "b1 b2 b3 b5 c1", "a1 c1 c2 c3 c5",
    "a1 a2 a4 a5 b1", "b1 b2 b4 b5 c1", "a1 c1 c2 c4 c5",
    "a1 a3 a4 a5 b1", "b1 b3 b4 b5 c1", "a1 c1 c3 c4 c5",
    "a2 a3 a4 a5 c5", "a5 b2 b3 b4 b5", "b5 c2 c3 c4 c5",
    "a2 a3 a4 b1 c5", "a5 b2 b3 b4 c1", "a1 b5 c2 c3 c4",
    "a2 a3 a5 b1 c5", "a5 b2 b3 b5 c1", "a1 b5 c2 c3 c5",
    "a2 a4 a5 b1 c5", "a5 b2 b4 b5 c1", "a1 b5 c2 c4 c5",
    "a3 a4 a5 b1 c4", "a4 b3 b4 b5 c1", "a1 b4 c3 c4 c5",
    "a3 a4 b1 c4 c5", "a4 a5 b3 b4 c1", "a1 b4 b5 c3 c4",
    "a3 a5 b1 c4 c5", "a4 a5 b3 b5 c1", "a1 b4 b5 c3 c5",
    "a4 a5 b1 c4 c5", "a4 a5 b4 b5 c1", "a1 b4 b5 c4 c5",
    "a3 a4 a5 c3 c4", "a3 a4 b3 b4 b5", "b3 b4 c3 c4 c5",
    "a3 a4 a5 c3 c5", "a3 a5 b3 b4 b5", "b3 b5 c3 c4 c5",
    "a3 a4 c3 c4 c5", "a3 a4 a5 b3 b4", "b3 b4 b5 c3 c4",
    "a4 a5 c3 c4 c5", "a3 a4 a5 b4 b5", "b3 b4 b5 c4 c5",
    "a3 a5 c2 c3 c4", "a2 a3 a4 b3 b5", "b2 b3 b4 c3 c5",
    "a3 a5 c2 c3 c5", "a2 a3 a5 b3 b5", "b2 b3 b5 c3 c5",
    "a3 a5 c2 c4 c5", "a2 a4 a5 b3 b5", "b2 b4 b5 c3 c5",
    "a2 a3 a4 a5 b5", "b2 b3 b4 b5 c5", "a5 c2 c3 c4 c5",
    "a1 a2 a3 a4 b3", "b1 b2 b3 b4 c3", "a3 c1 c2 c3 c4",
    "a1 a2 a3 a5 b3", "b1 b2 b3 b5 c3", "a3 c1 c2 c3 c5",
    "a1 a2 a4 a5 b3", "b1 b2 b4 b5 c3", "a3 c1 c2 c4 c5",
    "a1 a3 a4 a5 b3", "b1 b3 b4 b5 c3", "a3 c1 c3 c4 c5",
)
