"""Reading and writing complexes.

Text format, the toolkit's lingua franca: one facet per line as
whitespace-separated vertex labels; lines whose first non-blank character
is '#' are comments; blank lines are ignored.  The structured alternative
is a JSON object {"facets": [[label, ...], ...]} with the same meaning.

Serialization is canonical: vertices sorted within each facet, facets
sorted lexicographically, one per line.  Equal complexes serialize to
byte-identical text.
"""

from __future__ import annotations

import json

from .complex import CLONE_MARKER, SimplicialComplex, from_facets
from .errors import (
    DuplicateFacet,
    DuplicateVertexInFacet,
    EmptyInput,
    MixedDimensions,
    ParseError,
)


def parse_facet_text(text: str) -> SimplicialComplex:
    """Parse the facet-list text format with line/column diagnostics."""
    rows: list[list[str]] = []
    lines: list[int] = []
    expected_size: int | None = None
    seen: dict[tuple[str, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = raw.split()
        cursor = 0
        for tok in tokens:
            pos = raw.index(tok, cursor)
            cursor = pos + len(tok)
            for ch in tok:
                if ch == "#" or ch == CLONE_MARKER:
                    raise ParseError(
                        f"label {tok!r} contains forbidden character {ch!r}",
                        lineno,
                        pos + 1,
                    )
        if len(set(tokens)) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise ParseError(f"vertex {dup!r} repeated in facet", lineno)
        if expected_size is None:
            expected_size = len(tokens)
        elif len(tokens) != expected_size:
            raise ParseError(
                f"facet has {len(tokens)} vertices, previous facets have "
                f"{expected_size}",
                lineno,
            )
        key = tuple(sorted(tokens))
        if key in seen:
            raise ParseError(
                f"facet duplicates line {seen[key]}", lineno
            )
        seen[key] = lineno
        rows.append(tokens)
        lines.append(lineno)
    if not rows:
        raise ParseError("no facets found", max(1, text.count("\n") + 1))
    try:
        return from_facets(rows)
    except (DuplicateVertexInFacet, MixedDimensions, DuplicateFacet, EmptyInput) as e:
        raise ParseError(str(e), lines[-1]) from e


def parse_facet_json(text: str) -> SimplicialComplex:
    """Parse the structured {"facets": [...]} form."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ParseError('expected an object with a "facets" key', 1)
    facets = obj["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError('"facets" must be a list of label lists', 1)
    return from_facets(facets)


def loads(text: str) -> SimplicialComplex:
    """Parse either format, sniffing JSON by a leading '{'."""
    head = text.lstrip()
    if head.startswith("{"):
        return parse_facet_json(text)
    return parse_facet_text(text)


def load(path: str) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def serialize(X: SimplicialComplex) -> str:
    """Canonical text serialization (sorted facets, one per line)."""
    return "".join(" ".join(f) + "\n" for f in X.facets)


def to_json(X: SimplicialComplex) -> str:
    return json.dumps({"facets": [list(f) for f in X.facets]})


def dump(X: SimplicialComplex, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(X))
