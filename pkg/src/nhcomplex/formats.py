"""Reading and writing complexes.

Text documents::

    # comment
    name: edge_point
    ground: a b c d      (optional; defaults to the facet vertices)
    facet: a b
    facet: c
    facet:               (the empty facet, i.e. the complex {∅})
    void: true           (the void complex; no facet lines allowed)

JSON documents: ``{"ground": [...], "facets": [[...], ...], "void": false}``.
"""

from __future__ import annotations

import json

from .core import ComplexError, SimplicialComplex, make_complex, sort_vertices


class ParseError(ComplexError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_complex(text: str) -> SimplicialComplex:
    return parse_document(text)[0]


def parse_document(text: str) -> tuple[SimplicialComplex, str | None]:
    """Parse a text or JSON document into ``(complex, name)``."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    ground = None
    name = None
    void = False
    facets: list[list[str]] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", no)
        key = key.strip().lower()
        tokens = rest.split()
        if key == "facet":
            if len(set(tokens)) != len(tokens):
                raise ParseError("facet repeats a vertex", no)
            facets.append(tokens)
        elif key == "ground":
            if ground is not None:
                raise ParseError("ground declared twice", no)
            ground = tokens
        elif key == "name":
            name = rest.strip() or None
        elif key == "void":
            if rest.strip().lower() not in ("true", "yes", "1"):
                raise ParseError("void takes the value 'true'", no)
            void = True
        else:
            raise ParseError(f"unknown key {key!r}", no)
    if void and facets:
        raise ParseError("a void complex cannot list facets")
    if not void and not facets:
        raise ParseError("no facets given (use 'facet:' for the complex {∅} or 'void: true')")
    return make_complex(ground, facets, void=void), name


def _parse_json(text: str) -> tuple[SimplicialComplex, str | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc.msg), exc.lineno) from None
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ParseError("JSON document needs a 'facets' list")
    facets = doc["facets"]
    void = bool(doc.get("void", False))
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError("'facets' must be a list of lists")
    if void and facets:
        raise ParseError("a void complex cannot list facets")
    if not void and not facets:
        raise ParseError("no facets given")
    ground = doc.get("ground")
    return make_complex(ground, facets, void=void), doc.get("name")


def serialize(K: SimplicialComplex, name: str | None = None, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    if name:
        lines.append(f"name: {name}")
    if K.void or tuple(K.ground) != sort_vertices(K.support):
        lines.append("ground:" + "".join(f" {v}" for v in K.ground))
    if K.void:
        lines.append("void: true")
    for f in K.facet_sets():
        lines.append("facet:" + "".join(f" {v}" for v in f))
    return "\n".join(lines) + "\n"


def to_json(K: SimplicialComplex, name: str | None = None) -> dict:
    doc = {
        "ground": [str(v) for v in K.ground],
        "facets": [[str(v) for v in f] for f in K.facet_sets()],
        "void": K.void,
    }
    if name:
        doc["name"] = name
    return doc
