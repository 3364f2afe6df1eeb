"""Reading and writing complexes in the SRC v1 text format and its JSON mirror.

SRC v1::

    # comment
    n 5
    1 2 4
    1 3 5
    ---
    n 1
    {}

The first non-comment line of a document is ``n <int>``; every following
line is one facet given as 1-based vertex indices (``{}`` is the empty
facet). ``---`` separates documents in a multi-complex file.
"""
import json
from typing import List, Optional, Sequence, Tuple

from pydantic import ValidationError

from stanley_reisner_toolkit.complex_core.simplicial_complex import (
    SimplicialComplex,
    from_facets,
)
from stanley_reisner_toolkit.complex_core.vertex_set import (
    MAX_VERTICES,
    vertex_set,
    vertices_of,
)
from stanley_reisner_toolkit.utils.errors import ComplexParseError, InvalidComplexError
from stanley_reisner_toolkit.utils.schemas import ComplexSchema

DOCUMENT_SEPARATOR = "---"
EMPTY_FACET = "{}"


def _tokens(line: str) -> List[Tuple[str, int]]:
    """Whitespace tokens with their 1-based columns, comments stripped."""
    body = line.split("#", 1)[0]
    out = []
    i = 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        start = i
        while i < len(body) and not body[i].isspace():
            i += 1
        out.append((body[start:i], start + 1))
    return out


def _parse_document(lines: Sequence[Tuple[int, str]]) -> SimplicialComplex:
    n: Optional[int] = None
    facets = []
    last_line = lines[-1][0] if lines else None
    for lineno, line in lines:
        tokens = _tokens(line)
        if not tokens:
            continue
        if n is None:
            if tokens[0][0] != "n" or len(tokens) != 2:
                raise ComplexParseError("expected header 'n <int>'", lineno, tokens[0][1])
            try:
                n = int(tokens[1][0])
            except ValueError:
                raise ComplexParseError(
                    f"vertex count {tokens[1][0]!r} is not an integer", lineno, tokens[1][1]
                ) from None
            if not 0 <= n <= MAX_VERTICES:
                raise ComplexParseError(
                    f"vertex count {n} outside 0..{MAX_VERTICES}", lineno, tokens[1][1]
                )
            continue
        if len(tokens) == 1 and tokens[0][0] == EMPTY_FACET:
            facets.append(0)
            continue
        vertices = []
        for text, column in tokens:
            try:
                v = int(text)
            except ValueError:
                raise ComplexParseError(f"{text!r} is not a vertex index", lineno, column) from None
            if not 1 <= v <= n:
                raise ComplexParseError(f"vertex {v} outside [1, {n}]", lineno, column)
            vertices.append(v)
        facets.append(vertex_set(vertices))
    if n is None:
        raise ComplexParseError("missing header 'n <int>'", last_line, None)
    if not facets:
        raise ComplexParseError("no facets given (the void complex is not supported)", last_line, None)
    return from_facets(n, facets)


def _split_documents(text: str) -> List[List[Tuple[int, str]]]:
    documents: List[List[Tuple[int, str]]] = [[]]
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip() == DOCUMENT_SEPARATOR:
            documents.append([])
        else:
            documents[-1].append((lineno, line))
    return [doc for doc in documents if any(_tokens(line) for _, line in doc)]


def parse_src(text: str) -> SimplicialComplex:
    documents = _split_documents(text)
    if len(documents) != 1:
        raise ComplexParseError(f"expected one complex, found {len(documents)}", 1, None)
    return _parse_document(documents[0])


def parse_src_documents(text: str) -> List[SimplicialComplex]:
    return [_parse_document(doc) for doc in _split_documents(text)]


def format_src(cx: SimplicialComplex) -> str:
    lines = [f"n {cx.n}"]
    for facet in cx.facets:
        lines.append(" ".join(str(v) for v in vertices_of(facet)) if facet else EMPTY_FACET)
    return "\n".join(lines) + "\n"


def format_src_documents(complexes: Sequence[SimplicialComplex]) -> str:
    return f"{DOCUMENT_SEPARATOR}\n".join(format_src(cx) for cx in complexes)


def to_schema(cx: SimplicialComplex) -> ComplexSchema:
    return ComplexSchema(n=cx.n, facets=cx.facet_lists())


def from_schema(schema: ComplexSchema) -> SimplicialComplex:
    if any(v < 1 for facet in schema.facets for v in facet):
        raise ComplexParseError("vertex indices start at 1")
    try:
        return from_facets(schema.n, [vertex_set(f) for f in schema.facets])
    except InvalidComplexError as e:
        raise ComplexParseError(str(e)) from e


def parse_json(text: str) -> SimplicialComplex:
    try:
        schema = ComplexSchema.model_validate_json(text)
    except ValidationError as e:
        raise ComplexParseError(f"invalid complex JSON: {e.errors()[0]['msg']}") from e
    return from_schema(schema)


def format_json(cx: SimplicialComplex) -> str:
    return to_schema(cx).model_dump_json()


def parse_complex_text(text: str) -> SimplicialComplex:
    """Accept either SRC v1 or the JSON mirror."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_src(text)


def parse_inline_facets(text: str, n: Optional[int] = None) -> SimplicialComplex:
    """Parse ``"1 2 4; 1 3 5"``; ``n`` defaults to the largest vertex used."""
    facets = []
    column = 1
    for chunk in text.split(";"):
        piece = chunk.strip()
        if piece == EMPTY_FACET:
            facets.append([])
        elif piece:
            vertices = []
            for token in piece.split():
                try:
                    vertices.append(int(token))
                except ValueError:
                    raise ComplexParseError(
                        f"{token!r} is not a vertex index", 1, column + chunk.find(token)
                    ) from None
            facets.append(vertices)
        column += len(chunk) + 1
    if not facets:
        raise ComplexParseError("no facets given", 1, 1)
    used = max((v for f in facets for v in f), default=0)
    return from_schema(ComplexSchema(n=used if n is None else n, facets=facets))


def dumps_many_json(complexes: Sequence[SimplicialComplex]) -> str:
    return json.dumps([to_schema(cx).model_dump() for cx in complexes])
