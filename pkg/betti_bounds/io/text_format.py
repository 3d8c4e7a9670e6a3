"""Reading and writing Betti tables and symmetrized decompositions.

The canonical text form of a table is a ``betti v1`` header followed by one
``i j value`` line per nonzero entry. Blank lines and ``#`` comments are
ignored. A JSON form carries the same triples. Decompositions are JSON only.
"""

import json
import re

from pydantic import ValidationError

from betti_bounds.core.tables import validate_table
from betti_bounds.exceptions import DocumentError, TableSyntaxError
from betti_bounds.models import (
    BettiTable,
    DecompositionDocument,
    DocumentFormat,
    SymmetrizedDecomposition,
    TableDocument,
)
from betti_bounds.serialization import dump_json
from betti_bounds.utils import format_rational, parse_rational

_INTEGER = re.compile(r"^[+-]?\d+$")
_TOKEN = re.compile(r"\S+")


def _format_document_error(e: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(i) for i in error['loc'])}: {error['msg']}"
        for error in e.errors()
    )


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise TableSyntaxError(e.msg, e.lineno, e.colno) from e


def _parse_json_table(text: str) -> BettiTable:
    try:
        document = TableDocument.model_validate(_load_json(text))
    except ValidationError as e:
        raise DocumentError(
            f"Invalid table document: {_format_document_error(e)}", original_error=e
        ) from e
    return validate_table(document.entries)


def _parse_text_table(text: str) -> BettiTable:
    header_seen = False
    triples: list[tuple[int, int, object]] = []
    positions: set[tuple[int, int]] = set()

    for number, raw_line in enumerate(text.split("\n"), start=1):
        line = raw_line.rstrip("\r")
        content = line.split("#", 1)[0]
        tokens = list(_TOKEN.finditer(content))
        if not tokens:
            continue

        if not header_seen:
            if content.split() != DocumentFormat.TABLE.value.split():
                raise TableSyntaxError(
                    f"expected header '{DocumentFormat.TABLE.value}'",
                    number,
                    tokens[0].start() + 1,
                )
            header_seen = True
            continue

        if len(tokens) != 3:
            raise TableSyntaxError(
                f"expected 'i j value', got {len(tokens)} fields",
                number,
                tokens[0].start() + 1,
            )
        i_token, j_token, value_token = tokens
        for token in (i_token, j_token):
            if not _INTEGER.match(token.group()):
                raise TableSyntaxError(
                    f"invalid integer {token.group()!r}", number, token.start() + 1
                )
        i, j = int(i_token.group()), int(j_token.group())
        if i < 0:
            raise TableSyntaxError(
                f"homological index {i} is negative", number, i_token.start() + 1
            )
        if (i, j) in positions:
            raise TableSyntaxError(
                f"duplicate entry ({i}, {j})", number, i_token.start() + 1
            )
        try:
            value = parse_rational(value_token.group())
        except ValueError as e:
            raise TableSyntaxError(str(e), number, value_token.start() + 1) from e
        positions.add((i, j))
        triples.append((i, j, value))

    if not header_seen:
        raise TableSyntaxError(
            f"missing header '{DocumentFormat.TABLE.value}'", 1, 1
        )
    return validate_table(triples)


def parse_table(text: str) -> BettiTable:
    """Parse a table from its text or JSON form.

    Raises:
        TableSyntaxError: Malformed input, with line and column.
        DocumentError: JSON that does not match the table document.
        TableValidationError: The entries do not form a Betti table.
    """
    if text.lstrip().startswith("{"):
        return _parse_json_table(text)
    return _parse_text_table(text)


def serialize_table(table: BettiTable, as_json: bool = False) -> str:
    """Entries ordered by (i, j), integers plain and rationals as p/q."""
    if as_json:
        document = TableDocument(
            format=DocumentFormat.TABLE, entries=table.sorted_entries()
        )
        return dump_json(document.model_dump(mode="json"))
    lines = [DocumentFormat.TABLE.value]
    lines.extend(
        f"{i} {j} {format_rational(value)}" for i, j, value in table.sorted_entries()
    )
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> SymmetrizedDecomposition:
    """Parse a ``symmetrized v1`` JSON document.

    Raises:
        TableSyntaxError: Malformed JSON.
        DocumentError: JSON that does not match the decomposition document.
        InvalidDegreeSequenceError: A term's degrees are not strictly increasing.
    """
    try:
        document = DecompositionDocument.model_validate(_load_json(text))
    except ValidationError as e:
        raise DocumentError(
            f"Invalid decomposition document: {_format_document_error(e)}",
            original_error=e,
        ) from e
    return SymmetrizedDecomposition(
        duality_degree=document.duality_degree, terms=tuple(document.terms)
    )


def serialize_decomposition(decomposition: SymmetrizedDecomposition) -> str:
    document = DecompositionDocument(
        format=DocumentFormat.DECOMPOSITION,
        duality_degree=decomposition.duality_degree,
        terms=list(decomposition.terms),
    )
    return dump_json(document.model_dump(mode="json"))
