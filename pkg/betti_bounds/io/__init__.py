from betti_bounds.io.text_format import (
    parse_decomposition,
    parse_table,
    serialize_decomposition,
    serialize_table,
)

__all__ = [
    "parse_decomposition",
    "parse_table",
    "serialize_decomposition",
    "serialize_table",
]
