import json
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from betti_bounds.utils import format_rational


class RationalEncoder(json.JSONEncoder):
    def default(self, obj: Any) -> Any:
        if isinstance(obj, Fraction):
            return format_rational(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="json")
        return super().default(obj)


def dump_json(obj: Any, **kwargs) -> str:
    """Deterministic indented JSON with a trailing newline."""
    return (
        json.dumps(
            obj,
            cls=RationalEncoder,
            ensure_ascii=False,
            allow_nan=False,
            indent=2,
            **kwargs,
        )
        + "\n"
    )
