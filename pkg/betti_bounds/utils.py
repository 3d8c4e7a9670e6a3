import re
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from typing import Any

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def get_version() -> str:
    try:
        return version("betti-bounds")
    except PackageNotFoundError:
        return "dev"


def parse_rational(value: Any) -> Fraction:
    """Parse an exact rational from a Fraction, an int or a "p/q" string.

    Floats and decimal strings are rejected: every value must be exact.

    Args:
        value: The raw value.

    Returns:
        The value as a Fraction in lowest terms.

    Raises:
        ValueError: If the value is not an exact rational.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Invalid rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_PATTERN.match(text):
            raise ValueError(f"Invalid rational value: {value!r}")
        if "/" in text and int(text.split("/")[1]) == 0:
            raise ValueError(f"Zero denominator in rational value: {value!r}")
        return Fraction(text)
    raise ValueError(f"Invalid rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a rational as "p" or "p/q" in lowest terms."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, places: int = 6) -> str:
    """Render a decimal approximation using integer arithmetic only.

    Rounds half away from zero to the given number of places.
    """
    scale = 10**places
    sign = "-" if value < 0 else ""
    magnitude = abs(value)
    scaled, remainder = divmod(magnitude.numerator * scale, magnitude.denominator)
    if 2 * remainder >= magnitude.denominator:
        scaled += 1
    whole, fraction = divmod(scaled, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{fraction:0{places}d}"


def format_with_decimal(value: Fraction) -> str:
    """Exact value followed by a marked approximation when it is not an integer."""
    if value.denominator == 1:
        return format_rational(value)
    return f"{format_rational(value)} (~{format_decimal(value)})"
