"""
Miscellaneous helper functions for SymCover.
"""
import hashlib
import json
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

logger = logging.getLogger(__name__)


def deep_update(source: Dict, overrides: Dict) -> Dict:
    """
    Recursively updates a dictionary with values from another dictionary.
    Unlike dict.update(), this function merges nested dictionaries.

    Args:
        source (Dict): The dictionary to be updated.
        overrides (Dict): The dictionary providing new values.

    Returns:
        Dict: The updated source dictionary.
    """
    for key, value in overrides.items():
        if isinstance(value, dict) and key in source and isinstance(source[key], dict):
            source[key] = deep_update(source[key], value)
        else:
            source[key] = value
    return source


def parse_number_list(text: str) -> List[float]:
    """
    Parses a comma separated list such as "500,1000,3000" into floats.

    Args:
        text (str): The comma separated values.

    Returns:
        List[float]: The parsed values in the given order.
    """
    values = [token.strip() for token in text.split(",") if token.strip()]
    if not values:
        raise ValueError(f"Empty number list: {text!r}")
    return [float(token) for token in values]


def is_ascending(values: Sequence[float]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def format_fraction(value: Fraction) -> str:
    """Renders a Fraction as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fingerprint(payload: Any) -> str:
    """
    Short SHA-256 digest of a JSON-serialisable payload, used to tag reports
    so identical inputs can be recognised across runs.
    """
    blob = json.dumps(payload, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


def chunked(items: Sequence[Any], size: int) -> Iterable[Sequence[Any]]:
    """Yields consecutive slices of at most `size` items."""
    if size < 1:
        raise ValueError(f"Chunk size must be positive, got {size}")
    for start in range(0, len(items), size):
        yield items[start:start + size]
