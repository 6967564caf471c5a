"""Physical quantities with a tiny fixed unit system.

Canonical units are centimetres for lengths, seconds for times and degrees
Celsius for temperatures. Bare numbers are dimensionless. All downstream
arithmetic (geometry, sampling, labeling) happens in canonical units only;
the original magnitude/unit pair is kept so source text can be re-printed
losslessly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Dimension(Enum):
    LENGTH = "length"
    TIME = "time"
    TEMPERATURE = "temperature"
    DIMENSIONLESS = "dimensionless"


# unit suffix -> (dimension, factor converting to the canonical unit)
UNITS: dict[str, tuple[Dimension, float]] = {
    "mm": (Dimension.LENGTH, 0.1),
    "cm": (Dimension.LENGTH, 1.0),
    "m": (Dimension.LENGTH, 100.0),
    "s": (Dimension.TIME, 1.0),
    "min": (Dimension.TIME, 60.0),
    "C": (Dimension.TEMPERATURE, 1.0),
}


@dataclass(frozen=True)
class Quantity:
    """A magnitude with its source unit and canonical value."""

    magnitude: float
    unit: str | None  # suffix as written; None for bare numbers
    dimension: Dimension
    canonical: float


def quantity(magnitude: float, unit: str | None = None) -> Quantity:
    """Build a Quantity, resolving the unit suffix to dimension + canonical value."""
    if unit is None:
        return Quantity(float(magnitude), None, Dimension.DIMENSIONLESS, float(magnitude))
    try:
        dim, factor = UNITS[unit]
    except KeyError:
        raise ValueError(f"unknown unit suffix {unit!r}") from None
    return Quantity(float(magnitude), unit, dim, float(magnitude) * factor)


def format_quantity(q: Quantity) -> str:
    """Shortest round-trip text for a quantity, e.g. ``10.0 cm`` or ``0.5``."""
    text = repr(q.magnitude)
    return f"{text} {q.unit}" if q.unit else text
