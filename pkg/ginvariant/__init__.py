"""g-invariants of unary Hermitian lattices over imaginary quadratic fields."""

from ginvariant.field import FieldParams, make_field
from ginvariant.ginv import FieldReport, PrimeReport, analyze_field

__version__ = "0.1.0"

__all__ = ["FieldParams", "FieldReport", "PrimeReport", "analyze_field", "make_field"]
