"""
Arithmetic of the imaginary quadratic field Q(sqrt(-d)) and its ring of
integers O = Z + Z*omega. Elements are carried as coordinate pairs (a, b)
meaning a + b*omega.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ginvariant.errors import NonPositive, NotSquareFree
from ginvariant.forms import BinaryQF

logger = logging.getLogger(__name__)


class OmegaKind(Enum):
    SQRT_MINUS_D = "sqrt(-d)"                           # d = 1, 2 (mod 4)
    HALF_ONE_PLUS_SQRT_MINUS_D = "(1+sqrt(-d))/2"       # d = 3 (mod 4)


@dataclass(frozen=True)
class FieldParams:
    d: int
    omega_kind: OmegaKind
    discriminant: int
    norm_coeffs: Tuple[int, int, int]

    @property
    def is_half_integral(self) -> bool:
        return self.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_MINUS_D

    @property
    def norm_form(self) -> BinaryQF:
        return BinaryQF(*self.norm_coeffs)


def square_factor(d: int) -> int:
    """Smallest m > 1 with m*m | d, or 0 when d is square-free."""
    m = 2
    while m * m <= d:
        if d % (m * m) == 0:
            return m
        m += 1
    return 0


def is_square_free(d: int) -> bool:
    return d >= 1 and square_factor(d) == 0


def make_field(d: int) -> FieldParams:
    """
    Build the parameters of Q(sqrt(-d)).

    Args:
        d: Positive square-free integer.

    Returns:
        FieldParams with the omega convention, discriminant and norm form.

    Raises:
        NonPositive: d <= 0.
        NotSquareFree: some m^2 > 1 divides d.
    """
    if d <= 0:
        raise NonPositive(f"d must be a positive integer, got {d}")
    m = square_factor(d)
    if m:
        raise NotSquareFree(f"d must be square-free: {m * m} divides {d}")

    if d % 4 == 3:
        fp = FieldParams(
            d=d,
            omega_kind=OmegaKind.HALF_ONE_PLUS_SQRT_MINUS_D,
            discriminant=-d,
            norm_coeffs=(1, 1, (1 + d) // 4),
        )
    else:
        fp = FieldParams(
            d=d,
            omega_kind=OmegaKind.SQRT_MINUS_D,
            discriminant=-4 * d,
            norm_coeffs=(1, 0, d),
        )
    logger.debug(f"Field d={d}: omega={fp.omega_kind.value}, discriminant={fp.discriminant}")
    return fp


def norm(a: int, b: int, fp: FieldParams) -> int:
    """N(a + b*omega)."""
    _, k, c = fp.norm_coeffs
    return a * a + k * a * b + c * b * b


def multiply(x: Tuple[int, int], y: Tuple[int, int], fp: FieldParams) -> Tuple[int, int]:
    """Product (a + b*omega)(a' + b'*omega) in the Z-basis."""
    a, b = x
    a2, b2 = y
    const = a * a2
    lin = a * b2 + a2 * b
    quad = b * b2
    if fp.is_half_integral:
        # omega^2 = omega - (1 + d)/4
        return const - quad * fp.norm_coeffs[2], lin + quad
    # omega^2 = -d
    return const - quad * fp.d, lin


def conjugate(a: int, b: int, fp: FieldParams) -> Tuple[int, int]:
    """Complex conjugate of a + b*omega in the Z-basis."""
    if fp.is_half_integral:
        # conj(omega) = 1 - omega
        return a + b, -b
    return a, -b
