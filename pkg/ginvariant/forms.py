from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True, order=True)
class BinaryQF:
    """The integral binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def determinant(self) -> int:
        # 4ac - b^2, positive exactly for definite forms
        return 4 * self.a * self.c - self.b * self.b

    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.determinant > 0

    def is_reduced(self) -> bool:
        if not self.is_positive_definite():
            return False
        if not abs(self.b) <= self.a <= self.c:
            return False
        if (abs(self.b) == self.a or self.a == self.c) and self.b < 0:
            return False
        return True

    def conjugate(self) -> "BinaryQF":
        """The form (a, -b, c), representing the inverse class."""
        return BinaryQF(self.a, -self.b, self.c)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"
