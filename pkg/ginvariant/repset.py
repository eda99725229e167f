"""
Represented values of positive definite binary quadratic forms below a bound,
and truncated sumsets of such supports (orthogonal sums of forms).
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

import numpy as np

from ginvariant.errors import BoundMismatch, InvariantViolation, NotPositiveDefinite
from ginvariant.forms import BinaryQF

logger = logging.getLogger(__name__)

_INT64_LIMIT = 2 ** 62

# How many shifted ORs to apply between "already full?" checks in sumset
_FULL_CHECK_EVERY = 256

# Above this many elements in the sparser operand, sumsets go through an FFT
_SHIFT_OR_MAX_BITS = 4096


@dataclass(eq=False)
class RepSupport:
    bound: int
    bits: np.ndarray

    @classmethod
    def empty(cls, bound: int) -> "RepSupport":
        return cls(bound, np.zeros(bound, dtype=bool))

    @classmethod
    def from_values(cls, values: Iterable[int], bound: int) -> "RepSupport":
        bits = np.zeros(bound, dtype=bool)
        for v in values:
            if 0 <= v < bound:
                bits[v] = True
        return cls(bound, bits)

    def values(self) -> List[int]:
        return [int(v) for v in np.flatnonzero(self.bits)]

    def missing(self, start: int = 1) -> List[int]:
        """Unrepresented integers in [start, bound), ascending."""
        return [int(v) + start for v in np.flatnonzero(~self.bits[start:])]

    def count(self) -> int:
        return int(np.count_nonzero(self.bits))

    def is_full(self) -> bool:
        return bool(self.bits.all())

    def __contains__(self, k: int) -> bool:
        return 0 <= k < self.bound and bool(self.bits[k])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RepSupport)
            and self.bound == other.bound
            and np.array_equal(self.bits, other.bits)
        )

    def __repr__(self) -> str:
        vals = self.values()
        shown = ", ".join(str(v) for v in vals[:12])
        more = ", ..." if len(vals) > 12 else ""
        return f"RepSupport(bound={self.bound}, {{{shown}{more}}})"


@dataclass(eq=False)
class RepCounts:
    bound: int
    counts: np.ndarray

    def support(self) -> RepSupport:
        return RepSupport(self.bound, self.counts > 0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RepCounts)
            and self.bound == other.bound
            and np.array_equal(self.counts, other.counts)
        )


def _check_form(f: BinaryQF, bound: int) -> None:
    if not f.is_positive_definite():
        raise NotPositiveDefinite(f"form {f} is not positive definite")
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    # every monomial inside the ellipse is at most 4*max(a,c)*bound/D in size
    worst = 4 * max(f.a, f.c) * bound * (abs(f.b) + f.a + f.c) // f.determinant + bound
    if worst >= _INT64_LIMIT:
        raise InvariantViolation(f"form {f} with bound {bound} overflows 64-bit arithmetic")


def _x_interval(f: BinaryQF, y: int, bound: int) -> Tuple[int, int]:
    """
    Integer interval containing every x with f(x, y) <= bound - 1, widened by
    one on each side. Callers filter the values exactly.
    """
    top = bound - 1
    disc = f.b * f.b * y * y - 4 * f.a * (f.c * y * y - top)
    if disc < 0:
        return 1, 0
    root = math.isqrt(disc)
    two_a = 2 * f.a
    lo = (-f.b * y - root) // two_a - 1
    hi = -((f.b * y - root) // two_a) + 1
    return lo, hi


def ellipse_rows(f: BinaryQF, bound: int) -> Iterator[Tuple[int, np.ndarray, np.ndarray]]:
    """
    Enumerate the lattice points of the ellipse f(x, y) < bound, y-major.

    Yields:
        (y, xs, values) with xs the x coordinates on row y and values = f(xs, y),
        every entry of values lying in [0, bound). Each point appears once.
    """
    _check_form(f, bound)
    y_max = math.isqrt(4 * f.a * (bound - 1) // f.determinant)
    for y in range(-y_max, y_max + 1):
        lo, hi = _x_interval(f, y, bound)
        if lo > hi:
            continue
        xs = np.arange(lo, hi + 1, dtype=np.int64)
        values = f.a * xs * xs + (f.b * y) * xs + f.c * y * y
        keep = values < bound
        if keep.any():
            yield y, xs[keep], values[keep]


def binary_support(f: BinaryQF, bound: int) -> RepSupport:
    """
    Integers in [0, bound) represented by f.

    Args:
        f: Positive definite binary form.
        bound: Exclusive upper bound.

    Returns:
        RepSupport whose bits[k] is True iff f(x, y) = k for some integers x, y.
    """
    bits = np.zeros(bound, dtype=bool)
    for _, _, values in ellipse_rows(f, bound):
        bits[values] = True
    return RepSupport(bound, bits)


def binary_counts(f: BinaryQF, bound: int) -> RepCounts:
    """Number of integer vectors (x, y) with f(x, y) = k, for every k < bound."""
    counts = np.zeros(bound, dtype=np.int64)
    for _, _, values in ellipse_rows(f, bound):
        counts += np.bincount(values, minlength=bound)
    return RepCounts(bound, counts)


def _shift_or(sparse: RepSupport, dense: RepSupport) -> np.ndarray:
    bound = sparse.bound
    out = np.zeros(bound, dtype=bool)
    for step, i in enumerate(np.flatnonzero(sparse.bits)):
        out[i:] |= dense.bits[: bound - i]
        if step % _FULL_CHECK_EVERY == _FULL_CHECK_EVERY - 1 and out.all():
            break
    return out


def _fft_or(s1: RepSupport, s2: RepSupport) -> np.ndarray:
    bound = s1.bound
    # linear (not cyclic) convolution of the first bound coefficients
    n = 1 << (2 * bound - 1).bit_length()
    f1 = np.fft.rfft(s1.bits.astype(np.float64), n)
    if s2 is s1:
        f1 *= f1
    else:
        f1 *= np.fft.rfft(s2.bits.astype(np.float64), n)
    # entries are pair counts, at most bound; float64 error stays far below 0.5
    return np.fft.irfft(f1, n)[:bound] > 0.5


def sumset(s1: RepSupport, s2: RepSupport) -> RepSupport:
    """
    Truncated Minkowski sum: k is set iff k = i + j with i in s1 and j in s2.

    Sparse operands use shift-and-or of the denser operand for every set bit of
    the sparser one. Once both have more than _SHIFT_OR_MAX_BITS elements the
    sum is read off an FFT convolution of the indicator arrays.
    """
    if s1.bound != s2.bound:
        raise BoundMismatch(f"bounds differ: {s1.bound} != {s2.bound}")
    sparse, dense = (s1, s2) if s1.count() <= s2.count() else (s2, s1)
    if sparse.count() > _SHIFT_OR_MAX_BITS:
        return RepSupport(s1.bound, _fft_or(s1, s2))
    return RepSupport(s1.bound, _shift_or(sparse, dense))


def power_support(s: RepSupport, m: int) -> RepSupport:
    """Support of the orthogonal sum of m copies, i.e. the m-fold sumset of s."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    result = None
    base = s
    while True:
        if m & 1:
            result = base if result is None else sumset(result, base)
        m >>= 1
        if not m:
            return result
        base = sumset(base, base)


def counts_convolve(c1: RepCounts, c2: RepCounts) -> RepCounts:
    """Truncated Cauchy product of two representation-number arrays."""
    if c1.bound != c2.bound:
        raise BoundMismatch(f"bounds differ: {c1.bound} != {c2.bound}")
    bound = c1.bound
    out = np.zeros(bound, dtype=np.int64)
    for i in np.flatnonzero(c1.counts):
        out[i:] += c1.counts[i] * c2.counts[: bound - i]
    return RepCounts(bound, out)


def power_counts(c: RepCounts, m: int) -> RepCounts:
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    result = c
    for _ in range(m - 1):
        result = counts_convolve(result, c)
    return result
