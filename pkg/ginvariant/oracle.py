"""
Brute-force representation oracle.

Works directly from the congruence conditions that put gamma = a + b*omega
into a prime ideal P = Op + O(s + t*omega), with none of the variable changes
used to build the block forms in ginv. The value sets it produces must match
the block-form supports exactly; cmd_verify and the test suite rely on that.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np

from ginvariant.errors import DomainError, InexactQuotient, InvariantViolation
from ginvariant.field import FieldParams, norm
from ginvariant.ginv import CaseCode, PrimeCase
from ginvariant.repset import RepSupport, ellipse_rows, power_support

logger = logging.getLogger(__name__)


class Variant(Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class IdealGenerators:
    p: int
    s: int
    t: int
    variant: Variant = Variant.PLUS

    def effective_st(self, fp: FieldParams) -> Tuple[int, int]:
        """(s, t) of the generator actually used; MINUS takes the conjugate."""
        if self.variant is Variant.PLUS:
            return self.s, self.t
        if fp.is_half_integral:
            return self.s + self.t, -self.t
        return self.s, -self.t

    def check(self, fp: FieldParams) -> None:
        s, t = self.effective_st(fp)
        n = norm(s, t, fp)
        if n % self.p:
            raise InvariantViolation(
                f"N({s}+{t}w) = {n} is not divisible by p={self.p} for d={fp.d}"
            )


def ideal_generators(pc: PrimeCase, variant: Variant = Variant.PLUS) -> IdealGenerators:
    """Generator s + t*omega of the prime ideal above pc.p for its case."""
    case = pc.case
    if case is CaseCode.C1_RAMIFIED_D12:
        s, t = 0, 1
    elif case is CaseCode.C2_RAMIFIED_D3:
        # sqrt(-d) = -1 + 2*omega
        s, t = -1, 2
    elif case is CaseCode.C3_TWO_D1MOD4:
        s, t = 1, 1
    elif case is CaseCode.C4_TWO_D7MOD8:
        s, t = 0, 1
    elif case is CaseCode.C5_SPLIT_D12:
        s, t = pc.n, 1
    elif case is CaseCode.C6_SPLIT_D3:
        s, t = (pc.n - 1) // 2, 1
    else:
        raise DomainError(f"unknown case {case}")
    return IdealGenerators(p=pc.p, s=s, t=t, variant=variant)


def congruence_mask(ig: IdealGenerators, fp: FieldParams, a: np.ndarray, b: int) -> np.ndarray:
    """
    Which (a, b) on one row satisfy the membership congruences.

    d = 1, 2 (mod 4): p | (s*a - d*t*b) and p | (t*a + s*b)
    d = 3 (mod 4):    p | (s*a - ((d+1)/4)*t*b) and p | (t*a + (s+t)*b)
    """
    s, t = ig.effective_st(fp)
    p = ig.p
    if fp.is_half_integral:
        q = (fp.d + 1) // 4
        first = (s * a - q * t * b) % p
        second = (t * a + (s + t) * b) % p
    else:
        first = (s * a - fp.d * t * b) % p
        second = (t * a + s * b) % p
    return (first == 0) & (second == 0)


def term_values(ig: IdealGenerators, fp: FieldParams, bound: int) -> RepSupport:
    """
    Values N(gamma)/p below bound over every gamma = a + b*omega satisfying
    the congruences, found by scanning the norm ellipse N(a, b) < p*bound.
    """
    ig.check(fp)
    p = ig.p
    bits = np.zeros(bound, dtype=bool)
    for b, a, values in ellipse_rows(fp.norm_form, p * bound):
        keep = congruence_mask(ig, fp, a, b)
        if not keep.any():
            continue
        kept = values[keep]
        bad = kept % p != 0
        if bad.any():
            raise InexactQuotient(
                f"d={fp.d}, p={p}: N({int(a[keep][bad][0])}+{b}w) = {int(kept[bad][0])} is not divisible by p"
            )
        bits[kept // p] = True
    return RepSupport(bound, bits)


def oracle_exception_set(ig: IdealGenerators, fp: FieldParams, C: int, m: int) -> List[int]:
    """Positive r < C missing from the m-fold sum of oracle term values."""
    support = power_support(term_values(ig, fp, C), m)
    return support.missing(start=1)
