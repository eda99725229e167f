"""
Exception sets and the g-invariant of unary Hermitian lattices.

For every non-principal ideal class a prime p below a prime ideal of the class
is classified into one of six cases. Each case fixes a bound C beyond which
the lattice P v^r is represented by I_4, and a binary block form whose m-fold
orthogonal power has exactly the values r for which P v^r is represented by
I_m. The exception sets E(p) (m = 5) and F(p) (m = 4) below C decide g(p);
the largest g(p) is g_d(1).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from ginvariant import constants
from ginvariant.classgroup import ClassRep, class_representatives, least_sqrt_neg_d
from ginvariant.concurrent_processor import ConcurrentProcessor
from ginvariant.config.settings import settings
from ginvariant.errors import (
    CapExceeded,
    InertPrime,
    InexactDivision,
    InvariantViolation,
    NotPositiveDefinite,
)
from ginvariant.field import FieldParams, make_field
from ginvariant.forms import BinaryQF
from ginvariant.repset import binary_support, power_support, sumset

logger = logging.getLogger(__name__)


class CaseCode(Enum):
    C1_RAMIFIED_D12 = 1     # p | d, d = 1, 2 (mod 4)
    C2_RAMIFIED_D3 = 2      # p | d, d = 3 (mod 4)
    C3_TWO_D1MOD4 = 3       # p = 2, d = 1 (mod 4)
    C4_TWO_D7MOD8 = 4       # p = 2, d = 7 (mod 8)
    C5_SPLIT_D12 = 5        # p odd, p does not divide d, d = 1, 2 (mod 4)
    C6_SPLIT_D3 = 6         # p odd, p does not divide d, d = 3 (mod 4)

    @property
    def code(self) -> int:
        return self.value

    @property
    def needs_n(self) -> bool:
        return self in (CaseCode.C5_SPLIT_D12, CaseCode.C6_SPLIT_D3)

    @property
    def is_split(self) -> bool:
        return self in (CaseCode.C4_TWO_D7MOD8, CaseCode.C5_SPLIT_D12, CaseCode.C6_SPLIT_D3)


# 4ac - b^2 of the block form, as a multiple of d
_BLOCK_DETERMINANT_FACTOR = {
    CaseCode.C1_RAMIFIED_D12: 4,
    CaseCode.C2_RAMIFIED_D3: 1,
    CaseCode.C3_TWO_D1MOD4: 4,
    CaseCode.C4_TWO_D7MOD8: 1,
    CaseCode.C5_SPLIT_D12: 4,
    CaseCode.C6_SPLIT_D3: 1,
}


@dataclass(frozen=True)
class PrimeCase:
    p: int
    case: CaseCode
    n: Optional[int]
    C: int
    block: BinaryQF


@dataclass(frozen=True)
class PrimeReport:
    prime_case: PrimeCase
    E: List[int]
    F: List[int]
    g: int


@dataclass(frozen=True)
class ClassExclusion:
    class_index: int
    excluded_r: List[int]


@dataclass
class FieldReport:
    fp: FieldParams
    class_number: int
    class_reps: List[ClassRep]
    prime_reports: Dict[int, PrimeReport]
    g_d: int
    g_source: str
    pythagoras: int
    s_d_description: List[ClassExclusion]
    notes: List[str] = field(default_factory=list)

    @property
    def primes(self) -> List[int]:
        return sorted(self.prime_reports)

    @property
    def max_C(self) -> Optional[int]:
        if not self.prime_reports:
            return None
        return max(r.prime_case.C for r in self.prime_reports.values())


def _exact_div(num: int, den: int, what: str) -> int:
    if den == 0 or num % den:
        raise InexactDivision(f"{what}: {num}/{den} is not an integer")
    return num // den


def dispatch_case(p: int, fp: FieldParams) -> CaseCode:
    """
    Case code for the prime p lying below a non-principal prime ideal.

    Raises:
        InertPrime: p does not split or ramify, so it cannot come from a
            non-principal class.
    """
    d = fp.d
    if d % p == 0:
        return CaseCode.C2_RAMIFIED_D3 if fp.is_half_integral else CaseCode.C1_RAMIFIED_D12
    if p == 2:
        if d % 4 == 1:
            return CaseCode.C3_TWO_D1MOD4
        if d % 8 == 7:
            return CaseCode.C4_TWO_D7MOD8
        # d = 3 (mod 8): the ideal above 2 is 2O, which is principal
        raise InertPrime(f"2 is inert in Q(sqrt(-{d}))")
    if pow((-d) % p, (p - 1) // 2, p) != 1:
        raise InertPrime(f"{p} is inert in Q(sqrt(-{d}))")
    return CaseCode.C6_SPLIT_D3 if fp.is_half_integral else CaseCode.C5_SPLIT_D12


def bound_C(case: CaseCode, p: int, d: int, n: Optional[int] = None) -> int:
    """Threshold C with P v^r represented by I_4 for every r >= C."""
    if case.needs_n != (n is not None):
        raise ValueError(f"n must be given exactly for cases 5 and 6 (case {case.code}, n={n})")

    if case in (CaseCode.C1_RAMIFIED_D12, CaseCode.C2_RAMIFIED_D3):
        return _exact_div((p - 1) * d, p, "(p-1)d/p")
    if case in (CaseCode.C3_TWO_D1MOD4, CaseCode.C4_TWO_D7MOD8):
        return _exact_div(d + 1, 2, "(d+1)/2")

    head = (
        _exact_div(p * (p - 1) ** 2, 4, "p(p-1)^2/4")
        + (p - 1) * n
        + _exact_div(d + n * n, p, "(d+n^2)/p")
    )
    if case is CaseCode.C5_SPLIT_D12:
        return head + 2 * p * d
    return head + _exact_div(p * (d + 1), 4, "p(d+1)/4")


def block_form(case: CaseCode, p: int, d: int, n: Optional[int] = None) -> BinaryQF:
    """
    The binary form p*P_d(a, b) after the congruence conditions on (a, b)
    have been solved by a change of variables.
    """
    if case is CaseCode.C1_RAMIFIED_D12:
        f = BinaryQF(p, 0, _exact_div(d, p, "d/p"))
    elif case is CaseCode.C2_RAMIFIED_D3:
        f = BinaryQF(_exact_div(d, p, "d/p"), -d, _exact_div(p * (1 + d), 4, "p(1+d)/4"))
    elif case is CaseCode.C3_TWO_D1MOD4:
        f = BinaryQF(2, -2, _exact_div(1 + d, 2, "(1+d)/2"))
    elif case is CaseCode.C4_TWO_D7MOD8:
        f = BinaryQF(2, -1, _exact_div(1 + d, 8, "(1+d)/8"))
    elif case is CaseCode.C5_SPLIT_D12:
        f = BinaryQF(p, -2 * n, _exact_div(d + n * n, p, "(d+n^2)/p"))
    else:
        f = BinaryQF(p, -n, _exact_div(d + n * n, 4 * p, "(d+n^2)/(4p)"))

    if not f.is_positive_definite():
        raise NotPositiveDefinite(f"block form {f} for case {case.code} is not positive definite")
    return f


def make_prime_case(p: int, fp: FieldParams) -> PrimeCase:
    case = dispatch_case(p, fp)
    n = least_sqrt_neg_d(p, fp) if case.needs_n else None
    C = bound_C(case, p, fp.d, n)
    if C >= settings.MAX_BOUND:
        raise CapExceeded(
            f"d={fp.d}, p={p}: bound C={C} exceeds the supported range (C < {settings.MAX_BOUND})"
        )
    block = block_form(case, p, fp.d, n)

    expected = _BLOCK_DETERMINANT_FACTOR[case] * fp.d
    if block.determinant != expected:
        raise InvariantViolation(
            f"block {block} for d={fp.d}, p={p}, case {case.code}: 4ac-b^2 = {block.determinant}, expected {expected}"
        )
    return PrimeCase(p=p, case=case, n=n, C=C, block=block)


def exception_set(pc: PrimeCase, m: int) -> List[int]:
    """Positive r < C not represented by the m-fold orthogonal power of the block."""
    support = power_support(binary_support(pc.block, pc.C), m)
    return support.missing(start=1)


def g_of_prime(E: List[int], F: List[int]) -> int:
    if not set(E) <= set(F):
        raise InvariantViolation(f"E(p) is not contained in F(p): {sorted(set(E) - set(F))}")
    return 4 if E == F else 5


def analyze_prime(pc: PrimeCase) -> PrimeReport:
    """E(p), F(p) and g(p); the block support is computed once and reused."""
    block = binary_support(pc.block, pc.C)
    four = power_support(block, 4)
    five = sumset(four, block)
    E = five.missing(start=1)
    F = four.missing(start=1)
    g = g_of_prime(E, F)
    logger.debug(f"p={pc.p} case {pc.case.code}: C={pc.C}, |E|={len(E)}, |F|={len(F)}, g={g}")
    return PrimeReport(prime_case=pc, E=E, F=F, g=g)


def theorem_bound_gaps(pc: PrimeCase, margin: int) -> List[int]:
    """r in [C, C + margin) that the 4-block power fails to represent (expected: none)."""
    bound = pc.C + margin
    four = power_support(binary_support(pc.block, bound), 4)
    return four.missing(start=pc.C)


def pythagoras(d: int) -> int:
    if d in constants.PYTHAGORAS_TWO:
        return 2
    if d in constants.PYTHAGORAS_THREE:
        return 3
    return 4


def _table_g(d: int, h: int) -> int:
    if h == 1:
        return constants.CLASS_NUMBER_ONE_G.get(d, pythagoras(d))
    return constants.SMALL_CLASS_NUMBER_G_OVERRIDES.get(d, pythagoras(d))


def analyze_field(d: int, search_cap: int = settings.SEARCH_CAP, max_workers: int = 1) -> FieldReport:
    """
    Explicit form of S_d(1) and the value g_d(1) for Q(sqrt(-d)).

    Args:
        d: Positive square-free integer.
        search_cap: Largest prime searched per non-principal class.
        max_workers: Threads used for the per-prime reports.

    Returns:
        FieldReport with one PrimeReport per distinct prime and one exclusion
        list per ideal class.
    """
    fp = make_field(d)
    reps = class_representatives(fp, search_cap)
    h = len(reps)
    P = pythagoras(d)
    notes: List[str] = []

    primes = sorted({r.p for r in reps if not r.is_principal})
    if h > 1 and not primes:
        raise CapExceeded(f"d={d}: no non-principal class has a prime <= {search_cap}")

    cases = [make_prime_case(p, fp) for p in primes]
    prime_reports: Dict[int, PrimeReport] = {}
    with ConcurrentProcessor(max_workers=max_workers) as processor:
        for result in processor.map_ordered(analyze_prime, cases):
            if result.error is not None:
                raise result.error
            prime_reports[result.item.p] = result.value

    algorithmic_g = max((r.g for r in prime_reports.values()), default=None)
    if h in constants.TABLE_CLASS_NUMBERS:
        g_d = _table_g(d, h)
        g_source = constants.G_SOURCE_TABLE
        if algorithmic_g is not None and g_d >= 4 and algorithmic_g != g_d:
            message = (
                f"table value g_{d}(1)={g_d} disagrees with the per-prime algorithm "
                f"(max g(p)={algorithmic_g})"
            )
            logger.warning(f"[ANALYZE] {message}")
            notes.append(message)
        elif algorithmic_g == 5 and g_d < 4:
            message = f"table value g_{d}(1)={g_d} but some prime has g(p)=5"
            logger.warning(f"[ANALYZE] {message}")
            notes.append(message)
    else:
        g_d = algorithmic_g
        g_source = constants.G_SOURCE_ALGORITHM
        if P < 4:
            message = (
                f"class number {h} with P(O)={P} < 4: aggregation of g(p) is not covered "
                "by the 4 <= g_d(1) <= 5 bound"
            )
            logger.warning(f"[ANALYZE] {message}")
            notes.append(message)

    description = [
        ClassExclusion(i, [] if r.is_principal else list(prime_reports[r.p].E))
        for i, r in enumerate(reps)
    ]
    logger.info(f"[ANALYZE] d={d}: h={h}, primes={primes}, g_d(1)={g_d} ({g_source})")
    return FieldReport(
        fp=fp,
        class_number=h,
        class_reps=reps,
        prime_reports=prime_reports,
        g_d=g_d,
        g_source=g_source,
        pythagoras=P,
        s_d_description=description,
        notes=notes,
    )
