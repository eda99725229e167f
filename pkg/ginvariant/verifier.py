import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ginvariant.classgroup import class_representatives
from ginvariant.concurrent_processor import ConcurrentProcessor
from ginvariant.config.settings import settings
from ginvariant.errors import CapExceeded, GInvariantError
from ginvariant.field import FieldParams, is_square_free, make_field
from ginvariant.ginv import PrimeCase, analyze_prime, dispatch_case, make_prime_case, theorem_bound_gaps
from ginvariant.oracle import Variant, ideal_generators, term_values
from ginvariant.repset import binary_support

logger = logging.getLogger(__name__)

CHECK_CONSTRUCTION = "construction"
CHECK_ORACLE = "oracle_equivalence"
CHECK_CONJUGATE = "conjugate_symmetry"
CHECK_THEOREM_BOUND = "theorem_bound"
CHECK_STRUCTURE = "exception_sets"


@dataclass(frozen=True)
class VerificationFailure:
    d: int
    p: Optional[int]
    case: Optional[int]
    check: str
    detail: str

    def describe(self) -> str:
        return f"FAIL d={self.d} p={self.p} case={self.case} check={self.check}: {self.detail}"


@dataclass
class FieldVerification:
    d: int
    primes_checked: List[int] = field(default_factory=list)
    failures: List[VerificationFailure] = field(default_factory=list)


@dataclass
class VerificationSummary:
    d_max: int
    fields_checked: int = 0
    prime_cases_checked: int = 0
    failures: List[VerificationFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _preview(values: List[int], limit: int = 8) -> str:
    shown = ", ".join(str(v) for v in values[:limit])
    return f"[{shown}{', ...' if len(values) > limit else ''}]"


class VerificationAgent:
    def __init__(self, margin: int = settings.VERIFY_MARGIN, oracle_d_cap: int = settings.ORACLE_D_CAP):
        if margin < 0:
            raise ValueError(f"margin must be non-negative, got {margin}")
        self.margin = margin
        self.oracle_d_cap = oracle_d_cap
        logger.debug(f"VerificationAgent initialized (margin={margin}, oracle_d_cap={oracle_d_cap})")

    def check_prime_case(self, pc: PrimeCase, fp: FieldParams) -> List[VerificationFailure]:
        """
        Run every per-prime check against one constructed PrimeCase.

        Checks:
            - oracle_equivalence: congruence-level term values equal the block support on [0, C)
            - conjugate_symmetry: the conjugate ideal gives the same term values (split primes)
            - theorem_bound: the 4-block power covers [C, C + margin)
            - exception_sets: E is contained in F, both inside [1, C)

        Returns:
            List of failures, empty when the case is consistent.
        """
        failures: List[VerificationFailure] = []

        def fail(check: str, detail: str) -> None:
            failures.append(VerificationFailure(fp.d, pc.p, pc.case.code, check, detail))

        try:
            block = binary_support(pc.block, pc.C)
            plus = term_values(ideal_generators(pc, Variant.PLUS), fp, pc.C)
            if plus != block:
                only_oracle = sorted(set(plus.values()) - set(block.values()))
                only_block = sorted(set(block.values()) - set(plus.values()))
                fail(CHECK_ORACLE, f"oracle-only {_preview(only_oracle)}, block-only {_preview(only_block)}")
            if pc.case.is_split:
                minus = term_values(ideal_generators(pc, Variant.MINUS), fp, pc.C)
                if minus != plus:
                    fail(CHECK_CONJUGATE, "conjugate ideal gives a different value set")
        except GInvariantError as e:
            fail(CHECK_ORACLE, str(e))

        gaps = theorem_bound_gaps(pc, self.margin) if self.margin else []
        if gaps:
            fail(CHECK_THEOREM_BOUND, f"unrepresented r >= C={pc.C}: {_preview(gaps)}")

        try:
            report = analyze_prime(pc)
            if any(r < 1 or r >= pc.C for r in report.F):
                fail(CHECK_STRUCTURE, f"exception set leaves [1, {pc.C})")
        except GInvariantError as e:
            fail(CHECK_STRUCTURE, str(e))

        return failures

    def check_field(self, d: int, search_cap: int = settings.SEARCH_CAP) -> FieldVerification:
        if d > self.oracle_d_cap:
            raise CapExceeded(f"d={d} exceeds the oracle cap {self.oracle_d_cap}")
        fp = make_field(d)
        result = FieldVerification(d=d)
        primes = sorted({r.p for r in class_representatives(fp, search_cap) if not r.is_principal})
        for p in primes:
            case = None
            try:
                case = dispatch_case(p, fp).code
                pc = make_prime_case(p, fp)
            except GInvariantError as e:
                result.failures.append(VerificationFailure(d, p, case, CHECK_CONSTRUCTION, str(e)))
                continue
            result.primes_checked.append(p)
            result.failures.extend(self.check_prime_case(pc, fp))
        return result

    def run(self, d_max: int, search_cap: int = settings.SEARCH_CAP, max_workers: int = 1) -> VerificationSummary:
        """
        Verify every square-free d <= d_max.

        Args:
            d_max: Largest d checked; values below 1 give an empty, passing run
            search_cap: Prime search cap per class
            max_workers: Threads, one field per task

        Returns:
            VerificationSummary listing every failing (d, p, case, check)
        """
        if d_max > self.oracle_d_cap:
            raise CapExceeded(f"d-max {d_max} exceeds the oracle cap {self.oracle_d_cap}")
        ds = [d for d in range(1, d_max + 1) if is_square_free(d)]
        summary = VerificationSummary(d_max=d_max)
        logger.info(f"[VERIFY] checking {len(ds)} fields up to d={d_max}")

        with ConcurrentProcessor(max_workers=max_workers) as processor:
            for result in processor.map_ordered(lambda d: self.check_field(d, search_cap), ds):
                summary.fields_checked += 1
                if result.error is not None:
                    summary.failures.append(
                        VerificationFailure(result.item, None, None, CHECK_CONSTRUCTION, str(result.error))
                    )
                    continue
                summary.prime_cases_checked += len(result.value.primes_checked)
                summary.failures.extend(result.value.failures)

        for failure in summary.failures:
            logger.warning(f"[VERIFY] {failure.describe()}")
        return summary

    def format_report(self, summary: VerificationSummary) -> str:
        lines = [
            f"fields checked: {summary.fields_checked} (d <= {summary.d_max})",
            f"prime cases checked: {summary.prime_cases_checked}",
        ]
        if summary.passed:
            lines.append("all checks passed")
        else:
            lines.append(f"{len(summary.failures)} check(s) failed:")
            lines.extend(f.describe() for f in summary.failures)
        return "\n".join(lines)
