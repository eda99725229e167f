import numpy as np
import pytest

from ginvariant.classgroup import class_representatives
from ginvariant.errors import InvariantViolation
from ginvariant.field import is_square_free, make_field
from ginvariant.ginv import make_prime_case
from ginvariant.oracle import (
    IdealGenerators,
    Variant,
    congruence_mask,
    ideal_generators,
    oracle_exception_set,
    term_values,
)
from ginvariant.repset import binary_support


def test_term_values_examples(fp87):
    assert term_values(IdealGenerators(2, 0, 1), fp87, 14).values() == [0, 2, 8, 11, 12]
    assert term_values(IdealGenerators(7, 2, 1), fp87, 5).values() == [0, 4]
    assert term_values(IdealGenerators(7, 2, 1), fp87, 1).values() == [0]


def test_ideal_generators(fp87):
    ig = ideal_generators(make_prime_case(7, fp87))
    assert (ig.p, ig.s, ig.t) == (7, 2, 1)
    assert ig.effective_st(fp87) == (2, 1)
    minus = ideal_generators(make_prime_case(7, fp87), Variant.MINUS)
    assert minus.effective_st(fp87) == (3, -1)
    minus.check(fp87)

    ig = ideal_generators(make_prime_case(3, fp87))
    assert (ig.s, ig.t) == (-1, 2)

    fp14 = make_field(14)
    ig = ideal_generators(make_prime_case(3, fp14), Variant.MINUS)
    assert ig.effective_st(fp14) == (1, -1)


def test_bad_generator_is_rejected(fp87):
    with pytest.raises(InvariantViolation):
        IdealGenerators(7, 1, 1).check(fp87)


def test_ramified_congruence_reduces_to_2a_plus_b(fp87):
    # sqrt(-d) = -1 + 2w: membership in the prime above 3 is 3 | (2a + b)
    ig = ideal_generators(make_prime_case(3, fp87))
    a = np.arange(-30, 31, dtype=np.int64)
    for b in range(-30, 31):
        assert np.array_equal(congruence_mask(ig, fp87, a, b), (2 * a + b) % 3 == 0)


def test_oracle_exception_sets_d87(fp87):
    pc2 = make_prime_case(2, fp87)
    for variant in (Variant.PLUS, Variant.MINUS):
        assert oracle_exception_set(ideal_generators(pc2, variant), fp87, pc2.C, 5) == [1, 3, 5, 7, 9]
    pc3 = make_prime_case(3, fp87)
    assert oracle_exception_set(ideal_generators(pc3), fp87, pc3.C, 4) == [1, 2, 4, 5, 7, 10, 13]
    pc7 = make_prime_case(7, fp87)
    assert oracle_exception_set(ideal_generators(pc7), fp87, pc7.C, 5) == [1, 2, 3, 5, 9]


def test_oracle_matches_block_d907(fp907):
    pc = make_prime_case(13, fp907)
    plus = term_values(ideal_generators(pc, Variant.PLUS), fp907, pc.C)
    assert plus == binary_support(pc.block, pc.C)
    assert term_values(ideal_generators(pc, Variant.MINUS), fp907, pc.C) == plus


@pytest.mark.slow
def test_oracle_matches_block_population():
    for d in range(1, 301):
        if not is_square_free(d):
            continue
        fp = make_field(d)
        primes = sorted({r.p for r in class_representatives(fp) if not r.is_principal})
        for p in primes:
            pc = make_prime_case(p, fp)
            plus = term_values(ideal_generators(pc, Variant.PLUS), fp, pc.C)
            assert plus == binary_support(pc.block, pc.C), (d, p, pc.case)
            if pc.case.is_split:
                minus = term_values(ideal_generators(pc, Variant.MINUS), fp, pc.C)
                assert minus == plus, (d, p, pc.case)
