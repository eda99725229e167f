import math
import random

import numpy as np
import pytest

from ginvariant import repset
from ginvariant.errors import BoundMismatch, NotPositiveDefinite
from ginvariant.forms import BinaryQF
from ginvariant.repset import (
    RepCounts,
    RepSupport,
    binary_counts,
    binary_support,
    counts_convolve,
    power_counts,
    power_support,
    sumset,
)


def random_forms(seed=2024, count=50):
    rng = random.Random(seed)
    forms = []
    while len(forms) < count:
        f = BinaryQF(rng.randint(1, 30), rng.randint(-30, 30), rng.randint(1, 30))
        if f.is_positive_definite():
            forms.append((f, rng.randint(1, 500)))
    return forms


def naive_support(f, bound):
    limit = math.isqrt(4 * max(f.a, f.c) * bound // f.determinant) + 2
    xs = np.arange(-limit, limit + 1, dtype=np.int64)
    x, y = np.meshgrid(xs, xs)
    values = f.a * x * x + f.b * x * y + f.c * y * y
    return RepSupport.from_values(values[values < bound].ravel().tolist(), bound)


def test_binary_support_examples():
    assert binary_support(BinaryQF(1, 0, 1), 10).values() == [0, 1, 2, 4, 5, 8, 9]
    assert binary_support(BinaryQF(2, -1, 11), 14).values() == [0, 2, 8, 11, 12]
    assert binary_support(BinaryQF(1, 0, 1), 1).values() == [0]


def test_binary_counts_examples():
    assert binary_counts(BinaryQF(1, 0, 1), 2).counts.tolist() == [1, 4]
    assert binary_counts(BinaryQF(2, -1, 11), 3).counts.tolist() == [1, 0, 2]
    assert binary_counts(BinaryQF(1, 0, 10), 11).counts[10] == 2


def test_not_positive_definite():
    with pytest.raises(NotPositiveDefinite):
        binary_support(BinaryQF(1, 3, 1), 10)
    with pytest.raises(NotPositiveDefinite):
        binary_counts(BinaryQF(-1, 0, -1), 10)


def test_sumset_examples():
    s = sumset(RepSupport.from_values([0, 2, 8], 14), RepSupport.from_values([0, 11], 14))
    assert s.values() == [0, 2, 8, 11, 13]
    s = RepSupport.from_values([0, 3, 7], 10)
    assert sumset(s, RepSupport.from_values([0], 10)) == s
    assert sumset(RepSupport.from_values([0, 1], 3), RepSupport.from_values([0, 1], 3)).values() == [0, 1, 2]


def test_sumset_bound_mismatch():
    with pytest.raises(BoundMismatch):
        sumset(RepSupport.empty(3), RepSupport.empty(4))
    with pytest.raises(BoundMismatch):
        counts_convolve(RepCounts(3, np.zeros(3, dtype=np.int64)), RepCounts(4, np.zeros(4, dtype=np.int64)))


def test_power_support_examples():
    s = RepSupport.from_values([0, 2, 8, 11, 12], 14)
    assert power_support(s, 1) == s
    assert power_support(s, 2).values() == [0, 2, 4, 8, 10, 11, 12, 13]
    assert power_support(binary_support(BinaryQF(1, 0, 1), 8), 2).values() == list(range(8))


def test_power_support_without_zero():
    s = RepSupport.from_values(list(range(1, 10)), 10)
    assert power_support(s, 2).values() == list(range(2, 10))
    with pytest.raises(ValueError):
        power_support(s, 0)


def test_counts_convolve_examples():
    squares = binary_counts(BinaryQF(1, 0, 1), 10)
    assert counts_convolve(squares, squares).counts[1] == 8
    delta = np.zeros(10, dtype=np.int64)
    delta[0] = 1
    assert counts_convolve(squares, RepCounts(10, delta)) == squares
    block = binary_counts(BinaryQF(2, -1, 11), 5)
    assert counts_convolve(block, block).counts[4] == 4


def test_four_squares_counts():
    # Jacobi: r_4(n) = 8 * sum of divisors of n not divisible by 4
    c = power_counts(binary_counts(BinaryQF(1, 0, 1), 30), 2)
    for n in range(1, 30):
        expected = 8 * sum(k for k in range(1, n + 1) if n % k == 0 and k % 4)
        assert c.counts[n] == expected


def test_missing():
    s = RepSupport.from_values([0, 2, 3], 6)
    assert s.missing() == [1, 4, 5]
    assert s.missing(start=0) == [1, 4, 5]
    assert s.missing(start=4) == [4, 5]
    assert 2 in s and 1 not in s and 99 not in s
    assert not s.is_full()
    assert RepSupport.from_values(range(6), 6).is_full()


@pytest.mark.parametrize("f, bound", random_forms())
def test_support_matches_counts_and_naive_scan(f, bound):
    support = binary_support(f, bound)
    assert binary_counts(f, bound).support() == support
    assert naive_support(f, bound) == support


@pytest.mark.parametrize("f, bound", random_forms(seed=7))
def test_power_support_matches_power_counts(f, bound):
    support = binary_support(f, bound)
    counts = binary_counts(f, bound)
    for m in range(1, 6):
        assert power_support(support, m) == power_counts(counts, m).support()


def test_sumset_commutative_and_associative():
    rng = random.Random(99)
    for _ in range(30):
        bound = rng.randint(1, 300)
        a, b, c = (
            RepSupport.from_values(rng.sample(range(bound), rng.randint(0, bound)), bound)
            for _ in range(3)
        )
        assert sumset(a, b) == sumset(b, a)
        assert sumset(sumset(a, b), c) == sumset(a, sumset(b, c))


@pytest.mark.parametrize("f, bound", random_forms(seed=7, count=12))
def test_fft_sumset_matches_shift_or(f, bound, monkeypatch):
    s = binary_support(f, bound * 20)
    other = binary_support(BinaryQF(1, 1, f.c), bound * 20)
    shifted = sumset(s, other), sumset(s, s)
    monkeypatch.setattr(repset, "_SHIFT_OR_MAX_BITS", 0)
    assert (sumset(s, other), sumset(s, s)) == shifted


def test_fft_sumset_random_dense_supports(monkeypatch):
    rng = np.random.default_rng(11)
    bound = 30011
    s1 = RepSupport(bound, rng.random(bound) < 0.3)
    s2 = RepSupport(bound, rng.random(bound) < 0.001)
    expected = np.zeros(bound, dtype=bool)
    for j in np.flatnonzero(s2.bits):
        expected[j:] |= s1.bits[: bound - j]
    monkeypatch.setattr(repset, "_SHIFT_OR_MAX_BITS", 0)
    assert np.array_equal(sumset(s1, s2).bits, expected)


@pytest.mark.parametrize("m", range(1, 8))
def test_power_support_matches_repeated_sumset(m):
    s = binary_support(BinaryQF(3, 2, 11), 2000)
    expected = s
    for _ in range(m - 1):
        expected = sumset(expected, s)
    assert power_support(s, m) == expected


def test_sums_of_squares_large_bound():
    bound = 2_000_000
    squares = RepSupport.from_values((k * k for k in range(math.isqrt(bound - 1) + 1)), bound)
    four = power_support(squares, 4)
    assert four.is_full()
    three = power_support(squares, 3)
    # 4^a(8b + 7) are exactly the values that need four squares
    assert three.missing()[:6] == [7, 15, 23, 28, 31, 39]
