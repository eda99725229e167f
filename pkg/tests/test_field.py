import random

import numpy as np

import pytest

from ginvariant.errors import NonPositive, NotSquareFree
from ginvariant.field import OmegaKind, conjugate, is_square_free, make_field, multiply, norm
from ginvariant.forms import BinaryQF


@pytest.mark.parametrize(
    "d, discriminant, coeffs, kind",
    [
        (1, -4, (1, 0, 1), OmegaKind.SQRT_MINUS_D),
        (2, -8, (1, 0, 2), OmegaKind.SQRT_MINUS_D),
        (3, -3, (1, 1, 1), OmegaKind.HALF_ONE_PLUS_SQRT_MINUS_D),
        (5, -20, (1, 0, 5), OmegaKind.SQRT_MINUS_D),
        (87, -87, (1, 1, 22), OmegaKind.HALF_ONE_PLUS_SQRT_MINUS_D),
        (907, -907, (1, 1, 227), OmegaKind.HALF_ONE_PLUS_SQRT_MINUS_D),
    ],
)
def test_make_field(d, discriminant, coeffs, kind):
    fp = make_field(d)
    assert fp.discriminant == discriminant
    assert fp.norm_coeffs == coeffs
    assert fp.omega_kind is kind
    assert fp.norm_form == BinaryQF(*coeffs)
    assert fp.norm_form.discriminant == discriminant


def test_make_field_rejects_square_factor():
    with pytest.raises(NotSquareFree, match="d must be square-free"):
        make_field(12)


@pytest.mark.parametrize("d", [0, -3])
def test_make_field_rejects_non_positive(d):
    with pytest.raises(NonPositive):
        make_field(d)


def test_is_square_free():
    assert [d for d in range(1, 20) if is_square_free(d)] == [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]
    assert not is_square_free(0)


def test_norm_of_omega():
    assert norm(0, 1, make_field(5)) == 5
    assert norm(0, 1, make_field(87)) == 22


@pytest.mark.parametrize("d", [1, 2, 3, 5, 7, 87, 907])
def test_norm_is_multiplicative(d):
    fp = make_field(d)
    rng = random.Random(d)
    for _ in range(200):
        x = (rng.randint(-50, 50), rng.randint(-50, 50))
        y = (rng.randint(-50, 50), rng.randint(-50, 50))
        assert norm(*multiply(x, y, fp), fp) == norm(*x, fp) * norm(*y, fp)


@pytest.mark.parametrize("d", [1, 2, 3, 5, 7, 87, 907])
def test_conjugate(d):
    fp = make_field(d)
    rng = random.Random(1000 + d)
    for _ in range(100):
        a, b = rng.randint(-40, 40), rng.randint(-40, 40)
        c = conjugate(a, b, fp)
        assert norm(*c, fp) == norm(a, b, fp)
        assert conjugate(*c, fp) == (a, b)
        assert multiply((a, b), c, fp) == (norm(a, b, fp), 0)


@pytest.mark.parametrize("d", [1, 2, 5, 6, 10, 13, 3, 7, 11, 15, 87, 907])
def test_norm_positive_away_from_zero(d):
    fp = make_field(d)
    xs = np.arange(-100, 101, dtype=np.int64)
    a, b = np.meshgrid(xs, xs)
    values = norm(a, b, fp)
    origin = (a == 0) & (b == 0)
    assert (values[origin] == 0).all()
    assert (values[~origin] > 0).all()
