"""
Ideal class group of Q(sqrt(-d)) through reduced binary quadratic forms of the
field discriminant, and a prime representative for every non-principal class.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ginvariant.config.settings import settings
from ginvariant.errors import CapExceeded, DomainError, NonResidue
from ginvariant.field import FieldParams
from ginvariant.forms import BinaryQF
from ginvariant.repset import ellipse_rows

logger = logging.getLogger(__name__)

__all__ = [
    "BinaryQF",
    "ClassRep",
    "class_number",
    "class_representatives",
    "is_prime",
    "kronecker",
    "least_sqrt_neg_d",
    "prime_representative",
    "prime_sieve",
    "principal_form",
    "reduced_forms",
]


@dataclass(frozen=True)
class ClassRep:
    form: BinaryQF
    is_principal: bool
    p: Optional[int]
    conjugate_partner_index: int


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_sieve(limit: int) -> np.ndarray:
    """Boolean array of length limit + 1 with True exactly at the primes."""
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for k in range(2, math.isqrt(limit) + 1):
        if sieve[k]:
            sieve[k * k :: k] = False
    return sieve


def kronecker(D: int, p: int) -> int:
    """Kronecker symbol (D | p) for a prime p."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    r = D % p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def principal_form(fp: FieldParams) -> BinaryQF:
    return fp.norm_form


def reduced_forms(fp: FieldParams) -> List[BinaryQF]:
    """
    All reduced positive definite forms of discriminant fp.discriminant,
    sorted by (a, b, c). Uses |b| <= a <= sqrt(|D|/3).
    """
    D = fp.discriminant
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            forms.append(BinaryQF(a, b, c))
        a += 1
    forms.sort()
    logger.debug(f"d={fp.d}: {len(forms)} reduced forms of discriminant {D}")
    return forms


def class_number(fp: FieldParams) -> int:
    return len(reduced_forms(fp))


def prime_representative(form: BinaryQF, fp: FieldParams, search_cap: int = settings.SEARCH_CAP) -> int:
    """
    Smallest prime p <= search_cap properly represented by form.

    Args:
        form: Reduced non-principal form.
        fp: Field parameters (only used for diagnostics).
        search_cap: Largest prime considered.

    Returns:
        The prime p.

    Raises:
        CapExceeded: no prime <= search_cap is represented.
    """
    sieve = prime_sieve(search_cap)
    best = None
    for y, xs, values in ellipse_rows(form, search_cap + 1):
        hit = sieve[values] & (np.gcd(xs, y) == 1)
        if hit.any():
            candidate = int(values[hit].min())
            if best is None or candidate < best:
                best = candidate
    if best is None:
        raise CapExceeded(
            f"no prime <= {search_cap} is represented by {form} (d={fp.d}); raise the search cap"
        )
    return best


def class_representatives(fp: FieldParams, search_cap: int = settings.SEARCH_CAP) -> List[ClassRep]:
    """
    One entry per ideal class: the reduced form, whether it is principal, the
    least prime it represents (non-principal classes) and the index of the
    inverse class.
    """
    forms = reduced_forms(fp)
    principal = principal_form(fp)
    index = {f: i for i, f in enumerate(forms)}
    reps = []
    for i, f in enumerate(forms):
        partner = index.get(f.conjugate(), i)
        if f == principal:
            reps.append(ClassRep(f, True, None, partner))
            continue
        p = prime_representative(f, fp, search_cap)
        reps.append(ClassRep(f, False, p, partner))
    logger.debug(
        f"d={fp.d}: class number {len(reps)}, non-principal primes "
        f"{sorted({r.p for r in reps if r.p is not None})}"
    )
    return reps


def least_sqrt_neg_d(p: int, fp: FieldParams) -> int:
    """
    Least n >= 1 with n^2 = -d (mod p); for d = 3 (mod 4) the least odd such n.

    Raises:
        NonResidue: -d is not a square modulo p.
    """
    d = fp.d
    if p == 2 or d % p == 0:
        raise DomainError(f"p must be an odd prime not dividing d, got p={p}, d={d}")
    target = (-d) % p
    if pow(target, (p - 1) // 2, p) != 1:
        raise NonResidue(f"-{d} is not a square modulo {p}")
    if fp.is_half_integral:
        candidates = range(1, 2 * p, 2)
    else:
        candidates = range(1, p)
    for n in candidates:
        if (n * n - target) % p == 0:
            return n
    raise NonResidue(f"-{d} is not a square modulo {p}")
