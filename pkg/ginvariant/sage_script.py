"""
SageMath session text reproducing the per-prime computation with
QuadraticForm.representation_number_list, for cross-checking E(p) and g(p)
in a computer algebra system.
"""

import logging
from typing import Dict, List, Tuple

from ginvariant.classgroup import is_prime
from ginvariant.errors import NotPrime
from ginvariant.field import make_field
from ginvariant.ginv import CaseCode, PrimeCase, make_prime_case

logger = logging.getLogger(__name__)

PROMPT = "sage: "

# (a, b, c) of the block form, written symbolically in p, d and n
_SYMBOLIC_BLOCK: Dict[CaseCode, Tuple[str, str, str]] = {
    CaseCode.C1_RAMIFIED_D12: ("p", "0", "d/p"),
    CaseCode.C2_RAMIFIED_D3: ("d/p", "-d", "p*(1+d)/4"),
    CaseCode.C3_TWO_D1MOD4: ("2", "-2", "(1+d)/2"),
    CaseCode.C4_TWO_D7MOD8: ("2", "-1", "(1+d)/8"),
    CaseCode.C5_SPLIT_D12: ("p", "-2*n", "(d+n*n)/p"),
    CaseCode.C6_SPLIT_D3: ("p", "-n", "(d+n*n)/(4*p)"),
}

_SPLIT_C_HEAD = "p*(p-1)*(p-1)/4+(p-1)*n+(d+n*n)/p"

_BODY = """\
S=Q.representation_number_list(C)
{Q8}
T=Q.representation_number_list(C)
def u(l):
    if S[l]==0:return l
    else:return 0
E=[u(l) for l in [0..C-1]]
E(p)=[value for value in E if value !=0]
def v(l):
    if T[l]==0:return l
    else:return 0
F=[v(l) for l in [0..C-1]]
F(p)=[value for value in F if value !=0]
def g(p):
    if E(p)==F(p): return 4
    else: return 5
g(p);E(p)"""


def header_line(pc: PrimeCase, d: int) -> str:
    case = pc.case
    if case in (CaseCode.C1_RAMIFIED_D12, CaseCode.C2_RAMIFIED_D3):
        return f"p={pc.p}; d={d}; C=(p-1)*d/p"
    if case in (CaseCode.C3_TWO_D1MOD4, CaseCode.C4_TWO_D7MOD8):
        return f"p=2; d={d}; C=(1+d)/2"
    tail = "+2*p*d" if case is CaseCode.C5_SPLIT_D12 else "+p*(d+1)/4"
    return f"p={pc.p}; d={d}; n={pc.n}; C={_SPLIT_C_HEAD}{tail}"


def block_coefficients(entries: Tuple[str, str, str], m: int) -> List[str]:
    """Upper-triangular coefficient list of the m-fold orthogonal sum of one block."""
    a, b, c = entries
    coeffs: List[str] = []
    for k in range(m):
        pad = ["0"] * (2 * (m - k - 1))
        coeffs += [a, b] + pad
        coeffs += [c] + pad
    return coeffs


def quadratic_form_line(case: CaseCode, m: int) -> str:
    coeffs = block_coefficients(_SYMBOLIC_BLOCK[case], m)
    return f"Q=QuadraticForm(ZZ, {2 * m}, [{','.join(coeffs)}])"


def emit_sage_script(d: int, p: int) -> str:
    """
    Session text for the prime p of Q(sqrt(-d)).

    Raises:
        DomainError: d is not square-free, or p cannot come from a non-principal class.
    """
    fp = make_field(d)
    if not is_prime(p):
        raise NotPrime(f"p must be prime, got {p}")
    pc = make_prime_case(p, fp)
    lines = [
        header_line(pc, d),
        quadratic_form_line(pc.case, 5),
    ]
    lines += _BODY.format(Q8=quadratic_form_line(pc.case, 4)).splitlines()
    logger.debug(f"Sage script for d={d}, p={p}, case {pc.case.code}")
    return "\n".join(PROMPT + line for line in lines) + "\n"
