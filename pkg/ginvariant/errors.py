"""
Exception hierarchy for ginvariant.

DomainError subclasses describe bad input (exit code 2 on the command line);
InvariantViolation subclasses mean an internal inconsistency (exit code 1).
"""


class GInvariantError(Exception):
    """Base exception for all ginvariant errors"""
    pass


class DomainError(GInvariantError):
    """The request is outside the domain of the computation"""
    pass


class InvariantViolation(GInvariantError):
    """An internal invariant failed; indicates a bug, not bad input"""
    pass


# Domain errors

class NonPositive(DomainError):
    pass


class NotSquareFree(DomainError):
    pass


class NotPrime(DomainError):
    pass


class NonResidue(DomainError):
    pass


class InertPrime(DomainError):
    pass


class CapExceeded(DomainError):
    """No prime at or below the search cap is represented; raise the cap"""
    pass


# Internal invariant violations

class InexactDivision(InvariantViolation):
    pass


class InexactQuotient(InvariantViolation):
    pass


class NotPositiveDefinite(InvariantViolation):
    pass


class BoundMismatch(InvariantViolation):
    pass
