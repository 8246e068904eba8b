"""Exception hierarchy.

Every error carries a ``category`` string drawn from a fixed set; the CLI maps
categories to exit codes.
"""

PARSE = "parse-error"
VALIDATION = "validation-error"
QUERY = "query-error"
VERIFICATION = "verification-failure"

CATEGORIES = (PARSE, VALIDATION, QUERY, VERIFICATION)


class HProbError(Exception):
    category = QUERY


# -- arithmetic ---------------------------------------------------------------

class NotInvertible(HProbError, ZeroDivisionError):
    """Raised when inverting zero or a zero-divisor."""


class EmptySet(HProbError, ValueError):
    pass


# -- parsing ------------------------------------------------------------------

class ParseError(HProbError, ValueError):
    category = PARSE

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


# -- space construction -------------------------------------------------------

class ValidationError(HProbError, ValueError):
    category = VALIDATION


class EmptySpace(ValidationError):
    pass


class DuplicateAtom(ValidationError):
    pass


class InvalidAtomId(ValidationError):
    pass


class NegativeWeight(ValidationError):
    def __init__(self, atom, weight):
        super().__init__(
            f"axiom (i) violated: weight of atom {atom!r} is {weight}, "
            "which is not non-negative")
        self.atom = atom
        self.weight = weight


class MassMismatch(ValidationError):
    def __init__(self, total, expected):
        super().__init__(
            f"axiom (ii) violated: total mass is {total}, expected {expected}")
        self.total = total
        self.expected = expected


class UnknownAtomInEvent(ValidationError):
    pass


# -- queries ------------------------------------------------------------------

class UnknownAtom(HProbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownEvent(HProbError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotASubset(HProbError, ValueError):
    pass


class NotDecreasing(HProbError, ValueError):
    pass


class ZeroCondition(HProbError, ValueError):
    pass


class NotIndependentInput(HProbError, ValueError):
    pass


class InvalidFSE(HProbError, ValueError):
    pass


class HypothesisNotInFSE(HProbError, ValueError):
    pass


class CapExceeded(HProbError, ValueError):
    pass


class VerificationFailure(HProbError):
    category = VERIFICATION


class TheoremViolation(HProbError, AssertionError):
    """A result contradicts an identity the library treats as a theorem."""

    category = VERIFICATION
