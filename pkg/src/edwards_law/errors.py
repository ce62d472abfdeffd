"""Exception hierarchy shared by every layer of the package."""


class EdwardsLawError(Exception):
    """Base class for all package errors."""


# finite fields

class MixedFields(EdwardsLawError, ValueError):
    pass


class DivisionByZero(EdwardsLawError, ZeroDivisionError):
    pass


class NotASquare(EdwardsLawError, ValueError):
    pass


# polynomials

class ContextMismatch(EdwardsLawError, ValueError):
    pass


class UnknownVariable(EdwardsLawError, KeyError):
    pass


class MissingAssignment(EdwardsLawError, KeyError):
    pass


# symbolic identities

class BadSlot(EdwardsLawError, ValueError):
    pass


class ModeMismatch(EdwardsLawError, ValueError):
    pass


class ReductionFailed(EdwardsLawError):
    """An identity did not reduce to zero modulo its basis."""

    def __init__(self, name, remainder):
        self.name = name
        self.remainder = remainder
        super().__init__(f"{name}: nonzero remainder with {len(remainder)} terms")


class NotInvertible(EdwardsLawError):
    """A cleared denominator is not a product of declared invertibles."""


# curves

class NotOnCurve(EdwardsLawError, ValueError):
    pass


class NotSummable(EdwardsLawError, ValueError):
    pass


class TauOffDomain(EdwardsLawError, ValueError):
    pass


class NoRuleApplies(EdwardsLawError):
    pass


class Ambiguous(EdwardsLawError):
    pass


class HypothesisViolated(EdwardsLawError, ValueError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
