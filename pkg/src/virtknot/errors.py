"""Exception hierarchy shared by all modules.

Every error raised on bad input derives from :class:`DomainError`, which the
CLI maps to exit code 1.
"""


class DomainError(Exception):
    """Base class for all input/domain errors."""


class GaussSyntaxError(DomainError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GaussSemanticError(DomainError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class InvalidCode(DomainError):
    pass


class PatternMismatch(DomainError):
    pass


class InvalidSite(DomainError):
    pass


class MultiComponent(DomainError):
    pass


class AxiomViolation(DomainError):
    def __init__(self, violations):
        self.violations = list(violations)
        head = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            head += f"; ... ({more} more)"
        super().__init__(head)


class NotSubgroup(DomainError):
    pass


class MNotInCenterOfP(DomainError):
    pass


class NonUnit(DomainError):
    pass


class NotPrime(DomainError):
    pass


class NonWirtingerRelation(DomainError):
    pass


class InvalidPresentation(DomainError):
    pass


class InvalidRibbonData(DomainError):
    pass


class BadBaseId(InvalidRibbonData):
    pass


class NotIncident(DomainError):
    pass


class SelfSlide(DomainError):
    pass


class InvalidData(DomainError):
    pass
