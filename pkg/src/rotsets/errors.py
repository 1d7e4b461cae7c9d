"""Exception hierarchy shared by every module."""


class RotsetError(ValueError):
    pass


class NotPeriodic(RotsetError):
    pass


class NotCoprime(RotsetError):
    pass


class NotRotational(RotsetError):
    pass


class NotSingleOrbit(RotsetError):
    pass


class LengthMismatch(RotsetError):
    pass


class NotLeastElement(RotsetError):
    pass


class InvalidSequence(RotsetError):
    pass


class MixedParameters(RotsetError):
    pass


class NotInterlaceable(RotsetError):
    pass


class DuplicateOrbit(RotsetError):
    pass


class BoundExceeded(RotsetError):
    pass


class InternalPeriodViolation(AssertionError):
    """A constructed least tuple has period smaller than q (a bug, never user error)."""
