"""Exception hierarchy.  The CLI maps these onto exit codes."""

from __future__ import annotations


class CoxTwistError(Exception):
    """Base class for all package errors."""


class InputError(CoxTwistError, ValueError):
    """Malformed or inconsistent input."""


class InvalidGraph(InputError):
    pass


class InvalidSubset(InputError):
    pass


class InvalidWord(InputError):
    pass


class InvalidFolding(InputError):
    pass


class NotAReflection(InputError):
    pass


class NotGenerating(InputError):
    pass


class NotAMarking(InputError):
    pass


class NotSeparated(InputError):
    pass


class WallsIntersect(InputError):
    pass


class VerificationFailed(CoxTwistError):
    """A checked identity or invariant did not hold."""


class Unsupported(CoxTwistError):
    """The input lies outside the class the algorithms are defined for."""


class NotSpherical(Unsupported):
    pass


class NotFC(Unsupported):
    pass


class NotGeometric(Unsupported):
    pass


class NotGood(Unsupported):
    pass


class NotWeaklySeparating(Unsupported):
    pass


class Exhausted(CoxTwistError):
    """A search ran past its radius, depth or cap without an answer."""


class SearchExhausted(Exhausted):
    pass


class RadiusExhausted(Exhausted):
    pass


class InconclusiveRadius(Exhausted):
    pass


class NotFound(Exhausted):
    pass


class CapExceeded(Exhausted):
    pass
