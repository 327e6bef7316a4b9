"""Exception hierarchy.

Every error raised on bad input derives from :class:`RmTorusError`, which is a
``ValueError`` so callers that only care about "invalid argument" can catch that.
"""


class RmTorusError(ValueError):
    pass


class NotSL2(RmTorusError):
    pass


class NotPrimitive(RmTorusError):
    pass


class NonPrimitiveBase(NotPrimitive):
    pass


class FieldMismatch(RmTorusError):
    pass


class InvalidOrder(RmTorusError):
    pass


class NotHyperbolic(RmTorusError):
    pass


class EigenvectorBase(RmTorusError):
    pass


class UnipotentOrRational(RmTorusError):
    pass


class InfinityFixed(RmTorusError):
    pass


class NotAUnit(RmTorusError):
    pass


class EigenvalueMismatch(RmTorusError):
    pass


class ZeroConstantTerm(RmTorusError):
    pass


class NotAdmissible(RmTorusError):
    pass


class NotKoszul(RmTorusError):
    pass


class NoFrame(RmTorusError):
    pass


class WrongBoundary(RmTorusError):
    pass


class NotInHalfplane(RmTorusError):
    pass


class PreconditionViolated(RmTorusError):
    pass


class RationalTheta(RmTorusError):
    pass


class ParseError(RmTorusError):
    pass
