"""Exception hierarchy.

Every error raised on bad input derives from :class:`GradedPIError`, so the
CLI can map them to a config-error exit code in one place.
"""


class GradedPIError(Exception):
    """Base class for all library errors."""


# group-core
class MalformedTableError(GradedPIError):
    pass


class NotAssociativeError(GradedPIError):
    def __init__(self, a, b, c):
        super().__init__(f"not associative at ({a}, {b}, {c})")
        self.witness = (a, b, c)


class NoIdentityError(GradedPIError):
    pass


class NoInverseError(GradedPIError):
    def __init__(self, element):
        super().__init__(f"element {element} has no two-sided inverse")
        self.witness = element


class MixedGroupsError(GradedPIError):
    pass


class ForeignElementError(GradedPIError):
    pass


# grading-core
class IndexOutOfRangeError(GradedPIError):
    pass


class EmptyShapeError(GradedPIError):
    pass


class NonDistinctTupleError(GradedPIError):
    def __init__(self, i, j):
        super().__init__(f"tuple entries at positions {i} and {j} coincide")
        self.positions = (i, j)


class SizeMismatchError(GradedPIError):
    pass


# monomial-engine
class NotAnIdentityError(GradedPIError):
    pass


class InfiniteGroupStrongnessCheckError(GradedPIError):
    pass


# generic-algebra / free-algebra
class MultidegreeMismatchError(GradedPIError):
    pass


class NotMultihomogeneousError(GradedPIError):
    pass


class NotMultilinearError(GradedPIError):
    pass


class ExpressionSyntaxError(GradedPIError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGroupElementError(GradedPIError):
    pass


class ParityVariableWithoutZ2Error(GradedPIError):
    pass


class UniverseTooSmallError(GradedPIError):
    pass


# tensor-transforms
class LengthMismatchError(GradedPIError):
    pass


class NonAbelianHError(GradedPIError):
    pass


class TruncationTooSmallError(GradedPIError):
    pass


class ComponentTooBigError(GradedPIError):
    pass


class InvariantViolation(AssertionError):
    """An internal consistency check failed; always a bug, never bad input."""
