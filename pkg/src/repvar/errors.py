"""Exception hierarchy shared by the repvar modules."""


class RepVarError(Exception):
    """Base class for every error raised by repvar."""


class InvalidElementError(RepVarError, ValueError):
    """A matrix is not a valid element of the group (or its Lie algebra)."""


class InvalidGenusError(RepVarError, ValueError):
    pass


class IndexOutOfRangeError(RepVarError, IndexError):
    pass


class GenusMismatchError(RepVarError, ValueError):
    pass


class RelatorError(RepVarError, ValueError):
    """The surface relator is not satisfied within tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class PreconditionError(RepVarError, ValueError):
    """A mathematical precondition of an operation does not hold."""


class UnsupportedError(RepVarError, NotImplementedError):
    """The operation is not available for this group family.

    ``partial`` carries whatever could still be computed.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class GenerationError(RepVarError, RuntimeError):
    pass


class NotPSLRepresentationError(PreconditionError):
    """Relator product of the stored lifts is not a central scalar."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
