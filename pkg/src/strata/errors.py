"""Exception hierarchy for the kernel and the layers above it.

Every kernel precondition failure raises a subclass of KernelError, so callers
that replay untrusted scripts can catch one type and report the step instead of
crashing.
"""


class KernelError(Exception):
    pass


# signature construction

class UnknownGenerator(KernelError):
    pass


class DuplicateName(KernelError):
    pass


class BoundaryIllTyped(KernelError):
    """Source/target pair of a generator fails globularity."""


class BoundaryIllDefined(KernelError):
    """Source/target diagram of a generator is not well-defined."""


# diagram operations

class DimensionMismatch(KernelError):
    pass


class HeightOutOfRange(KernelError):
    pass


class DepthOutOfRange(KernelError):
    pass


class IllDefinedAt(KernelError):
    """A slice could not be computed; carries the offending height."""

    def __init__(self, height, reason=""):
        self.height = height
        self.reason = reason
        super().__init__(f"ill-defined at height {height}" + (f": {reason}" if reason else ""))


class EmbeddingIllDefined(KernelError):
    pass


class NotGlobular(KernelError):
    pass


# composition

class BoundaryMismatch(KernelError):
    pass


# homotopy moves

class NotARedex(KernelError):
    pass


class NotABlock(KernelError):
    pass


class NotACrossingPattern(KernelError):
    pass


class VariantMismatch(KernelError):
    pass


class MalformedParams(KernelError):
    pass


class PathsNotGlobular(KernelError):
    """Boundary assembly produced a non-globular pair; indicates a kernel bug."""


class NoMatchAtLocation(KernelError):
    def __init__(self, height, message=""):
        self.height = height
        super().__init__(message or f"no match at height {height}")


# proof documents

class DocumentSyntaxError(KernelError):
    pass


class UnknownReference(KernelError):
    pass


class IllDefinedDiagram(KernelError):
    pass


class StepInapplicable(KernelError):
    pass
