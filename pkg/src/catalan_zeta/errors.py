"""Exceptions raised when an input fails a precondition.

Every error is a ``ValueError`` so callers that only care about bad input can
catch that. Indices carried by the errors are 1-based.
"""


class CatalanError(ValueError):
    """Base class for all domain errors of this package."""


class UnbalancedPath(CatalanError):
    def __init__(self, north: int, east: int):
        self.north = north
        self.east = east
        super().__init__(f"path has {north} North and {east} East steps")


class BelowDiagonal(CatalanError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"path goes below the diagonal at step {index}")


class NotAreaSequence(CatalanError):
    def __init__(self, index: int, reason: str):
        self.index = index
        super().__init__(f"not an area sequence at index {index}: {reason}")


class NotPropertyA(CatalanError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"word does not satisfy Property (A): {report.describe()}")


class NotPropertyB(CatalanError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"word does not satisfy Property (B): {report.describe()}")


class NotZetaImageShape(CatalanError):
    pass


class NotSingleReturn(CatalanError):
    pass


class TooFewReturns(CatalanError):
    pass


class TooFewRises(CatalanError):
    pass


class TooFewCrucial(CatalanError):
    pass
