"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ChromaboundError(Exception):
    """Base class for all package errors."""


class IndexOutOfRange(ChromaboundError, IndexError):
    pass


class SelfLoop(ChromaboundError, ValueError):
    pass


class OverlappingSets(ChromaboundError, ValueError):
    pass


class EmptyGraph(ChromaboundError, ValueError):
    pass


class FormatError(ChromaboundError, ValueError):
    """Malformed graph file or string."""


class BudgetExceeded(ChromaboundError):
    """An exact search ran out of its node budget; no answer is given."""


class ScaleLimit(ChromaboundError):
    """Input is above the size tier at which a result can be certified."""


class NotACycle(ChromaboundError, ValueError):
    """The supplied tuple does not induce the required cycle."""


class ForbiddenTrace(ChromaboundError):
    """A vertex sees three consecutive cycle vertices, so the host has a K4-e."""

    def __init__(self, vertex: int, witness: tuple[int, ...]):
        super().__init__(f"vertex {vertex} has a forbidden trace; K4-e on {witness}")
        self.vertex = vertex
        self.witness = witness


class UnclassifiableVertex(ChromaboundError):
    def __init__(self, vertex: int, reason: str = ""):
        super().__init__(f"vertex {vertex} cannot be classified" + (f": {reason}" if reason else ""))
        self.vertex = vertex
        self.reason = reason


class NotGood(ChromaboundError, ValueError):
    def __init__(self, reason: str, witness: tuple[int, ...] = ()):
        super().__init__(f"not a good partition: {reason} {witness}".rstrip())
        self.reason = reason
        self.witness = witness


class PreconditionOmega(ChromaboundError, ValueError):
    def __init__(self, omega: int, required: str):
        super().__init__(f"clique number {omega} violates precondition ({required})")
        self.omega = omega


class OmegaDidNotDrop(ChromaboundError):
    """Removing a maximum stable set from a good graph left the clique number unchanged."""


class NotInClass(ChromaboundError):
    def __init__(self, violation):
        super().__init__(f"graph is not in the class: {violation}")
        self.violation = violation


class NotInAnyClass(ChromaboundError):
    pass


class ImproperColoring(ChromaboundError, ValueError):
    def __init__(self, edge: tuple[int, int] | None, reason: str = "monochromatic edge"):
        super().__init__(f"improper coloring: {reason} {edge if edge is not None else ''}".rstrip())
        self.edge = edge


class Finding(ChromaboundError):
    """A proven claim failed at run time. Never expected; always reported."""


class BoundAssertionFailed(Finding):
    pass


class StructuralClaimFailed(Finding):
    pass


class RepairBudgetExceeded(ChromaboundError):
    pass


class SearchExhausted(Finding):
    pass
