"""Exception hierarchy shared by every module."""


class SnarkforgeError(Exception):
    """Base class for all library errors."""


# codec
class Graph6Error(SnarkforgeError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class MalformedHeader(Graph6Error):
    pass


class TruncatedPayload(Graph6Error):
    pass


class NonPrintableByte(Graph6Error):
    pass


# graph_core
class InvalidGraph(SnarkforgeError, ValueError):
    pass


class NotACycle(SnarkforgeError, ValueError):
    pass


class ContractionCreatesMultiEdge(SnarkforgeError, ValueError):
    pass


class ImproperColoring(SnarkforgeError, ValueError):
    pass


# multipole
class NotAPath(SnarkforgeError, ValueError):
    pass


class AnchorCollision(SnarkforgeError, ValueError):
    pass


# voltage
class ParallelEdgeInLift(SnarkforgeError, ValueError):
    pass


class SelfLoopInLift(SnarkforgeError, ValueError):
    pass


class VoltageOutOfRange(SnarkforgeError, ValueError):
    pass


class UnknownFamily(SnarkforgeError, ValueError):
    pass


class InvalidParameters(SnarkforgeError, ValueError):
    pass


class UnequalSkips(SnarkforgeError, ValueError):
    pass


class WrongShape(SnarkforgeError, ValueError):
    pass


class OddM(SnarkforgeError, ValueError):
    pass


# coloring / flows
class NotDegreeAtMost3(SnarkforgeError, ValueError):
    pass


class LengthMismatch(SnarkforgeError, ValueError):
    pass


class BudgetExceeded(SnarkforgeError, RuntimeError):
    """A search ran out of its node budget before reaching a verdict."""


# Name used by the coloring solver; same class so callers can catch either.
Indeterminate = BudgetExceeded


# invariants
class NoPerfectMatching(SnarkforgeError, ValueError):
    pass
