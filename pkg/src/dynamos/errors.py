"""Exception types shared across the package."""


class DynamosError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphError(DynamosError, ValueError):
    """Invalid graph construction or an argument violating a graph invariant."""


class SelfLoopError(GraphError):
    def __init__(self, v: int):
        self.vertex = v
        super().__init__(f"self-loop at vertex {v}")


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"duplicate edge {u} -> {v}")


class VertexOutOfRangeError(GraphError):
    def __init__(self, v: int, n: int):
        self.vertex = v
        self.n = n
        super().__init__(f"vertex {v} out of range for graph on {n} vertices")


class EmptySetError(GraphError):
    def __init__(self, what: str = "vertex set"):
        super().__init__(f"{what} must not be empty")


class ZeroInDegreeError(DynamosError, ValueError):
    def __init__(self, v: int):
        self.vertex = v
        super().__init__(f"vertex {v} has in-degree zero")


class IsolatedVertexError(DynamosError, ValueError):
    def __init__(self, v: int):
        self.vertex = v
        super().__init__(f"vertex {v} is isolated")


class TwoCycleError(DynamosError, ValueError):
    """An antiparallel edge pair is present where the algorithm forbids one."""

    def __init__(self, u: int, v: int):
        self.pair = (u, v)
        super().__init__(f"antiparallel pair between {u} and {v}")


class NotBeforeError(DynamosError, ValueError):
    """Transmit operation called with the pair in the wrong relative order."""

    def __init__(self, u: int, v: int):
        self.pair = (u, v)
        super().__init__(f"vertex {u} is not ranked before vertex {v}")


class NotStronglyConnectedError(DynamosError, ValueError):
    def __init__(self):
        super().__init__("graph is not strongly connected")


class NotBalancedError(DynamosError, ValueError):
    """Ordering is not in the balanced hard case the rearrangement step needs."""


class NoProgressingMoveError(DynamosError, RuntimeError):
    """The improvement step found no rearrangement that grows either sign class.

    This must never fire on valid input; it signals an implementation bug
    or a genuine gap in the underlying argument, and is raised loudly
    instead of being patched over.
    """


class TooLargeError(DynamosError, ValueError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"graph on {n} vertices exceeds the exact-search limit {limit}")


class ParseError(DynamosError, ValueError):
    """Input file rejected; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
