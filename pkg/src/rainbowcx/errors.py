"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error raised by this package."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class BadParams(GraphError):
    pass


class ParseError(GraphError):
    """Malformed input text. Carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TooLarge(GraphError):
    """Instance exceeds the configured desk-scale limit."""


class EmptyGraph(GraphError):
    pass


class PaletteTooLarge(GraphError):
    """Coloring uses more colors than the verifier's bitmask bound."""


class PreconditionViolated(GraphError):
    pass


class NonUniqueHamiltonCycle(GraphError):
    """Two distinct Hamilton cycles found where a unique one was required."""


class NoneWithinCap(GraphError):
    """No connected dominating set exists within the size cap."""


class CapExceeded(GraphError):
    """No feasible coloring within the requested color cap."""


class NotHamiltonian(GraphError):
    pass


class DegenerateDrawing(GraphError):
    """Drawing violates the general-position requirements."""


class BoundUnmet(GraphError):
    """A constructive coloring could not be verified within its claimed
    palette budget.  Deliberately loud: this signals a potential
    counterexample to the bound being realized, never an internal retry."""
