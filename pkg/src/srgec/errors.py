"""Exception hierarchy shared by all srgec modules."""


class SrgecError(Exception):
    """Base class for all srgec errors."""


class InvalidEdgeError(SrgecError):
    """Edge endpoint out of range."""


class LoopRejectedError(SrgecError):
    """Edge (v, v) offered to a simple graph."""


class InvalidVertexError(SrgecError):
    """Vertex label out of range."""


class ParseError(SrgecError):
    """Malformed textual input (graph6, certificate, design file).

    Carries ``offset`` (byte offset, graph6) or ``line`` (1-based line
    number, line-oriented formats) when known.
    """

    def __init__(self, message, offset=None, line=None):
        super().__init__(message)
        self.offset = offset
        self.line = line


class UnsupportedError(SrgecError):
    """Input outside the supported size range (e.g. graph6 n over cap)."""


class ParameterRangeError(SrgecError):
    """Constructor argument outside its documented range."""


class NotPrimeError(SrgecError):
    """A prime modulus was required."""


class InvalidInputError(SrgecError):
    """Structured input violates its invariants (Latin square, design...)."""


class InfeasibleError(SrgecError):
    """Parameter set fails an arithmetic feasibility condition."""


class CompleteGraphError(SrgecError):
    """Block-graph parameters of a projective plane: the graph is complete."""


class NotApplicableError(SrgecError):
    """Predicate asked outside its setting (e.g. odd order)."""


class PreconditionError(SrgecError):
    """Operation precondition violated."""


class NotHoffmanError(SrgecError):
    """Partition is not a Hoffman coloring of the given graph."""


class NotSpreadError(SrgecError):
    """Partition classes do not induce cliques."""


class GraphMismatchError(SrgecError):
    """Certificate does not belong to the supplied graph."""


class DisjointCliquesError(SrgecError):
    """Complement is a disjoint union of odd cliques: no 1-factorization.

    Raised by the Hoffman-complement route when the cross degree drops to
    zero and the clique size is odd (the class-2 exception branch).
    """

    def __init__(self, pieces, size):
        super().__init__(
            f"complement is {pieces} disjoint cliques of odd order {size}"
        )
        self.pieces = pieces
        self.size = size


class RefusedError(SrgecError):
    """classify() refused the input; ``reason`` names the violated precondition."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason
