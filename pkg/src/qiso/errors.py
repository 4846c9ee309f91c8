"""Exception hierarchy shared across the package."""


class QisoError(Exception):
    """Base class for every error raised by this package."""


class EmptyGraph(QisoError):
    """A graph needs at least one vertex."""


class InvalidVertex(QisoError):
    """Vertex id outside the host graph's range."""


class InvalidEdge(QisoError):
    """Self-loop or parallel edge."""


class Disconnected(QisoError):
    """The graph (or a derived graph) is not connected."""


class EmptySet(QisoError):
    """A vertex set that must be non-empty is empty."""


class NotATree(QisoError):
    """Operation defined for trees only."""


class InvalidConstants(QisoError):
    """Quasi-isometry constants outside their domain (stretch >= 1, rest >= 0)."""


class NotSurjective(QisoError):
    """A vertex mapping must hit every target vertex."""


class InvalidMapping(QisoError):
    """A supplied vertex mapping violates the construction it claims to follow."""


class PreconditionViolated(QisoError):
    """A caller-supplied fact required by the operation does not hold."""


class TooLarge(QisoError):
    """Input exceeds the guard size of an exhaustive computation."""


class NotIndependent(QisoError):
    """The vertex set contains an edge."""


class NotMaximal(QisoError):
    """The independent set can be extended."""


class NotAPartition(QisoError):
    """Blocks do not form a disjoint cover of the vertex set."""


class BlockNotConnected(QisoError):
    """A partition block does not induce a connected subgraph."""


class InvalidPath(QisoError):
    """The vertex sequence is not a simple path in the host graph."""


class NotContiguous(QisoError):
    """A block meets the path in more than one segment."""


class EmptyComposition(QisoError):
    """An integer composition needs at least one part."""


class InvalidComposition(QisoError):
    """Composition parts must be positive integers."""


class NotAdjacent(QisoError):
    """The two vertices must share an edge."""


class InvalidWeight(QisoError):
    """Vertex weights must be strictly positive."""


class InvalidEdgeCount(QisoError):
    """Requested edge count infeasible for the vertex count."""


class FormatError(QisoError):
    """A text input file does not follow its format."""
