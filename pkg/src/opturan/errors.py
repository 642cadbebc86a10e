"""Exception types raised across the package."""


class OPTuranError(Exception):
    """Base class for all package errors."""


class GraphError(OPTuranError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DomainError(OPTuranError, ValueError):
    """Arguments outside the domain where a formula or constructor is defined."""


class NotOuterplanar(OPTuranError):
    pass


class NotBiconnected(OPTuranError):
    pass


class Disconnected(OPTuranError):
    pass


class TooLarge(OPTuranError):
    """Exact search refused because the input exceeds the configured bound."""


class Infeasible(OPTuranError):
    pass


class BudgetExceeded(OPTuranError):
    """Oracle enumeration refused because n exceeds the configured budget."""
