"""Exception hierarchy.

Resource-cap errors share a base class so callers (the audit runner, the CLI)
can turn them into SKIPPED verdicts or exit status 3 without listing them all.
"""


class GeodesiaError(Exception):
    pass


class GraphError(GeodesiaError, ValueError):
    pass


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class BadSize(GraphError):
    pass


class NotConnected(GraphError):
    pass


# antipodal_pairs names this Disconnected; same condition
Disconnected = NotConnected


class Unreachable(GraphError):
    pass


class ArityMismatch(GraphError):
    pass


class DisconnectedResult(GraphError):
    pass


class UndefinedInvariant(GraphError):
    """Sg and Sg' need at least two vertices."""


class ParseError(GeodesiaError, ValueError):
    pass


class ResourceCapError(GeodesiaError):
    pass


class CapExceeded(ResourceCapError):
    """Too many geodesics between one pair."""


class SolveCapExceeded(ResourceCapError):
    pass


class SizeCapExceeded(ResourceCapError):
    pass


class OracleBlowup(ResourceCapError):
    pass
