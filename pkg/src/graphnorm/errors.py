"""Exception hierarchy.

Every domain error carries a stable ``code`` string; the command line front
end prints it verbatim so scripts can branch on it.
"""


class GraphNormError(Exception):
    code = "ERROR"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details


class MalformedGraph(GraphNormError, ValueError):
    code = "MALFORMED"


class ValidationError(GraphNormError, ValueError):
    code = "VALIDATION_ERROR"


class NotComposite(GraphNormError):
    code = "NOT_COMPOSITE"


class NotAcyclic(GraphNormError):
    code = "NOT_ACYCLIC"


class SingularChange(GraphNormError):
    code = "SINGULAR_CHANGE"


class GroupMismatch(GraphNormError, ValueError):
    code = "GROUP_MISMATCH"


class NotCoprime(GraphNormError):
    code = "NOT_COPRIME"


class ZeroIntersection(GraphNormError):
    code = "ZERO_INTERSECTION"


class NotDivisible(GraphNormError, ValueError):
    code = "NOT_DIVISIBLE"


class NotRealizable(GraphNormError):
    code = "NOT_REALIZABLE"


class TorsionEuler(GraphNormError):
    code = "TORSION_EULER"


class TorsionLoop(GraphNormError):
    code = "TORSION_LOOP"


class CapExceeded(GraphNormError):
    code = "CAP_EXCEEDED"


class NonzeroAlgebraic(GraphNormError, ValueError):
    code = "NONZERO_ALGEBRAIC"


class SchemaError(GraphNormError, ValueError):
    code = "SCHEMA_ERROR"
