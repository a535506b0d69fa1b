"""Exception hierarchy.

Two families matter to callers: ``SchemaError`` (the input could not be
understood at all) and ``HypothesisViolation`` (the input is well formed
but the dynamics it describes break a standing assumption). The CLI maps
them to exit codes 1 and 2.
"""


class MsDecompError(Exception):
    pass


class SchemaError(MsDecompError, ValueError):
    """Malformed scenario or portrait data.

    ``field`` names the offending location (e.g. ``orbits[2].unstable_dim``).
    ``line``/``column`` are set for JSON syntax errors.
    """

    def __init__(self, message, field=None, line=None, column=None):
        super().__init__(message)
        self.field = field
        self.line = line
        self.column = column

    def to_dict(self):
        d = {"type": "schema_error", "message": str(self)}
        if self.field is not None:
            d["field"] = self.field
        if self.line is not None:
            d["line"] = self.line
            d["column"] = self.column
        return d


class HypothesisViolation(MsDecompError):
    """The data contradict a standing hypothesis (parity, admissibility, ...)."""


class ParityError(HypothesisViolation):
    pass


class PreconditionError(HypothesisViolation):
    pass


class OrderCycleError(HypothesisViolation):
    def __init__(self, message, cycle=()):
        super().__init__(message)
        self.cycle = tuple(cycle)


class GraphError(HypothesisViolation):
    """PortraitGraph is inconsistent with the portrait it claims to describe."""


class PlanError(HypothesisViolation):
    """A realization plan is malformed or cannot be executed."""


class LimitError(MsDecompError):
    """A requested computation exceeds a hard size bound."""


class UsageError(MsDecompError):
    """Bad command-line usage."""
