"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """A graph file violates the line-oriented format.

    Carries the 1-based line number of the offending line when one can be
    attributed (``None`` for whole-file problems such as a missing header).
    """

    def __init__(self, line: "int | None", message: str):
        self.line = line
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line}: {message}")


class ColoringError(ValueError):
    """A colored graph violates a coloring invariant.

    Raised for missing colors, empty color classes, and edges whose
    endpoints share a color.
    """


class FalsificationError(RuntimeError):
    """A witness extraction contradicted the reduction's forcing claims.

    This must never be repaired or silenced: a genuine occurrence is
    evidence against the construction itself, not an input error.
    """


class SolveTimeoutError(Exception):
    """An exact solve exceeded its wall-clock budget."""
