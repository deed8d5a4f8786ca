"""Exception types shared across the package."""

from __future__ import annotations


class PolarityLabError(Exception):
    """Base class for all errors raised by polaritylab."""


class GraphError(PolarityLabError, ValueError):
    """Invalid graph construction or invalid vertex set."""


class ParseError(PolarityLabError, ValueError):
    """Malformed input text. ``line`` is 1-based, or None when not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(PolarityLabError, ValueError):
    """Input exceeds a brute-force size bound."""


class PartitionError(PolarityLabError, ValueError):
    """Blocks overlap or do not cover the vertex set."""


class OrientationError(PolarityLabError, ValueError):
    """Malformed orientation, or a transitive one was required."""


class GadgetContractError(PolarityLabError):
    """A clause gadget violates one of the contract checks G1..G5."""

    def __init__(self, check: str, message: str):
        self.check = check
        super().__init__(f"{check}: {message}")


class GadgetSearchError(PolarityLabError):
    """Synthesis exhausted its bounds without finding a certified gadget."""
