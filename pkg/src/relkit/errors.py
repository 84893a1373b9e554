"""Exception hierarchy shared by all relkit modules.

Every error carries a short machine-readable ``code`` that the CLI prints
as ``ERROR:<code>: message`` before exiting with status 1.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all domain errors raised by relkit."""

    code = "ERROR"


class CarrierError(ToolkitError, TypeError):
    """Operand does not belong to the semiring carrier (mixed-carrier use)."""

    code = "BAD_VALUE"


class UnknownSemiringError(ToolkitError):
    """No registered semiring instance under the requested name."""

    code = "UNKNOWN_SEMIRING"


class UndefinedClosureError(ToolkitError):
    """Scalar closure requested where the instance leaves it undefined."""

    code = "UNDEFINED_CLOSURE"


class ClosureDivergenceError(ToolkitError):
    """A closure algorithm hit an undefined scalar star (e.g. counting + cycles)."""

    code = "CLOSURE_DIVERGENCE"


class StructureError(ToolkitError):
    """Matrix dimension or node-index mismatch between operands."""

    code = "BAD_MATRIX"


class CyclicGraphError(ToolkitError):
    """Input graph contains a directed cycle where a DAG is required."""

    code = "NOT_A_DAG"

    def __init__(self, message: str, cycle: tuple[int, ...] = ()):
        super().__init__(message)
        self.cycle = tuple(cycle)


class UnknownNodeError(ToolkitError):
    """Node index or label not present in the matrix index."""

    code = "UNKNOWN_NODE"


class UnknownConnectorError(ToolkitError):
    """Toggle map references a connector id that was never discovered."""

    code = "UNKNOWN_CONNECTOR"


class PartitionCoverError(ToolkitError):
    """No deterministic path cover realizes the Jordan size multiset."""

    code = "PARTITION_COVER"


class MazeSpecError(ToolkitError):
    """Maze environment spec failed validation."""

    code = "SPEC_INVALID"

    def __init__(self, message: str, offenders: tuple[str, ...] = ()):
        super().__init__(message)
        self.offenders = tuple(offenders)


class ConfigError(ToolkitError):
    """Benchmark configuration violates its invariants."""

    code = "BAD_CONFIG"


class FileFormatError(ToolkitError):
    """Matrix or spec file could not be parsed."""

    code = "BAD_FILE"
