"""Exception types shared across the toolkit.

Problems found while compiling source files or assembling a registry are
reported as data (Diagnostic lists, ValidationReport); exceptions are for
contract violations hit at run time. Every exception carries a stable
machine-readable ``code`` so the CLI can map failures to exit codes and
format them uniformly.
"""

from __future__ import annotations


class HazgenError(Exception):
    """Base class for all toolkit errors."""

    code = "E_INTERNAL"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class WrongArchetypeError(HazgenError):
    code = "E_WRONG_ARCHETYPE"


class InfeasibleSceneError(HazgenError):
    code = "E_INFEASIBLE"


class UnboundDimensionError(HazgenError):
    code = "E_UNBOUND_DIM"


class IncompatibleInjectionError(HazgenError):
    code = "E_INCOMPATIBLE_INJECTION"


class UnboundMetricError(HazgenError):
    code = "E_UNBOUND_METRIC"


class CompoundPredicateError(HazgenError):
    code = "E_COMPOUND"


class RejectionOverflowError(HazgenError):
    code = "E_REJECTION_OVERFLOW"


class DegenerateLabelsError(HazgenError):
    code = "E_DEGENERATE_LABELS"


class NonFiniteLossError(HazgenError):
    code = "E_NONFINITE"


class FeatureMismatchError(HazgenError):
    code = "E_FEATURE_MISMATCH"


class DuplicateRecordError(HazgenError):
    code = "E_DUP_RECORD_ID"


class BadRatiosError(HazgenError):
    code = "E_BAD_RATIOS"


class SchemaVersionError(HazgenError):
    code = "E_SCHEMA_VERSION"


class RecordParseError(HazgenError):
    """Malformed line in a data file; ``line_number`` is 1-based."""

    code = "E_PARSE"

    def __init__(self, message: str, line_number: int):
        super().__init__(message)
        self.line_number = line_number

    def __str__(self) -> str:
        return f"{self.code}(line {self.line_number}): {self.message}"


class AuditChainError(HazgenError):
    code = "E_AUDIT_CHAIN"
