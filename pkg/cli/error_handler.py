"""Mapping of exceptions to JSON error bodies and exit codes."""
from __future__ import annotations

import json
import logging

from config.constants import ExitCode
from algebra.errors import (
    AlgebraError,
    CocycleError,
    ConfigError,
    DomainError,
    HypothesisError,
    InvariantError,
    ParameterMismatchError,
    PrecisionError,
    PreconditionError,
    ResourceBoundError,
    SizeMismatchError,
)


logger = logging.getLogger(__name__)

# most specific first
ERROR_TITLES: list[tuple[type[Exception], str]] = [
    (ConfigError, "Bad Configuration"),
    (HypothesisError, "Hypothesis Violation"),
    (CocycleError, "Cocycle Violation"),
    (PreconditionError, "Precondition Failed"),
    (SizeMismatchError, "Size Mismatch"),
    (ParameterMismatchError, "Parameter Mismatch"),
    (ResourceBoundError, "Resource Bound Exceeded"),
    (PrecisionError, "Precision Exhausted"),
    (DomainError, "Domain Error"),
    (InvariantError, "Internal Invariant Violation"),
    (json.JSONDecodeError, "Invalid JSON"),
    (OSError, "Input Unavailable"),
]


def error_response(error: Exception) -> tuple[dict, int]:
    """Return the JSON body and exit code for an exception raised by a command."""
    for cls, title in ERROR_TITLES:
        if isinstance(error, cls):
            body = {"error": title, "message": str(error)}
            if isinstance(error, CocycleError) and error.witness:
                body["witness"] = error.witness
            if isinstance(error, InvariantError):
                logger.error("invariant violated", exc_info=error)
            return body, ExitCode.USAGE
    if isinstance(error, AlgebraError):
        return {"error": "Algebra Error", "message": str(error)}, ExitCode.USAGE
    logger.error("unexpected error", exc_info=error)
    return {"error": "Internal Error", "message": "An unexpected error occurred"}, ExitCode.USAGE
