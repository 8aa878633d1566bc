"""Exception hierarchy shared by the algebra packages and the command line."""
from __future__ import annotations


class AlgebraError(Exception):
    """Base class for every error raised by the toolkit."""


class SizeMismatchError(AlgebraError):
    """Operands live on different ranks d."""


class ParameterMismatchError(AlgebraError):
    """Scalars or characters built over different (p, f, r)."""


class ResourceBoundError(AlgebraError):
    """A configured size limit would be exceeded."""


class PreconditionError(AlgebraError):
    """An operation was called on input outside its domain."""


class InvariantError(AlgebraError):
    """An internal invariant failed; this indicates a bug, not bad input."""


class DomainError(AlgebraError):
    """A value outside the mathematical domain (e.g. lifting zero)."""


class PrecisionError(AlgebraError):
    """Laurent series precision was exhausted before a decision was reached."""


class HypothesisError(PreconditionError):
    """The unit data violates the realization hypothesis."""


class CocycleError(PreconditionError):
    """A candidate partial function violates an antisymmetry, range or cocycle condition."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class ConfigError(AlgebraError):
    """Invalid command-line configuration."""
