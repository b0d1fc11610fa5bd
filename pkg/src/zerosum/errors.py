"""Error types and process exit codes shared across the package."""

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


class InputError(ValueError):
    """Malformed user input: bad group spec, sequence, indices, or a size bound hit."""


class InternalInvariantError(RuntimeError):
    """A solver invariant failed. Indicates a bug, never an infeasible input."""
