"""Exception hierarchy.

Every error carries the process exit code the CLI maps it to:
1 for usage/argument problems, 2 for parse/validation problems,
3 when a work budget is exhausted.
"""


class EscError(Exception):
    exit_code = 1


class ArgumentError(EscError, ValueError):
    exit_code = 1


class UnsupportedError(ArgumentError):
    """Operation not defined for this input shape (e.g. tuple arity)."""


class DomainError(ArgumentError):
    """Input lies outside the domain where a closed form holds."""


class ValidationError(EscError, ValueError):
    exit_code = 2


class ParseError(ValidationError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BoundsError(ValidationError, IndexError):
    pass


class ResourceError(EscError, RuntimeError):
    exit_code = 3


class GenerationError(EscError, RuntimeError):
    exit_code = 3
