"""Exception types shared across the package.

The CLI maps each class to a distinct exit code (see argsum.cli).
"""


class ArgsumError(Exception):
    """Base class for all argsum errors."""


class ParseError(ArgsumError):
    """Malformed input file. Message carries the line or record position."""


class ValidationError(ArgsumError):
    """Well-formed input that violates a documented invariant."""


class ConfigError(ArgsumError):
    """Bad run configuration: empty lexicon, missing resource, unknown feature family."""
