"""Error taxonomy shared by the library and the command line tool.

Each class maps to a stable process exit code so that scripted callers
can distinguish "you gave me garbage" from "the mathematics failed":

    FormatError       1   unreadable or malformed input
    ValidationError   2   well-formed input violating a domain rule
    VerificationError 3   a checked identity failed (counterexample found)
    IntegrityError    4   an internal invariant broke (always a bug)
"""


class HyperhomError(Exception):
    """Base class; carries the exit code used by the CLI."""

    exit_code = 1


class FormatError(HyperhomError):
    """Input could not be parsed (bad syntax, wrong document shape)."""

    exit_code = 1


class ValidationError(HyperhomError):
    """Parsed input breaks a domain rule (bad token, non-prime modulus, ...)."""

    exit_code = 2


class VerificationError(HyperhomError):
    """A verification run found a failing instance."""

    exit_code = 3


class IntegrityError(HyperhomError):
    """An internal chain-level invariant failed; indicates a bug, not bad input."""

    exit_code = 4
