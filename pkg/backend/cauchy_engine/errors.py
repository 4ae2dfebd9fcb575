"""
Exception hierarchy for the Cauchy engine.

Every failure raised by the library derives from CauchyEngineError so the
CLI can turn it into a single ``error:`` line.
"""

from typing import Iterable, Optional


class CauchyEngineError(Exception):
    """Base class for all library errors."""


class ConfigError(CauchyEngineError):
    """Invalid tolerance or grid configuration."""


class UsageError(CauchyEngineError):
    """Bad command-line usage."""


# Numeric kernels

class NumericError(CauchyEngineError):
    """Base class for failures of the numeric kernels."""


class NonConvergence(NumericError):
    """Quadrature or iteration hit its refinement cap."""


class NonFinite(NumericError):
    """A callable returned NaN or an infinity at an interior point."""


class NoBracket(NumericError):
    """Root finding was given an interval without a sign change."""


# Domain violations

class DomainError(CauchyEngineError, ValueError):
    """Argument outside the admissible set of an operation."""


class PoleError(DomainError):
    """Gamma evaluated at a non-positive integer."""


class DivisionByZero(DomainError, ZeroDivisionError):
    """A Gamma-form quotient hit a zero denominator."""


class ZeroDenominator(DomainError, ZeroDivisionError):
    """A representer or periodicity constant would divide by (almost) zero."""


class SingularLocus(DomainError):
    """A period formula is undefined at the query point."""


class BranchPole(DomainError):
    """Square-root branch point of a period function."""


class DegenerateBase(DomainError):
    """Exponential base equal to one."""


class NoRealRoot(DomainError):
    """The defining quadratic has a negative discriminant."""


class NoFinitePeriod(DomainError):
    """The defining equation only admits T = -inf."""


class EvalError(DomainError):
    """Evaluation of a parsed expression left the real domain."""

    def __init__(self, kind: str, subexpression: str):
        self.kind = kind
        self.subexpression = subexpression
        super().__init__(f"{kind} in '{subexpression}'")


# Everything else

class Unsupported(CauchyEngineError):
    """Requested case has no implemented solver."""


class ConsistencyError(CauchyEngineError):
    """A closed form failed substitution into its own defining equation."""


class ExprSyntaxError(CauchyEngineError):
    """Parse failure with byte offset and the set of expected tokens."""

    def __init__(self, message: str, offset: int, expected: Optional[Iterable[str]] = None):
        self.offset = offset
        self.expected = tuple(sorted(expected or ()))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")
