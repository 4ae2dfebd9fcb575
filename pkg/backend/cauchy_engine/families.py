"""
Regular solutions of the four Cauchy functional equations and direct
checks that a sampled function satisfies one of them.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Optional, Tuple, Union

from .config import GridSpec, Tolerances, resolve
from .errors import DomainError
from .expr import Expr, parse, to_function

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]


class Domain(Enum):
    ALL_REALS = "R"
    POSITIVE_REALS = "(0,inf)"
    NONZERO_REALS = "R*"

    def contains(self, x: float) -> bool:
        if self is Domain.POSITIVE_REALS:
            return x > 0
        if self is Domain.NONZERO_REALS:
            return x != 0
        return math.isfinite(x)


class FamilyKind(Enum):
    ADDITIVE = "additive"
    EXPONENTIAL = "exponential"
    LOGARITHMIC = "logarithmic"
    MULTIPLICATIVE = "multiplicative"


_DOMAINS = {
    FamilyKind.ADDITIVE: Domain.ALL_REALS,
    FamilyKind.EXPONENTIAL: Domain.ALL_REALS,
    FamilyKind.LOGARITHMIC: Domain.POSITIVE_REALS,
    FamilyKind.MULTIPLICATIVE: Domain.POSITIVE_REALS,
}


@dataclass(frozen=True)
class CauchyFamily:
    """
    A regular Cauchy solution: c*x, a^x, c*log x or x^p.

    ``param`` is c, a or p depending on ``kind``.
    """
    kind: FamilyKind
    param: float

    def __post_init__(self):
        if self.kind is FamilyKind.EXPONENTIAL and not self.param > 0:
            raise DomainError(f"exponential family needs a > 0, got {self.param}")

    @classmethod
    def additive(cls, c: float) -> "CauchyFamily":
        return cls(FamilyKind.ADDITIVE, float(c))

    @classmethod
    def exponential(cls, a: float) -> "CauchyFamily":
        return cls(FamilyKind.EXPONENTIAL, float(a))

    @classmethod
    def logarithmic(cls, c: float) -> "CauchyFamily":
        return cls(FamilyKind.LOGARITHMIC, float(c))

    @classmethod
    def multiplicative(cls, p: float) -> "CauchyFamily":
        return cls(FamilyKind.MULTIPLICATIVE, float(p))

    @property
    def domain(self) -> Domain:
        return _DOMAINS[self.kind]

    def eval(self, x: float) -> float:
        if not self.domain.contains(x):
            raise DomainError(f"{self.describe()} is defined on {self.domain.value}, got x={x!r}")
        kind = self.kind
        if kind is FamilyKind.ADDITIVE:
            return self.param * x
        if kind is FamilyKind.EXPONENTIAL:
            return self.param ** x
        if kind is FamilyKind.LOGARITHMIC:
            return self.param * math.log(x)
        return x ** self.param

    def __call__(self, x: float) -> float:
        return self.eval(x)

    def inverse(self, value: float) -> float:
        """Inverse function, where the family is invertible."""
        kind, k = self.kind, self.param
        if kind is FamilyKind.ADDITIVE:
            if k == 0:
                raise DomainError("constant zero function has no inverse")
            return value / k
        if kind is FamilyKind.EXPONENTIAL:
            if k == 1:
                raise DomainError("constant exponential a=1 has no inverse")
            if not value > 0:
                raise DomainError(f"a^x takes positive values only, got {value}")
            return math.log(value) / math.log(k)
        if kind is FamilyKind.LOGARITHMIC:
            if k == 0:
                raise DomainError("constant zero function has no inverse")
            return math.exp(value / k)
        if k == 0:
            raise DomainError("constant x^0 has no inverse")
        if not value > 0:
            raise DomainError(f"x^p takes positive values only, got {value}")
        return value ** (1.0 / k)

    def describe(self) -> str:
        symbol = {FamilyKind.ADDITIVE: 'c', FamilyKind.EXPONENTIAL: 'a',
                  FamilyKind.LOGARITHMIC: 'c', FamilyKind.MULTIPLICATIVE: 'p'}[self.kind]
        return f"{self.kind.value}({symbol}={self.param:g})"


def eval_family(fam: CauchyFamily, x: float) -> float:
    """Exact formula value of a regular Cauchy solution."""
    return fam.eval(x)


class EquationKind(Enum):
    ADDITIVE_EQ = "A"
    EXPONENTIAL_EQ = "E"
    LOGARITHMIC_EQ = "L"
    MULTIPLICATIVE_EQ = "M"
    SINE_ADDITION = "S"
    COSINE_ADDITION = "C"

    @property
    def is_cauchy(self) -> bool:
        return self not in (EquationKind.SINE_ADDITION, EquationKind.COSINE_ADDITION)

    @property
    def needs_positive_domain(self) -> bool:
        return self in (EquationKind.LOGARITHMIC_EQ, EquationKind.MULTIPLICATIVE_EQ)

    def residual(self, f: RealFunction, x: float, y: float) -> float:
        """Absolute residual of a one-function Cauchy equation at (x, y)."""
        if self is EquationKind.ADDITIVE_EQ:
            return abs(f(x + y) - f(x) - f(y))
        if self is EquationKind.EXPONENTIAL_EQ:
            return abs(f(x + y) - f(x) * f(y))
        if self is EquationKind.LOGARITHMIC_EQ:
            return abs(f(x * y) - f(x) - f(y))
        if self is EquationKind.MULTIPLICATIVE_EQ:
            return abs(f(x * y) - f(x) * f(y))
        raise DomainError(f"{self.name} involves two functions; use verify_pair")

    def relative_residual(self, f: RealFunction, x: float, y: float) -> float:
        """Residual divided by max(1, |left-hand side|)."""
        lhs = f(x * y) if self.needs_positive_domain else f(x + y)
        return self.residual(f, x, y) / max(1.0, abs(lhs))


CAUCHY_EQUATIONS: Tuple[EquationKind, ...] = (
    EquationKind.ADDITIVE_EQ,
    EquationKind.EXPONENTIAL_EQ,
    EquationKind.LOGARITHMIC_EQ,
    EquationKind.MULTIPLICATIVE_EQ,
)

FAMILY_EQUATION = {
    FamilyKind.ADDITIVE: EquationKind.ADDITIVE_EQ,
    FamilyKind.EXPONENTIAL: EquationKind.EXPONENTIAL_EQ,
    FamilyKind.LOGARITHMIC: EquationKind.LOGARITHMIC_EQ,
    FamilyKind.MULTIPLICATIVE: EquationKind.MULTIPLICATIVE_EQ,
}
EQUATION_FAMILY = {eq: kind for kind, eq in FAMILY_EQUATION.items()}


FunctionLike = Union[CauchyFamily, Expr, str, RealFunction]


def as_function(obj: FunctionLike, bindings: Optional[Mapping[str, float]] = None) -> RealFunction:
    """Turn a family, an expression (or its source) or a callable into f(x)."""
    if isinstance(obj, CauchyFamily):
        return obj.eval
    if isinstance(obj, str):
        return to_function(parse(obj), 'x', bindings)
    if callable(obj):
        return obj
    return to_function(obj, 'x', bindings)


def translate(f: RealFunction, T: float) -> RealFunction:
    """x -> f(x + T)."""
    return lambda x: f(x + T)


@dataclass(frozen=True)
class CauchyCheck:
    passed: bool
    max_residual: float
    worst_point: Optional[Tuple[float, float]]
    points: int


def satisfies_cauchy(fn: FunctionLike, eq: EquationKind, grid: Optional[GridSpec] = None,
                     tol: Optional[float] = None,
                     tolerances: Optional[Tolerances] = None,
                     relative: bool = False) -> CauchyCheck:
    """
    Check a function against one of the four Cauchy equations on a grid.

    Args:
        fn: Family, expression or callable
        eq: One of the one-function equation kinds
        grid: Sample grid; defaults to [-3,3] or [0.1,5] for the log/mult equations
        tol: Pass threshold on the maximal residual
        relative: Scale each residual by max(1, |left-hand side|)

    Raises:
        DomainError: For two-function equations or a grid that leaves the domain
    """
    tols = resolve(tolerances)
    tol = tols.cauchy_tol if tol is None else tol
    if not eq.is_cauchy:
        raise DomainError(f"{eq.name} involves two functions; use verify_pair")
    if grid is None:
        grid = GridSpec.positive() if eq.needs_positive_domain else GridSpec.default()
    if eq.needs_positive_domain and not grid.is_positive():
        raise DomainError(f"{eq.name} needs a grid inside (0, inf), got {grid.describe()}")
    f = as_function(fn)

    worst, worst_point, count = 0.0, None, 0
    for x, y in grid.pairs():
        r = eq.relative_residual(f, x, y) if relative else eq.residual(f, x, y)
        count += 1
        if math.isnan(r):
            r = math.inf
        if worst_point is None or r > worst:
            worst, worst_point = r, (x, y)
    passed = worst <= tol
    logger.debug(f"satisfies_cauchy {eq.name}: max residual {worst:g} over {count} pairs")
    return CauchyCheck(passed, worst, worst_point, count)
