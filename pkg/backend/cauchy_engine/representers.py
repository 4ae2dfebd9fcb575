"""
Sine and cosine representers.

For a zero-free f the sine representer f_S(x) = f(2x) / (2 f(x)) is the
only g that can pair with f in (S); for g the cosine representer
g_C(x) = +-sqrt(g(x)^2 - g(2x)) plays the same part in (C).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Union

from .config import GridSpec, Tolerances, resolve
from .errors import DegenerateBase, DomainError, NoFinitePeriod, NoRealRoot, ZeroDenominator
from .families import CauchyFamily, FamilyKind, FunctionLike, as_function
from .numerics import csqrt

logger = logging.getLogger(__name__)

RealOrComplex = Union[float, complex]


class RepresenterType(Enum):
    SINE = "sine"
    COSINE = "cosine"


@dataclass(frozen=True)
class RepresenterKind:
    """Sine, or cosine with a sign (+1 or -1)."""
    type: RepresenterType
    sign: Optional[int] = None

    def __post_init__(self):
        if self.type is RepresenterType.SINE and self.sign is not None:
            raise DomainError("the sine representer carries no sign")
        if self.type is RepresenterType.COSINE and self.sign not in (1, -1):
            raise DomainError(f"cosine representer sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def sine(cls) -> "RepresenterKind":
        return cls(RepresenterType.SINE)

    @classmethod
    def cosine(cls, sign: int = 1) -> "RepresenterKind":
        return cls(RepresenterType.COSINE, sign)

    def describe(self) -> str:
        if self.type is RepresenterType.SINE:
            return "sine"
        return f"cosine{'+' if self.sign > 0 else '-'}"


def sine_representer(f: FunctionLike, x: float, tolerances: Optional[Tolerances] = None) -> float:
    """
    f(2x) / (2 f(x)).

    Raises:
        ZeroDenominator: If |f(x)| is below zero_guard
    """
    fn = as_function(f)
    denominator = fn(x)
    if abs(denominator) < resolve(tolerances).zero_guard:
        raise ZeroDenominator(f"f({x:g}) = 0; sine representer undefined")
    return fn(2.0 * x) / (2.0 * denominator)


def _signed_root(radicand: float, sign: int, real_only: bool) -> RealOrComplex:
    if radicand >= 0:
        return sign * math.sqrt(radicand)
    if real_only:
        raise DomainError(f"negative radicand {radicand:g} in real-only mode")
    return sign * csqrt(radicand)


def cosine_representer(g: FunctionLike, x: float, sign: int = 1,
                       real_only: bool = False) -> RealOrComplex:
    """
    sign * sqrt(g(x)^2 - g(2x)), complex for a negative radicand.

    Args:
        g: The cosine-side function
        x: Evaluation point
        sign: +1 or -1
        real_only: Raise DomainError instead of returning a complex value
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    gn = as_function(g)
    value = gn(x)
    return _signed_root(value * value - gn(2.0 * x), sign, real_only)


def _check_domain(fam: CauchyFamily, x: float) -> None:
    if not fam.domain.contains(x):
        raise DomainError(f"{fam.describe()} is defined on {fam.domain.value}, got x={x!r}")


def closed_form_representer(fam: CauchyFamily, kind: RepresenterKind, x: float,
                            real_only: bool = False) -> RealOrComplex:
    """
    Representer of a regular Cauchy solution in closed form.

    Sine: additive 1 (also at x = 0), exponential a^x / 2, logarithmic
    (log 2 / log x + 1) / 2, multiplicative 2^(p-1).
    Cosine: additive +-sqrt(cx(cx-2)), exponential 0, logarithmic
    +-sqrt(c log x (c log x - 1) - c log 2), multiplicative
    +-sqrt(x^p (x^p - 2^p)).
    """
    _check_domain(fam, x)
    kind_of, k = fam.kind, fam.param
    if kind.type is RepresenterType.SINE:
        if kind_of is FamilyKind.ADDITIVE:
            if k == 0:
                raise ZeroDenominator("f = 0 has no sine representer")
            return 1.0
        if kind_of is FamilyKind.EXPONENTIAL:
            return 0.5 * k ** x
        if kind_of is FamilyKind.LOGARITHMIC:
            if k == 0 or x == 1:
                raise ZeroDenominator(f"{fam.describe()} vanishes at x={x:g}")
            return 0.5 * (math.log(2.0) / math.log(x) + 1.0)
        return 2.0 ** (k - 1.0)

    sign = kind.sign
    if kind_of is FamilyKind.ADDITIVE:
        return _signed_root(k * x * (k * x - 2.0), sign, real_only)
    if kind_of is FamilyKind.EXPONENTIAL:
        return 0.0
    if kind_of is FamilyKind.LOGARITHMIC:
        log_x = math.log(x)
        return _signed_root(k * log_x * (k * log_x - 1.0) - k * math.log(2.0), sign, real_only)
    power = x ** k
    return _signed_root(power * (power - 2.0 ** k), sign, real_only)


def printed_power_cosine_representer(x: float) -> float:
    """The published value f_C = 0 for the multiplicative family."""
    return 0.0


# Parity

class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    NEITHER = "neither"


@dataclass(frozen=True)
class ParityReport:
    parity: Parity
    even_residual: float
    odd_residual: float
    sine_representer_even: Optional[bool]
    cosine_representer_even: Optional[bool]

    @property
    def consistent(self) -> bool:
        """f even or odd => f_S even, and f even => f_C even."""
        if self.parity is not Parity.NEITHER and self.sine_representer_even is False:
            return False
        if self.parity is Parity.EVEN and self.cosine_representer_even is False:
            return False
        return True


def _symmetric_points(grid: GridSpec, tol: float):
    if abs(grid.lo + grid.hi) > tol:
        raise DomainError(f"parity needs a grid symmetric about 0, got {grid.describe()}")
    return [float(x) for x in grid.points() if x >= 0]


def _is_even(fn: Callable[[float], RealOrComplex], points, tol: float) -> Optional[bool]:
    """Evenness over the points where fn is defined; None if nowhere."""
    worst, seen = 0.0, False
    for x in points:
        try:
            diff = abs(fn(x) - fn(-x))
        except (DomainError, ZeroDivisionError):
            continue
        seen = True
        worst = max(worst, diff)
    return worst <= tol if seen else None


def parity_check(f: FunctionLike, grid: Optional[GridSpec] = None, tol: Optional[float] = None,
                 tolerances: Optional[Tolerances] = None) -> ParityReport:
    """
    Classify f as even, odd or neither and report the parity of its representers.

    Representers are only evaluated away from the zeros of f.

    Raises:
        DomainError: If the grid is not symmetric about 0
    """
    tols = resolve(tolerances)
    tol = tols.residual_pass if tol is None else tol
    fn = as_function(f)
    points = _symmetric_points(grid or GridSpec.default(), tol)

    even_residual = max(abs(fn(x) - fn(-x)) for x in points)
    odd_residual = max(abs(fn(x) + fn(-x)) for x in points)
    if even_residual <= tol:
        parity = Parity.EVEN
    elif odd_residual <= tol:
        parity = Parity.ODD
    else:
        parity = Parity.NEITHER

    sine_even = _is_even(lambda x: sine_representer(fn, x, tols), points, tol)
    cosine_even = _is_even(lambda x: cosine_representer(fn, x), points, tol)
    logger.debug(f"parity {parity.value}: f_S even={sine_even}, f_C even={cosine_even}")
    return ParityReport(parity, even_residual, odd_residual, sine_even, cosine_even)


# Periods of representers

@dataclass(frozen=True)
class RepresenterPeriod:
    """
    x -> T(x) with rep(x) = fam(x + 2T(x)).

    ``printed`` is the published formula where one exists; it is kept for
    comparison only.
    """
    fam: CauchyFamily
    kind: RepresenterKind
    fn: Callable[[float], float]
    formula: str
    printed: Optional[Callable[[float], float]] = None

    def __call__(self, x: float) -> float:
        return self.fn(x)

    def residual(self, x: float) -> float:
        """|rep(x) - fam(x + 2T(x))| using the closed-form representer of fam."""
        T = self.fn(x)
        rep = closed_form_representer(self.fam, self.kind, x)
        return abs(rep - self.fam.eval(x + 2.0 * T))

    def printed_agrees(self, x: float, tol: float = 1e-9) -> bool:
        if self.printed is None:
            return False
        try:
            return abs(self.printed(x) - self.fn(x)) <= tol
        except (DomainError, ValueError):
            return False


def representer_period(fam: CauchyFamily, kind: RepresenterKind) -> RepresenterPeriod:
    """
    Period function of a family's representer.

    Raises:
        NoFinitePeriod: For the exponential cosine case (only T = -inf)
        DegenerateBase: For the exponential family with a = 1
        DomainError: For constant families
    """
    k = fam.param
    if kind.type is RepresenterType.SINE:
        return _sine_period(fam, kind, k)
    return _cosine_period(fam, kind, k)


def _sine_period(fam: CauchyFamily, kind: RepresenterKind, k: float) -> RepresenterPeriod:
    if fam.kind is FamilyKind.MULTIPLICATIVE:
        if k == 0:
            raise DomainError("x^0 is constant; its sine representer 1/2 is never attained")
        shift = 2.0 ** (-1.0 / k)
        return RepresenterPeriod(fam, kind, lambda x: shift - x / 2.0, "2^(-1/p) - x/2")
    if fam.kind is FamilyKind.ADDITIVE:
        if k == 0:
            raise DomainError("f = 0 has no sine representer")
        return RepresenterPeriod(fam, kind, lambda x: 0.5 * (1.0 / k - x), "(1/c - x)/2")
    if fam.kind is FamilyKind.EXPONENTIAL:
        if k == 1:
            raise DegenerateBase("base a = 1 gives a constant function")
        T = -0.5 * math.log(2.0) / math.log(k)
        return RepresenterPeriod(fam, kind, lambda x: T, "-log_a(2)/2")
    if k == 0:
        raise DomainError("f = 0 has no sine representer")

    def log_period(x: float) -> float:
        rep = closed_form_representer(fam, kind, x)
        return 0.5 * (math.exp(rep / k) - x)
    return RepresenterPeriod(fam, kind, log_period, "(exp(f_S(x)/c) - x)/2")


def _cosine_period(fam: CauchyFamily, kind: RepresenterKind, k: float) -> RepresenterPeriod:
    sign = kind.sign
    if fam.kind is FamilyKind.EXPONENTIAL:
        raise NoFinitePeriod("a^(x+2T) = 0 only for T = -inf")
    if fam.kind is FamilyKind.ADDITIVE:
        if k == 0:
            raise DomainError("g = 0 is degenerate")
        orientation = sign * (1 if k > 0 else -1)

        def additive_period(x: float) -> float:
            # T^2 + xT + x/(2c) = 0, root whose c(x+2T) carries the requested sign
            disc = x * x - 2.0 * x / k
            if disc < 0:
                raise NoRealRoot(f"T^2 + xT + x/(2c) has no real root at x={x:g}")
            return 0.5 * (-x + orientation * math.sqrt(disc))

        def printed(x: float) -> float:
            return 0.5 * (-x + orientation * abs(x) * math.sqrt(1.0 - 1.0 / k))
        return RepresenterPeriod(fam, kind, additive_period, "root of T^2 + xT + x/(2c) = 0", printed)

    if fam.kind is FamilyKind.LOGARITHMIC:
        if k == 0:
            raise DomainError("g = 0 is degenerate")

        def log_period(x: float) -> float:
            rep = _real_representer(fam, kind, x)
            return 0.5 * (math.exp(rep / k) - x)
        return RepresenterPeriod(fam, kind, log_period, "(exp(g_C(x)/c) - x)/2")

    if k == 0:
        raise DomainError("x^0 is constant; its cosine representer vanishes")

    def power_period(x: float) -> float:
        rep = _real_representer(fam, kind, x)
        if rep < 0:
            raise NoRealRoot(f"(x+2T)^p = {rep:g} < 0 has no solution at x={x:g}")
        if rep == 0 and k < 0:
            raise NoFinitePeriod(f"(x+2T)^p = 0 with p < 0 needs x + 2T = inf (x={x:g})")
        return 0.5 * (rep ** (1.0 / k) - x)
    return RepresenterPeriod(fam, kind, power_period, "(g_C(x)^(1/p) - x)/2", lambda x: -x / 2.0)


def _real_representer(fam: CauchyFamily, kind: RepresenterKind, x: float) -> float:
    _check_domain(fam, x)
    try:
        return closed_form_representer(fam, kind, x, real_only=True)
    except DomainError:
        raise NoRealRoot(f"cosine representer is not real at x={x:g}") from None


def period_from_sine_representer(fam: CauchyFamily, x: float) -> float:
    """
    Shift S with f(x + S) = f_S(x), via the inverse: S = f^-1(f_S(x)) - x.

    S is twice the representer period; for the exponential family it is
    the constant -log_a 2.
    """
    rep = closed_form_representer(fam, RepresenterKind.sine(), x)
    return fam.inverse(rep) - x


def period_from_cosine_representer(fam: CauchyFamily, x: float, sign: int = 1) -> float:
    """Shift S with g(x + S) = g_C(x), S = g^-1(g_C(x)) - x."""
    if fam.kind is FamilyKind.EXPONENTIAL:
        raise NoFinitePeriod("a^(x+S) = 0 only for S = -inf")
    rep = closed_form_representer(fam, RepresenterKind.cosine(sign), x, real_only=True)
    return fam.inverse(rep) - x
