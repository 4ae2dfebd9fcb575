"""
Period and scaleability functions of Cauchy pairs.

Every closed form is substituted back into its defining equation before
it is returned; a residual beyond ``residual_pass`` raises
ConsistencyError instead of handing out a wrong period.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .config import GridSpec, Tolerances, resolve
from .errors import (
    BranchPole,
    ConsistencyError,
    DegenerateBase,
    DomainError,
    NoRealRoot,
    SingularLocus,
    Unsupported,
)
from .families import EquationKind, FunctionLike, as_function
from .numerics import csqrt, clog, derivative_fd, quadratic_roots
from .verify import Pair, Period, VerificationReport, as_period, run_verification

logger = logging.getLogger(__name__)

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class PeriodBranch:
    """One period value; ``value`` is None when there is no finite period (T = -inf)."""
    value: Optional[complex]
    finite: bool
    residual: float
    label: str = ""

    @property
    def is_real(self) -> bool:
        return self.finite and self.value.imag == 0.0

    @property
    def real(self) -> float:
        if not self.finite:
            return -math.inf
        return self.value.real


@dataclass(frozen=True)
class PeriodResult:
    """Zero, one or two period values with the residual of their defining equation."""
    branches: Tuple[PeriodBranch, ...]
    equation: str
    note: str = ""

    @property
    def values(self) -> List[complex]:
        return [b.value for b in self.branches if b.finite]

    @property
    def finite(self) -> List[bool]:
        return [b.finite for b in self.branches]

    @property
    def residuals(self) -> List[float]:
        return [b.residual for b in self.branches]

    def real_values(self) -> List[float]:
        return [b.value.real for b in self.branches if b.is_real]

    @property
    def value(self) -> float:
        """The single real value of a one-branch result."""
        if len(self.branches) != 1 or not self.branches[0].is_real:
            raise DomainError(f"period result is not a single real value: {self.branches}")
        return self.branches[0].value.real

    @classmethod
    def no_finite_period(cls, equation: str, note: str = "") -> "PeriodResult":
        return cls((PeriodBranch(None, False, 0.0, "-inf"),), equation, note)


class AnyPeriod:
    """Marker for a degenerate pair where every T is a period (slope c = 0)."""

    def __repr__(self) -> str:
        return "ANY_PERIOD"

    def __str__(self) -> str:
        return "any"


ANY_PERIOD = AnyPeriod()


def _checked(candidates: Sequence[Tuple[complex, str]], residual: Callable[[complex], float],
             equation: str, tolerances: Optional[Tolerances], note: str = "") -> PeriodResult:
    """Substitute each candidate into its defining equation; refuse inconsistent ones."""
    tols = resolve(tolerances)
    branches = []
    for value, label in candidates:
        value = complex(value)
        r = residual(value)
        if not r <= tols.residual_pass:
            raise ConsistencyError(
                f"period {value} ({label}) leaves residual {r:g} in {equation}")
        branches.append(PeriodBranch(value, True, r, label))
    return PeriodResult(tuple(branches), equation, note)


# Additive pairs

def _harmonic_mean(x: float, y: float) -> float:
    if x == y:
        return x
    return 2.0 * x * y / (x + y)


def period_additive_S(c: float, x: float, y: float,
                      tolerances: Optional[Tolerances] = None):
    """
    Period of the additive (S)-pair f(u) = cu, g(u) = f(u + T(x, y)).

    T = 1/c - 2xy/(x+y), a constant minus the harmonic mean.

    Returns:
        PeriodResult, or ANY_PERIOD for c = 0

    Raises:
        SingularLocus: On the line x + y = 0
    """
    if c == 0:
        return ANY_PERIOD
    s = x + y
    if s == 0:
        raise SingularLocus(f"additive (S) period undefined on x+y=0 (x={x:g}, y={y:g})")
    T = 1.0 / c - _harmonic_mean(x, y)

    # defining equation divided by c
    def residual(t: complex) -> float:
        t = t.real
        return abs(s - c * (x * (y + t) + y * (x + t)))

    return _checked([(T, "single")], residual, "f(x+y) = f(x)f(y+T) + f(y)f(x+T), f = cu", tolerances)


def additive_S_period_function(c: float) -> Period:
    """T(x, y) of period_additive_S as a Period for grid verification."""
    def fn(x: float, y: float) -> float:
        s = x + y
        if s == 0:
            raise SingularLocus("x+y=0")
        return 1.0 / c - _harmonic_mean(x, y)
    return Period.of(fn, f"1/{c:g} - 2xy/(x+y)")


def period_additive_S_dual(c: float, x: float, y: float,
                           tolerances: Optional[Tolerances] = None):
    """
    Period of the dual additive pair, T = (x + y - cxy) / (c(x + y) - 1).

    Raises:
        SingularLocus: On the line c(x + y) = 1
    """
    if c == 0:
        return ANY_PERIOD
    s = x + y
    denominator = c * s - 1.0
    if denominator == 0:
        raise SingularLocus(f"dual period undefined on c(x+y)=1 (x={x:g}, y={y:g})")
    T = (s - c * x * y) / denominator

    def residual(t: complex) -> float:
        t = t.real
        return abs(s + t - c * (x * y + t * s))

    return _checked([(T, "single")], residual, "x + y + T = c(xy + T(x+y))", tolerances)


def period_equality_residual(c: float, x: float, y: float,
                             tolerances: Optional[Tolerances] = None) -> float:
    """|T - Tbar| of the additive pair and its dual at (x, y)."""
    if c == 0:
        return 0.0
    T = period_additive_S(c, x, y, tolerances).value
    T_dual = period_additive_S_dual(c, x, y, tolerances).value
    return abs(T - T_dual)


def period_equality_polynomial(c: float, x: float, y: float) -> float:
    """c^2 xy(x+y) - 2cxy + x + y, zero exactly where both periods agree."""
    return c * c * x * y * (x + y) - 2.0 * c * x * y + x + y


def printed_period_equality_polynomial(c: float, x: float, y: float) -> float:
    """The published polynomial (x^2 y + y x^2) c (c-1) - c(x^2+y^2+4xy) + x + y."""
    return (x * x * y + y * x * x) * c * (c - 1.0) - c * (x * x + y * y + 4.0 * x * y) + x + y


def equal_period_locus(c: float, x: float) -> Tuple[float, ...]:
    """
    Real y at which the additive pair and its dual share the period.

    Solves c^2 x y^2 + (cx - 1)^2 y + x = 0 and drops roots on either
    singular line (x + y = 0 or c(x + y) = 1).
    """
    a = c * c * x
    b = (c * x - 1.0) ** 2
    if a == 0:
        roots = [] if b == 0 else [-x / b]
    else:
        disc = b * b - 4.0 * a * x
        if disc < 0:
            return ()
        lo, hi = quadratic_roots(a, b, x)
        roots = sorted({lo.real, hi.real})
    return tuple(y for y in roots if x + y != 0 and c * (x + y) != 1.0)


def period_additive_C(c: float, x: float, y: float,
                      tolerances: Optional[Tolerances] = None):
    """
    Periods of the additive (C)-pair g(u) = cu, f(u) = g(u + T).

    Both roots of T^2 + (x+y)T + (x+y)/c = 0, minus branch first; complex
    when (x+y)((x+y) - 4/c) < 0.
    """
    if c == 0:
        return ANY_PERIOD
    return _sum_quadratic(c, x + y, tolerances)


def additive_C_period_function(c: float, branch: int = 0) -> Period:
    """Real branch of period_additive_C as a Period (0 = minus, 1 = plus)."""
    def fn(x: float, y: float) -> float:
        s = x + y
        roots = quadratic_roots(1.0, s, s / c)
        value = roots[branch]
        if value.imag != 0.0:
            raise NoRealRoot(f"complex period at ({x:g}, {y:g})")
        return value.real
    return Period.of(fn, f"T_{'-+'[branch]}(x+y; c={c:g})")


def period_additive_C_sum_constrained(c: float, d: float,
                                      tolerances: Optional[Tolerances] = None):
    """T_c(d) = (-d +- sqrt(d^2 - 4d/c)) / 2 on the line x + y = d."""
    if c == 0:
        return ANY_PERIOD
    return _sum_quadratic(c, d, tolerances)


def _sum_quadratic(c: float, s: float, tolerances: Optional[Tolerances]) -> PeriodResult:
    lo, hi = quadratic_roots(1.0, s, s / c)

    def residual(t: complex) -> float:
        return abs(t * t + s * t + s / c)

    note = "" if lo.imag == 0.0 else "complex pair"
    return _checked([(lo, "minus"), (hi, "plus")], residual, "T^2 + (x+y)T + (x+y)/c = 0",
                    tolerances, note)


# Extremum probe

@dataclass(frozen=True)
class ExtremumBranch:
    label: str
    T: complex
    dT: complex
    dT_fd: complex
    printed_dT: complex


@dataclass(frozen=True)
class ExtremumProbe:
    c: complex
    branches: Tuple[ExtremumBranch, ExtremumBranch]
    fd_agreement: float

    @property
    def T(self) -> Tuple[complex, complex]:
        return tuple(b.T for b in self.branches)

    @property
    def dT(self) -> Tuple[complex, complex]:
        return tuple(b.dT for b in self.branches)


def _constrained_T(c: complex, sign: int) -> complex:
    return 0.5 * (-c + sign * csqrt(c * c - 4))


def extremum_probe(c: complex, tolerances: Optional[Tolerances] = None) -> ExtremumProbe:
    """
    T(c) = (-c +- sqrt(c^2 - 4)) / 2 and dT/dc on both branches.

    The derivative is (-1 +- c / sqrt(c^2 - 4)) / 2; the published form
    -1/2 +- c / sqrt(c^2 - 4) is carried along as ``printed_dT``. The
    finite difference runs along the ray of c^2 - 4, which never crosses
    the branch cut of the principal root.

    Raises:
        BranchPole: At c^2 = 4
    """
    tols = resolve(tolerances)
    c = complex(c)
    w = c * c - 4
    if abs(w) <= tols.zero_guard:
        raise BranchPole(f"c^2 = 4 at c={c}")
    root = csqrt(w)
    direction = w / c if c != 0 else 1j
    direction /= abs(direction)

    branches = []
    worst = 0.0
    for sign, label in ((-1, "minus"), (1, "plus")):
        T = _constrained_T(c, sign)
        dT = 0.5 * (-1 + sign * c / root)
        printed = -0.5 + sign * c / root
        along = derivative_fd(lambda s, sign=sign: _constrained_T(c + s * direction, sign), 0.0,
                              tolerances=tols)
        dT_fd = along / direction
        worst = max(worst, abs(dT_fd - dT))
        branches.append(ExtremumBranch(label, T, dT, dT_fd, printed))
    return ExtremumProbe(c, tuple(branches), worst)


# Exponential pairs

def _check_base(a: float) -> float:
    if not a > 0:
        raise DomainError(f"exponential base must be positive, got {a}")
    if a == 1:
        raise DegenerateBase("base a = 1 gives a constant function")
    return math.log(a)


def period_exponential_S(a: float, tolerances: Optional[Tolerances] = None) -> PeriodResult:
    """
    Constant period T = -log_a 2 of the exponential (S)-pair f = a^x, g = f(. + T).

    Raises:
        DegenerateBase: For a = 1
    """
    log_a = _check_base(a)
    T = -math.log(2.0) / log_a

    def residual(t: complex) -> float:
        return abs(2.0 * a ** t.real - 1.0)

    return _checked([(T, "single")], residual, "2 a^T = 1", tolerances)


def dual_exponential_S_certificate(a: float = 2.0) -> float:
    """
    Smallest value of a^T for T in [-50, 50].

    A dual pair would need a^T = 0. a^T is monotone in T, so the minimum
    over the interval sits at an endpoint; it is strictly positive for
    every admissible base.
    """
    log_a = _check_base(a)
    return min(math.exp(T * log_a) for T in (-50.0, 50.0))


def dual_exponential_S_exists(a: float = 2.0) -> bool:
    """Whether an exponential dual (S)-pair exists. It never does: a^T = 0 has no real solution."""
    certificate = dual_exponential_S_certificate(a)
    logger.info(f"dual exponential pair for a={a:g}: a^T = 0 unsolvable, min a^T on [-50, 50] = {certificate:g}")
    return False


def period_exponential_C(a: float, form: str = 'fg',
                         tolerances: Optional[Tolerances] = None) -> PeriodResult:
    """
    Periods of the exponential (C)-pair.

    form 'fg': f = a^x, g = f(. + T). With q = a^T, q^2 - q - 1 = 0, so
    T = log_a of the golden ratio, and the negative root gives the
    complex branch (log|q| + i pi) / log a.
    form 'gf': g = a^x, f = g(. + T) forces a^(2T) = 0; no finite period.
    """
    log_a = _check_base(a)
    if form == 'gf':
        return PeriodResult.no_finite_period("-a^(2T) = 0", "only T = -inf")
    if form != 'fg':
        raise DomainError(f"form must be 'fg' or 'gf', got {form!r}")
    q_minus = (1.0 - math.sqrt(5.0)) / 2.0
    real_branch = math.log(GOLDEN_RATIO) / log_a
    complex_branch = clog(q_minus) / log_a

    def residual(t: complex) -> float:
        if t.imag == 0.0:
            q = a ** t.real
        else:
            q = cmath.exp(t * log_a)
        return abs(q * q - q - 1.0)

    return _checked([(real_branch, "golden"), (complex_branch, "complex")], residual,
                    "a^(2T) - a^T - 1 = 0", tolerances)


# Multiplicative pairs

def p2_quadratic(x: float, y: float) -> Tuple[float, float, float]:
    """Coefficients of (x^2+y^2)T^2 + 2xy(x+y)T + 2x^2y^2 - (x+y)^2 = 0."""
    return x * x + y * y, 2.0 * x * y * (x + y), 2.0 * x * x * y * y - (x + y) ** 2


def p2_quarter_discriminant(x: float, y: float) -> float:
    a, b, c = p2_quadratic(x, y)
    return (b / 2.0) ** 2 - a * c


def printed_p2_radicand(x: float, y: float) -> float:
    """The published radicand 2(xy)^3 + (x+y)^2 (x^2+y^2)."""
    return 2.0 * (x * y) ** 3 + (x + y) ** 2 * (x * x + y * y)


def period_power_S(p: float, x: float, y: float,
                   tolerances: Optional[Tolerances] = None):
    """
    Period of the (S)-pair f(u) = u^p, g(u) = f(u + T) at (x, y).

    p = 1 is the additive case with c = 1; p = 2 solves the quadratic
    obtained by expanding (x+y)^2 = x^2 (y+T)^2 + y^2 (x+T)^2.

    Raises:
        Unsupported: For p other than 1 and 2
        NoRealRoot: When the quadratic has no real root
    """
    if not (x > 0 and y > 0):
        raise DomainError(f"power pairs live on (0, inf), got x={x:g}, y={y:g}")
    if p == 1:
        return period_additive_S(1.0, x, y, tolerances)
    if p != 2:
        raise Unsupported(f"no closed-form period for p={p:g}; only p = 1 and p = 2 are solved")
    a, b, c = p2_quadratic(x, y)
    if b * b - 4.0 * a * c < 0:
        raise NoRealRoot(f"p=2 period quadratic has no real root at ({x:g}, {y:g})")
    lo, hi = quadratic_roots(a, b, c)

    def residual(t: complex) -> float:
        t = t.real
        return abs(x * x * (y + t) ** 2 + y * y * (x + t) ** 2 - (x + y) ** 2)

    return _checked([(lo.real, "minus"), (hi.real, "plus")], residual,
                    "(x+y)^2 = x^2(y+T)^2 + y^2(x+T)^2", tolerances)


def scaleability_power(p: float, x: float, y: float,
                       tolerances: Optional[Tolerances] = None) -> float:
    """
    Scaleability t = (x + y) / (2^(1/p) xy) of f(u) = u^p, g(u) = f(tu).

    Raises:
        DomainError: For p = 0 or non-positive arguments
    """
    if p == 0:
        raise DomainError("scaleability needs p != 0")
    if not (x > 0 and y > 0):
        raise DomainError(f"scaleability lives on (0, inf), got x={x:g}, y={y:g}")
    t = (x + y) / (2.0 ** (1.0 / p) * x * y)
    lhs = (x + y) ** p
    r = scaleability_residual(p, x, y, t)
    if r > resolve(tolerances).residual_pass * max(1.0, abs(lhs)):
        raise ConsistencyError(f"scaleability {t} leaves residual {r:g}")
    return t


def scaleability_residual(p: float, x: float, y: float, t: float) -> float:
    """|(x+y)^p - 2 (t x y)^p|."""
    return abs((x + y) ** p - 2.0 * (t * x * y) ** p)


# Scaling <-> translation

@dataclass(frozen=True)
class BridgeReport:
    translation: VerificationReport
    scaling: VerificationReport

    @property
    def agree(self) -> bool:
        return self.translation.passed == self.scaling.passed


def scaling_translation_bridge_check(f: FunctionLike, T, eq: EquationKind = EquationKind.SINE_ADDITION,
                                     grid: Optional[GridSpec] = None, base_role: str = 'f',
                                     tol: Optional[float] = None,
                                     tolerances: Optional[Tolerances] = None) -> BridgeReport:
    """
    Check a period T for (f, f(. + T)) against the scaleability exp(T) for
    (f o log, f o log (t .)).

    The scaled side runs on a positive grid X, Y; the translation side on
    x = log X, y = log Y, so both reports carry worst points in (X, Y).
    The bridge holds when both verdicts agree.
    """
    tols = resolve(tolerances)
    grid = grid or GridSpec(0.5, 4.0, 10)
    if not grid.is_positive():
        raise DomainError(f"scaled side needs a positive grid, got {grid.describe()}")
    base = as_function(f)
    period = as_period(T)

    translation_pair = _on_log_grid(Pair.translated(base, period, base_role))
    translation = run_verification(translation_pair, eq, grid, tol, tols)

    def scale(X: float, Y: float) -> float:
        return math.exp(period(math.log(X), math.log(Y)))

    scaled_pair = Pair.scaled(lambda X: base(math.log(X)), scale, base_role)
    scaling = run_verification(scaled_pair, eq, grid, tol, tols)
    logger.info(f"bridge: translation {'pass' if translation.passed else 'fail'}, "
                f"scaling {'pass' if scaling.passed else 'fail'}")
    return BridgeReport(translation, scaling)


def _on_log_grid(pair: Pair) -> Pair:
    """Evaluate an additive pair at x = log X, y = log Y for grid pairs (X, Y)."""
    def mapped(fn):
        # u arrives as X, Y or X*Y and maps to x, y or x+y
        return lambda u, X, Y: fn(math.log(u), math.log(X), math.log(Y))

    return Pair(mapped(pair.f_at), mapped(pair.g_at), 'mul', pair.label)
