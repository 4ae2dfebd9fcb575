"""
Grid verification of sine (S) and cosine (C) addition laws.

A Pair bundles the two functions of an addition law. Either member may be
a translate (g(u) = f(u + T)) or a scale (g(u) = f(t*u)) of the other,
where T or t may depend on the grid pair (x, y); the shifted member is
then materialized per pair, which is the reading under which the period
formulas are identities.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from .config import GridSpec, Tolerances, resolve, sum_exclusion
from .errors import DomainError, EvalError, SingularLocus, ZeroDenominator
from .families import (
    CAUCHY_EQUATIONS,
    EquationKind,
    FunctionLike,
    RealFunction,
    as_function,
    satisfies_cauchy,
)

logger = logging.getLogger(__name__)

PairFunction = Callable[[float, float, float], float]
PeriodFunction = Callable[[float, float], float]


@dataclass(frozen=True)
class Period:
    """A shift T, either constant or a function of the grid pair (x, y)."""
    fn: PeriodFunction
    constant: Optional[float] = None
    label: str = ""

    @classmethod
    def const(cls, value: float) -> "Period":
        value = float(value)
        return cls(lambda x, y: value, value, f"{value:g}")

    @classmethod
    def of(cls, fn: PeriodFunction, label: str = "T(x,y)") -> "Period":
        return cls(fn, None, label)

    @property
    def is_constant(self) -> bool:
        return self.constant is not None

    def __call__(self, x: float, y: float) -> float:
        return self.fn(x, y)


PeriodLike = Union[float, int, Period]


def as_period(value: PeriodLike) -> Period:
    if isinstance(value, Period):
        return value
    return Period.const(value)


@dataclass(frozen=True)
class Pair:
    """
    The functions (f, g) of an addition law, evaluated at u for grid pair (x, y).

    ``combine`` is 'add' for the usual laws and 'mul' for the scaled
    (multiplicative argument) laws.
    """
    f_at: PairFunction
    g_at: PairFunction
    combine: str = 'add'
    label: str = ""

    @classmethod
    def plain(cls, f: RealFunction, g: RealFunction, combine: str = 'add') -> "Pair":
        return cls(lambda u, x, y: f(u), lambda u, x, y: g(u), combine, "plain")

    @classmethod
    def translated(cls, base: RealFunction, period: PeriodLike, base_role: str = 'f') -> "Pair":
        """base_role 'f': g(u) = f(u + T); base_role 'g': f(u) = g(u + T)."""
        period = as_period(period)

        def fixed(u, x, y):
            return base(u)

        def shifted(u, x, y):
            return base(u + period(x, y))

        if base_role == 'f':
            return cls(fixed, shifted, 'add', f"translated by {period.label}")
        if base_role == 'g':
            return cls(shifted, fixed, 'add', f"translated by {period.label}")
        raise DomainError(f"base role must be 'f' or 'g', got {base_role!r}")

    @classmethod
    def scaled(cls, base: RealFunction, scale: PeriodFunction, base_role: str = 'f') -> "Pair":
        """base_role 'f': g(u) = f(t*u) with t = t(x, y); multiplicative arguments."""

        def fixed(u, x, y):
            return base(u)

        def stretched(u, x, y):
            return base(scale(x, y) * u)

        if base_role == 'f':
            return cls(fixed, stretched, 'mul', "scaled")
        if base_role == 'g':
            return cls(stretched, fixed, 'mul', "scaled")
        raise DomainError(f"base role must be 'f' or 'g', got {base_role!r}")

    def joined(self, x: float, y: float) -> float:
        return x * y if self.combine == 'mul' else x + y


def residual_at(pair: Pair, eq: EquationKind, x: float, y: float) -> float:
    """
    Absolute residual of (S) or (C) at one grid pair.

    (S): f(x.y) - f(x) g(y) - f(y) g(x)
    (C): g(x.y) - g(x) g(y) + f(x) f(y)
    """
    joined = pair.joined(x, y)
    f, g = pair.f_at, pair.g_at
    if eq is EquationKind.SINE_ADDITION:
        value = f(joined, x, y) - f(x, x, y) * g(y, x, y) - f(y, x, y) * g(x, x, y)
    elif eq is EquationKind.COSINE_ADDITION:
        value = g(joined, x, y) - g(x, x, y) * g(y, x, y) + f(x, x, y) * f(y, x, y)
    else:
        raise DomainError(f"{eq.name} is not an addition law")
    return abs(value)


def _is_singular(exc: Exception) -> bool:
    if isinstance(exc, (SingularLocus, ZeroDivisionError)):
        return True
    return isinstance(exc, EvalError) and exc.kind == "DivisionByZero"


class ClassLabel(Enum):
    NOT_CAUCHY_PAIR = "NotCauchyPair"
    CAUCHY_PAIR = "CauchyPair"
    TRUE_CAUCHY_PAIR = "TrueCauchyPair"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class Classification:
    label: ClassLabel
    equation: Optional[EquationKind] = None
    notes: Tuple[str, ...] = ()

    def describe(self) -> str:
        if self.equation is None:
            return self.label.value
        return f"{self.label.value}({self.equation.name})"


UNCLASSIFIED = Classification(ClassLabel.UNCLASSIFIED)


@dataclass(frozen=True)
class VerificationReport:
    equation: EquationKind
    grid: GridSpec
    max_residual: float
    worst_point: Optional[Tuple[float, float]]
    passed: bool
    tol: float
    points: int
    excluded: int
    skipped: int = 0
    classification: Classification = UNCLASSIFIED
    notes: Tuple[str, ...] = field(default=())

    def with_classification(self, classification: Classification) -> "VerificationReport":
        return VerificationReport(
            self.equation, self.grid, self.max_residual, self.worst_point, self.passed,
            self.tol, self.points, self.excluded, self.skipped, classification,
            self.notes + classification.notes,
        )


def run_verification(pair: Pair, eq: EquationKind, grid: GridSpec, tol: Optional[float] = None,
                     tolerances: Optional[Tolerances] = None) -> VerificationReport:
    """
    Maximal residual of an addition law over the grid pairs.

    Pairs are visited in lexicographic order and the first maximum wins,
    so the worst point is deterministic. Points where a period function is
    singular are skipped and counted.
    """
    tols = resolve(tolerances)
    tol = tols.residual_pass if tol is None else tol
    worst, worst_point = 0.0, None
    points = skipped = 0
    for x, y in grid.pairs():
        try:
            r = residual_at(pair, eq, x, y)
        except (DomainError, ZeroDivisionError) as exc:
            if not _is_singular(exc):
                raise
            skipped += 1
            logger.debug(f"skipping singular point ({x:g}, {y:g}): {exc}")
            continue
        except OverflowError:
            r = math.inf
        if math.isnan(r):
            r = math.inf
        points += 1
        if worst_point is None or r > worst:
            worst, worst_point = r, (x, y)
    if skipped:
        logger.warning(f"{skipped} singular grid points skipped on {grid.describe()}")
    if points == 0:
        raise DomainError(f"no evaluable points on grid {grid.describe()}")
    report = VerificationReport(
        equation=eq, grid=grid, max_residual=worst, worst_point=worst_point,
        passed=worst <= tol, tol=tol, points=points,
        excluded=grid.excluded_count() + skipped, skipped=skipped,
    )
    logger.info(f"verify {eq.name} on {grid.describe()}: max residual {worst:.3g}, "
                f"{'pass' if report.passed else 'fail'}")
    return report


def build_pair(f: FunctionLike, g_or_T, base_role: str = 'f') -> Pair:
    """A plain pair for a function g, a translated pair for a period."""
    base = as_function(f)
    if isinstance(g_or_T, (int, float, Period)):
        return Pair.translated(base, g_or_T, base_role)
    partner = as_function(g_or_T)
    if base_role == 'g':
        return Pair.plain(partner, base)
    return Pair.plain(base, partner)


def verify_pair(f: FunctionLike, g_or_T, eq: EquationKind = EquationKind.SINE_ADDITION,
                grid: Optional[GridSpec] = None, tol: Optional[float] = None,
                base_role: str = 'f', tolerances: Optional[Tolerances] = None) -> VerificationReport:
    """
    Verify (S) or (C) for f and a partner function or period.

    Args:
        f: The given function (the Cauchy side when a period is supplied)
        g_or_T: Partner function, or a constant / (x, y)-dependent Period
        eq: SINE_ADDITION or COSINE_ADDITION
        grid: Sample grid; defaults to [-3,3] x 25, with the band |x+y| < margin
            excluded when the period depends on (x, y)
        tol: Pass threshold (defaults to residual_pass)
        base_role: 'f' if the translated member is g, 'g' if it is f

    Returns:
        VerificationReport without classification
    """
    tols = resolve(tolerances)
    if eq.is_cauchy:
        raise DomainError(f"{eq.name} is a one-function equation; use satisfies_cauchy")
    if grid is None:
        grid = GridSpec.default()
        if isinstance(g_or_T, Period) and not g_or_T.is_constant:
            grid = grid.with_exclusion(sum_exclusion(tols.singular_margin), "|x+y| >= margin")
    pair = build_pair(f, g_or_T, base_role)
    return run_verification(pair, eq, grid, tol, tols)


def _passes(fn: RealFunction, eq: EquationKind, grid: GridSpec, tols: Tolerances) -> bool:
    try:
        return satisfies_cauchy(fn, eq, grid, tols.cauchy_tol, tols, relative=True).passed
    except (DomainError, ZeroDivisionError, OverflowError, ValueError):
        return False


def _equation_grid(eq: EquationKind, grid: GridSpec) -> GridSpec:
    if eq.needs_positive_domain and not grid.is_positive():
        return GridSpec.positive()
    return grid


def classify_pair(f: FunctionLike, g: Optional[FunctionLike], report: VerificationReport,
                  tolerances: Optional[Tolerances] = None) -> Classification:
    """
    Strongest label for a verified pair.

    f is tested against the four Cauchy equations in the order A, E, L, M
    (the last two on positive points only). The first equation that g
    satisfies as well gives a true Cauchy pair; otherwise the first
    equation f satisfies gives a Cauchy pair. Pass g=None when the
    partner is defined through a non-constant period; such pairs are
    never true.
    """
    tols = resolve(tolerances)
    if not report.passed:
        return Classification(ClassLabel.UNCLASSIFIED, notes=("pair does not verify on the grid",))
    base = as_function(f)
    partner = None if g is None else as_function(g)
    notes: List[str] = []
    if partner is not None and report.equation is EquationKind.SINE_ADDITION:
        if _same_function(base, partner, report.grid.points(), tols.cauchy_tol):
            consequence = trivial_pairability_consequence(base, EquationKind.SINE_ADDITION,
                                                          report.grid, tolerances=tols)
            notes.append(consequence.note)

    first = None
    for eq in CAUCHY_EQUATIONS:
        eq_grid = _equation_grid(eq, report.grid)
        if not _passes(base, eq, eq_grid, tols):
            continue
        if partner is not None and _passes(partner, eq, eq_grid, tols):
            logger.info(f"classified as {ClassLabel.TRUE_CAUCHY_PAIR.value}({eq.name})")
            return Classification(ClassLabel.TRUE_CAUCHY_PAIR, eq, tuple(notes))
        first = first or eq
    if first is None:
        return Classification(ClassLabel.NOT_CAUCHY_PAIR, None, tuple(notes))
    if partner is None:
        notes.append("partner depends on (x, y) through the period; not a true Cauchy pair")
    logger.info(f"classified as {ClassLabel.CAUCHY_PAIR.value}({first.name})")
    return Classification(ClassLabel.CAUCHY_PAIR, first, tuple(notes))


def _same_function(f: RealFunction, g: RealFunction, points, tol: float) -> bool:
    try:
        return all(abs(f(float(x)) - g(float(x))) <= tol for x in points)
    except (DomainError, ZeroDivisionError, OverflowError):
        return False


@dataclass(frozen=True)
class GeneralizedPeriodicity:
    c: float
    max_residual: float
    worst_x: Optional[float]
    usual_periodic: bool
    printed_c: Optional[float] = None


def generalized_periodicity_check(f: FunctionLike, T: float,
                                  kind: EquationKind = EquationKind.SINE_ADDITION,
                                  grid: Optional[GridSpec] = None, tol: Optional[float] = None,
                                  tolerances: Optional[Tolerances] = None) -> GeneralizedPeriodicity:
    """
    Constant c with f(x + T) = c f(x), and how well it holds on a grid.

    For (S), c = (1 - f(T)) / f(0). For (C) the function is the cosine
    side g and c = (g(0) - 1) / g(T); the sign-flipped printed variant
    (1 - g(0)) / g(T) is returned as ``printed_c`` for comparison.

    Raises:
        ZeroDenominator: If f(0) (resp. g(T)) vanishes
    """
    tols = resolve(tolerances)
    tol = tols.residual_pass if tol is None else tol
    fn = as_function(f)
    grid = grid or GridSpec(-5.0, 5.0, 51)
    printed = None
    if kind is EquationKind.SINE_ADDITION:
        denominator = fn(0.0)
        if abs(denominator) < tols.zero_guard:
            raise ZeroDenominator("f(0) = 0; generalized periodicity constant undefined")
        c = (1.0 - fn(T)) / denominator
    elif kind is EquationKind.COSINE_ADDITION:
        denominator = fn(T)
        if abs(denominator) < tols.zero_guard:
            raise ZeroDenominator(f"g(T) = 0 at T={T:g}; generalized periodicity constant undefined")
        c = (fn(0.0) - 1.0) / denominator
        printed = (1.0 - fn(0.0)) / denominator
    else:
        raise DomainError(f"{kind.name} is not an addition law")

    worst, worst_x = 0.0, None
    for x in grid.points():
        x = float(x)
        r = abs(fn(x + T) - c * fn(x))
        if worst_x is None or r > worst:
            worst, worst_x = r, x
    return GeneralizedPeriodicity(c, worst, worst_x, abs(c - 1.0) <= tol, printed)


@dataclass(frozen=True)
class TrivialPairReport:
    equation: EquationKind
    passed: bool
    max_residual: float
    note: str


def trivial_pairability_consequence(f: FunctionLike, eq: EquationKind = EquationKind.SINE_ADDITION,
                                    grid: Optional[GridSpec] = None,
                                    tolerances: Optional[Tolerances] = None) -> TrivialPairReport:
    """
    Consequence of pairing a function with itself (T = 0).

    (S): f(x+y) = 2 f(x) f(y), so 2f must be exponential.
    (C): g(x+y) = 0 for all x, y, so g must vanish on the summed grid.
    """
    tols = resolve(tolerances)
    fn = as_function(f)
    grid = grid or GridSpec.default()
    if eq is EquationKind.SINE_ADDITION:
        check = satisfies_cauchy(lambda x: 2.0 * fn(x), EquationKind.EXPONENTIAL_EQ, grid,
                                 tols.cauchy_tol, tols, relative=True)
        note = "2f is exponential" if check.passed else "2f is not exponential"
        return TrivialPairReport(eq, check.passed, check.max_residual, note)
    if eq is EquationKind.COSINE_ADDITION:
        worst = max(abs(fn(x + y)) for x, y in grid.pairs())
        passed = worst <= tols.cauchy_tol
        note = "g vanishes identically" if passed else "g does not vanish"
        return TrivialPairReport(eq, passed, worst, note)
    raise DomainError(f"{eq.name} is not an addition law")


@dataclass(frozen=True)
class SymmetryResult:
    symmetric: bool
    swapped_residual: Optional[float]
    period: Optional[float]
    note: str = ""


def symmetry_probe(f: FunctionLike, g: FunctionLike, T: PeriodLike, grid: Optional[GridSpec] = None,
                   scan: Optional[np.ndarray] = None,
                   tolerances: Optional[Tolerances] = None) -> SymmetryResult:
    """
    Whether (g, f) is again an (S)-pair with some constant period.

    The swapped pair must verify (S), and f must be a translate g(. + Tbar)
    for some Tbar in {-T} followed by the scan grid (default [-5, 5] x 201).
    Only constant periods are considered.
    """
    tols = resolve(tolerances)
    if isinstance(T, Period) and not T.is_constant:
        return SymmetryResult(False, None, None, "NonConstantPeriod")
    T = as_period(T).constant
    grid = grid or GridSpec.default()
    fn, gn = as_function(f), as_function(g)

    swapped = run_verification(Pair.plain(gn, fn), EquationKind.SINE_ADDITION, grid, None, tols)
    if not swapped.passed:
        return SymmetryResult(False, swapped.max_residual, None, "(g, f) does not satisfy (S)")

    candidates = [-T] + [float(v) for v in (np.linspace(-5.0, 5.0, 201) if scan is None else scan)]
    points = [float(x) for x in grid.points()]
    for candidate in candidates:
        worst = max(abs(gn(x + candidate) - fn(x)) for x in points)
        if worst <= tols.residual_pass:
            logger.info(f"pairability is symmetric here with period {candidate:g}")
            return SymmetryResult(True, swapped.max_residual, candidate)
    return SymmetryResult(False, swapped.max_residual, None, "no constant period maps g onto f")


@dataclass(frozen=True)
class HalvingReport:
    max_residual: float
    worst_x: Optional[float]
    passed: bool


def halving_identity_residual(f: FunctionLike, T: PeriodLike, grid: Optional[GridSpec] = None,
                              tol: Optional[float] = None,
                              tolerances: Optional[Tolerances] = None) -> HalvingReport:
    """Residual of f(x) = 2 f(x/2) f(x/2 + T) on a one-dimensional grid."""
    tols = resolve(tolerances)
    tol = tols.residual_pass if tol is None else tol
    fn = as_function(f)
    period = as_period(T)
    grid = grid or GridSpec.default()
    worst, worst_x = 0.0, None
    for x in grid.points():
        half = float(x) / 2.0
        try:
            r = abs(fn(float(x)) - 2.0 * fn(half) * fn(half + period(half, half)))
        except (DomainError, ZeroDivisionError) as exc:
            if not _is_singular(exc):
                raise
            continue
        if worst_x is None or r > worst:
            worst, worst_x = r, float(x)
    return HalvingReport(worst, worst_x, worst <= tol)
