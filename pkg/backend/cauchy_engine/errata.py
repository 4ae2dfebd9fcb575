"""
Published formulas that disagree with their re-derivation.

Each row evaluates the published expression and the derived one at a
concrete counterexample and records both values.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Union

from .config import Tolerances, resolve
from .families import CauchyFamily, EquationKind
from .pairing import (
    equal_period_locus,
    extremum_probe,
    p2_quarter_discriminant,
    period_equality_residual,
    printed_p2_radicand,
    printed_period_equality_polynomial,
)
from .representers import (
    RepresenterKind,
    closed_form_representer,
    printed_power_cosine_representer,
    representer_period,
)
from .verify import generalized_periodicity_check

logger = logging.getLogger(__name__)

Value = Union[float, complex]


@dataclass(frozen=True)
class ErratumRow:
    key: str
    claim: str
    point: str
    printed: Value
    derived: Value
    abs_diff: float
    confirmed: bool


def _row(key: str, claim: str, point: str, printed: Value, derived: Value,
         tols: Tolerances) -> ErratumRow:
    diff = abs(printed - derived)
    confirmed = diff > tols.residual_pass
    if confirmed:
        logger.warning(f"erratum {key}: printed {printed} vs derived {derived} at {point}")
    return ErratumRow(key, claim, point, printed, derived, diff, confirmed)


def _p2_radicand(tols: Tolerances) -> ErratumRow:
    return _row("p2-radicand",
                "radicand of the p=2 period is 2(xy)^3 + (x+y)^2(x^2+y^2)",
                "x=1 y=1", printed_p2_radicand(1.0, 1.0), p2_quarter_discriminant(1.0, 1.0), tols)


def _period_equality(tols: Tolerances) -> ErratumRow:
    c, x = 1.0, 4.0
    y = equal_period_locus(c, x)[-1]
    return _row("period-equality-polynomial",
                "(x^2y+yx^2)c(c-1) - c(x^2+y^2+4xy) + x + y = 0 where both periods agree",
                f"c=1 x=4 y={y!r}", printed_period_equality_polynomial(c, x, y),
                period_equality_residual(c, x, y, tols), tols)


def _extremum_derivative(tols: Tolerances) -> ErratumRow:
    plus = extremum_probe(3.0, tols).branches[1]
    return _row("extremum-derivative", "T'(c) = -1/2 +- c/sqrt(c^2-4)", "c=3 plus branch",
                plus.printed_dT, plus.dT, tols)


def _extremum_critical_point(tols: Tolerances) -> ErratumRow:
    c = 2j / math.sqrt(3.0)
    probe = extremum_probe(c, tols)
    printed = min((b.printed_dT for b in probe.branches), key=abs)
    derived = min((b.dT for b in probe.branches), key=abs)
    return _row("extremum-critical-point", "T' vanishes at c^2 = -4/3, giving T_E = +-(sqrt(3)/3)i",
                "c=2i/sqrt(3)", printed, derived, tols)


def _additive_cosine_period(tols: Tolerances) -> ErratumRow:
    period = representer_period(CauchyFamily.additive(2.0), RepresenterKind.cosine(1))
    return _row("additive-cosine-period", "T = (-x +- |x| sqrt(1 - 1/c))/2", "c=2 x=1 plus branch",
                period.printed(1.0), period(1.0), tols)


def _power_cosine_representer(tols: Tolerances) -> ErratumRow:
    fam = CauchyFamily.multiplicative(1.0)
    return _row("power-cosine-representer", "f_C(x) = 0 for x^p", "p=1 x=3",
                printed_power_cosine_representer(3.0),
                closed_form_representer(fam, RepresenterKind.cosine(1), 3.0), tols)


def _power_cosine_period(tols: Tolerances) -> ErratumRow:
    period = representer_period(CauchyFamily.multiplicative(1.0), RepresenterKind.cosine(1))
    return _row("power-cosine-period", "T = -x/2 for the cosine representer of x^p", "p=1 x=3",
                period.printed(3.0), period(3.0), tols)


def _cosine_generalized_constant(tols: Tolerances) -> ErratumRow:
    T = -0.5 * math.log(2.0)
    check = generalized_periodicity_check(lambda x: 2.0 * math.exp(x), T,
                                          EquationKind.COSINE_ADDITION, tolerances=tols)
    return _row("cosine-generalized-constant", "c = (1 - g(0))/g(T) for (C)",
                "g=2e^x T=-log(2)/2", check.printed_c, check.c, tols)


_ROWS: List[Callable[[Tolerances], ErratumRow]] = [
    _p2_radicand,
    _period_equality,
    _extremum_derivative,
    _extremum_critical_point,
    _additive_cosine_period,
    _power_cosine_representer,
    _power_cosine_period,
    _cosine_generalized_constant,
]


def errata_table(tolerances: Optional[Tolerances] = None) -> List[ErratumRow]:
    """All recorded discrepancies, in a fixed order."""
    tols = resolve(tolerances)
    return [build(tols) for build in _ROWS]
