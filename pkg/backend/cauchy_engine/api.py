"""
Main API for the Cauchy engine.

Builds the tables and reports behind every CLI subcommand as lists of
plain dict rows, ready for writer.write_csv / writer.write_text.
"""

import logging
import math
from typing import Dict, Iterable, List, Optional, Sequence

from .config import GridSpec, Tolerances
from .errata import errata_table
from .errors import DomainError, NoFinitePeriod, NoRealRoot, ZeroDenominator
from .families import CauchyFamily, EquationKind, FunctionLike, as_function
from .gamma import (
    Generator,
    GeneratorKind,
    closed_form,
    cos_via_gamma,
    euler_identity_residual,
    gamma_phi,
    product_identity_residuals,
    pythagoras_gamma_residual,
    sin_via_gamma,
    tan_via_gamma,
)
from .pairing import (
    ANY_PERIOD,
    equal_period_locus,
    extremum_probe,
    period_additive_C,
    period_additive_C_sum_constrained,
    period_additive_S,
    period_additive_S_dual,
    period_equality_residual,
    period_exponential_C,
    period_exponential_S,
    period_power_S,
    scaleability_power,
    scaleability_residual,
    scaling_translation_bridge_check,
)
from .representers import (
    RepresenterKind,
    RepresenterType,
    closed_form_representer,
    cosine_representer,
    representer_period,
    sine_representer,
)
from .verify import Period, VerificationReport, classify_pair, verify_pair

logger = logging.getLogger(__name__)

Row = Dict[str, object]


def frange(start: float, stop: float, step: float) -> List[float]:
    """Inclusive range start, start+step, ..., stop (up to rounding of the last step)."""
    if not step > 0:
        raise DomainError(f"step must be positive, got {step}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(max(count, 0))]


# Gamma

def gamma_table(gen: Generator, xs: Iterable[float], tolerances: Optional[Tolerances] = None) -> List[Row]:
    """x, quadrature, closed_form, abs_diff for each x."""
    rows = []
    for x in xs:
        quadrature = gamma_phi(gen, x, tolerances=tolerances)
        if gen.kind is GeneratorKind.CUSTOM:
            rows.append({'x': x, 'quadrature': quadrature, 'closed_form': None, 'abs_diff': None})
            continue
        exact = closed_form(gen, x)
        rows.append({'x': x, 'quadrature': quadrature, 'closed_form': exact,
                     'abs_diff': abs(quadrature - exact)})
    logger.info(f"gamma table for {gen.describe()}: {len(rows)} rows")
    return rows


def trig_table(points: Iterable[float], tolerances: Optional[Tolerances] = None) -> List[Row]:
    """Gamma-form sin/cos/tan next to the library values."""
    rows = []
    for z in points:
        try:
            tan_gamma = tan_via_gamma(z, tolerances)
        except ZeroDivisionError:
            tan_gamma = None
        sin_gamma, cos_gamma = sin_via_gamma(z), cos_via_gamma(z)
        diffs = [abs(sin_gamma - math.sin(z)), abs(cos_gamma - math.cos(z))]
        if tan_gamma is not None:
            diffs.append(abs(tan_gamma - math.tan(z)))
        rows.append({'z': z, 'sin_gamma': sin_gamma, 'sin': math.sin(z),
                     'cos_gamma': cos_gamma, 'cos': math.cos(z),
                     'tan_gamma': tan_gamma, 'tan': math.tan(z), 'max_abs_diff': max(diffs)})
    return rows


IDENTITY_CHECKS = ('euler', 'pythagoras', 'product')


def identity_table(check: str, points: Iterable[float]) -> List[Row]:
    """Residual of the Euler, Pythagorean or product identity at each point."""
    rows = []
    for z in points:
        if check == 'euler':
            rows.append({'z': z, 'residual': euler_identity_residual(z)})
        elif check == 'pythagoras':
            rows.append({'z': z, 'residual': pythagoras_gamma_residual(z)})
        elif check == 'product':
            real_part, imaginary_part = product_identity_residuals(z)
            rows.append({'z': z, 'residual_real': real_part, 'residual_imag': imaginary_part,
                         'residual': max(real_part, imaginary_part)})
        else:
            raise DomainError(f"unknown identity check {check!r}; expected one of {IDENTITY_CHECKS}")
    return rows


# Periods

PERIOD_KINDS = ('additive-S', 'additive-S-dual', 'additive-C', 'sum', 'equality', 'locus',
                'extremum', 'exponential-S', 'exponential-C', 'power-S', 'scaleability')


def _period_rows(result, inputs: Row) -> List[Row]:
    if result is ANY_PERIOD:
        return [{**inputs, 'branch': 'any', 'T': None, 'finite': True, 'residual': 0.0}]
    rows = []
    for branch in result.branches:
        value = branch.value if branch.finite else -math.inf
        if branch.finite and branch.value.imag == 0.0:
            value = branch.value.real
        rows.append({**inputs, 'branch': branch.label, 'T': value, 'finite': branch.finite,
                     'residual': branch.residual})
    return rows


def _require(params: Dict[str, float], *names: str) -> List[float]:
    missing = [n for n in names if n not in params]
    if missing:
        raise DomainError(f"missing parameter(s): {', '.join(missing)}")
    return [params[n] for n in names]


def period_table(kind: str, params: Dict[str, float], form: str = 'fg',
                 tolerances: Optional[Tolerances] = None) -> List[Row]:
    """Rows for one period query; parameters come from --param bindings."""
    if kind == 'additive-S':
        c, x, y = _require(params, 'c', 'x', 'y')
        return _period_rows(period_additive_S(c, x, y, tolerances), {'c': c, 'x': x, 'y': y})
    if kind == 'additive-S-dual':
        c, x, y = _require(params, 'c', 'x', 'y')
        return _period_rows(period_additive_S_dual(c, x, y, tolerances), {'c': c, 'x': x, 'y': y})
    if kind == 'additive-C':
        c, x, y = _require(params, 'c', 'x', 'y')
        return _period_rows(period_additive_C(c, x, y, tolerances), {'c': c, 'x': x, 'y': y})
    if kind == 'sum':
        c, d = _require(params, 'c', 'd')
        return _period_rows(period_additive_C_sum_constrained(c, d, tolerances), {'c': c, 'd': d})
    if kind == 'equality':
        c, x, y = _require(params, 'c', 'x', 'y')
        return [{'c': c, 'x': x, 'y': y, 'abs_diff': period_equality_residual(c, x, y, tolerances)}]
    if kind == 'locus':
        c, x = _require(params, 'c', 'x')
        return [{'c': c, 'x': x, 'y': y} for y in equal_period_locus(c, x)]
    if kind == 'extremum':
        c = complex(params.get('c', 0.0), params.get('c_im', 0.0))
        probe = extremum_probe(c, tolerances)
        return [{'c': c, 'branch': b.label, 'T': b.T, 'dT': b.dT, 'dT_fd': b.dT_fd,
                 'printed_dT': b.printed_dT} for b in probe.branches]
    if kind == 'exponential-S':
        (a,) = _require(params, 'a')
        return _period_rows(period_exponential_S(a, tolerances), {'a': a})
    if kind == 'exponential-C':
        (a,) = _require(params, 'a')
        return _period_rows(period_exponential_C(a, form, tolerances), {'a': a, 'form': form})
    if kind == 'power-S':
        p, x, y = _require(params, 'p', 'x', 'y')
        return _period_rows(period_power_S(p, x, y, tolerances), {'p': p, 'x': x, 'y': y})
    if kind == 'scaleability':
        p, x, y = _require(params, 'p', 'x', 'y')
        t = scaleability_power(p, x, y, tolerances)
        return [{'p': p, 'x': x, 'y': y, 't': t, 'residual': scaleability_residual(p, x, y, t)}]
    raise DomainError(f"unknown period kind {kind!r}; expected one of {PERIOD_KINDS}")


# Verification

def verification_summary(report: VerificationReport) -> Row:
    """
    Flat summary of a verification report.

    Returns:
        Dictionary with the grid, point counts, the maximal residual and
        where it occurs
    """
    worst = report.worst_point
    return {
        'equation': report.equation.name,
        'grid': report.grid.describe(),
        'points': report.points,
        'excluded': report.excluded,
        'max_residual': report.max_residual,
        'worst_x': worst[0] if worst else None,
        'worst_y': worst[1] if worst else None,
        'tol': report.tol,
        'pass': report.passed,
        'classification': report.classification.describe(),
        'notes': '; '.join(report.notes),
    }


def verify_and_classify(f: FunctionLike, g: Optional[FunctionLike], period: Optional[Period],
                        eq: EquationKind, grid: Optional[GridSpec] = None,
                        tol: Optional[float] = None, base_role: str = 'f',
                        classify: bool = True,
                        tolerances: Optional[Tolerances] = None) -> VerificationReport:
    """verify_pair followed by classify_pair on the same grid."""
    partner = period if period is not None else g
    if partner is None:
        raise DomainError("need either a partner function or a period")
    report = verify_pair(f, partner, eq, grid, tol, base_role, tolerances)
    if not classify:
        return report
    base = as_function(f)
    if period is not None:
        if period.is_constant:
            shift = period.constant
            g = lambda x: base(x + shift)
        else:
            g = None
        if base_role == 'g' and g is not None:
            base, g = g, base
    return report.with_classification(classify_pair(base, g, report, tolerances))


def bridge_summary(f: FunctionLike, period, eq: EquationKind, grid: Optional[GridSpec] = None,
                   base_role: str = 'f', tol: Optional[float] = None,
                   tolerances: Optional[Tolerances] = None) -> Row:
    bridge = scaling_translation_bridge_check(f, period, eq, grid, base_role, tol, tolerances)
    return {
        'equation': eq.name,
        'grid': bridge.scaling.grid.describe(),
        'translation_max_residual': bridge.translation.max_residual,
        'translation_pass': bridge.translation.passed,
        'scaling_max_residual': bridge.scaling.max_residual,
        'scaling_pass': bridge.scaling.passed,
        'agree': bridge.agree,
    }


# Representers

def representer_table(fam: CauchyFamily, kind: RepresenterKind, xs: Iterable[float],
                      tolerances: Optional[Tolerances] = None) -> List[Row]:
    """Closed form vs generic representer and the representer period at each x."""
    try:
        period = representer_period(fam, kind)
    except NoFinitePeriod:
        period = None
    rows = []
    for x in xs:
        closed = closed_form_representer(fam, kind, x)
        try:
            if kind.type is RepresenterType.SINE:
                generic = sine_representer(fam, x, tolerances)
            else:
                generic = cosine_representer(fam, x, kind.sign)
        except ZeroDenominator:
            logger.debug(f"generic representer undefined at x={x:g}")
            generic = None
        diff = None if generic is None else abs(closed - generic)
        row = {'x': x, 'closed_form': closed, 'generic': generic, 'abs_diff': diff}
        if period is None:
            row.update({'T': -math.inf, 'finite': False, 'period_residual': None})
        else:
            try:
                row.update({'T': period(x), 'finite': True, 'period_residual': period.residual(x)})
            except NoRealRoot:
                row.update({'T': None, 'finite': False, 'period_residual': None})
        rows.append(row)
    return rows


def errata_rows(tolerances: Optional[Tolerances] = None) -> List[Row]:
    return [{'key': r.key, 'point': r.point, 'printed': r.printed, 'derived': r.derived,
             'abs_diff': r.abs_diff, 'confirmed': r.confirmed, 'claim': r.claim}
            for r in errata_table(tolerances)]


def table_summary(rows: Sequence[Row], column: str) -> Row:
    """
    Count, maximum and arg-max row of one numeric column.

    Rows where the column is missing or None are ignored.
    """
    values = [(row[column], i) for i, row in enumerate(rows)
              if row.get(column) is not None and not isinstance(row[column], complex)]
    if not values:
        return {'rows': len(rows), 'max': None, 'worst_row': None}
    worst, index = max(values, key=lambda item: (item[0], -item[1]))
    return {'rows': len(rows), 'max': worst, 'worst_row': index}


def all_within(rows: Sequence[Row], column: str, tol: float) -> bool:
    """Every non-empty value of the column is at most tol."""
    return all(row[column] <= tol for row in rows if row.get(column) is not None)
