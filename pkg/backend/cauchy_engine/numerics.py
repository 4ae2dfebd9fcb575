"""
Numeric kernels: complex helpers, quadrature on (0,1), root finding,
finite differences and quadratic roots.

Everything here is a pure function of its arguments.
"""

import cmath
import logging
import math
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy.optimize import brentq
from scipy.special import expit

from .config import Tolerances, resolve
from .errors import DomainError, NoBracket, NonConvergence, NonFinite, NoRealRoot

logger = logging.getLogger(__name__)

# The builtin complex type is the Complex of this package.
Complex = complex
Number = Union[float, complex]

# Half-width of the truncated tanh-sinh abscissa range; exp(-pi*sinh(6))
# is ~1e-275, still a normal double.
_TS_HALF_WIDTH = 6.0
_TS_MIN_LEVEL = 4


def exp_i(theta: float) -> complex:
    """e^{i*theta}."""
    return cmath.exp(1j * theta)


def csqrt(z: Number) -> complex:
    """
    Principal square root.

    Non-negative real part; on the negative real axis the imaginary part
    is positive regardless of the sign of a zero imaginary part.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.sqrt(z)


def clog(z: Number) -> complex:
    """Principal logarithm, imaginary part in (-pi, pi]."""
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.log(z)


def is_finite(value: Number) -> bool:
    if isinstance(value, complex):
        return cmath.isfinite(value)
    return math.isfinite(value)


def as_real(value: Number, tol: float = 0.0) -> Optional[float]:
    """Return the real part if the imaginary part is within tol, else None."""
    if isinstance(value, complex):
        return value.real if abs(value.imag) <= tol else None
    return float(value)


def _tanh_sinh_level(level: int) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Nodes and weights on (0,1) that are new at ``level``.

    Level 0 uses every integer abscissa, later levels only the odd
    multiples of h = 2**-level. Nodes that round to 0 or 1 are dropped.
    """
    h = 2.0 ** -level
    count = int(_TS_HALF_WIDTH / h)
    if level == 0:
        j = np.arange(-count, count + 1)
    else:
        j = np.arange(-count + 1, count, 2)
    s = j * h
    z = math.pi * np.sinh(s)
    t = expit(z)
    one_minus_t = expit(-z)
    w = math.pi * np.cosh(s) * t * one_minus_t
    keep = (t > 0.0) & (t < 1.0) & (w > 0.0)
    return t[keep], w[keep], h


def integrate_01(
    f: Callable[[float], float],
    tol: Optional[float] = None,
    tolerances: Optional[Tolerances] = None,
) -> float:
    """
    Integrate f over the open interval (0,1).

    Uses the tanh-sinh (double exponential) rule with level doubling, so the
    endpoints are never sampled and algebraic or logarithmic endpoint
    singularities are absorbed by the transform.

    Args:
        f: Integrand, finite on (0,1)
        tol: Absolute error target (defaults to tolerances.quad_abs)
        tolerances: Tolerance policy

    Returns:
        The integral estimate

    Raises:
        NonConvergence: If the node cap is reached before the estimate settles
        NonFinite: If f returns NaN or an infinity at a node
    """
    tols = resolve(tolerances)
    tol = tols.quad_abs if tol is None else tol
    if not tol > 0:
        raise DomainError(f"quadrature tolerance must be positive, got {tol}")

    running = 0.0
    nodes = 0
    previous = None
    last_change = float('nan')
    level = 0
    while True:
        t_nodes, weights, h = _tanh_sinh_level(level)
        nodes += len(t_nodes)
        if nodes > tols.quad_max_nodes:
            raise NonConvergence(
                f"quadrature did not reach {tol:g} within {tols.quad_max_nodes} nodes "
                f"(last change {last_change:g})"
            )
        for t, w in zip(t_nodes, weights):
            value = f(float(t))
            if not is_finite(value):
                raise NonFinite(f"integrand returned {value} at t={t!r}")
            running += w * value
        estimate = h * running
        if previous is not None:
            last_change = abs(estimate - previous)
            if level >= _TS_MIN_LEVEL and last_change <= tol:
                logger.debug(f"integrate_01 converged at level {level} with {nodes} nodes")
                return float(estimate)
        previous = estimate
        level += 1


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Optional[float] = None,
    tolerances: Optional[Tolerances] = None,
) -> float:
    """
    Root of f in [lo, hi] by Brent's method (bisection safeguarded).

    Raises:
        NoBracket: If f(lo) and f(hi) have the same strict sign
    """
    tols = resolve(tolerances)
    tol = tols.root_abs if tol is None else tol
    flo, fhi = f(lo), f(hi)
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise NonFinite(f"non-finite bracket values f({lo})={flo}, f({hi})={fhi}")
    if flo == 0.0:
        return float(lo)
    if fhi == 0.0:
        return float(hi)
    if flo * fhi > 0:
        raise NoBracket(f"f({lo})={flo:g} and f({hi})={fhi:g} have the same sign")
    try:
        return float(brentq(f, lo, hi, xtol=tol, maxiter=500))
    except RuntimeError as exc:
        raise NonConvergence(str(exc)) from exc


def derivative_fd(f: Callable[[Number], Number], x: Number, h: Optional[float] = None,
                  tolerances: Optional[Tolerances] = None) -> Number:
    """Central difference (f(x+h) - f(x-h)) / (2h)."""
    h = resolve(tolerances).fd_step if h is None else h
    if not h > 0:
        raise DomainError(f"step must be positive, got {h}")
    ahead, behind = f(x + h), f(x - h)
    if not (is_finite(ahead) and is_finite(behind)):
        raise NonFinite(f"non-finite value near x={x}: f(x+h)={ahead}, f(x-h)={behind}")
    return (ahead - behind) / (2 * h)


def quadratic_roots(a: float, b: float, c: float) -> Tuple[complex, complex]:
    """
    Both roots of a*T^2 + b*T + c = 0, minus branch first.

    The minus branch is (-b - sqrt(D)) / (2a) with the principal root of
    the discriminant D. Real roots use the cancellation-free form.
    """
    if a == 0:
        raise DomainError("leading coefficient of the quadratic vanishes")
    disc = b * b - 4 * a * c
    if disc < 0:
        root = csqrt(disc)
        return (-b - root) / (2 * a), (-b + root) / (2 * a)
    root = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(root, b))
    if q == 0.0:
        return complex(0.0), complex(0.0)
    r1, r2 = q / a, c / q
    minus = (-b - root) / (2 * a)
    # pick the stable value closest to the naive minus branch
    if abs(r1 - minus) <= abs(r2 - minus):
        return complex(r1), complex(r2)
    return complex(r2), complex(r1)


def real_quadratic_roots(a: float, b: float, c: float) -> Tuple[float, float]:
    """Real roots of a*T^2 + b*T + c = 0, minus branch first."""
    disc = b * b - 4 * a * c
    if disc < 0:
        raise NoRealRoot(f"discriminant {disc:g} < 0")
    lo, hi = quadratic_roots(a, b, c)
    return lo.real, hi.real
