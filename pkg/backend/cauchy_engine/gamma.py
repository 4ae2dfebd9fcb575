"""
Euler Gamma, reciprocal Gamma and the Gamma function of a generator.

Also provides sine, cosine and tangent written purely through Gamma
values, and the residuals of the Euler and Pythagorean identities in that
form. Every trigonometric expression goes through reciprocal_gamma, which
vanishes at the poles of Gamma, so no case analysis is needed.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Mapping, Optional, Tuple, Union

from .config import Tolerances, resolve
from .errors import DivisionByZero, DomainError, NonFinite, PoleError, Unsupported
from .expr import Expr, eval_expr, parse
from .numerics import exp_i, integrate_01

logger = logging.getLogger(__name__)

# Lanczos approximation, g = 7, n = 9
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2 * math.pi)

RealOrComplex = Union[float, complex]


def _is_nonpositive_integer(z: RealOrComplex) -> bool:
    if isinstance(z, complex):
        if z.imag != 0.0:
            return False
        z = z.real
    return z <= 0 and z == math.floor(z)


def _lanczos(z: RealOrComplex) -> RealOrComplex:
    """Gamma(z) for Re z >= 0.5."""
    z = z - 1
    acc = LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        acc += coefficient / (z + i)
    t = z + LANCZOS_G + 0.5
    try:
        if isinstance(z, complex):
            return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * acc
        value = _SQRT_2PI * math.exp((z + 0.5) * math.log(t) - t) * acc
    except OverflowError:
        raise NonFinite(f"Gamma({z + 1}) overflows a float") from None
    if math.isinf(value):
        raise NonFinite(f"Gamma({z + 1}) overflows a float")
    return value


def euler_gamma(x: float) -> float:
    """
    Euler Gamma function on the reals.

    Lanczos on [0.5, inf), the recurrence Gamma(x) = Gamma(x+1)/x on
    (0, 0.5) and the reflection formula for negative arguments.

    Raises:
        PoleError: At x = 0, -1, -2, ...
        NonFinite: If Gamma(x) exceeds the float range (x above about 171.6)
    """
    x = float(x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at x={x:g}")
    if x >= 0.5:
        return _lanczos(x)
    if x > 0:
        return _lanczos(x + 1.0) / x
    try:
        mirror = _lanczos(1.0 - x)
    except NonFinite:
        return math.copysign(0.0, math.sin(math.pi * x))
    return math.pi / (math.sin(math.pi * x) * mirror)


def _reciprocal_gamma_real(x: float) -> float:
    if _is_nonpositive_integer(x):
        return 0.0
    if x >= 0.5:
        try:
            return 1.0 / _lanczos(x)
        except NonFinite:
            return 0.0
    if x > 0:
        return x / _lanczos(x + 1.0)
    return math.sin(math.pi * x) * _lanczos(1.0 - x) / math.pi


def reciprocal_gamma(z: RealOrComplex) -> complex:
    """
    1/Gamma(z), an entire function.

    Exactly zero at the non-positive integers.
    """
    if not isinstance(z, complex):
        return complex(_reciprocal_gamma_real(float(z)))
    if _is_nonpositive_integer(z):
        return 0j
    if z.real >= 0.5:
        return 1.0 / _lanczos(z)
    if z.real > 0:
        return z / _lanczos(z + 1.0)
    return cmath.sin(math.pi * z) * _lanczos(1.0 - z) / math.pi


# Gamma-form trigonometry

def _sin_form(z: float) -> float:
    w = z / math.pi
    return math.pi * _reciprocal_gamma_real(w) * _reciprocal_gamma_real(1.0 - w)


def _cos_form(z: float) -> float:
    w = z / math.pi
    return math.pi * _reciprocal_gamma_real(0.5 - w) * _reciprocal_gamma_real(0.5 + w)


def sin_via_gamma(z: float) -> float:
    """sin z = pi / (Gamma(z/pi) Gamma(1 - z/pi))."""
    return _sin_form(z)


def cos_via_gamma(z: float) -> float:
    """cos z = pi / (Gamma(1/2 - z/pi) Gamma(1/2 + z/pi))."""
    return _cos_form(z)


def tan_via_gamma(z: float, tolerances: Optional[Tolerances] = None) -> float:
    """
    Quotient of the two Gamma products.

    Raises:
        DivisionByZero: Where the cosine form vanishes
    """
    denominator = _cos_form(z)
    if abs(denominator) <= resolve(tolerances).zero_guard:
        raise DivisionByZero(f"cosine form vanishes at z={z!r}")
    return _sin_form(z) / denominator


def euler_identity_residual(z: float) -> float:
    """|e^{iz} - (cos z + i sin z)| with both parts in Gamma form."""
    return abs(exp_i(z) - complex(_cos_form(z), _sin_form(z)))


def pythagoras_gamma_residual(z: float) -> float:
    """
    Residual of 1/(G(w)G(1-w))^2 + 1/(G(1/2-w)G(1/2+w))^2 = 1/pi^2, w = z/pi.
    """
    w = z / math.pi
    sine_part = _reciprocal_gamma_real(w) * _reciprocal_gamma_real(1.0 - w)
    cosine_part = _reciprocal_gamma_real(0.5 - w) * _reciprocal_gamma_real(0.5 + w)
    return abs(sine_part ** 2 + cosine_part ** 2 - 1.0 / math.pi ** 2)


def product_identity_residuals(z: float) -> Tuple[float, float]:
    """
    Real and imaginary parts of e^{iz} e^{-iz} = 1 in Gamma form.

    Returns:
        (|1 - (C C' - S S_neg)|, |C S_neg + S C'|) where S_neg is the Gamma
        form of sin(-z) and C' the cosine form with the factors swapped.
    """
    w = z / math.pi
    cos_plus = math.pi * _reciprocal_gamma_real(0.5 - w) * _reciprocal_gamma_real(0.5 + w)
    cos_minus = math.pi * _reciprocal_gamma_real(0.5 + w) * _reciprocal_gamma_real(0.5 - w)
    sin_plus = math.pi * _reciprocal_gamma_real(w) * _reciprocal_gamma_real(1.0 - w)
    sin_minus = math.pi * _reciprocal_gamma_real(-w) * _reciprocal_gamma_real(1.0 + w)
    real_part = abs(1.0 - (cos_plus * cos_minus - sin_plus * sin_minus))
    imaginary_part = abs(cos_plus * sin_minus + sin_plus * cos_minus)
    return real_part, imaginary_part


# Generators

class GeneratorKind(Enum):
    NEG_LOG = "neglog"
    EXPONENTIAL = "exp"
    ADDITIVE = "add"
    LOGARITHMIC = "log"
    MULTIPLICATIVE = "pow"
    CUSTOM = "custom"


# probe grid for the positivity condition of custom generators
_PROBE_POINTS = tuple(k / 100 for k in range(1, 100))


@dataclass(frozen=True)
class Generator:
    """
    A positive function phi on (0,1) used in Gamma_phi(x) = int_0^1 phi(t)^(x-1) dt.

    Build instances through the classmethods, which enforce the parameter
    restrictions of each family.
    """
    kind: GeneratorKind
    param: float = 0.0
    expr: Optional[Expr] = None
    bindings: Mapping[str, float] = field(default_factory=dict)

    @classmethod
    def neg_log(cls) -> "Generator":
        return cls(GeneratorKind.NEG_LOG)

    @classmethod
    def exponential(cls, a: float) -> "Generator":
        if not a > 0:
            raise DomainError(f"exponential generator needs a > 0, got {a}")
        return cls(GeneratorKind.EXPONENTIAL, float(a))

    @classmethod
    def additive(cls, c: float) -> "Generator":
        if not c > 0:
            raise DomainError(f"additive generator needs c > 0, got {c}")
        return cls(GeneratorKind.ADDITIVE, float(c))

    @classmethod
    def logarithmic(cls, c: float) -> "Generator":
        if not c < 0:
            raise DomainError(f"logarithmic generator needs c < 0, got {c}")
        return cls(GeneratorKind.LOGARITHMIC, float(c))

    @classmethod
    def multiplicative(cls, p: float) -> "Generator":
        return cls(GeneratorKind.MULTIPLICATIVE, float(p))

    @classmethod
    def custom(cls, source: Union[str, Expr], bindings: Optional[Dict[str, float]] = None) -> "Generator":
        """
        Generator given by an expression in t.

        Raises:
            DomainError: If phi is not positive on the probe grid 0.01..0.99
        """
        expr = parse(source) if isinstance(source, str) else source
        generator = cls(GeneratorKind.CUSTOM, expr=expr, bindings=dict(bindings or {}))
        for t in _PROBE_POINTS:
            value = generator.phi(t)
            if not value > 0:
                raise DomainError(f"custom generator must be positive on (0,1); phi({t}) = {value}")
        return generator

    def phi(self, t: float) -> float:
        kind = self.kind
        if kind is GeneratorKind.NEG_LOG:
            return -math.log(t)
        if kind is GeneratorKind.EXPONENTIAL:
            return self.param ** t
        if kind is GeneratorKind.ADDITIVE:
            return self.param * t
        if kind is GeneratorKind.LOGARITHMIC:
            return self.param * math.log(t)
        if kind is GeneratorKind.MULTIPLICATIVE:
            return t ** self.param
        return eval_expr(self.expr, t, variable='t', bindings=self.bindings)

    def integrable_at(self, x: float) -> bool:
        """Whether int_0^1 phi^(x-1) converges (custom: assumed)."""
        kind = self.kind
        if kind in (GeneratorKind.NEG_LOG, GeneratorKind.ADDITIVE, GeneratorKind.LOGARITHMIC):
            return x > 0
        if kind is GeneratorKind.MULTIPLICATIVE:
            return self.param * (x - 1) + 1 > 0
        return True

    def describe(self) -> str:
        if self.kind is GeneratorKind.CUSTOM:
            return f"custom({self.expr})"
        if self.kind is GeneratorKind.NEG_LOG:
            return "neglog"
        return f"{self.kind.value}({self.param:g})"


def gamma_phi(gen: Generator, x: float, tol: Optional[float] = None,
              tolerances: Optional[Tolerances] = None) -> float:
    """
    Gamma function of generator phi by quadrature.

    Raises:
        DomainError: If x is outside the integrable range or phi < 0 somewhere
        NonConvergence: If the quadrature does not settle
    """
    if not gen.integrable_at(x):
        raise DomainError(f"Gamma_phi of {gen.describe()} diverges at x={x:g}")
    exponent = x - 1.0

    def integrand(t: float) -> float:
        base = gen.phi(t)
        if base < 0:
            raise DomainError(f"generator {gen.describe()} is negative at t={t!r}")
        if base == 0.0:
            return 0.0 if exponent > 0 else (1.0 if exponent == 0 else math.inf)
        try:
            return base ** exponent
        except OverflowError:
            raise NonFinite(f"phi(t)^(x-1) overflows at t={t!r}, x={x:g}") from None

    value = integrate_01(integrand, tol=tol, tolerances=tolerances)
    logger.debug(f"Gamma_phi[{gen.describe()}]({x:g}) = {value!r}")
    return value


def closed_form(gen: Generator, x: float) -> float:
    """
    Closed form of Gamma_phi for the builtin generators.

    Raises:
        DomainError: At genuine poles of the closed form
        Unsupported: For custom generators
    """
    kind = gen.kind
    if kind is GeneratorKind.NEG_LOG:
        return euler_gamma(x)
    if kind is GeneratorKind.EXPONENTIAL:
        scale = (x - 1.0) * math.log(gen.param)
        if scale == 0.0:
            # removable point x = 1 (and the constant generator a = 1)
            return 1.0
        return math.expm1(scale) / scale
    if kind is GeneratorKind.ADDITIVE:
        if x == 0:
            raise DomainError("Gamma_add has a pole at x=0")
        return gen.param ** (x - 1.0) / x
    if kind is GeneratorKind.LOGARITHMIC:
        if _is_nonpositive_integer(x):
            raise PoleError(f"Gamma_log has a pole at x={x:g}")
        return (-gen.param) ** (x - 1.0) * euler_gamma(x)
    if kind is GeneratorKind.MULTIPLICATIVE:
        p = gen.param
        if p == 0:
            return 1.0
        denominator = p * (x - 1.0) + 1.0
        if denominator == 0:
            raise DomainError(f"Gamma_pow has a pole at x = 1 - 1/p = {x:g}")
        return 1.0 / denominator
    raise Unsupported("custom generators have no closed form")
