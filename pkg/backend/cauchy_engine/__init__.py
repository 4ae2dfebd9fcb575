"""
Cauchy Engine - generalized Gamma functions and Cauchy pairs

A small numeric package with:
- Gamma functions of arbitrary generators by tanh-sinh quadrature
- Sine, cosine and tangent written through Gamma values
- Period and scaleability functions of sine/cosine addition laws
- Grid verification and classification of function pairs
- A command line front end (python -m cauchy_engine)
"""

__version__ = "1.0.0"
__author__ = "Cauchy Engine"

from .families import CauchyFamily, EquationKind, satisfies_cauchy
from .gamma import Generator, closed_form, euler_gamma, gamma_phi, reciprocal_gamma
from .pairing import (
    ANY_PERIOD,
    period_additive_C,
    period_additive_S,
    period_exponential_C,
    period_exponential_S,
    period_power_S,
    scaleability_power,
)
from .representers import RepresenterKind, representer_period
from .verify import Period, classify_pair, verify_pair

__all__ = [
    "ANY_PERIOD",
    "CauchyFamily",
    "EquationKind",
    "Generator",
    "Period",
    "RepresenterKind",
    "classify_pair",
    "closed_form",
    "euler_gamma",
    "gamma_phi",
    "period_additive_C",
    "period_additive_S",
    "period_exponential_C",
    "period_exponential_S",
    "period_power_S",
    "reciprocal_gamma",
    "representer_period",
    "satisfies_cauchy",
    "scaleability_power",
    "verify_pair",
]
