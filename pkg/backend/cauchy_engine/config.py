"""
Configuration for the Cauchy engine.

Tolerances and sample grids are plain frozen dataclasses; every public
operation takes an optional ``tolerances`` argument and falls back to
DEFAULT_TOLERANCES. There are no configuration files or environment
variables.
"""

import logging
import sys
from dataclasses import dataclass, field, fields, replace as dc_replace
from typing import Callable, Iterator, List, Optional, Tuple

import numpy as np

from .errors import ConfigError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class Tolerances:
    """
    Central tolerance policy.

    Args:
        quad_abs: Absolute error target of integrate_01
        residual_pass: Residual at or below which a check passes
        root_abs: Bracket width / residual target of find_root
        zero_guard: Denominators smaller than this raise ZeroDenominator
        fd_step: Default step of derivative_fd
        quad_max_nodes: Node cap of the quadrature refinement
        singular_margin: Exclusion band around singular loci on grids
        cauchy_tol: Tolerance used when testing against a Cauchy equation
    """
    quad_abs: float = 1e-10
    residual_pass: float = 1e-9
    root_abs: float = 1e-12
    zero_guard: float = 1e-300
    fd_step: float = 1e-5
    quad_max_nodes: int = 2 ** 20
    singular_margin: float = 1e-3
    cauchy_tol: float = 1e-10

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not value > 0:
                raise ConfigError(f"tolerance '{f.name}' must be strictly positive, got {value}")

    def replace(self, **overrides) -> "Tolerances":
        """Return a copy with some fields overridden (validated again)."""
        return dc_replace(self, **overrides)


DEFAULT_TOLERANCES = Tolerances()


def resolve(tolerances: Optional[Tolerances]) -> Tolerances:
    """Fall back to the module default."""
    return DEFAULT_TOLERANCES if tolerances is None else tolerances


PairPredicate = Callable[[float, float], bool]


@dataclass(frozen=True)
class GridSpec:
    """
    A square sample grid lo..hi with n points per axis.

    ``exclude(x, y)`` returning True drops the pair (x, y); this is how
    singular loci such as x + y = 0 are kept off the grid.
    """
    lo: float
    hi: float
    n: int
    exclude: Optional[PairPredicate] = field(default=None, compare=False)
    label: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError(f"grid needs at least one point, got n={self.n}")
        if self.n > 1 and not self.hi > self.lo:
            raise ConfigError(f"grid bounds must satisfy lo < hi, got {self.lo}:{self.hi}")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Read the CLI form ``lo:hi:n``."""
        parts = text.split(':')
        if len(parts) != 3:
            raise ConfigError(f"grid must look like lo:hi:n, got '{text}'")
        try:
            lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigError(f"grid must look like lo:hi:n, got '{text}'") from None
        return cls(lo, hi, n)

    @classmethod
    def default(cls) -> "GridSpec":
        return cls(-3.0, 3.0, 25)

    @classmethod
    def positive(cls) -> "GridSpec":
        return cls(0.1, 5.0, 25)

    def with_exclusion(self, exclude: PairPredicate, label: str = "") -> "GridSpec":
        return dc_replace(self, exclude=exclude, label=label or self.label)

    def refined(self) -> "GridSpec":
        """Grid with 2n-1 points that contains every point of this one."""
        return dc_replace(self, n=2 * self.n - 1)

    def points(self) -> np.ndarray:
        if self.n == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.n)

    def is_positive(self) -> bool:
        return self.lo > 0

    def pairs(self) -> Iterator[Tuple[float, float]]:
        """Ordered pairs (x, y) in lexicographic order, exclusions dropped."""
        pts = [float(p) for p in self.points()]
        for x in pts:
            for y in pts:
                if self.exclude is not None and self.exclude(x, y):
                    continue
                yield x, y

    def excluded_count(self) -> int:
        if self.exclude is None:
            return 0
        pts = [float(p) for p in self.points()]
        return sum(1 for x in pts for y in pts if self.exclude(x, y))

    def describe(self) -> str:
        text = f"{self.lo:g}:{self.hi:g}:{self.n}"
        return f"{text} ({self.label})" if self.label else text


def sum_exclusion(margin: float) -> PairPredicate:
    """Exclude the band |x + y| < margin."""
    return lambda x, y: abs(x + y) < margin


def configure_logging(level: int = logging.WARNING) -> None:
    """Route library logging to stderr with the project format."""
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def verbosity_to_level(verbose: int) -> int:
    levels: List[int] = [logging.WARNING, logging.INFO, logging.DEBUG]
    return levels[min(verbose, len(levels) - 1)]
