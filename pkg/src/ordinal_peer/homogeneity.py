"""Homogeneity Index and the value-validity decision framework.

The index combines concentration with a polarization penalty,
HI = (CI + PI(uniform)^a - PI(d)^a) / (1 + PI(uniform)^a), so it is 1 for
singletons, 0 for the uniform, and lower for polarized shapes than the bare
Concentration Index.  Candidate polarization measures are compared through a
loss functional integrated over the two-parameter spike family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .concentration import concentration_index
from .core import LambdaMuParams, OrdinalDistribution, lambda_mu_dist
from .divergence import DI_JSD, PolarizationMeasure
from .errors import ParamOutOfRange, TooFewCategories

#: documented feasible floor for the polarization-sensitivity exponent (n=10)
ALPHA_FLOOR = 0.75
#: grid points per axis for the loss-functional double integral
LOSS_GRID = 101

_uniform_pi_cache: dict[tuple[str, int], float] = {}


@dataclass(frozen=True)
class HomogeneityConfig:
    """alpha is the polarization-sensitivity exponent in (0, 1]."""

    alpha: float = 1.0
    polarization: PolarizationMeasure = field(default=DI_JSD)

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ParamOutOfRange("alpha must lie in (0, 1]")


DEFAULT_CONFIG = HomogeneityConfig()


def _uniform_pi(measure: PolarizationMeasure, n: int) -> float:
    key = (measure.name, n)
    if key not in _uniform_pi_cache:
        _uniform_pi_cache[key] = measure.evaluate(OrdinalDistribution(np.full(n, 1.0 / n)))
    return _uniform_pi_cache[key]


def homogeneity_index(d: OrdinalDistribution, cfg: HomogeneityConfig = DEFAULT_CONFIG) -> float:
    """Homogeneity of a distribution on [0, 1]; 0 iff uniform, 1 iff singleton."""
    if d.n < 3:
        raise TooFewCategories("homogeneity index requires n >= 3")
    a = cfg.alpha
    piu = _uniform_pi(cfg.polarization, d.n) ** a
    pi = cfg.polarization.evaluate(d) ** a
    return (concentration_index(d) + piu - pi) / (1.0 + piu)


def hi_equal_abundance(n: int, s: int, cfg: HomogeneityConfig = DEFAULT_CONFIG) -> float:
    """HI of the distribution with 1/s on the first s categories.

    Strictly decreasing in s; 1 at s=1 and 0 at s=n.  These values are the
    classification thresholds used downstream, always computed, never
    hardcoded.
    """
    if not 1 <= s <= n:
        raise ParamOutOfRange("s must lie in [1, n]")
    p = np.zeros(n)
    p[:s] = 1.0 / s
    return homogeneity_index(OrdinalDistribution(p), cfg)


def _trapezoid_grid(points: int) -> tuple[np.ndarray, np.ndarray]:
    g = np.linspace(0.0, 1.0, points)
    w = np.ones(points)
    w[0] = w[-1] = 0.5
    return g, w / (points - 1)


def loss_functional(
    measure: Callable[[OrdinalDistribution], float], n: int, points: int = LOSS_GRID
) -> float:
    """Percent area excess of (1+mu)*measure over the spike family.

    Double trapezoid integral of (1+mu)*measure(P(lam, mu)) on [0,1]^2 minus
    the 0.5 baseline, times 100.  Non-negative for any measure that decays no
    faster than 1/(1+mu) in the polarization direction.
    """
    if n <= 3:
        raise TooFewCategories("loss functional requires n > 3")
    g, w = _trapezoid_grid(points)
    total = 0.0
    for wi, lam in zip(w, g):  # fixed order: bitwise-stable accumulation
        row = 0.0
        for wj, mu in zip(w, g):
            row += wj * (1.0 + mu) * measure(lambda_mu_dist(LambdaMuParams(n, lam, mu)))
        total += wi * row
    return 100.0 * (total - 0.5)


def superior_loss(n: int, s: float, points: int = LOSS_GRID) -> float:
    """Loss of the target curve (1-lam)(1 - ((s-1)/(n-1))*mu).

    The target equals the concentration curve of the family at s=2 and sets
    the upper admissible loss for value validity; s must lie in
    [(n+5)/4, (n+1)/2].
    """
    if not (n + 5) / 4 <= s <= (n + 1) / 2:
        raise ParamOutOfRange(f"s must lie in [{(n + 5) / 4}, {(n + 1) / 2}]")
    slope = (s - 1.0) / (n - 1.0)
    g, w = _trapezoid_grid(points)
    total = 0.0
    for wi, lam in zip(w, g):
        row = 0.0
        for wj, mu in zip(w, g):
            row += wj * (1.0 + mu) * (1.0 - lam) * (1.0 - slope * mu)
        total += wi * row
    return 100.0 * (total - 0.5)


@dataclass(frozen=True)
class ValidityReport:
    measure: str
    hi_two_point: float
    delta_m_abs: float
    loss_hi: float
    loss_superior: float
    c1_pass: bool
    value_validity_pass: bool


def value_validity(
    measure: PolarizationMeasure, n: int, s: float, points: int = LOSS_GRID
) -> ValidityReport:
    """Judge a polarization measure: C1 requires non-negative loss, full
    validity additionally requires the loss not to exceed the target's."""
    cfg = HomogeneityConfig(alpha=1.0, polarization=measure)
    two_point = lambda_mu_dist(LambdaMuParams(n, 0.0, 1.0))
    hi_rho = homogeneity_index(two_point, cfg)
    delta_m = abs(_uniform_pi(measure, n) - measure.evaluate(two_point))
    loss_hi = loss_functional(lambda d: homogeneity_index(d, cfg), n, points)
    loss_sup = superior_loss(n, s, points)
    c1 = loss_hi >= 0.0
    return ValidityReport(
        measure=measure.name,
        hi_two_point=hi_rho,
        delta_m_abs=delta_m,
        loss_hi=loss_hi,
        loss_superior=loss_sup,
        c1_pass=c1,
        value_validity_pass=c1 and loss_hi <= loss_sup,
    )
