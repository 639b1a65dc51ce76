"""Ordinal distributions, the one- and two-parameter spike families, and basic
summary statistics on the category index scale."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (
    DegenerateDistribution,
    EmptyInput,
    NegativeWeight,
    ParamOutOfRange,
    TooFewCategories,
    ZeroSum,
)

SUM_TOLERANCE = 1e-9
#: input sums within this of 1.0 are treated as probabilities, not raw weights
PROBABILITY_SUM_SLACK = 1e-6


@dataclass(frozen=True)
class OrdinalDistribution:
    """Probability vector over n ordered categories (1-based index scale).

    ``p`` always sums to 1 within 1e-9 after construction.  ``from_weights``
    marks distributions that were renormalized from inputs whose sum deviated
    from 1 by more than 1e-6 (typically population counts).
    """

    p: np.ndarray
    from_weights: bool = field(default=False, compare=False)

    def __post_init__(self):
        arr = np.asarray(self.p, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise EmptyInput("need a 1-d vector of at least 2 categories")
        if np.any(arr < 0):
            raise NegativeWeight("probabilities must be non-negative")
        if abs(float(arr.sum()) - 1.0) > SUM_TOLERANCE:
            raise ZeroSum(f"probabilities sum to {arr.sum()!r}, expected 1")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "p", arr)

    @property
    def n(self) -> int:
        return self.p.size

    def reversed(self) -> "OrdinalDistribution":
        """Mirror image: category order reversed."""
        return OrdinalDistribution(self.p[::-1])


def make_distribution(weights) -> OrdinalDistribution:
    """Build a distribution from probabilities or non-negative weights.

    Sums within 1e-6 of 1 are renormalized silently; anything else is treated
    as raw weights and normalized, with ``from_weights=True`` on the result.
    """
    arr = np.asarray(weights, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise EmptyInput("need at least 2 categories")
    if np.any(arr < 0):
        raise NegativeWeight("weights must be non-negative")
    total = float(arr.sum())
    if total <= 0:
        raise ZeroSum("weights sum to zero")
    return OrdinalDistribution(arr / total, from_weights=abs(total - 1.0) > PROBABILITY_SUM_SLACK)


@dataclass(frozen=True)
class LambdaMuParams:
    """Parameters of the two-parameter spike family: ``lam`` controls evenness
    (1 = uniform), ``mu`` controls polarization (1 = mass split to both ends)."""

    n: int
    lam: float
    mu: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.lam <= 1.0) or not (0.0 <= self.mu <= 1.0):
            raise ParamOutOfRange("lam and mu must lie in [0, 1]")
        if self.n < 2:
            raise ParamOutOfRange("n must be at least 2")


def lambda_dist(n: int, lam: float) -> OrdinalDistribution:
    """One-parameter family: p_1 = 1 - lam + lam/n, p_i = lam/n elsewhere.

    lam=0 gives the singleton at category 1, lam=1 the uniform distribution.
    """
    if n < 2:
        raise ParamOutOfRange("n must be at least 2")
    if not 0.0 <= lam <= 1.0:
        raise ParamOutOfRange("lam must lie in [0, 1]")
    p = np.full(n, lam / n)
    p[0] = 1.0 - lam + lam / n
    return OrdinalDistribution(p)


def lambda_mu_dist(params: LambdaMuParams) -> OrdinalDistribution:
    """Two-parameter family over n > 3 categories.

    p_1 = (1 - mu/2)(1 - lam) + lam/n, p_n = (mu/2)(1 - lam) + lam/n and the
    interior cells share lam/n each.  mu=0 reduces to ``lambda_dist``; lam=0,
    mu=1 is the two-point extreme.
    """
    if params.n <= 3:
        raise TooFewCategories("two-parameter family requires n > 3")
    n, lam, mu = params.n, params.lam, params.mu
    p = np.full(n, lam / n)
    p[0] = (1.0 - mu / 2.0) * (1.0 - lam) + lam / n
    p[-1] = (mu / 2.0) * (1.0 - lam) + lam / n
    return OrdinalDistribution(p)


def symmetric_lambda_mu_dist(params: LambdaMuParams) -> OrdinalDistribution:
    """Mirror-symmetric variant for deciles (n = 10).

    The center pair (categories 5 and 6) carries ((1-lam)(1-mu))/2 + lam/10
    each, the extremes carry (mu/2)(1-lam) + lam/10 each, remaining cells
    lam/10.  Each half sums to exactly 0.5.
    """
    if params.n != 10:
        raise ParamOutOfRange("symmetric family is defined for n = 10")
    lam, mu = params.lam, params.mu
    p = np.full(10, lam / 10.0)
    p[0] = p[9] = (mu / 2.0) * (1.0 - lam) + lam / 10.0
    p[4] = p[5] = (1.0 - lam) * (1.0 - mu) / 2.0 + lam / 10.0
    return OrdinalDistribution(p)


def moments(d: OrdinalDistribution) -> tuple[float, float]:
    """Mean and variance on the category index scale 1..n."""
    idx = np.arange(1, d.n + 1, dtype=float)
    mean = float(np.dot(d.p, idx))
    var = float(np.dot(d.p, (idx - mean) ** 2))
    return mean, var


class SkewKind(Enum):
    HS = "HS"  # highly skewed
    MS = "MS"  # moderately skewed
    AS = "AS"  # approximately symmetric


class SymmetrySub(Enum):
    HIGHLY_SYMMETRIC = "HighlySymmetric"
    MODERATELY_SYMMETRIC = "ModeratelySymmetric"
    MARGINAL_SYMMETRIC = "MarginalSymmetric"
    APPROXIMATELY_SKEWED = "ApproximatelySkewed"


@dataclass(frozen=True)
class SkewClass:
    gamma1: float
    kind: SkewKind
    sub: SymmetrySub | None
    sign: str  # "positive" | "negative"


def classify_gamma1(g1: float) -> tuple[SkewKind, SymmetrySub | None]:
    """Bin a skewness value: |g1| > 1 is HS, 0.5 < |g1| <= 1 is MS, the rest
    is AS with sub-bands at 0.2 / 0.3 / 0.4.  Boundary values take the
    less-skewed class."""
    a = abs(g1)
    if a > 1.0:
        return SkewKind.HS, None
    if a > 0.5:
        return SkewKind.MS, None
    if a <= 0.2:
        return SkewKind.AS, SymmetrySub.HIGHLY_SYMMETRIC
    if a <= 0.3:
        return SkewKind.AS, SymmetrySub.MODERATELY_SYMMETRIC
    if a <= 0.4:
        return SkewKind.AS, SymmetrySub.MARGINAL_SYMMETRIC
    return SkewKind.AS, SymmetrySub.APPROXIMATELY_SKEWED


def skewness_class(d: OrdinalDistribution) -> SkewClass:
    """Pearson moment skewness on the index scale and its rule-of-thumb class."""
    mean, var = moments(d)
    if var <= 0.0:
        raise DegenerateDistribution("skewness undefined for zero variance")
    idx = np.arange(1, d.n + 1, dtype=float)
    m3 = float(np.dot(d.p, (idx - mean) ** 3))
    g1 = m3 / var**1.5
    kind, sub = classify_gamma1(g1)
    return SkewClass(g1, kind, sub, "negative" if g1 < 0 else "positive")


def entropy_index(d: OrdinalDistribution) -> float:
    """1 - H(p) with H in log base n; 1 for singletons, 0 for the uniform."""
    p = d.p[d.p > 0]
    h = float(-(p * (np.log(p) / math.log(d.n))).sum())
    return 1.0 - h
