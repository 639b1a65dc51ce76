"""Lorenz curve, Lorenz zonoid, Concentration Index, the true-diversity
mapping, and extremal concentration bounds for a given (k, C) specification."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import OrdinalDistribution
from .errors import ParamOutOfRange, SpecInfeasible

_CONVEXITY_TOL = 1e-12


@dataclass(frozen=True)
class LorenzCurve:
    """Cumulative fractions y_0..y_n of the ascending-sorted probabilities.

    Always convex: 2 y_i <= y_{i-1} + y_{i+1} for interior i.
    """

    y: np.ndarray

    def __post_init__(self):
        y = np.asarray(self.y, dtype=float)
        if y[0] != 0.0 or abs(y[-1] - 1.0) > 1e-9:
            raise ParamOutOfRange("curve must run from 0 to 1")
        if np.any(np.diff(y) < -_CONVEXITY_TOL):
            raise ParamOutOfRange("curve must be non-decreasing")
        if np.any(2 * y[1:-1] > y[:-2] + y[2:] + _CONVEXITY_TOL):
            raise ParamOutOfRange("curve must be convex")
        y = y.copy()
        y.flags.writeable = False
        object.__setattr__(self, "y", y)

    @property
    def n(self) -> int:
        return self.y.size - 1


def lorenz_curve(d: OrdinalDistribution) -> LorenzCurve:
    """Sort probabilities ascending (stably) and cumulate, prepending y_0 = 0."""
    y = np.concatenate(([0.0], np.cumsum(np.sort(d.p, kind="stable"))))
    y[-1] = 1.0  # guard cumulative float drift
    return LorenzCurve(y)


def lorenz_zonoid(curve: LorenzCurve) -> float:
    """Twice the area between the curve and the equality line.

    Closed form 1 - (1 + 2*sum(y_1..y_{n-1}))/n; 0 for the uniform and
    (n-1)/n for a singleton.
    """
    n = curve.n
    return 1.0 - (1.0 + 2.0 * float(curve.y[1:-1].sum())) / n


def concentration_index(d: OrdinalDistribution) -> float:
    """Lorenz zonoid normalized by its maximum (n-1)/n, giving a [0, 1] scale."""
    n = d.n
    return lorenz_zonoid(lorenz_curve(d)) * n / (n - 1)


def diversity_from_ci(n: int, ci: float) -> float:
    """Effective number of equally abundant categories: s = n - (n-1)*ci."""
    if n < 2:
        raise ParamOutOfRange("n must be at least 2")
    if not 0.0 <= ci <= 1.0:
        raise ParamOutOfRange("ci must lie in [0, 1]")
    return n - (n - 1) * ci


def ci_from_diversity(n: int, s: float) -> float:
    """Inverse mapping: ci = (n - s)/(n - 1)."""
    if n < 2:
        raise ParamOutOfRange("n must be at least 2")
    if not 1.0 <= s <= n:
        raise ParamOutOfRange("s must lie in [1, n]")
    return (n - s) / (n - 1)


@dataclass(frozen=True)
class ConcentrationSpec:
    """(n, k, C): C is the cumulative fraction held by the k most populated
    categories."""

    n: int
    k: int
    c: float

    def __post_init__(self):
        if self.n < 2:
            raise ParamOutOfRange("n must be at least 2")
        if not 1 <= self.k <= self.n - 1:
            raise ParamOutOfRange("k must lie in [1, n-1]")
        if not 0.0 < self.c < 1.0:
            raise SpecInfeasible("C must lie in (0, 1)")


def cis_lower_bound(spec: ConcentrationSpec) -> tuple[float, OrdinalDistribution]:
    """Minimum CI over all distributions matching the spec, with its witness.

    The bound is (n/(n-1))(C - k/n); the witness spreads 1-C evenly over the
    first n-k categories and C over the last k.
    """
    n, k, c = spec.n, spec.k, spec.c
    if c < k / n:
        raise SpecInfeasible(f"C={c} below k/n={k / n}")
    bound = (n / (n - 1)) * (c - k / n)
    p = np.empty(n)
    p[: n - k] = (1.0 - c) / (n - k)
    p[n - k :] = c / k
    return bound, OrdinalDistribution(p / p.sum())


def cis_upper_bound(spec: ConcentrationSpec) -> tuple[float, OrdinalDistribution]:
    """Maximum CI over all distributions matching the spec, with its witness.

    Picks the unique j with k/(k+j) <= C < k/(k+j-1); the bound is
    1 - (1-C)(k+j-1)(k+j)/(j(n-1)).  At C exactly on a breakpoint the larger
    j applies (half-open intervals).
    """
    n, k, c = spec.n, spec.k, spec.c
    if c < k / n:
        raise SpecInfeasible(f"C={c} below k/n={k / n}")
    j = None
    for cand in range(1, n - k + 1):
        lo = k / (k + cand)
        hi = k / (k + cand - 1) if cand > 1 else 1.0
        if lo <= c < hi:
            j = cand
            break
    if j is None:
        raise SpecInfeasible(f"no feasible j for C={c}")
    bound = 1.0 - (1.0 - c) * (k + j - 1) * (k + j) / (j * (n - 1))
    p = np.zeros(n)
    p[n - k - j : n - 1] = (1.0 - c) / j
    p[n - 1] = 1.0 - (k + j - 1) * (1.0 - c) / j
    return bound, OrdinalDistribution(p / p.sum())
