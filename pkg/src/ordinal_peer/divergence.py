"""Bilateral CDF, its autocorrelation, shape compactness, Jensen-Shannon
divergence, and the Divergence Index with alternate polarization measures.

The bilateral CDF concatenates the CDF with its folded survival tail, so its
total mass is always n.  Its autocorrelation is a location-free signature of
the distribution shape; the Divergence Index measures how far that signature
is from a singleton's.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .core import OrdinalDistribution, moments
from .errors import LengthMismatch, NotNormalized

_MASS_TOL = 1e-9


@dataclass(frozen=True)
class Bcdf:
    """Bilateral CDF: f_i = CDF_i for i <= n, then f_{n+k} = 1 - CDF_k.

    Length 2n-1, total mass exactly n.
    """

    n: int
    f: np.ndarray

    def __post_init__(self):
        f = np.asarray(self.f, dtype=float)
        if f.size != 2 * self.n - 1:
            raise LengthMismatch("bilateral CDF must have length 2n-1")
        if abs(float(f.sum()) - self.n) > _MASS_TOL * self.n:
            raise NotNormalized("bilateral CDF mass must equal n")
        f = f.copy()
        f.flags.writeable = False
        object.__setattr__(self, "f", f)


@dataclass(frozen=True)
class Autocorrelation:
    """Autocorrelation of a bilateral CDF: length 4n-3, symmetric about the
    center, where the maximum sits.  Unnormalized mass is n^2; normalized
    mass is 1."""

    n: int
    r: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        if r.size != 4 * self.n - 3:
            raise LengthMismatch("autocorrelation must have length 4n-3")
        total = 1.0 if self.normalized else float(self.n**2)
        if abs(float(r.sum()) - total) > _MASS_TOL * max(1.0, total):
            raise NotNormalized(f"autocorrelation mass must equal {total}")
        r = r.copy()
        r.flags.writeable = False
        object.__setattr__(self, "r", r)

    @property
    def center(self) -> float:
        return float(self.r[2 * self.n - 2])

    def normalize(self) -> "Autocorrelation":
        """Divide by the analytic total n^2 (the stored mass is asserted
        against it on construction, so float error does not compound)."""
        if self.normalized:
            return self
        return Autocorrelation(self.n, self.r / self.n**2, normalized=True)


def bcdf(d: OrdinalDistribution) -> Bcdf:
    """Discrete convolution of p with the length-n all-ones sequence."""
    return Bcdf(d.n, np.convolve(d.p, np.ones(d.n)))


def bcdfa(d: OrdinalDistribution) -> Autocorrelation:
    """Autocorrelation of the bilateral CDF (direct O(n^2) convolution)."""
    f = bcdf(d).f
    return Autocorrelation(d.n, np.convolve(f, f[::-1]))


@lru_cache(maxsize=None)
def _singleton_bcdfa_normalized(n: int) -> Autocorrelation:
    # triangle 1..n..1 centered on the middle lag, exact for every location
    r = np.zeros(4 * n - 3)
    r[n - 1 : 3 * n - 2] = np.concatenate(
        (np.arange(1, n + 1, dtype=float), np.arange(n - 1, 0, -1, dtype=float))
    )
    return Autocorrelation(n, r / n**2, normalized=True)


def singleton_bcdfa(n: int, normalized: bool = False) -> Autocorrelation:
    """Shared autocorrelation of every singleton distribution on n categories."""
    norm = _singleton_bcdfa_normalized(n)
    if normalized:
        return norm
    return Autocorrelation(n, norm.r * n**2, normalized=False)


def compactness(d: OrdinalDistribution) -> float:
    """Share of autocorrelation mass in the central window of width 2n-1.

    1 for singletons, (3n+1)/(4n) at the two-point extreme.
    """
    n = d.n
    r = bcdfa(d).r
    return float(r[n - 1 : 3 * n - 2].sum()) / n**2


def jsd(p: Autocorrelation, q: Autocorrelation) -> float:
    """Jensen-Shannon divergence (base-2 logs) of two normalized signatures."""
    if p.n != q.n:
        raise LengthMismatch("signatures must share the category count")
    if not (p.normalized and q.normalized):
        raise NotNormalized("jsd operates on normalized autocorrelations")
    return _jsd_arrays(p.r, q.r)


def _jsd_arrays(p: np.ndarray, q: np.ndarray) -> float:
    m = 0.5 * (p + q)
    total = 0.0
    for a in (p, q):
        mask = a > 0.0
        total += float(np.dot(a[mask], np.log2(a[mask]) - np.log2(m[mask])))
    return 0.5 * total


def divergence_index(d: OrdinalDistribution) -> float:
    """Polarization on [0, 1): twice the JSD between the distribution's
    normalized shape signature and the singleton's.

    Zero exactly for singletons (any location); largest at the two-point
    extreme.
    """
    p = bcdfa(d).normalize().r
    q = _singleton_bcdfa_normalized(d.n).r
    return 2.0 * _jsd_arrays(p, q)


def pi_variance(d: OrdinalDistribution) -> float:
    """Variance on the index scale over its maximum ((n-1)/2)^2."""
    _, var = moments(d)
    return var / ((d.n - 1) / 2.0) ** 2


def pi_lov(d: OrdinalDistribution) -> float:
    """Linear order of variation: (2/(n-1)) * sum_i min(F_i, 1-F_i)."""
    cdf = np.cumsum(d.p)[:-1]
    return 2.0 / (d.n - 1) * float(np.minimum(cdf, 1.0 - cdf).sum())


@dataclass(frozen=True)
class PolarizationMeasure:
    """Named polarization functional: 0 at singletons, mirror-invariant."""

    name: str
    evaluate: Callable[[OrdinalDistribution], float]


DI_JSD = PolarizationMeasure("DI-JSD", divergence_index)
VAR = PolarizationMeasure("VAR", pi_variance)
LOV = PolarizationMeasure("LOV", pi_lov)

MEASURES: dict[str, PolarizationMeasure] = {
    "gjsd": DI_JSD,
    "lov": LOV,
    "var": VAR,
}
