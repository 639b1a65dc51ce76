"""Bin Concentration Function, Location Index, mean absolute deviation, and
the rounded-mean / mode / location center comparison.

The concentration score of bin j is gamma(j) = sum_i (n - |i - j|) p_i, i.e.
n minus the absolute deviation from j.  Its argmax is a median-equivalent
center that is always an actual category.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import OrdinalDistribution, moments
from .errors import ParamOutOfRange

_TIE_TOL = 1e-9


def bcf_vector(d: OrdinalDistribution) -> np.ndarray:
    """Concentration score gamma(j) for every bin j; each lies in [1, n]."""
    idx = np.arange(1, d.n + 1, dtype=float)
    weights = d.n - np.abs(idx[None, :] - idx[:, None])  # rows: j, cols: i
    return weights @ d.p


@dataclass(frozen=True)
class LocationResult:
    """Peak of the bin concentration function.

    lambda1/lambda2 bound the tied plateau of maximizing bins; c is the peak
    score, c_norm its [0,1] rescaling, and csd = 1 - c_norm the compactness
    deviation.
    """

    lambda1: int
    lambda2: int
    gamma: np.ndarray
    c: float
    c_norm: float
    csd: float


def location_index(d: OrdinalDistribution) -> LocationResult:
    """Locate the distribution: smallest and largest argmax of the BCF.

    The scalar location index reported elsewhere is lambda1.  The peak score
    ranges from (n+1)/2 (two-point extreme) to n (singleton).
    """
    n = d.n
    gamma = bcf_vector(d)
    peak = float(gamma.max())
    tied = np.where(gamma >= peak - _TIE_TOL * n)[0] + 1
    lam1, lam2 = int(tied[0]), int(tied[-1])
    c_norm = (2.0 * peak - n - 1.0) / (n - 1.0)
    return LocationResult(
        lambda1=lam1,
        lambda2=lam2,
        gamma=gamma,
        c=peak,
        c_norm=c_norm,
        csd=1.0 - c_norm,
    )


def mad(d: OrdinalDistribution, center: int) -> tuple[float, float]:
    """Absolute deviation from a category: raw sum(p_i |i - center|) and its
    value normalized by (n-1)/2 (which caps it at 1 when the center is a
    location index)."""
    if not 1 <= center <= d.n or int(center) != center:
        raise ParamOutOfRange("center must be a category index")
    idx = np.arange(1, d.n + 1, dtype=float)
    raw = float(np.dot(d.p, np.abs(idx - center)))
    return raw, raw / ((d.n - 1) / 2.0)


@dataclass(frozen=True)
class CenterComparison:
    mean: float
    rounded_mean: int
    mode: int
    multimodal: bool
    li: int
    pwavgs_decile: int | None
    err_mean: int
    err_mode: int
    err_pwavgs: int | None


def center_comparison(
    d: OrdinalDistribution, external_score_decile: int | None = None
) -> CenterComparison:
    """Compare rounded mean, mode and optional external score decile to the
    location index; errors are absolute decile gaps from lambda1.

    The mean rounds half-up; mode ties take the smallest index and set the
    multimodal flag.
    """
    mean, _ = moments(d)
    rounded = int(math.floor(mean + 0.5))
    top = float(d.p.max())
    modes = np.where(d.p >= top - _TIE_TOL)[0] + 1
    li = location_index(d).lambda1
    err_pw = None
    if external_score_decile is not None:
        if not 1 <= external_score_decile <= d.n:
            raise ParamOutOfRange("external decile outside category range")
        err_pw = abs(external_score_decile - li)
    return CenterComparison(
        mean=mean,
        rounded_mean=rounded,
        mode=int(modes[0]),
        multimodal=modes.size > 1,
        li=li,
        pwavgs_decile=external_score_decile,
        err_mean=abs(rounded - li),
        err_mode=abs(int(modes[0]) - li),
        err_pwavgs=err_pw,
    )
