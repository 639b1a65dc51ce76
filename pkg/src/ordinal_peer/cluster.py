"""Pairwise region dissimilarity, distance matrix, PAM k-medoids, and
silhouette-guided choice of k.

The dissimilarity blends three bounded metrics: a size term on per-category
population counts, an L1 shape term on the probability vectors, and an
order-sensitive location term on the CDFs.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .classifier import RegionProfile
from .errors import BothEmpty, KTooLarge, LengthMismatch, ParamOutOfRange, SingleCluster


@dataclass(frozen=True)
class DistanceParams:
    """Non-negative term weights summing to 1."""

    w_size: float = 1.0 / 3.0
    w_shape: float = 1.0 / 3.0
    w_location: float = 1.0 / 3.0

    def __post_init__(self):
        w = (self.w_size, self.w_shape, self.w_location)
        if any(x < 0 for x in w):
            raise ParamOutOfRange("weights must be non-negative")
        if abs(sum(w) - 1.0) > 1e-9:
            raise ParamOutOfRange("weights must sum to 1")


def sorensen(counts_a, counts_b) -> float:
    """Sorensen dissimilarity of two count histograms: 1 - 2*overlap/total."""
    a = np.asarray(counts_a, dtype=float)
    b = np.asarray(counts_b, dtype=float)
    if a.shape != b.shape:
        raise LengthMismatch("histograms must have the same length")
    if np.any(a < 0) or np.any(b < 0):
        raise ParamOutOfRange("counts must be non-negative")
    total = float(a.sum() + b.sum())
    if total <= 0:
        raise BothEmpty("both histograms are empty")
    return 1.0 - 2.0 * float(np.minimum(a, b).sum()) / total


def l1_shape(a, b) -> float:
    """Total variation distance between probability vectors."""
    pa, pb = a.p, b.p
    if pa.size != pb.size:
        raise LengthMismatch("distributions must share the category count")
    return 0.5 * float(np.abs(pa - pb).sum())


def location_distance(a, b) -> float:
    """Mean absolute CDF gap over the n-1 interior cuts; order-sensitive."""
    pa, pb = a.p, b.p
    if pa.size != pb.size:
        raise LengthMismatch("distributions must share the category count")
    fa = np.cumsum(pa)[:-1]
    fb = np.cumsum(pb)[:-1]
    return float(np.abs(fa - fb).sum()) / (pa.size - 1)


def _region_counts(p: RegionProfile) -> np.ndarray:
    return p.distribution.p * p.population


def dissimilarity(a: RegionProfile, b: RegionProfile, params: DistanceParams = DistanceParams()) -> float:
    """Weighted blend of the size, shape and location terms; 0 iff the two
    regions have identical populations and distributions."""
    return (
        params.w_size * sorensen(_region_counts(a), _region_counts(b))
        + params.w_shape * l1_shape(a.distribution, b.distribution)
        + params.w_location * location_distance(a.distribution, b.distribution)
    )


@dataclass(frozen=True)
class DistanceMatrix:
    ids: tuple[str, ...]
    d: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        if d.shape != (len(self.ids), len(self.ids)):
            raise LengthMismatch("matrix shape must match the id list")
        d = d.copy()
        d.flags.writeable = False
        object.__setattr__(self, "d", d)

    def index(self, region_id: str) -> int:
        return self.ids.index(region_id)


def distance_matrix(profiles: list[RegionProfile], params: DistanceParams = DistanceParams()) -> DistanceMatrix:
    """Symmetric pairwise dissimilarities with a zero diagonal."""
    m = len(profiles)
    d = np.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            d[i, j] = d[j, i] = dissimilarity(profiles[i], profiles[j], params)
    return DistanceMatrix(ids=tuple(p.region_id for p in profiles), d=d)


@dataclass(frozen=True)
class Clustering:
    k: int
    medoids: tuple[int, ...]  # indices into the matrix id order
    assignment: tuple[int, ...]  # per region: position in ``medoids``
    cost: float
    avg_silhouette: float | None

    def medoid_ids(self, matrix: DistanceMatrix) -> tuple[str, ...]:
        return tuple(matrix.ids[m] for m in self.medoids)


def _assign(d: np.ndarray, medoids: list[int]) -> tuple[np.ndarray, float]:
    cols = d[:, medoids]
    assignment = cols.argmin(axis=1)
    return assignment, float(cols.min(axis=1).sum())


def pam(matrix: DistanceMatrix, k: int, seed: int = 0) -> Clustering:
    """Partitioning around medoids: greedy BUILD then best-improvement SWAP.

    Fully deterministic: ties always resolve to the lowest region index, so
    ``seed`` only labels the run.  Cost is the summed distance of every
    region to its medoid.
    """
    m = len(matrix.ids)
    if not 1 <= k <= m:
        raise KTooLarge(f"k={k} outside 1..{m}")
    d = matrix.d

    # BUILD: start from the 1-medoid optimum, then add the point that cuts
    # the current cost the most
    medoids = [int(d.sum(axis=1).argmin())]
    while len(medoids) < k:
        nearest = d[:, medoids].min(axis=1)
        best_gain, best_c = -np.inf, None
        for c in range(m):
            if c in medoids:
                continue
            gain = float(np.maximum(nearest - d[:, c], 0.0).sum())
            if gain > best_gain + 1e-15:
                best_gain, best_c = gain, c
        medoids.append(best_c)

    # SWAP: apply the single best strictly-improving swap per pass
    _, cost = _assign(d, medoids)
    improved = True
    while improved:
        improved = False
        best = (0.0, None, None)
        for mi, med in enumerate(medoids):
            for c in range(m):
                if c in medoids:
                    continue
                trial = medoids.copy()
                trial[mi] = c
                _, trial_cost = _assign(d, trial)
                delta = cost - trial_cost
                if delta > best[0] + 1e-12:
                    best = (delta, mi, c)
        if best[1] is not None:
            medoids[best[1]] = best[2]
            cost -= best[0]
            improved = True

    medoids = sorted(medoids)
    assignment, cost = _assign(d, medoids)
    clustering = Clustering(
        k=k,
        medoids=tuple(medoids),
        assignment=tuple(int(a) for a in assignment),
        cost=cost,
        avg_silhouette=None,
    )
    if k >= 2:
        clustering = Clustering(
            k=k,
            medoids=clustering.medoids,
            assignment=clustering.assignment,
            cost=cost,
            avg_silhouette=silhouette(matrix, clustering),
        )
    return clustering


def silhouette(matrix: DistanceMatrix, clustering: Clustering) -> float:
    """Average silhouette width; members of singleton clusters contribute 0,
    as do points with no within- or between-cluster spread."""
    if clustering.k < 2:
        raise SingleCluster("silhouette requires at least 2 clusters")
    d = matrix.d
    labels = np.asarray(clustering.assignment)
    widths = []
    for i in range(len(labels)):
        own = labels[i]
        mates = np.flatnonzero(labels == own)
        others = [
            float(d[i, np.flatnonzero(labels == other)].mean())
            for other in range(clustering.k)
            if other != own and np.any(labels == other)
        ]
        if mates.size == 1 or not others:
            # singleton cluster, or every other cluster empty (identical
            # points collapse onto one medoid): contributes 0 by convention
            widths.append(0.0)
            continue
        a = float(d[i, mates[mates != i]].mean())
        b = min(others)
        denom = max(a, b)
        widths.append(0.0 if denom == 0.0 else (b - a) / denom)
    return float(np.mean(widths))


def choose_k(matrix: DistanceMatrix, candidates) -> tuple[int, dict[int, float]]:
    """Run PAM for each candidate k and pick the best average silhouette,
    breaking ties toward the smaller k."""
    scores: dict[int, float] = {}
    for k in sorted(candidates):
        scores[k] = pam(matrix, k).avg_silhouette
    best = max(sorted(scores), key=lambda k: (scores[k], -k))
    return best, scores


DISTANCE_DB_COLUMNS = (
    "region_1", "state_1", "region_2", "state_2",
    "pop_1", "pop_2", "hi_1", "hi_2", "li_1", "li_2", "distance",
)


def distance_db_csv(
    profiles: list[RegionProfile],
    matrix: DistanceMatrix,
    states: dict[str, str] | None = None,
) -> str:
    """Flat pairwise-distance table (every ordered pair once, self excluded),
    ready for spreadsheet-style filtering on the first column."""
    states = states or {}
    by_id = {p.region_id: p for p in profiles}
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(DISTANCE_DB_COLUMNS)
    for i, a in enumerate(matrix.ids):
        for j, b in enumerate(matrix.ids):
            if i == j:
                continue
            pa, pb = by_id[a], by_id[b]
            writer.writerow(
                [
                    a, states.get(a, ""), b, states.get(b, ""),
                    pa.population, pb.population,
                    f"{100 * pa.hi:.2f}", f"{100 * pb.hi:.2f}",
                    pa.li, pb.li,
                    f"{matrix.d[i, j]:.6f}",
                ]
            )
    return buf.getvalue()
