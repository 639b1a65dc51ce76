"""Subunit CSV ingestion, region aggregation with exclusion accounting, and
population-weighted average scores (standardized and bucketed into deciles)."""

from __future__ import annotations

import csv
import hashlib
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import OrdinalDistribution
from .errors import (
    EmptyInput,
    MissingColumn,
    NoScores,
    RegionAllExcluded,
    UnreadableFile,
    ZeroVariance,
)

REQUIRED_COLUMNS = ("subunit_id", "region_id", "population", "category")
OPTIONAL_COLUMNS = ("score",)

#: standardized-score decile boundaries, half-open [lo, hi)
DECILE_BOUNDS = (121.0, 874.0, 931.0, 968.0, 997.0, 1020.0, 1041.0, 1061.0, 1081.0, 1104.0, 1194.0)


@dataclass(frozen=True)
class SubunitRecord:
    subunit_id: str
    region_id: str
    population: int
    category: int | None  # None marks an excluded subunit
    score: float | None = None

    @property
    def excluded(self) -> bool:
        return self.category is None


def parse_subunit_csv(source, n: int) -> tuple[list[SubunitRecord], list[str]]:
    """Read subunit rows from a path, file object, or CSV text.

    Rows with an empty or out-of-range category become excluded records and
    are logged; rows with an unusable population are rejected and logged.
    Column presence is strict.
    """
    if isinstance(source, (str, Path)) and "\n" not in str(source):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise UnreadableFile(str(exc)) from exc
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    reader = csv.DictReader(io.StringIO(text))
    header = reader.fieldnames or []
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise MissingColumn(f"missing column(s): {', '.join(missing)}")
    has_score = "score" in header

    records: list[SubunitRecord] = []
    issues: list[str] = []
    for lineno, row in enumerate(reader, start=2):
        sid = (row.get("subunit_id") or "").strip()
        rid = (row.get("region_id") or "").strip()
        if not sid or not rid:
            issues.append(f"row {lineno}: missing subunit or region id, rejected")
            continue
        try:
            pop = int(str(row["population"]).strip())
            if pop < 0:
                raise ValueError
        except (TypeError, ValueError):
            issues.append(f"row {lineno}: bad population {row.get('population')!r}, rejected")
            continue
        raw_cat = (row.get("category") or "").strip()
        category: int | None
        if not raw_cat:
            category = None
            issues.append(f"row {lineno}: empty category, subunit excluded")
        else:
            try:
                category = int(raw_cat)
                if not 1 <= category <= n:
                    issues.append(f"row {lineno}: category {category} outside 1..{n}, subunit excluded")
                    category = None
            except ValueError:
                issues.append(f"row {lineno}: bad category {raw_cat!r}, subunit excluded")
                category = None
        score = None
        if has_score:
            raw_score = (row.get("score") or "").strip()
            if raw_score:
                try:
                    score = float(raw_score)
                except ValueError:
                    issues.append(f"row {lineno}: bad score {raw_score!r}, ignored")
        records.append(SubunitRecord(sid, rid, pop, category, score))
    return records, issues


@dataclass
class RegionAggregate:
    total_population: int = 0
    excluded_population: int = 0
    subunit_count: int = 0
    category_populations: np.ndarray = field(default_factory=lambda: np.zeros(0))
    score_weighted_sum: float = 0.0
    scored_population: int = 0

    @property
    def included_population(self) -> int:
        return self.total_population - self.excluded_population

    @property
    def excluded_fraction(self) -> float:
        if self.total_population == 0:
            return 0.0
        return self.excluded_population / self.total_population


@dataclass(frozen=True)
class RegionDataset:
    n: int
    regions: dict[str, RegionAggregate]

    def region_ids(self) -> list[str]:
        return sorted(self.regions)

    def distribution(self, region_id: str) -> OrdinalDistribution:
        agg = self.regions[region_id]
        if agg.included_population <= 0:
            raise RegionAllExcluded(f"region {region_id!r} has no included population")
        return OrdinalDistribution(agg.category_populations / agg.included_population, from_weights=True)

    def fingerprint(self) -> str:
        h = hashlib.sha256()
        for rid in self.region_ids():
            agg = self.regions[rid]
            h.update(rid.encode())
            h.update(np.asarray(agg.category_populations).tobytes())
            h.update(f"{agg.total_population}:{agg.excluded_population}:{agg.score_weighted_sum}".encode())
        return h.hexdigest()[:16]


def aggregate(records: list[SubunitRecord], n: int) -> RegionDataset:
    """Fold subunit rows into per-region category populations.

    Excluded subunits count toward the region total (and the excluded
    fraction) but not toward the distribution.
    """
    if not records:
        raise EmptyInput("no subunit records")
    regions: dict[str, RegionAggregate] = {}
    for rec in records:
        agg = regions.get(rec.region_id)
        if agg is None:
            agg = RegionAggregate(category_populations=np.zeros(n))
            regions[rec.region_id] = agg
        agg.total_population += rec.population
        agg.subunit_count += 1
        if rec.excluded:
            agg.excluded_population += rec.population
        else:
            agg.category_populations[rec.category - 1] += rec.population
            if rec.score is not None:
                agg.score_weighted_sum += rec.score * rec.population
                agg.scored_population += rec.population
    return RegionDataset(n=n, regions=regions)


@dataclass(frozen=True)
class ConcordanceRecord:
    """Plain region-to-parent mapping row; carried through untouched."""

    region_id: str
    parent_id: str
    overlap_fraction: float


def parse_concordance_csv(source) -> list[ConcordanceRecord]:
    """Optional pass-through mapping of regions to parent geographies
    (columns region_id, parent_id, overlap_fraction)."""
    if isinstance(source, (str, Path)) and "\n" not in str(source):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise UnreadableFile(str(exc)) from exc
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    reader = csv.DictReader(io.StringIO(text))
    required = ("region_id", "parent_id", "overlap_fraction")
    missing = [c for c in required if c not in (reader.fieldnames or [])]
    if missing:
        raise MissingColumn(f"missing column(s): {', '.join(missing)}")
    return [
        ConcordanceRecord(
            region_id=row["region_id"].strip(),
            parent_id=row["parent_id"].strip(),
            overlap_fraction=float(row["overlap_fraction"]),
        )
        for row in reader
    ]


@dataclass(frozen=True)
class PwavgsResult:
    score: float
    zscore: float
    standardized: float
    rank: int  # 1 = most disadvantaged (lowest score)
    decile: int


def score_decile(standardized: float) -> int:
    """Decile of a standardized score per the published boundary table;
    values beyond either end clamp into the outer deciles."""
    for dec in range(10, 0, -1):
        if standardized >= DECILE_BOUNDS[dec - 1] or dec == 1:
            return dec
    return 1


def pwavgs(dataset: RegionDataset) -> dict[str, PwavgsResult]:
    """Population-weighted average score per region, re-standardized to mean
    1000 / SD 100 across the scored regions and ranked ascending."""
    raw: dict[str, float] = {}
    for rid in dataset.region_ids():
        agg = dataset.regions[rid]
        if agg.scored_population > 0:
            raw[rid] = agg.score_weighted_sum / agg.scored_population
    if not raw:
        raise NoScores("no region has scored subunits")
    values = np.array([raw[r] for r in sorted(raw)])
    mu = float(values.mean())
    sigma = float(values.std())  # population SD: round-trips to SD exactly 100
    if sigma == 0.0 or math.isnan(sigma):
        raise ZeroVariance("scores are constant across regions")
    order = sorted(raw, key=lambda r: (raw[r], r))
    ranks = {rid: pos + 1 for pos, rid in enumerate(order)}
    out: dict[str, PwavgsResult] = {}
    for rid, x in raw.items():
        z = (x - mu) / sigma
        std = 1000.0 + 100.0 * z
        out[rid] = PwavgsResult(score=x, zscore=z, standardized=std, rank=ranks[rid], decile=score_decile(std))
    return out
