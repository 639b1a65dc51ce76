"""Equivalence-class tables, the four-step assignment procedure, homogeneity
groups, benchmark partitions, concentration matrices, and region profiles.

Three tables partition the space of decile distributions: a diversity table
keyed by concentration alone, and two homogeneity tables (skewed and
symmetric spike families) whose cells carry HI values.  A distribution is
assigned by diversity column, polarization typology, and an interval search
on HI within the routed table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .concentration import concentration_index, diversity_from_ci
from .core import (
    LambdaMuParams,
    OrdinalDistribution,
    SkewClass,
    SkewKind,
    lambda_dist,
    moments,
    skewness_class,
    symmetric_lambda_mu_dist,
)
from .divergence import divergence_index
from .errors import BadPartition, ParamOutOfRange
from .homogeneity import DEFAULT_CONFIG, HomogeneityConfig, hi_equal_abundance, homogeneity_index
from .location import LocationResult, location_index


class TableKind(Enum):
    DIVERSITY = "diversity"
    SKEWED = "skewed"
    SYMMETRIC = "symmetric"


class Typology(Enum):
    POLARISED = "polarised"
    NOT_POLARISED = "not_polarised"


@dataclass(frozen=True)
class EquivalenceClass:
    i: int
    k: int
    table: TableKind
    typology: Typology

    @property
    def label(self) -> str:
        return f"[{self.i},{self.k}]"


@dataclass(frozen=True)
class DiversityCell:
    """One cell of the diversity table: fraction c split evenly over the
    first k categories, the rest in category k+1."""

    i: int
    k: int
    c: Fraction
    distribution: OrdinalDistribution
    ci: float
    s: float


def _diversity_cell_distribution(n: int, i: int, k: int) -> tuple[Fraction, OrdinalDistribution]:
    c = Fraction(n - i, n - i + 1)
    p = np.zeros(n)
    p[:k] = float(c / k)
    p[k] = float(1 - c)
    return c, OrdinalDistribution(p / p.sum())


@lru_cache(maxsize=None)
def diversity_table(n: int) -> tuple[DiversityCell, ...]:
    """All n(n-1)/2 cells, column-major, CI strictly decreasing down columns."""
    if n < 3:
        raise ParamOutOfRange("diversity table requires n >= 3")
    cells = []
    for k in range(1, n):
        for i in range(1, n - k + 1):
            c, d = _diversity_cell_distribution(n, i, k)
            ci = concentration_index(d)
            cells.append(DiversityCell(i=i, k=k, c=c, distribution=d, ci=ci, s=diversity_from_ci(n, ci)))
    return tuple(cells)


@dataclass(frozen=True)
class HomogeneityCell:
    """One cell of a homogeneity table (skewed or symmetric family)."""

    i: int
    k: int
    typology: Typology
    lam: float
    distribution: OrdinalDistribution
    hi: float
    d1: float = field(default=0.0)

    @property
    def label(self) -> str:
        return f"[{self.i},{self.k}]"


def _polarized_family_cells(cfg: HomogeneityConfig) -> list[HomogeneityCell]:
    """U-shaped cells shared by both homogeneity tables: row i uses the
    fully polarized member with interior mass (10-i)/10, then moves 5% of an
    extreme to the other end per column step right-to-left."""
    cells = []
    for i in range(3, 11):
        lam = (10 - i) / 8.0
        base = (1.0 - lam) / 2.0 + lam / 10.0
        for k in range(12 - i, 10):
            shift = 0.05 * (9 - k)
            p = np.full(10, lam / 10.0)
            p[0] = base + shift
            p[-1] = base - shift
            d = OrdinalDistribution(p / p.sum())
            cells.append(
                HomogeneityCell(
                    i=i, k=k, typology=Typology.POLARISED, lam=lam,
                    distribution=d, hi=homogeneity_index(d, cfg), d1=float(p[0]),
                )
            )
    return cells


@lru_cache(maxsize=None)
def skewed_table(n: int = 10, alpha: float = 1.0) -> tuple[HomogeneityCell, ...]:
    """Homogeneity table over the one-parameter spike family plus the shared
    polarized cells.  Cell [i,k] matches the concentration of diversity cell
    [i,k] via lam = 1 - CI."""
    if n != 10:
        raise ParamOutOfRange("homogeneity tables are defined for n = 10")
    cfg = HomogeneityConfig(alpha=alpha)
    cells = []
    for cell in diversity_table(n):
        lam = 1.0 - cell.ci
        d = lambda_dist(n, lam)
        cells.append(
            HomogeneityCell(
                i=cell.i, k=cell.k, typology=Typology.NOT_POLARISED, lam=lam,
                distribution=d, hi=homogeneity_index(d, cfg), d1=float(d.p[0]),
            )
        )
    cells.extend(_polarized_family_cells(cfg))
    return tuple(cells)


@lru_cache(maxsize=None)
def symmetric_table(n: int = 10, alpha: float = 1.0) -> tuple[HomogeneityCell, ...]:
    """Homogeneity table over the mirror-symmetric family plus the shared
    polarized cells.  The symmetric family tops out at CI = 8/9, so column 1
    holds only [9,1]; concentration matching uses lam = 1 - (9/8) CI."""
    if n != 10:
        raise ParamOutOfRange("homogeneity tables are defined for n = 10")
    cfg = HomogeneityConfig(alpha=alpha)
    cells = []
    max_ci = 8.0 / 9.0
    for cell in diversity_table(n):
        if cell.ci > max_ci + 1e-12:
            continue
        lam = 1.0 - cell.ci / max_ci
        d = symmetric_lambda_mu_dist(LambdaMuParams(n, lam, 0.0))
        cells.append(
            HomogeneityCell(
                i=cell.i, k=cell.k, typology=Typology.NOT_POLARISED, lam=lam,
                distribution=d, hi=homogeneity_index(d, cfg), d1=float(d.p[0]),
            )
        )
    cells.extend(_polarized_family_cells(cfg))
    return tuple(cells)


def _column(cells, j: int, typology: Typology):
    out = [c for c in cells if c.k == j and c.typology is typology]
    return sorted(out, key=lambda c: c.i)


_S_TOL = 1e-9


def _diversity_column(s: float, n: int) -> int:
    # columns are half-open (k, k+1]; the tolerance keeps exact-integer s
    # (e.g. a table cell's own uniform-over-7 member) in its column
    if s <= 2.0 + _S_TOL:
        return 1
    j = int(np.ceil(s - _S_TOL)) - 1
    return min(max(j, 2), n - 1)


def classify_equivalence(
    d: OrdinalDistribution, cfg: HomogeneityConfig = DEFAULT_CONFIG
) -> EquivalenceClass:
    """Assign a decile distribution to its equivalence class.

    Steps: diversity s from CI picks the column; the skewness class routes to
    the skewed or symmetric table; comparing HI against the column's last
    in-family cell decides the typology; an HI interval search down the
    column (or along the polarized row) picks the cell.  Total: every
    distribution lands in exactly one class.
    """
    if d.n != 10:
        raise ParamOutOfRange("equivalence classification is defined for n = 10")
    s = diversity_from_ci(d.n, concentration_index(d))
    j = _diversity_column(s, d.n)

    _, var = moments(d)
    if var <= 0.0:
        # singleton: trivially compact, classed at the top of the skewed table
        return EquivalenceClass(1, 1, TableKind.SKEWED, Typology.NOT_POLARISED)

    skew = skewness_class(d)
    if skew.kind is SkewKind.AS:
        table_kind, cells = TableKind.SYMMETRIC, symmetric_table(d.n, cfg.alpha)
    else:
        table_kind, cells = TableKind.SKEWED, skewed_table(d.n, cfg.alpha)

    hi = homogeneity_index(d, cfg)
    yellow = _column(cells, j, Typology.NOT_POLARISED)
    threshold = yellow[-1].hi  # last in-family cell of the column

    if hi >= threshold:
        # cells are sorted by descending HI; take the first whose own bound
        # is met — the top cell absorbs anything above its bound
        chosen = yellow[-1]
        for cell in yellow:
            if hi >= cell.hi:
                chosen = cell
                break
        return EquivalenceClass(chosen.i, chosen.k, table_kind, Typology.NOT_POLARISED)

    row = _column_row_polarized(cells, 11 - j)
    # rightmost class owns everything at or below its HI; leftmost absorbs up
    chosen = row[-1]
    for cell in row:  # columns ascend left to right; HI descends
        if hi >= cell.hi:
            chosen = cell
            break
    return EquivalenceClass(chosen.i, chosen.k, table_kind, Typology.POLARISED)


def _column_row_polarized(cells, i: int):
    out = [c for c in cells if c.i == i and c.typology is Typology.POLARISED]
    return sorted(out, key=lambda c: c.k)


# ---------------------------------------------------------------------------
# homogeneity groups


@dataclass(frozen=True)
class HomogeneityGroup:
    label: str  # A | B | C | D
    thresholds: dict[int, float]  # s -> HI(s) for s in {4, 5, 6}


def homogeneity_group(hi: float, n: int = 10, cfg: HomogeneityConfig = DEFAULT_CONFIG) -> HomogeneityGroup:
    """Bucket an HI value into acceptance groups A-D split at the computed
    equal-abundance thresholds HI(4), HI(5), HI(6)."""
    if not 0.0 <= hi <= 1.0 + 1e-9:
        raise ParamOutOfRange("hi must lie in [0, 1]")
    th = {s: hi_equal_abundance(n, s, cfg) for s in (4, 5, 6)}
    if hi >= th[4]:
        label = "A"
    elif hi >= th[5]:
        label = "B"
    elif hi >= th[6]:
        label = "C"
    else:
        label = "D"
    return HomogeneityGroup(label=label, thresholds=th)


# ---------------------------------------------------------------------------
# benchmark partitions

#: decile ranges used throughout the benchmark analysis
THESIS_PARTITION = ((1, 3), (4, 7), (8, 10))
#: lowest 40% / middle 40% / highest 20% alternative
FILMER_PRITCHETT_PARTITION = ((1, 4), (5, 8), (9, 10))

DEFAULT_CUTOFFS = {"hd": 0.70, "md": 0.90, "ld": 0.70}

PARTITION_PRESETS = {
    "thesis": THESIS_PARTITION,
    "filmer-pritchett": FILMER_PRITCHETT_PARTITION,
}


@dataclass(frozen=True)
class BenchmarkCategory:
    label: str  # HD | MD | LD | none
    low: float
    mid: float
    high: float
    cutoffs: dict[str, float]


def benchmark_category(
    d: OrdinalDistribution,
    low: tuple[int, int] = THESIS_PARTITION[0],
    mid: tuple[int, int] = THESIS_PARTITION[1],
    high: tuple[int, int] = THESIS_PARTITION[2],
    cutoffs: dict[str, float] | None = None,
) -> BenchmarkCategory:
    """Cumulative shares over a low/mid/high split of the categories, labeled
    HD when the low share reaches the cutoff, LD for the high share, MD for
    the mid share (which uses its own, higher cutoff)."""
    cutoffs = dict(DEFAULT_CUTOFFS if cutoffs is None else cutoffs)
    ranges = (low, mid, high)
    covered = []
    for lo, hi_ in ranges:
        if not (1 <= lo <= hi_ <= d.n):
            raise BadPartition(f"range {lo}-{hi_} outside 1..{d.n}")
        covered.extend(range(lo, hi_ + 1))
    if sorted(covered) != list(range(1, d.n + 1)):
        raise BadPartition("ranges must partition the categories")
    if cutoffs["hd"] + cutoffs["ld"] <= 1.0:
        raise BadPartition("cutoffs must make HD and LD mutually exclusive")
    # slice end is exclusive; ranges are inclusive category indices
    lo_f = float(d.p[low[0] - 1 : low[1]].sum())
    mid_f = float(d.p[mid[0] - 1 : mid[1]].sum())
    hi_f = float(d.p[high[0] - 1 : high[1]].sum())
    if lo_f >= cutoffs["hd"]:
        label = "HD"
    elif hi_f >= cutoffs["ld"]:
        label = "LD"
    elif mid_f >= cutoffs["md"]:
        label = "MD"
    else:
        label = "none"
    return BenchmarkCategory(label=label, low=lo_f, mid=mid_f, high=hi_f, cutoffs=cutoffs)


# ---------------------------------------------------------------------------
# region profiles


@dataclass(frozen=True)
class RegionProfile:
    """Everything the toolkit derives for one region."""

    region_id: str
    population: int
    distribution: OrdinalDistribution
    excluded_fraction: float
    ci: float
    di: float
    hi: float
    s: float
    location: LocationResult
    skew: SkewClass | None
    equivalence: EquivalenceClass
    group: HomogeneityGroup
    benchmark: BenchmarkCategory
    pwavgs_score: float | None = None
    pwavgs_rank: int | None = None
    pwavgs_decile: int | None = None

    @property
    def li(self) -> int:
        return self.location.lambda1


def region_profile(
    d: OrdinalDistribution,
    population: int,
    region_id: str = "",
    excluded_fraction: float = 0.0,
    cfg: HomogeneityConfig = DEFAULT_CONFIG,
    partition=THESIS_PARTITION,
    pwavgs_score: float | None = None,
    pwavgs_rank: int | None = None,
    pwavgs_decile: int | None = None,
) -> RegionProfile:
    """Compute the full derived profile for one region; deterministic."""
    ci = concentration_index(d)
    _, var = moments(d)
    hi = homogeneity_index(d, cfg)
    return RegionProfile(
        region_id=region_id,
        population=population,
        distribution=d,
        excluded_fraction=excluded_fraction,
        ci=ci,
        di=divergence_index(d),
        hi=hi,
        s=diversity_from_ci(d.n, ci),
        location=location_index(d),
        skew=None if var <= 0.0 else skewness_class(d),
        equivalence=classify_equivalence(d, cfg),
        group=homogeneity_group(hi, d.n, cfg),
        benchmark=benchmark_category(d, *partition),
        pwavgs_score=pwavgs_score,
        pwavgs_rank=pwavgs_rank,
        pwavgs_decile=pwavgs_decile,
    )


def concentration_matrix(
    profiles: list[RegionProfile],
    category_range: tuple[int, int] = THESIS_PARTITION[0],
    bands: int = 10,
) -> dict:
    """Counts of regions per (concentration band x location index).

    Band b covers [b*100/bands, (b+1)*100/bands) percent concentration in the
    chosen category range; the top band is closed at 100.
    """
    n = profiles[0].distribution.n if profiles else 10
    lo, hi_ = category_range
    counts = np.zeros((bands, n), dtype=int)
    for prof in profiles:
        share = float(prof.distribution.p[lo - 1 : hi_].sum()) * 100.0
        band = min(int(share // (100.0 / bands)), bands - 1)
        counts[band, prof.li - 1] += 1
    return {
        "bands": [
            f"{int(b * 100 / bands)} to {int((b + 1) * 100 / bands)}" for b in range(bands)
        ],
        "counts": counts,
        "row_totals": counts.sum(axis=1),
        "col_totals": counts.sum(axis=0),
    }


# ---------------------------------------------------------------------------
# serialization

PERCENT_FIELDS = ("ci", "di", "hi", "excluded_fraction")


def profile_to_dict(p: RegionProfile) -> dict:
    """JSON-ready mapping with full double precision and chart arrays."""
    from .concentration import lorenz_curve
    from .divergence import bcdfa

    return {
        "region_id": p.region_id,
        "population": p.population,
        "distribution": [float(x) for x in p.distribution.p],
        "excluded_fraction": p.excluded_fraction,
        "ci": p.ci,
        "di": p.di,
        "hi": p.hi,
        "s": p.s,
        "li": p.li,
        "li_upper": p.location.lambda2,
        "csd": p.location.csd,
        "bcf": [float(x) for x in p.location.gamma],
        "lorenz": [float(x) for x in lorenz_curve(p.distribution).y],
        "bcdfa": [float(x) for x in bcdfa(p.distribution).normalize().r],
        "skew_class": None if p.skew is None else p.skew.kind.value,
        "skew_sub": None if p.skew is None or p.skew.sub is None else p.skew.sub.value,
        "gamma1": None if p.skew is None else p.skew.gamma1,
        "equivalence_class": p.equivalence.label,
        "equivalence_table": p.equivalence.table.value,
        "typology": p.equivalence.typology.value,
        "group": p.group.label,
        "benchmark": p.benchmark.label,
        "benchmark_low": p.benchmark.low,
        "benchmark_mid": p.benchmark.mid,
        "benchmark_high": p.benchmark.high,
        "pwavgs_score": p.pwavgs_score,
        "pwavgs_rank": p.pwavgs_rank,
        "pwavgs_decile": p.pwavgs_decile,
    }


PROFILE_CSV_COLUMNS = (
    "region_id",
    "population",
    "excluded_pct",
    "ci_pct",
    "di_pct",
    "hi_pct",
    "s",
    "li",
    "csd_pct",
    "skew_class",
    "equivalence_class",
    "typology",
    "group",
    "benchmark",
    "pwavgs_score",
    "pwavgs_rank",
    "pwavgs_decile",
)


def profile_csv_row(p: RegionProfile) -> list[str]:
    """One CSV row per region; percentages rendered to 2 decimals."""
    pct = lambda x: f"{100.0 * x:.2f}"
    return [
        p.region_id,
        str(p.population),
        pct(p.excluded_fraction),
        pct(p.ci),
        pct(p.di),
        pct(p.hi),
        f"{p.s:.4f}",
        str(p.li),
        pct(p.location.csd),
        "" if p.skew is None else p.skew.kind.value,
        p.equivalence.label,
        p.equivalence.typology.value,
        p.group.label,
        p.benchmark.label,
        "" if p.pwavgs_score is None else f"{p.pwavgs_score:.4f}",
        "" if p.pwavgs_rank is None else str(p.pwavgs_rank),
        "" if p.pwavgs_decile is None else str(p.pwavgs_decile),
    ]
