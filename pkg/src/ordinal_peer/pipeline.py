"""Dataset-to-profiles glue shared by the CLI and the service."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .classifier import RegionProfile, THESIS_PARTITION, region_profile
from .errors import NoScores
from .homogeneity import DEFAULT_CONFIG, HomogeneityConfig
from .ingest import RegionDataset, pwavgs


def build_profiles(
    dataset: RegionDataset,
    cfg: HomogeneityConfig = DEFAULT_CONFIG,
    partition=THESIS_PARTITION,
    workers: int = 1,
) -> list[RegionProfile]:
    """Profile every region, ordered by region id.

    Results are independent per region, so ``workers`` only changes wall
    time, never content.
    """
    try:
        scores = pwavgs(dataset)
    except NoScores:
        scores = {}

    ids = dataset.region_ids()

    def one(rid: str) -> RegionProfile:
        agg = dataset.regions[rid]
        sc = scores.get(rid)
        return region_profile(
            dataset.distribution(rid),
            population=agg.total_population,
            region_id=rid,
            excluded_fraction=agg.excluded_fraction,
            cfg=cfg,
            partition=partition,
            pwavgs_score=None if sc is None else sc.standardized,
            pwavgs_rank=None if sc is None else sc.rank,
            pwavgs_decile=None if sc is None else sc.decile,
        )

    if workers <= 1:
        return [one(rid) for rid in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, ids))
