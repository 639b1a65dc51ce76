import io

import numpy as np
import pytest

from ordinal_peer import aggregate, parse_subunit_csv, pwavgs, score_decile
from ordinal_peer.errors import (
    EmptyInput,
    MissingColumn,
    NoScores,
    RegionAllExcluded,
    UnreadableFile,
    ZeroVariance,
)
from ordinal_peer.ingest import SubunitRecord

from .conftest import FIXTURE_CSV

HEADER = "subunit_id,region_id,population,category,score\n"


def parse(text, n=10):
    return parse_subunit_csv(text, n)


class TestParse:
    def test_valid_rows(self):
        records, issues = parse(HEADER + "a,R1,100,1,900\nb,R1,50,2,\nc,R2,10,10,1100\n")
        assert len(records) == 3
        assert issues == []
        assert records[0] == SubunitRecord("a", "R1", 100, 1, 900.0)
        assert records[1].score is None

    def test_empty_category_excluded(self):
        records, issues = parse(HEADER + "a,R1,100,,\n")
        assert records[0].excluded
        assert len(issues) == 1 and "excluded" in issues[0]

    def test_out_of_range_category_excluded(self):
        records, issues = parse(HEADER + "a,R1,100,11,\n")
        assert records[0].excluded
        assert "outside" in issues[0]

    def test_negative_population_rejected(self):
        records, issues = parse(HEADER + "a,R1,-5,1,\nb,R1,10,1,\n")
        assert len(records) == 1
        assert records[0].subunit_id == "b"
        assert "rejected" in issues[0] and "row 2" in issues[0]

    def test_missing_column(self):
        with pytest.raises(MissingColumn):
            parse("subunit_id,region_id,population\na,R1,10\n")

    def test_missing_file(self):
        with pytest.raises(UnreadableFile):
            parse_subunit_csv("/nonexistent/path.csv", 10)

    def test_stream_input(self):
        records, _ = parse_subunit_csv(io.StringIO(HEADER + "a,R1,10,3,\n"), 10)
        assert records[0].category == 3

    def test_score_column_optional(self):
        records, issues = parse_subunit_csv("subunit_id,region_id,population,category\na,R1,10,3\n", 10)
        assert records[0].score is None
        assert issues == []


class TestAggregate:
    def test_two_subunits(self):
        records, _ = parse(HEADER + "a,R,100,1,\nb,R,100,2,\n")
        ds = aggregate(records, 10)
        d = ds.distribution("R")
        assert d.p[:2].tolist() == [0.5, 0.5]
        assert ds.regions["R"].total_population == 200

    def test_exclusion_accounting(self):
        records, _ = parse(HEADER + "a,R,90,1,\nb,R,10,,\n")
        ds = aggregate(records, 10)
        agg = ds.regions["R"]
        assert agg.excluded_population == 10
        assert agg.excluded_fraction == pytest.approx(0.1)
        assert ds.distribution("R").p[0] == pytest.approx(1.0)

    def test_auburn_note_reproduced(self):
        records, _ = parse_subunit_csv(FIXTURE_CSV, 10)
        ds = aggregate(records, 10)
        agg = ds.regions["Auburn"]
        assert agg.total_population == 84_122
        assert round(100 * agg.excluded_fraction, 2) == 2.31

    def test_all_excluded_region(self):
        records, _ = parse(HEADER + "a,R,90,,\n")
        ds = aggregate(records, 10)
        with pytest.raises(RegionAllExcluded):
            ds.distribution("R")

    def test_conservation(self):
        records, _ = parse_subunit_csv(FIXTURE_CSV, 10)
        ds = aggregate(records, 10)
        total_in = sum(r.population for r in records)
        total_out = sum(
            int(agg.category_populations.sum()) + agg.excluded_population
            for agg in ds.regions.values()
        )
        assert total_in == total_out

    def test_empty_records(self):
        with pytest.raises(EmptyInput):
            aggregate([], 10)

    def test_reserialize_idempotent(self):
        records, _ = parse_subunit_csv(FIXTURE_CSV, 10)
        ds1 = aggregate(records, 10)
        # rebuild a CSV from the aggregate and re-ingest
        lines = [HEADER.strip()]
        for rid in ds1.region_ids():
            agg = ds1.regions[rid]
            for cat, pop in enumerate(agg.category_populations, start=1):
                if pop:
                    lines.append(f"{rid}-{cat},{rid},{int(pop)},{cat},")
            if agg.excluded_population:
                lines.append(f"{rid}-x,{rid},{agg.excluded_population},,")
        ds2 = aggregate(parse_subunit_csv("\n".join(lines) + "\n", 10)[0], 10)
        for rid in ds1.region_ids():
            a, b = ds1.regions[rid], ds2.regions[rid]
            assert a.total_population == b.total_population
            assert a.excluded_population == b.excluded_population
            assert np.array_equal(a.category_populations, b.category_populations)


class TestPwavgs:
    def test_single_region_constant_score(self):
        records, _ = parse(HEADER + "a,R,100,1,1000\nb,R,300,2,1000\nc,Q,50,1,900\n")
        ds = aggregate(records, 10)
        result = pwavgs(ds)
        assert result["R"].score == pytest.approx(1000.0)

    def test_population_weighting(self):
        records, _ = parse(HEADER + "a,R,100,1,900\nb,R,300,2,1100\nc,Q,50,1,900\n")
        ds = aggregate(records, 10)
        assert pwavgs(ds)["R"].score == pytest.approx((100 * 900 + 300 * 1100) / 400)

    def test_standardization_round_trip(self):
        rng = np.random.default_rng(70)
        rows = [HEADER.strip()]
        for i, score in enumerate(rng.uniform(800, 1200, 40)):
            rows.append(f"s{i},R{i:02d},100,1,{score}")
        ds = aggregate(parse_subunit_csv("\n".join(rows) + "\n", 10)[0], 10)
        result = pwavgs(ds)
        std = np.array([r.standardized for r in result.values()])
        assert std.mean() == pytest.approx(1000.0, abs=1e-6)
        assert std.std() == pytest.approx(100.0, abs=1e-6)

    def test_hand_formula(self):
        # z-scores against a dataset with known mean and spread
        records, _ = parse(HEADER + "a,A,1,1,930.11\nb,B,1,1,995.14\nc,C,1,1,1060.17\n")
        result = pwavgs(aggregate(records, 10))
        mu, sigma = 995.14, np.std([930.11, 995.14, 1060.17])
        assert result["A"].standardized == pytest.approx(1000 + 100 * (930.11 - mu) / sigma)
        assert result["B"].standardized == pytest.approx(1000.0)

    def test_rank_ascending(self):
        records, _ = parse(HEADER + "a,A,1,1,500\nb,B,1,1,400\nc,C,1,1,600\n")
        result = pwavgs(aggregate(records, 10))
        assert result["B"].rank == 1  # most disadvantaged
        assert result["A"].rank == 2
        assert result["C"].rank == 3

    def test_errors(self):
        records, _ = parse(HEADER + "a,A,1,1,\n")
        with pytest.raises(NoScores):
            pwavgs(aggregate(records, 10))
        records, _ = parse(HEADER + "a,A,1,1,500\nb,B,1,1,500\n")
        with pytest.raises(ZeroVariance):
            pwavgs(aggregate(records, 10))


class TestConcordance:
    def test_pass_through(self):
        from ordinal_peer.ingest import parse_concordance_csv

        text = "region_id,parent_id,overlap_fraction\nR1,P1,0.9908\nR1,P2,0.0092\n"
        records = parse_concordance_csv(text)
        assert [(r.region_id, r.parent_id, r.overlap_fraction) for r in records] == [
            ("R1", "P1", 0.9908),
            ("R1", "P2", 0.0092),
        ]

    def test_missing_column(self):
        from ordinal_peer.ingest import parse_concordance_csv

        with pytest.raises(MissingColumn):
            parse_concordance_csv("region_id,parent_id\nR1,P1\n")


class TestScoreDecile:
    @pytest.mark.parametrize(
        "score,decile",
        [
            (500.0, 1),
            (873.99, 1),
            (874.0, 2),  # boundaries are half-open [lo, hi)
            (930.99, 2),
            (931.0, 3),
            (968.0, 4),
            (997.0, 5),
            (1020.0, 6),
            (1041.0, 7),
            (1050.0, 7),
            (1061.0, 8),
            (1081.0, 9),
            (1104.0, 10),
            (1193.99, 10),
            (1300.0, 10),  # clamp above the published table
            (100.0, 1),  # clamp below
        ],
    )
    def test_boundaries(self, score, decile):
        assert score_decile(score) == decile
