import itertools

import numpy as np
import pytest

from ordinal_peer import (
    Clustering,
    DistanceMatrix,
    DistanceParams,
    choose_k,
    dissimilarity,
    distance_db_csv,
    distance_matrix,
    l1_shape,
    location_distance,
    make_distribution,
    pam,
    region_profile,
    silhouette,
    sorensen,
)
from ordinal_peer.errors import BothEmpty, KTooLarge, LengthMismatch, ParamOutOfRange, SingleCluster

from .conftest import singleton


def profile_of(vector, population, rid):
    return region_profile(make_distribution(vector), population, rid)


def blob_profiles():
    """Two well-separated blobs of four regions each: low-decile small
    regions vs high-decile large regions."""
    low = [0.5, 0.25, 0.12, 0.06, 0.03, 0.02, 0.01, 0.005, 0.003, 0.002]
    high = list(reversed(low))
    profiles = []
    rng = np.random.default_rng(60)
    for i in range(4):
        jitter = rng.uniform(0.97, 1.03, 10)
        profiles.append(profile_of(np.array(low) * jitter, 10_000 + 300 * i, f"L{i}"))
    for i in range(4):
        jitter = rng.uniform(0.97, 1.03, 10)
        profiles.append(profile_of(np.array(high) * jitter, 95_000 + 300 * i, f"H{i}"))
    return profiles


def exhaustive_best_cost(matrix: DistanceMatrix, k: int) -> float:
    m = len(matrix.ids)
    best = np.inf
    for combo in itertools.combinations(range(m), k):
        cost = matrix.d[:, combo].min(axis=1).sum()
        best = min(best, cost)
    return float(best)


class TestTermMetrics:
    def test_sorensen(self):
        assert sorensen([3, 2, 1], [3, 2, 1]) == pytest.approx(0.0)
        assert sorensen([5, 0], [0, 7]) == pytest.approx(1.0)
        assert sorensen([10, 0], [5, 5]) == pytest.approx(0.5)

    def test_sorensen_errors(self):
        with pytest.raises(LengthMismatch):
            sorensen([1, 2], [1, 2, 3])
        with pytest.raises(BothEmpty):
            sorensen([0, 0], [0, 0])
        with pytest.raises(ParamOutOfRange):
            sorensen([-1, 2], [1, 2])

    def test_l1_shape(self):
        a = make_distribution([0.5, 0.5])
        b = make_distribution([1.0, 0.0])
        assert l1_shape(a, a) == pytest.approx(0.0)
        assert l1_shape(a, b) == pytest.approx(0.5)
        assert l1_shape(singleton(10, 1), singleton(10, 10)) == pytest.approx(1.0)

    def test_location_distance(self):
        assert location_distance(singleton(10, 1), singleton(10, 10)) == pytest.approx(1.0)
        assert location_distance(singleton(10, 4), singleton(10, 5)) == pytest.approx(1 / 9)
        d = make_distribution(np.full(10, 0.1))
        assert location_distance(d, d) == pytest.approx(0.0)

    def test_location_distance_breaks_shuffling_invariance(self):
        # l1 cannot tell how far apart two singletons are; the CDF term can
        a, b, c = singleton(10, 1), singleton(10, 2), singleton(10, 10)
        assert l1_shape(a, b) == l1_shape(a, c) == 1.0
        assert location_distance(a, b) < location_distance(a, c)


class TestDissimilarity:
    def test_identity(self):
        p = profile_of([0.2] * 5 + [0] * 5, 1000, "X")
        assert dissimilarity(p, p) == pytest.approx(0.0)

    def test_max_different_pair(self):
        a = profile_of(singleton(10, 1).p, 1000, "A")
        b = profile_of(singleton(10, 10).p, 1000, "B")
        # disjoint count mass, disjoint shapes, opposite locations
        assert dissimilarity(a, b) == pytest.approx(1.0)

    def test_weights_validated(self):
        with pytest.raises(ParamOutOfRange):
            DistanceParams(0.5, 0.5, 0.5)
        with pytest.raises(ParamOutOfRange):
            DistanceParams(-0.1, 0.6, 0.5)

    def test_pseudometric_on_fixture(self):
        profiles = blob_profiles()
        matrix = distance_matrix(profiles)
        d = matrix.d
        assert np.allclose(d, d.T)
        assert np.allclose(np.diag(d), 0.0)
        assert np.all(d >= -1e-12) and np.all(d <= 1 + 1e-12)
        m = len(profiles)
        for i, j, k in itertools.permutations(range(m), 3):
            assert d[i, j] <= d[i, k] + d[k, j] + 1e-9


class TestPam:
    def test_k_equals_region_count(self):
        profiles = blob_profiles()
        matrix = distance_matrix(profiles)
        clustering = pam(matrix, len(profiles))
        assert clustering.cost == pytest.approx(0.0)
        assert set(clustering.medoids) == set(range(len(profiles)))

    def test_k1_matches_exhaustive(self):
        profiles = blob_profiles()
        matrix = distance_matrix(profiles)
        clustering = pam(matrix, 1)
        assert clustering.cost == pytest.approx(exhaustive_best_cost(matrix, 1), abs=1e-12)

    def test_two_blobs_split(self):
        profiles = blob_profiles()
        matrix = distance_matrix(profiles)
        clustering = pam(matrix, 2)
        groups = {}
        for idx, label in enumerate(clustering.assignment):
            groups.setdefault(label, set()).add(matrix.ids[idx][0])
        assert sorted(groups.values(), key=len) == [{"H"}, {"L"}] or list(groups.values()) in (
            [{"L"}, {"H"}],
            [{"H"}, {"L"}],
        )
        assert clustering.cost == pytest.approx(exhaustive_best_cost(matrix, 2), abs=1e-12)

    def test_matches_exhaustive_on_small_fixtures(self):
        profiles = blob_profiles()
        matrix = distance_matrix(profiles)
        for k in range(1, 6):
            assert pam(matrix, k).cost == pytest.approx(
                exhaustive_best_cost(matrix, k), abs=1e-12
            ), f"k={k}"

    def test_matches_exhaustive_on_random_matrices(self):
        rng = np.random.default_rng(61)
        for trial in range(20):
            m = int(rng.integers(4, 9))
            pts = rng.uniform(0, 1, (m, 2))
            d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
            d = d / max(1.0, d.max())
            matrix = DistanceMatrix(ids=tuple(f"r{i}" for i in range(m)), d=d)
            for k in (1, 2, 3):
                assert pam(matrix, k).cost == pytest.approx(
                    exhaustive_best_cost(matrix, k), abs=1e-9
                ), f"trial={trial} k={k}"

    def test_deterministic(self):
        profiles = blob_profiles()
        matrix = distance_matrix(profiles)
        a = pam(matrix, 3)
        b = pam(matrix, 3)
        assert a == b

    def test_k_too_large(self):
        matrix = distance_matrix(blob_profiles())
        with pytest.raises(KTooLarge):
            pam(matrix, 9)


class TestSilhouette:
    def test_two_tight_blobs_near_one(self):
        matrix = distance_matrix(blob_profiles())
        clustering = pam(matrix, 2)
        assert clustering.avg_silhouette > 0.8

    def test_all_identical_is_zero(self):
        p = [0.1] * 10
        profiles = [profile_of(p, 1000, f"r{i}") for i in range(4)]
        matrix = distance_matrix(profiles)
        clustering = pam(matrix, 2)
        assert clustering.avg_silhouette == pytest.approx(0.0)

    def test_hand_computed_four_points(self):
        # distances: two pairs {0,1} and {2,3}; within 0.1, across 0.8
        d = np.array(
            [
                [0.0, 0.1, 0.8, 0.8],
                [0.1, 0.0, 0.8, 0.8],
                [0.8, 0.8, 0.0, 0.1],
                [0.8, 0.8, 0.1, 0.0],
            ]
        )
        matrix = DistanceMatrix(ids=("a", "b", "c", "d"), d=d)
        clustering = Clustering(k=2, medoids=(0, 2), assignment=(0, 0, 1, 1), cost=0.2, avg_silhouette=None)
        # every point: a = 0.1, b = 0.8 -> s = 0.7/0.8
        assert silhouette(matrix, clustering) == pytest.approx(0.7 / 0.8)

    def test_single_cluster_error(self):
        matrix = distance_matrix(blob_profiles())
        clustering = pam(matrix, 1)
        with pytest.raises(SingleCluster):
            silhouette(matrix, clustering)

    def test_singleton_cluster_contributes_zero(self):
        d = np.array(
            [
                [0.0, 0.05, 0.9],
                [0.05, 0.0, 0.9],
                [0.9, 0.9, 0.0],
            ]
        )
        matrix = DistanceMatrix(ids=("a", "b", "c"), d=d)
        clustering = Clustering(k=2, medoids=(0, 2), assignment=(0, 0, 1), cost=0.05, avg_silhouette=None)
        # a and b: s = (0.9 - 0.05)/0.9; c alone: 0
        expect = (2 * (0.85 / 0.9) + 0.0) / 3
        assert silhouette(matrix, clustering) == pytest.approx(expect)


class TestChooseK:
    def test_recovers_planted_blob_count(self):
        rng = np.random.default_rng(62)
        centers = [
            [0.6, 0.2, 0.1, 0.04, 0.02, 0.02, 0.01, 0.005, 0.003, 0.002],
            [0.01, 0.02, 0.05, 0.12, 0.3, 0.3, 0.12, 0.05, 0.02, 0.01],
            [0.002, 0.003, 0.005, 0.01, 0.02, 0.02, 0.04, 0.1, 0.2, 0.6],
        ]
        pops = [9_000, 50_000, 140_000]
        profiles = []
        for b, (center, pop) in enumerate(zip(centers, pops)):
            for i in range(4):
                jitter = rng.uniform(0.95, 1.05, 10)
                profiles.append(profile_of(np.array(center) * jitter, pop + 500 * i, f"b{b}r{i}"))
        matrix = distance_matrix(profiles)
        best, scores = choose_k(matrix, [2, 3, 4])
        assert best == 3
        assert set(scores) == {2, 3, 4}

    def test_single_candidate(self):
        matrix = distance_matrix(blob_profiles())
        best, scores = choose_k(matrix, [2])
        assert best == 2

    def test_tie_takes_smaller_k(self):
        # a perfectly ambiguous 4-point square gives equal silhouettes
        d = np.array(
            [
                [0.0, 0.5, 0.5, 0.5],
                [0.5, 0.0, 0.5, 0.5],
                [0.5, 0.5, 0.0, 0.5],
                [0.5, 0.5, 0.5, 0.0],
            ]
        )
        matrix = DistanceMatrix(ids=("a", "b", "c", "d"), d=d)
        best, scores = choose_k(matrix, [2, 3])
        assert scores[2] == pytest.approx(scores[3])
        assert best == 2


class TestDistanceDb:
    def test_export_layout(self):
        profiles = blob_profiles()
        matrix = distance_matrix(profiles)
        text = distance_db_csv(profiles, matrix, states={"L0": "NT"})
        lines = text.strip().split("\n")
        header = lines[0].split(",")
        assert header == [
            "region_1", "state_1", "region_2", "state_2",
            "pop_1", "pop_2", "hi_1", "hi_2", "li_1", "li_2", "distance",
        ]
        m = len(profiles)
        assert len(lines) == 1 + m * (m - 1)
        first = lines[1].split(",")
        assert first[0] == "L0" and first[1] == "NT"
        h_rows = [ln for ln in lines[1:] if ln.startswith("H0,")]
        assert h_rows and all(r.split(",")[1] == "" for r in h_rows)
