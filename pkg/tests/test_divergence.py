import numpy as np
import pytest

from ordinal_peer import (
    bcdf,
    bcdfa,
    compactness,
    divergence_index,
    jsd,
    make_distribution,
    moments,
    pi_lov,
    pi_variance,
    singleton_bcdfa,
)
from ordinal_peer.divergence import Autocorrelation
from ordinal_peer.errors import LengthMismatch, NotNormalized

from .conftest import random_distribution, singleton, two_point_extreme, uniform


class TestBcdf:
    def test_singleton_n3(self):
        assert bcdf(singleton(3, 1)).f.tolist() == [1, 1, 1, 0, 0]

    def test_uniform_n2(self):
        f = bcdf(uniform(2)).f
        assert f == pytest.approx([0.5, 1.0, 0.5])
        assert f.sum() == pytest.approx(2.0)

    def test_structure(self):
        rng = np.random.default_rng(3)
        d = random_distribution(rng, 10)
        f = bcdf(d).f
        cdf = np.cumsum(d.p)
        assert f[:10] == pytest.approx(cdf, abs=1e-12)
        assert f[10:] == pytest.approx(1.0 - cdf[:-1], abs=1e-12)

    def test_mass_is_n(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            n = int(rng.integers(2, 21))
            d = random_distribution(rng, n)
            assert float(bcdf(d).f.sum()) == pytest.approx(n, abs=1e-9)


class TestBcdfa:
    def test_singleton_triangle_any_location(self):
        n = 10
        expect = np.zeros(4 * n - 3)
        expect[n - 1 : 3 * n - 2] = np.concatenate((np.arange(1, n + 1), np.arange(n - 1, 0, -1)))
        for j in range(1, n + 1):
            r = bcdfa(singleton(n, j)).r
            assert r == pytest.approx(expect, abs=1e-12)

    def test_singleton_location_invariance_bitwise(self):
        n = 10
        rs = [bcdfa(singleton(n, j)).r for j in range(1, n + 1)]
        for r in rs[1:]:
            assert np.array_equal(r, rs[0])

    def test_center_values(self):
        for n in range(2, 21):
            assert bcdfa(singleton(n)).center == pytest.approx(n, abs=1e-9)
            assert bcdfa(two_point_extreme(n)).center == pytest.approx((n - 1) / 2 + 1, abs=1e-9)

    def test_symmetry_and_mass(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            n = int(rng.integers(2, 21))
            r = bcdfa(random_distribution(rng, n)).r
            assert r == pytest.approx(r[::-1], abs=1e-9)
            assert float(r.sum()) == pytest.approx(n * n, abs=1e-9 * n * n)
            assert r.argmax() == 2 * n - 2

    def test_matches_fft_oracle(self):
        # direct convolution against an independent FFT autocorrelation
        rng = np.random.default_rng(6)
        for _ in range(25):
            n = int(rng.integers(2, 16))
            d = random_distribution(rng, n)
            f = bcdf(d).f
            size = 1
            while size < 2 * f.size:
                size *= 2
            spec = np.fft.rfft(f, size)
            acf = np.fft.irfft(spec * np.conj(spec), size)
            oracle = np.concatenate((acf[-(f.size - 1) :], acf[: f.size]))
            assert bcdfa(d).r == pytest.approx(oracle, abs=1e-9)

    def test_variance_lift(self):
        # BCDFA variance (as normalized mass over its index scale) equals
        # (n^2 - 1)/6 + 2 var(d)
        rng = np.random.default_rng(7)
        n = 10
        idx = np.arange(1, 4 * n - 2, dtype=float)
        for _ in range(1000):
            d = random_distribution(rng, n)
            w = bcdfa(d).normalize().r
            mean = float(np.dot(w, idx))
            var = float(np.dot(w, (idx - mean) ** 2))
            _, dvar = moments(d)
            assert var == pytest.approx((n * n - 1) / 6 + 2 * dvar, abs=1e-9)

    def test_mirror_invariance(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            d = random_distribution(rng, 10)
            assert bcdfa(d.reversed()).r == pytest.approx(bcdfa(d).r, abs=1e-12)


class TestCompactness:
    def test_singleton_is_one(self):
        for n in range(2, 21):
            assert compactness(singleton(n)) == pytest.approx(1.0, abs=1e-12)

    def test_two_point_closed_form(self):
        for n in range(2, 21):
            assert compactness(two_point_extreme(n)) == pytest.approx((3 * n + 1) / (4 * n), abs=1e-12)

    def test_uniform_closed_form(self):
        for n in range(2, 21):
            expect = (11 * n**3 - 2 * n**2 + n + 2) / (12 * n**3)
            assert compactness(uniform(n)) == pytest.approx(expect, abs=1e-12)

    def test_range(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            n = int(rng.integers(2, 15))
            s = compactness(random_distribution(rng, n))
            assert (3 * n + 1) / (4 * n) - 1e-12 <= s <= 1 + 1e-12

    def test_compactness_variance_link(self):
        # larger compactness implies variance not larger, vs the uniform.
        # The equivalence is not exact at the boundary (sampled violations
        # all sit within |S - S_u| < 0.003), so check the direction away
        # from it.
        n = 10
        margin = 0.005
        u_s = compactness(uniform(n))
        _, u_var = moments(uniform(n))
        rng = np.random.default_rng(10)
        for _ in range(1000):
            d = random_distribution(rng, n)
            s = compactness(d)
            _, v = moments(d)
            if s > u_s + margin:
                assert v <= u_var + 1e-9
            elif s < u_s - margin:
                assert v >= u_var - 1e-9


class TestJsd:
    def test_identical_is_zero(self):
        p = bcdfa(uniform(10)).normalize()
        assert jsd(p, p) == pytest.approx(0.0, abs=1e-12)

    def test_symmetry(self):
        p = bcdfa(uniform(10)).normalize()
        q = singleton_bcdfa(10, normalized=True)
        assert jsd(p, q) == pytest.approx(jsd(q, p), abs=1e-15)

    def test_disjoint_supports_max_out(self):
        a = np.zeros(37)
        b = np.zeros(37)
        a[:18] = 1 / 18
        b[18:] = 1 / 19
        pa = Autocorrelation.__new__(Autocorrelation)  # bypass shape checks
        object.__setattr__(pa, "n", 10)
        object.__setattr__(pa, "r", a)
        object.__setattr__(pa, "normalized", True)
        pb = Autocorrelation.__new__(Autocorrelation)
        object.__setattr__(pb, "n", 10)
        object.__setattr__(pb, "r", b)
        object.__setattr__(pb, "normalized", True)
        assert jsd(pa, pb) == pytest.approx(1.0, abs=1e-12)

    def test_errors(self):
        p = bcdfa(uniform(10)).normalize()
        q = bcdfa(uniform(9)).normalize()
        with pytest.raises(LengthMismatch):
            jsd(p, q)
        with pytest.raises(NotNormalized):
            jsd(bcdfa(uniform(10)), p)


class TestDivergenceIndex:
    def test_singletons_zero_any_location(self):
        for j in range(1, 11):
            assert divergence_index(singleton(10, j)) == pytest.approx(0.0, abs=1e-12)

    def test_two_point_bounded_near_034_for_large_n(self):
        assert divergence_index(two_point_extreme(400)) == pytest.approx(0.34, abs=0.03)

    def test_uniform_near_011_for_large_n(self):
        assert divergence_index(uniform(400)) == pytest.approx(0.11, abs=0.02)

    def test_gap_at_n10(self):
        gap = divergence_index(two_point_extreme(10)) - divergence_index(uniform(10))
        assert gap == pytest.approx(0.17, abs=0.02)

    def test_mirror_invariance(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            d = random_distribution(rng, 10)
            assert divergence_index(d.reversed()) == pytest.approx(divergence_index(d), abs=1e-12)

    def test_location_invariance_of_shape(self):
        # shifting a compact shape along the axis leaves DI unchanged
        block = [0.2, 0.5, 0.3]
        for start in range(0, 8):
            p = np.zeros(10)
            p[start : start + 3] = block
            d0 = make_distribution(np.r_[block, np.zeros(7)])
            assert divergence_index(make_distribution(p)) == pytest.approx(
                divergence_index(d0), abs=1e-12
            )

    def test_monotone_aversion_on_grid(self):
        # moving one grid unit of mass outward (away from the median cell,
        # toward the nearer extreme) never decreases DI; n=5, 0.05 grid
        units = 20
        n = 5
        rng = np.random.default_rng(12)
        for _ in range(400):
            counts = rng.multinomial(units, np.ones(n) / n)
            base = divergence_index(make_distribution(counts / units))
            median = int(np.argmax(np.cumsum(counts) >= units / 2))
            for j in range(1, median):  # strictly left of the median: push left
                if counts[j] == 0:
                    continue
                moved = counts.copy()
                moved[j] -= 1
                moved[j - 1] += 1
                assert divergence_index(make_distribution(moved / units)) >= base - 1e-12
            for j in range(median + 1, n - 1):  # strictly right: push right
                if counts[j] == 0:
                    continue
                moved = counts.copy()
                moved[j] -= 1
                moved[j + 1] += 1
                assert divergence_index(make_distribution(moved / units)) >= base - 1e-12

    def test_symmetric_spread_never_decreases_di(self):
        # the fully median-preserving move: one unit to each extreme
        units = 20
        n = 5
        rng = np.random.default_rng(121)
        for _ in range(400):
            counts = rng.multinomial(units, np.ones(n) / n)
            base = divergence_index(make_distribution(counts / units))
            for c in (1, 2):  # left cell and its mirror, both pushed outward
                i, mi = c, n - 1 - c
                if i == mi or counts[i] < 1 or counts[mi] < 1:
                    continue
                moved = counts.copy()
                moved[i] -= 1
                moved[i - 1] += 1
                moved[mi] -= 1
                moved[mi + 1] += 1
                assert divergence_index(make_distribution(moved / units)) >= base - 1e-12

    def test_two_point_is_max_over_sample(self):
        rng = np.random.default_rng(13)
        ref = divergence_index(two_point_extreme(10))
        worst = max(
            divergence_index(random_distribution(rng, 10)) for _ in range(10_000)
        )
        assert worst < ref
        assert 0.0 <= worst < 1.0

    def test_range_invariant(self):
        rng = np.random.default_rng(14)
        for _ in range(500):
            n = int(rng.integers(2, 21))
            di = divergence_index(random_distribution(rng, n))
            assert 0.0 <= di < 1.0

    def test_batch_matches_sequential(self):
        rng = np.random.default_rng(15)
        ds = [random_distribution(rng, 10) for _ in range(64)]
        seq = [divergence_index(d) for d in ds]
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=8) as pool:
            par = list(pool.map(divergence_index, ds))
        assert par == seq


class TestAlternateMeasures:
    def test_variance_measure(self):
        assert pi_variance(singleton(10, 4)) == pytest.approx(0.0)
        assert pi_variance(two_point_extreme(10)) == pytest.approx(1.0)
        assert pi_variance(uniform(10)) == pytest.approx(8.25 / 20.25)

    def test_lov_measure(self):
        assert pi_lov(singleton(10, 4)) == pytest.approx(0.0)
        assert pi_lov(two_point_extreme(10)) == pytest.approx(1.0)
        assert pi_lov(uniform(10)) == pytest.approx(5 / 9)

    def test_mirror_invariance(self):
        rng = np.random.default_rng(16)
        for _ in range(50):
            d = random_distribution(rng, 10)
            assert pi_variance(d.reversed()) == pytest.approx(pi_variance(d), abs=1e-12)
            assert pi_lov(d.reversed()) == pytest.approx(pi_lov(d), abs=1e-12)
