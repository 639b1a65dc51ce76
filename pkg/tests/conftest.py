from pathlib import Path

import numpy as np
import pytest

from ordinal_peer import make_distribution

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_CSV = DATA_DIR / "sa_regions.csv"

# printed decile vectors of the worked examples
EAST_ARNHEM = [0.659, 0, 0, 0, 0, 0, 0.032, 0.122, 0.167, 0.02]
KU_RING_GAI = [0, 0, 0, 0, 0.004, 0.01, 0.021, 0.038, 0.170, 0.757]
DALY_TIWI = [0.8159, 0.0792, 0.0234, 0.0232, 0, 0, 0, 0.0578, 0, 0]
# stand-in matching the published statistics (s=5.63, HI~48.9, LI 4, approximately symmetric)
WEST_TORRENS = [261, 373, 1590, 2807, 1832, 816, 860, 903, 553, 5]


@pytest.fixture
def east_arnhem():
    return make_distribution(EAST_ARNHEM)


@pytest.fixture
def ku_ring_gai():
    return make_distribution(KU_RING_GAI)


@pytest.fixture
def west_torrens():
    return make_distribution(WEST_TORRENS)


@pytest.fixture
def daly_tiwi():
    return make_distribution(DALY_TIWI)


def random_distribution(rng: np.random.Generator, n: int):
    """Dirichlet draw with a random concentration for shape variety."""
    alpha = rng.uniform(0.2, 3.0)
    return make_distribution(rng.dirichlet(np.full(n, alpha)))


def two_point_extreme(n: int):
    p = np.zeros(n)
    p[0] = p[-1] = 0.5
    return make_distribution(p)


def singleton(n: int, at: int = 1):
    p = np.zeros(n)
    p[at - 1] = 1.0
    return make_distribution(p)


def uniform(n: int):
    return make_distribution(np.full(n, 1.0 / n))
