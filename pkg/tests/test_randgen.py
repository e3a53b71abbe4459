import random

import pytest

from deltamat.randgen import (
    DISTRIBUTIONS,
    random_delta_matroids,
    random_signed_permutation,
    random_valid,
)


def test_seeded_reproducibility():
    a = random_delta_matroids(12, 4, seed=99)
    b = random_delta_matroids(12, 4, seed=99)
    assert a == b
    c = random_delta_matroids(12, 4, seed=100)
    assert a != c


def test_all_outputs_valid():
    for d, dist in random_delta_matroids(30, 3, seed=1):
        assert dist in DISTRIBUTIONS
        assert d.n == 3
        assert d.validate("exchange").ok, (dist, d)


def test_distributions_round_robin():
    dists = [dist for _, dist in random_delta_matroids(6, 2, seed=3)]
    assert dists == ["family", "gf2", "twist", "family", "gf2", "twist"]


def test_random_valid_unknown_distribution():
    with pytest.raises(ValueError):
        random_valid(random.Random(0), 2, "zipf")


def test_random_signed_permutation_is_valid():
    rng = random.Random(8)
    for _ in range(20):
        w = random_signed_permutation(rng, 4)
        assert sorted(abs(v) for v in w.image) == [1, 2, 3, 4]
