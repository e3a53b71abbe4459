"""Seeded random generation of delta-matroids for scans and sampled tests.

Three documented distributions, cycled round-robin by default:

  family  uniform feasible family (1..2n+2 sets) kept only if the exchange
          validator passes, with capped rejection and a free fallback
  gf2     principal-minor construction from a uniform symmetric GF(2) matrix
  twist   a random signed permutation applied to a matroid construction
          (random valid basis family, uniform-matroid fallback), in a random
          mode (bases or independent sets)

Everything is driven by one ``random.Random`` instance per call, so a fixed
seed reproduces the exact sequence regardless of platform.
"""

from __future__ import annotations

import random
from itertools import combinations

from .deltamatroid import DeltaMatroid
from .ground import SignedPermutation
from .matroid import Gf2SymMatrix, Matroid, dm_from_gf2, dm_from_matroid, validate_matroid

DISTRIBUTIONS = ("family", "gf2", "twist")


def random_family(rng: random.Random, n: int, min_size: int = 1, max_size: int | None = None) -> DeltaMatroid:
    """A uniformly drawn feasible family; not usually a valid delta-matroid."""
    top = 1 << n
    hi = min(max_size or top, top)
    size = rng.randint(min(min_size, hi), hi)
    return DeltaMatroid(n, rng.sample(range(top), size))


def random_signed_permutation(rng: random.Random, n: int) -> SignedPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return SignedPermutation(n, tuple(p if rng.random() < 0.5 else -p for p in perm))


def _random_matroid(rng: random.Random, n: int) -> Matroid:
    r = rng.randint(0, n)
    all_bases = list(combinations(range(1, n + 1), r))
    for _ in range(20):
        count = rng.randint(1, len(all_bases))
        candidate = Matroid.plain(n, rng.sample(all_bases, count))
        if validate_matroid(candidate).passed:
            return candidate
    return Matroid.uniform(r, n)


def random_valid(rng: random.Random, n: int, distribution: str) -> DeltaMatroid:
    if distribution == "family":
        for _ in range(60):
            d = random_family(rng, n, max_size=2 * n + 2)
            if d.validate("exchange").ok:
                return d
        return DeltaMatroid(n, range(1 << n))  # free fallback, always valid
    if distribution == "gf2":
        rows = [0] * n
        for i in range(n):
            for j in range(i, n):
                if rng.random() < 0.5:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return dm_from_gf2(Gf2SymMatrix(n, tuple(rows)))
    if distribution == "twist":
        mode = rng.choice(("bases", "independents"))
        base = dm_from_matroid(_random_matroid(rng, n), mode)
        return base.twist(random_signed_permutation(rng, n))
    raise ValueError(f"unknown distribution {distribution!r}; pick one of {DISTRIBUTIONS}")


def random_delta_matroids(count: int, n: int, seed: int) -> list[tuple[DeltaMatroid, str]]:
    """Round-robin over the three distributions, fully determined by the seed."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        dist = DISTRIBUTIONS[k % len(DISTRIBUTIONS)]
        out.append((random_valid(rng, n, dist), dist))
    return out
