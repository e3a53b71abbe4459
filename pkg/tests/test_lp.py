"""The simplex is the oracle for edge detection, so it gets its own oracle:
basic-solution enumeration with exact Gaussian elimination."""

import random
from fractions import Fraction
from itertools import combinations

from deltamat.deltamatroid import all_full_size_masks
from deltamat.lp import feasible, pair_is_edge


def test_feasibility_hand_cases():
    # 1 <= x <= 2
    assert feasible(1, ge=[([1], 1), ([-1], -2)])
    # x >= 1 and x <= 0
    assert not feasible(1, ge=[([1], 1), ([-1], 0)])
    # x + y = 1, x >= 2, y >= 0
    assert not feasible(2, eq=[([1, 1], 1)], ge=[([1, 0], 2), ([0, 1], 0)])
    # x + y = 1, x >= 0, y >= 0
    assert feasible(2, eq=[([1, 1], 1)], ge=[([1, 0], 0), ([0, 1], 0)])
    # fractional data
    assert feasible(1, ge=[([Fraction(1, 3)], Fraction(1, 6))])
    assert feasible(0, ge=[])
    # equality-only, forced negative value
    assert feasible(1, eq=[([2], -3)])


def test_feasibility_planted_instances():
    rng = random.Random(4242)
    for _ in range(120):
        d = rng.randint(1, 4)
        x0 = [rng.randint(-3, 3) for _ in range(d)]
        rows = []
        for _ in range(rng.randint(1, 6)):
            a = [rng.randint(-3, 3) for _ in range(d)]
            slack = rng.randint(0, 3)
            rows.append((a, sum(ai * xi for ai, xi in zip(a, x0)) - slack))
        assert feasible(d, ge=rows)


def test_feasibility_farkas_instances():
    # sum of positively-weighted rows is the zero functional but the same
    # combination of right-hand sides is positive: infeasible by construction
    rng = random.Random(999)
    for _ in range(120):
        d = rng.randint(1, 4)
        k = rng.randint(1, 4)
        rows = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(k)]
        weights = [rng.randint(1, 3) for _ in range(k)]
        last = [-sum(w * row[i] for w, row in zip(weights, rows)) for i in range(d)]
        rhs = [rng.randint(-2, 2) for _ in range(k)]
        last_rhs = 1 - sum(w * b for w, b in zip(weights, rhs))
        system = [(row, b) for row, b in zip(rows, rhs)] + [(last, last_rhs)]
        assert not feasible(d, ge=system)


def _solve_exact(columns, rhs):
    """Solve sum_j x_j columns[j] = rhs exactly; None when inconsistent."""
    m, k = len(rhs), len(columns)
    a = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    row = 0
    for col in range(k):
        pivot = next((r for r in range(row, m) if a[r][col] != 0), None)
        if pivot is None:
            return None  # dependent column set: skip (not a basic solution)
        a[row], a[pivot] = a[pivot], a[row]
        inv = a[row][col]
        a[row] = [x / inv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    if any(a[r][-1] != 0 for r in range(row, m)):
        return None
    return [a[i][-1] for i in range(k)]


def edge_oracle(points, i, j):
    """Brute force: the pair is an edge iff no basic solution expressing the
    midpoint as a convex combination puts weight outside the pair."""
    dim = len(points[0])
    mid = [Fraction(points[i][t] + points[j][t], 2) for t in range(dim)]
    rhs = mid + [Fraction(1)]
    cols = [list(p) + [1] for p in points]
    for size in range(1, dim + 2):
        for support in combinations(range(len(points)), size):
            sol = _solve_exact([cols[s] for s in support], rhs)
            if sol is None or any(x < 0 for x in sol):
                continue
            if any(x > 0 and s not in (i, j) for s, x in zip(support, sol)):
                return False
    return True


def _vectors(n, masks):
    return [tuple(1 if p >> t & 1 else -1 for t in range(n)) for p in masks]


def test_edge_detection_matches_oracle_exhaustive_n2():
    masks = all_full_size_masks(2)
    for k in range(2, 5):
        for fam in combinations(masks, k):
            pts = _vectors(2, fam)
            for i in range(k):
                for j in range(i + 1, k):
                    assert pair_is_edge(pts, i, j) == edge_oracle(pts, i, j), (fam, i, j)


def test_edge_detection_matches_oracle_sampled_n3():
    rng = random.Random(31415)
    for _ in range(150):
        fam = rng.sample(range(8), rng.randint(2, 6))
        pts = _vectors(3, fam)
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                assert pair_is_edge(pts, i, j) == edge_oracle(pts, i, j), (fam, i, j)


def test_two_point_hull_is_an_edge():
    pts = [(1, 1, 1), (-1, -1, -1)]
    assert pair_is_edge(pts, 0, 1)
