"""Exact rational linear-program feasibility for small systems.

A dense phase-one simplex with Bland's pivoting rule, which guarantees
termination.  Rows are stored as integer vectors with one positive
denominator each, so pivoting is exact integer arithmetic with a single gcd
reduction per row per pivot.  The only client is polytope edge detection: a
pair of vertices spans an edge of the hull exactly when some linear
functional is maximized on the pair alone, and by scaling such a functional
can be taken to win by a margin of 1 against every other vertex.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = tuple[Sequence[Fraction | int], Fraction | int]


def _int_row(coeffs: Sequence[Fraction | int], rhs: Fraction | int) -> list[int]:
    """Clear denominators, returning integer [coeffs..., rhs]."""
    values = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    scale = 1
    for v in values:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    return [int(v * scale) for v in values]


def _reduce(row: list[int], denom: int) -> tuple[list[int], int]:
    g = denom
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row, denom
    return [x // g for x in row], denom // g


def feasible(
    n_vars: int,
    eq: Sequence[Row] = (),
    ge: Sequence[Row] = (),
) -> bool:
    """Decide whether {x : eq rows hold with equality, ge rows with >=} is nonempty.

    Variables are free; internally each is split into a difference of two
    nonnegative variables and a phase-one simplex minimizes the total
    artificial infeasibility.
    """
    raw = [(_int_row(a, b), True) for a, b in eq]
    raw += [(_int_row(a, b), False) for a, b in ge]
    m = len(raw)
    if m == 0:
        return True
    n_ge = sum(1 for _, is_eq in raw if not is_eq)

    # columns: x+ (n), x- (n), slacks (n_ge), artificials (m), rhs
    n_cols = 2 * n_vars + n_ge + m
    rows: list[list[int]] = []
    denoms: list[int] = []
    slack_at = 0
    for r, (data, is_eq) in enumerate(raw):
        if len(data) != n_vars + 1:
            raise ValueError("coefficient row has wrong arity")
        row = [0] * (n_cols + 1)
        for j in range(n_vars):
            row[j] = data[j]
            row[n_vars + j] = -data[j]
        if not is_eq:
            row[2 * n_vars + slack_at] = -1
            slack_at += 1
        row[-1] = data[-1]
        if row[-1] < 0:
            row = [-x for x in row]
        row[2 * n_vars + n_ge + r] = 1
        rows.append(row)
        denoms.append(1)

    basis = [2 * n_vars + n_ge + r for r in range(m)]
    artificial_start = 2 * n_vars + n_ge

    # reduced-cost row for the phase-one objective (sum of artificials);
    # all initial basic columns are artificial with unit cost
    zrow = [0] * (n_cols + 1)
    zdenom = 1
    for j in range(artificial_start):
        zrow[j] = -sum(r[j] for r in rows)
    zrow[-1] = -sum(r[-1] for r in rows)

    while True:
        entering = next((j for j in range(n_cols) if zrow[j] < 0), -1)
        if entering < 0:
            return all(rows[i][-1] == 0 for i in range(m) if basis[i] >= artificial_start)
        leaving = -1
        best_num = best_den = 0  # ratio best_num / best_den, denominators positive
        for i in range(m):
            x = rows[i][entering]
            if x > 0:
                num, den = rows[i][-1], x
                if (
                    leaving < 0
                    or num * best_den < best_num * den
                    or (num * best_den == best_num * den and basis[i] < basis[leaving])
                ):
                    best_num, best_den = num, den
                    leaving = i
        if leaving < 0:
            # artificials are bounded below, so the phase-one objective cannot
            # be unbounded; reaching here would mean a construction bug
            raise RuntimeError("phase-one simplex found an unbounded direction")
        piv_row = rows[leaving]
        piv = piv_row[entering]  # > 0
        for i in range(m):
            if i != leaving and rows[i][entering]:
                f = rows[i][entering]
                rows[i] = [x * piv - f * y for x, y in zip(rows[i], piv_row)]
                rows[i], denoms[i] = _reduce(rows[i], denoms[i] * piv)
        if zrow[entering]:
            f = zrow[entering]
            zrow = [x * piv - f * y for x, y in zip(zrow, piv_row)]
            zrow, zdenom = _reduce(zrow, zdenom * piv)
        rows[leaving], denoms[leaving] = _reduce(piv_row, piv)
        basis[leaving] = entering


def pair_is_edge(points: Sequence[Sequence[int]], i: int, j: int) -> bool:
    """Is the segment between points i and j an edge of their convex hull?

    All points must be distinct vertices of the hull (true for cube vertices,
    which is the only use here).  Decided exactly: feasibility of a functional
    c with <c, p_i> = <c, p_j> and <c, p_i> >= <c, p_k> + 1 for every other k.
    """
    pi, pj = points[i], points[j]
    dim = len(pi)
    eq = [([a - b for a, b in zip(pi, pj)], 0)]
    ge = []
    for k, pk in enumerate(points):
        if k in (i, j):
            continue
        ge.append(([a - b for a, b in zip(pi, pk)], 1))
    return feasible(dim, eq, ge)
