"""Axiom systems for delta-matroid rank functions and polytope membership.

Three equivalent characterizations of the shifted rank h are checked
verbatim; the signed rank g has its own four-axiom system plus an evenness
criterion reported as an informational flag.  All inequalities are evaluated
in exact integer arithmetic; the halved term in the first h-system is
handled by clearing denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .deltamatroid import DeltaMatroid, RankTable
from .ground import AdmissibleSet, combine, enumerate_admissible

H_SYSTEMS = ("larson", "bouchet", "allys")


def _witness_text(obj) -> str:
    if hasattr(obj, "render"):
        return "{%s}" % obj.render()
    if isinstance(obj, frozenset):
        return "{%s}" % " ".join(str(e) for e in sorted(obj, key=lambda e: (abs(e), -e)))
    return str(obj)


@dataclass(frozen=True)
class Violation:
    axiom: str
    sets: tuple
    lhs: Fraction | int
    rhs: Fraction | int

    def render(self) -> str:
        where = ", ".join(_witness_text(s) for s in self.sets)
        return f"{self.axiom} at {where}: {self.lhs} < {self.rhs}"


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    violations: tuple[Violation, ...]
    even: bool | None = None

    @classmethod
    def from_violations(cls, violations: list[Violation], even: bool | None = None) -> "AxiomReport":
        return cls(not violations, tuple(violations), even)


def check_g_axioms(g: RankTable) -> AxiomReport:
    """Normalization, singleton boundedness, bisubmodularity, and parity.

    The returned ``even`` flag records whether the table additionally
    satisfies the midpoint criterion characterizing even delta-matroids; it
    does not affect ``passed``.
    """
    sets = enumerate_admissible(g.n)
    val = dict(zip(sets, g.values))
    out: list[Violation] = []
    empty = AdmissibleSet(g.n)
    if val[empty] != 0:
        out.append(Violation("normalization", (empty,), val[empty], 0))
    for s in sets:
        if s.size == 1 and abs(val[s]) > 1:
            out.append(Violation("boundedness", (s,), 1, abs(val[s])))
        if (val[s] - s.size) % 2:
            out.append(Violation("parity", (s,), val[s], s.size))
    out.extend(_bisubmodular_violations(val, sets, ordered=True))
    return AxiomReport.from_violations(out, even=_even_criterion(val, g.n))


def _bisubmodular_violations(val, sets, ordered: bool, label: str = "bisubmodularity"):
    out = []
    for i, s in enumerate(sets):
        others = sets if ordered else sets[i:]
        for t in others:
            meet, join = combine(s, t)
            lhs = val[s] + val[t]
            rhs = val[meet] + val[join]
            if lhs < rhs:
                out.append(Violation(label, (s, t), lhs, rhs))
    return out


def bisubmodular_ok_symmetric(g: RankTable) -> bool:
    """Fast path over unordered pairs; must agree with the ordered oracle."""
    sets = enumerate_admissible(g.n)
    val = dict(zip(sets, g.values))
    return not _bisubmodular_violations(val, sets, ordered=False)


def _even_criterion(val, n: int) -> bool:
    for s in enumerate_admissible(n):
        if s.size != n - 1:
            continue
        untouched = [i for i in range(1, n + 1) if not (s.underline >> (i - 1)) & 1]
        i = untouched[0]
        if 2 * val[s] != val[s.with_element(i)] + val[s.with_element(-i)]:
            return False
    return True


def delta_from_rank(g: RankTable) -> DeltaMatroid:
    """Rebuild the delta-matroid whose feasible sets attain the top rank n."""
    report = check_g_axioms(g)
    if not report.passed:
        first = report.violations[0]
        raise ValueError(f"not a delta-matroid rank table: {first.render()}")
    masks = [s.pos for s, v in zip(enumerate_admissible(g.n), g.values) if s.size == g.n and v == g.n]
    return DeltaMatroid(g.n, masks)


def check_h_axioms(h: RankTable, system: str) -> AxiomReport:
    """Verify one of the three characterizations of shifted rank functions."""
    if system not in H_SYSTEMS:
        raise ValueError(f"unknown h-axiom system {system!r}; pick one of {H_SYSTEMS}")
    sets = enumerate_admissible(h.n)
    val = dict(zip(sets, h.values))
    out: list[Violation] = []
    empty = AdmissibleSet(h.n)
    if val[empty] != 0:
        out.append(Violation(f"{system}-normalization", (empty,), val[empty], 0))

    if system == "larson":
        for s in sets:
            if s.size == 1 and val[s] not in (0, 1):
                out.append(Violation("larson-boundedness", (s,), val[s], 0))
        for s in sets:
            for t in sets:
                meet, join = combine(s, t)
                overlap = (s.pos & t.neg).bit_count() + (s.neg & t.pos).bit_count()
                lhs = 2 * val[s] + 2 * val[t]
                rhs = 2 * val[meet] + 2 * val[join] + overlap
                if lhs < rhs:
                    out.append(Violation("larson-bisubmodularity", (s, t), Fraction(lhs, 2), Fraction(rhs, 2)))
        return AxiomReport.from_violations(out)

    # unit steps are shared by the remaining two systems
    for s in sets:
        for a in _admissible_extensions(s):
            bigger = s.with_element(a)
            if not val[s] <= val[bigger] <= val[s] + 1:
                out.append(Violation(f"{system}-unit-step", (s, bigger), val[bigger], val[s]))

    if system == "bouchet":
        for s in sets:
            for t in sets:
                if (s.pos | t.pos) & (s.neg | t.neg):
                    continue  # plain union is inadmissible
                union = s.union(t)
                meet = AdmissibleSet(s.n, s.pos & t.pos, s.neg & t.neg)
                if val[s] + val[t] < val[meet] + val[union]:
                    out.append(
                        Violation("bouchet-submodularity", (s, t), val[s] + val[t], val[meet] + val[union])
                    )
        for s in sets:
            for i in range(1, h.n + 1):
                if (s.underline >> (i - 1)) & 1:
                    continue
                lhs = val[s.with_element(i)] + val[s.with_element(-i)]
                if lhs < 2 * val[s] + 1:
                    out.append(Violation("bouchet-pair-step", (s,), lhs, 2 * val[s] + 1))
        return AxiomReport.from_violations(out)

    for s in sets:
        for t in sets:
            meet, join = combine(s, t)
            overlap = (s.pos & t.neg).bit_count() + (s.neg & t.pos).bit_count()
            lhs = val[s] + val[t]
            rhs = val[meet] + val[join] + overlap
            if lhs < rhs:
                out.append(Violation("allys-bisubmodularity", (s, t), lhs, rhs))
    return AxiomReport.from_violations(out)


def _admissible_extensions(s: AdmissibleSet) -> list[int]:
    out = []
    for i in range(1, s.n + 1):
        if not (s.underline >> (i - 1)) & 1:
            out.extend((i, -i))
    return out


def enumerate_h_tables(n: int, system: str) -> list[RankTable]:
    """All integer tables passing the chosen h-axiom system, by pruned search.

    Unit steps confine each value to a two-point interval determined by the
    already-assigned subsets, and every remaining inequality is checked the
    moment its last participant gets a value, so the search tree stays close
    to the solution count.  Used to test that every passing table is the
    shifted rank of some delta-matroid.
    """
    if system not in ("bouchet", "allys"):
        raise ValueError("exhaustive enumeration supports the bouchet and allys systems")
    sets = enumerate_admissible(n)
    index = {s: i for i, s in enumerate(sets)}
    subs = [
        [
            index[AdmissibleSet.from_elements(n, [x for x in s.elements() if x != e])]
            for e in s.elements()
        ]
        for s in sets
    ]
    constraints_by_last: list[list[tuple]] = [[] for _ in sets]

    def register(kind: str, indices: tuple[int, ...], data: tuple[int, ...] = ()) -> None:
        constraints_by_last[max(indices)].append((kind,) + indices + data)

    if system == "bouchet":
        for i, s in enumerate(sets):
            for k in range(1, n + 1):
                if not (s.underline >> (k - 1)) & 1:
                    register("pair", (index[s.with_element(k)], index[s.with_element(-k)], i))
        for s in sets:
            for t in sets:
                if (s.pos | t.pos) & (s.neg | t.neg):
                    continue
                union = s.union(t)
                meet = AdmissibleSet(n, s.pos & t.pos, s.neg & t.neg)
                register("sub", (index[s], index[t], index[meet], index[union]))
    else:
        for s in sets:
            for t in sets:
                meet, join = combine(s, t)
                overlap = (s.pos & t.neg).bit_count() + (s.neg & t.pos).bit_count()
                register("skew", (index[s], index[t], index[meet], index[join]), (overlap,))

    values: list[int | None] = [None] * len(sets)
    values[0] = 0
    out: list[RankTable] = []

    def admissible_here(i: int) -> bool:
        for item in constraints_by_last[i]:
            kind = item[0]
            if kind == "pair":
                a, b, base = item[1:]
                if values[a] + values[b] < 2 * values[base] + 1:
                    return False
            elif kind == "sub":
                a, b, m, u = item[1:]
                if values[a] + values[b] < values[m] + values[u]:
                    return False
            else:
                a, b, m, j, overlap = item[1:]
                if values[a] + values[b] < values[m] + values[j] + overlap:
                    return False
        return True

    def walk(i: int) -> None:
        if i == len(sets):
            out.append(RankTable(n, tuple(values)))
            return
        lo, hi = 0, sets[i].size
        for j in subs[i]:
            lo = max(lo, values[j])
            hi = min(hi, values[j] + 1)
        for v in range(lo, hi + 1):
            values[i] = v
            if admissible_here(i):
                walk(i + 1)
        values[i] = None

    walk(1)
    return out


def polytope_membership(f: RankTable, x: Sequence[Fraction | int]) -> bool:
    """Does x satisfy <e_S, x> <= f(S) for every nonempty admissible S?"""
    if len(x) != f.n:
        raise ValueError(f"point has dimension {len(x)}, expected {f.n}")
    xs = [Fraction(c) for c in x]
    for s, v in f.items():
        if s.size == 0:
            continue
        inner = sum(xs[i] for i in range(f.n) if s.pos >> i & 1) - sum(
            xs[i] for i in range(f.n) if s.neg >> i & 1
        )
        if inner > v:
            return False
    return True


def greedy_check(d: DeltaMatroid) -> AxiomReport:
    """Maximizers of |S ^ B| already realize the best |T ^ B| for every T over S."""
    full = (1 << d.n) - 1
    out: list[Violation] = []
    for t in enumerate_admissible(d.n):
        overlaps = [((t.pos & p).bit_count() + (t.neg & ~p & full).bit_count()) for p in d.feasible]
        best_t = max(overlaps)
        for sp in _submasks(t.pos):
            for sn in _submasks(t.neg):
                s_overlaps = [((sp & p).bit_count() + (sn & ~p & full).bit_count()) for p in d.feasible]
                best_s = max(s_overlaps)
                restricted = max(o for o, so in zip(overlaps, s_overlaps) if so == best_s)
                if restricted != best_t:
                    s = AdmissibleSet(d.n, sp, sn)
                    out.append(Violation("greedy", (s, t), restricted, best_t))
    return AxiomReport.from_violations(out)


def _submasks(mask: int) -> list[int]:
    subs = [0]
    m = mask
    sub = mask
    while sub:
        subs.append(sub)
        sub = (sub - 1) & m
    return sorted(set(subs))
