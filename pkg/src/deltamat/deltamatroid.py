"""Delta-matroids: feasible families, validation, rank functions, and minors.

A delta-matroid on ground size n is a nonempty family of size-n admissible
sets.  Because every feasible set touches each index with one sign, a
feasible set is stored as the bitmask of its unbarred indices; the barred
part is the complement.  Families are deduplicated and kept in canonical
order on construction, so equality of values is equality of families.

Validity is *not* enforced on construction: invalid families are useful as
negative fixtures.  Two validators are provided and must agree: a symmetric
exchange check on the unbarred parts (fast path) and a polytopal check that
every hull edge between feasible indicator vectors moves at most two
coordinates, with edges decided by exact rational LP feasibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import lp
from ._parallel import map_ordered
from .ground import (
    AdmissibleSet,
    SignedPermutation,
    admissible_index,
    check_guard,
    dot,
    enumerate_admissible,
)


def _mask_key(n: int, pos_mask: int) -> tuple[int, ...]:
    # sign pattern per index, 0 = unbarred, 1 = barred
    return tuple(0 if pos_mask >> i & 1 else 1 for i in range(n))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    method: str
    witness: tuple | None = None
    message: str = ""


@dataclass(frozen=True)
class RankTable:
    """Integer values over all 3^n admissible sets in canonical order."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 3**self.n:
            raise ValueError(f"table needs 3^{self.n} = {3 ** self.n} values, got {len(self.values)}")

    def value(self, s: AdmissibleSet) -> int:
        if s.n != self.n:
            raise ValueError("set belongs to a different ground size")
        return self.values[admissible_index(self.n)[(s.pos, s.neg)]]

    def items(self):
        return zip(enumerate_admissible(self.n), self.values)


class DeltaMatroid:
    """A ground size together with a canonical tuple of feasible-set masks."""

    __slots__ = ("n", "feasible")

    def __init__(self, n: int, feasible_masks: Iterable[int]):
        if n < 0:
            raise ValueError("ground size must be non-negative")
        masks = sorted(set(feasible_masks), key=lambda m: _mask_key(n, m))
        if not masks:
            raise ValueError("a delta-matroid needs at least one feasible set")
        full = (1 << n) - 1
        if any(m < 0 or m > full for m in masks):
            raise ValueError("feasible mask outside the ground set")
        self.n = n
        self.feasible = tuple(masks)

    @classmethod
    def from_feasible_sets(cls, n: int, sets: Iterable[AdmissibleSet]) -> "DeltaMatroid":
        masks = []
        for s in sets:
            if s.n != n or s.size != n:
                raise ValueError("feasible sets must be admissible of full size n")
            masks.append(s.pos)
        return cls(n, masks)

    @classmethod
    def from_signed_lists(cls, n: int, lists: Iterable[Iterable[int]]) -> "DeltaMatroid":
        return cls.from_feasible_sets(n, [AdmissibleSet.from_elements(n, xs) for xs in lists])

    def feasible_sets(self) -> tuple[AdmissibleSet, ...]:
        full = (1 << self.n) - 1
        return tuple(AdmissibleSet(self.n, p, full & ~p) for p in self.feasible)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DeltaMatroid):
            return NotImplemented
        return self.n == other.n and self.feasible == other.feasible

    def __hash__(self) -> int:
        return hash((self.n, self.feasible))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        fams = ", ".join("{%s}" % b.render() for b in self.feasible_sets())
        return f"DeltaMatroid(n={self.n}, feasible=[{fams}])"

    # -- validation ---------------------------------------------------------

    def validate(self, method: str = "exchange") -> ValidationReport:
        if method == "exchange":
            return self._validate_exchange()
        if method == "polytope":
            return self._validate_polytope()
        raise ValueError(f"unknown validation method {method!r}")

    def _validate_exchange(self) -> ValidationReport:
        fam = set(self.feasible)
        for x_mask in self.feasible:
            for y_mask in self.feasible:
                diff = x_mask ^ y_mask
                bits = _bits(diff)
                for bx in bits:
                    if (x_mask ^ bx) in fam:
                        continue
                    if any(by != bx and (x_mask ^ bx ^ by) in fam for by in bits):
                        continue
                    witness = (
                        self._as_set(x_mask),
                        self._as_set(y_mask),
                        bx.bit_length(),
                    )
                    return ValidationReport(
                        False,
                        "exchange",
                        witness,
                        "no exchange for index %d between {%s} and {%s}"
                        % (bx.bit_length(), witness[0].render(), witness[1].render()),
                    )
        return ValidationReport(True, "exchange")

    def _validate_polytope(self) -> ValidationReport:
        vectors = [tuple(1 if p >> i & 1 else -1 for i in range(self.n)) for p in self.feasible]
        for i in range(len(self.feasible)):
            for j in range(i + 1, len(self.feasible)):
                support = (self.feasible[i] ^ self.feasible[j]).bit_count()
                if support <= 2:
                    continue
                if lp.pair_is_edge(vectors, i, j):
                    a, b = self._as_set(self.feasible[i]), self._as_set(self.feasible[j])
                    return ValidationReport(
                        False,
                        "polytope",
                        (a, b, support),
                        "edge direction support %d between {%s} and {%s}"
                        % (support, a.render(), b.render()),
                    )
        return ValidationReport(True, "polytope")

    def _as_set(self, pos_mask: int) -> AdmissibleSet:
        full = (1 << self.n) - 1
        return AdmissibleSet(self.n, pos_mask, full & ~pos_mask)

    # -- rank ----------------------------------------------------------------

    def is_even(self) -> bool:
        return len({p.bit_count() & 1 for p in self.feasible}) <= 1

    def g(self, s: AdmissibleSet) -> int:
        if s.n != self.n:
            raise ValueError("set belongs to a different ground size")
        return self._g(s.pos, s.neg)

    def _g(self, sp: int, sn: int) -> int:
        full = (1 << self.n) - 1
        best = None
        for p in self.feasible:
            q = full & ~p
            val = (
                (sp & p).bit_count()
                - (sp & q).bit_count()
                + (sn & q).bit_count()
                - (sn & p).bit_count()
            )
            if best is None or val > best:
                best = val
        return best

    def rank(self, s: AdmissibleSet) -> tuple[int, int]:
        """The signed rank g and its shifted form h = (g + |S|) / 2."""
        g = self.g(s)
        return g, (g + s.size) // 2

    def rank_table(self, workers: int = 1) -> RankTable:
        check_guard(self.n)
        values = map_ordered(lambda s: self._g(s.pos, s.neg), enumerate_admissible(self.n), workers)
        return RankTable(self.n, tuple(values))

    def h_table(self, workers: int = 1) -> RankTable:
        g = self.rank_table(workers)
        sizes = [s.size for s in enumerate_admissible(self.n)]
        return RankTable(self.n, tuple((gv + sz) // 2 for gv, sz in zip(g.values, sizes)))

    # -- minors and constructions ---------------------------------------------

    def loops_coloops(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        union = inter = self.feasible[0]
        for p in self.feasible[1:]:
            union |= p
            inter &= p
        loops = tuple(i for i in range(1, self.n + 1) if not union >> (i - 1) & 1)
        coloops = tuple(i for i in range(1, self.n + 1) if inter >> (i - 1) & 1)
        return loops, coloops

    def minor(
        self,
        contract: Iterable[int] = (),
        delete: Iterable[int] = (),
        project: Iterable[int] = (),
    ) -> "DeltaMatroid":
        """Remove indices by contraction, deletion, or projection (pairwise disjoint).

        The surviving indices are relabelled 1..m preserving their order.  At
        a loop or coloop all three operations coincide.  Removing everything
        leaves the unique delta-matroid on the empty ground set.
        """
        ops: dict[int, str] = {}
        for group, tag in ((contract, "contract"), (delete, "delete"), (project, "project")):
            for i in group:
                if not 1 <= i <= self.n:
                    raise ValueError(f"index {i} outside ground set of size {self.n}")
                if i in ops:
                    raise ValueError(f"index {i} listed for both {ops[i]} and {tag}")
                ops[i] = tag
        masks = list(self.feasible)
        n = self.n
        for i in sorted(ops, reverse=True):
            bit = 1 << (i - 1)
            union = inter = masks[0]
            for m in masks[1:]:
                union |= m
                inter &= m
            is_loop = not union & bit
            is_coloop = bool(inter & bit)
            tag = ops[i]
            if tag == "contract" and not is_loop:
                masks = [m for m in masks if m & bit]
            elif tag == "delete" and not is_coloop:
                masks = [m for m in masks if not m & bit]
            low = bit - 1
            masks = list({(m & low) | ((m >> 1) & ~low) for m in masks})
            n -= 1
        return DeltaMatroid(n, masks)

    def project_all_but(self, keep: Iterable[int]) -> "DeltaMatroid":
        keep_set = set(keep)
        return self.minor(project=[i for i in range(1, self.n + 1) if i not in keep_set])

    def product(self, other: "DeltaMatroid") -> "DeltaMatroid":
        masks = [p1 | (p2 << self.n) for p1 in self.feasible for p2 in other.feasible]
        return DeltaMatroid(self.n + other.n, masks)

    def twist(self, w: SignedPermutation) -> "DeltaMatroid":
        if w.n != self.n:
            raise ValueError("permutation acts on a different ground size")
        return DeltaMatroid.from_feasible_sets(self.n, [w.apply(b) for b in self.feasible_sets()])

    # -- independence ----------------------------------------------------------

    def is_independent(self, s: AdmissibleSet) -> bool:
        if s.n != self.n:
            raise ValueError("set belongs to a different ground size")
        return any((s.pos & ~p) == 0 and (s.neg & p) == 0 for p in self.feasible)

    def independents(self) -> tuple[AdmissibleSet, ...]:
        """All admissible sets contained in a feasible set, canonical order."""
        check_guard(self.n)
        return tuple(s for s in enumerate_admissible(self.n) if self.is_independent(s))

    def lattice_point_test(self) -> bool:
        """Do the lattice points of the half-sum polytope match the independent sets?

        The candidate points are the signed indicators e_S; membership is the
        system <e_T, e_S> <= h(T) over all nonempty admissible T.
        """
        check_guard(self.n)
        h = self.h_table()
        nonempty = [t for t in enumerate_admissible(self.n) if t.size > 0]
        hvals = [h.value(t) for t in nonempty]
        inside = {
            s
            for s in enumerate_admissible(self.n)
            if all(dot(t, s) <= hv for t, hv in zip(nonempty, hvals))
        }
        return inside == set(self.independents())


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


def all_full_size_masks(n: int) -> tuple[int, ...]:
    """Masks of all 2^n admissible sets of full size, canonical order."""
    return tuple(sorted(range(1 << n), key=lambda m: _mask_key(n, m)))
