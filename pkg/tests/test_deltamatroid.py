import random
from itertools import combinations, permutations, product

import pytest

from deltamat.deltamatroid import DeltaMatroid, all_full_size_masks
from deltamat.ground import AdmissibleSet, SignedPermutation, combine, enumerate_admissible

from conftest import sset


def all_valid(n):
    masks = all_full_size_masks(n)
    out = []
    for k in range(1, len(masks) + 1):
        for fam in combinations(masks, k):
            d = DeltaMatroid(n, fam)
            if d.validate("exchange").ok:
                out.append(d)
    return out


def test_construction_canonicalizes():
    a = DeltaMatroid.from_signed_lists(2, [[-1, 2], [1, -2], [-1, 2]])
    b = DeltaMatroid.from_signed_lists(2, [[1, -2], [-1, 2]])
    assert a == b and hash(a) == hash(b)
    assert [s.render() for s in a.feasible_sets()] == ["1 -2", "-1 2"]
    with pytest.raises(ValueError):
        DeltaMatroid(2, [])
    with pytest.raises(ValueError):
        DeltaMatroid.from_feasible_sets(2, [sset(2, 1)])  # not full size


def test_validate_examples(tripod):
    single = DeltaMatroid.from_signed_lists(2, [[1, -2]])
    assert single.validate("exchange").ok and single.validate("polytope").ok

    bad = DeltaMatroid.from_signed_lists(3, [[1, 2, 3], [-1, -2, -3]])
    rep = bad.validate("polytope")
    assert not rep.ok
    assert "support 3" in rep.message
    assert not bad.validate("exchange").ok

    assert tripod.validate("exchange").ok and tripod.validate("polytope").ok
    # every difference of two feasible indicator vectors moves two indices
    for p, q in combinations(tripod.feasible, 2):
        assert (p ^ q).bit_count() == 2

    with pytest.raises(ValueError):
        tripod.validate("nonsense")


def test_is_even(tripod, coloop1, free1):
    assert tripod.is_even()
    assert coloop1.is_even()
    assert not free1.is_even()


def test_rank_examples(tripod, coloop1, free1):
    assert tripod.rank(sset(3)) == (0, 0)
    assert tripod.rank(sset(3, 1, 2)) == (0, 1)
    assert tripod.rank(sset(3, 1, 2, 3)) == (-1, 1)
    assert coloop1.rank_table().values == (0, 1, -1)
    assert free1.rank_table().values == (0, 1, 1)
    table = tripod.rank_table()
    top = [s for s, v in table.items() if s.size == 3 and v == 3]
    assert len(top) == 3
    with pytest.raises(ValueError):
        tripod.g(sset(2, 1))


def test_rank_table_parallel_agrees(tripod):
    assert tripod.rank_table(workers=3) == tripod.rank_table(workers=1)
    assert tripod.h_table(workers=4) == tripod.h_table()


def test_rank_function_properties():
    rng = random.Random(5)
    instances = all_valid(2) + rng.sample(all_valid(3), 40)
    for d in instances:
        table = dict(d.rank_table().items())
        assert table[AdmissibleSet(d.n)] == 0
        for s, g in table.items():
            assert abs(g) <= s.size
            assert (g - s.size) % 2 == 0
        for s in table:
            for t in table:
                meet, join = combine(s, t)
                assert table[s] + table[t] >= table[meet] + table[join]


def test_minor_examples(tripod):
    contracted = tripod.minor(contract=[1])
    assert contracted.n == 2
    assert [b.render() for b in contracted.feasible_sets()] == ["-1 -2"]
    deleted = tripod.minor(delete=[1])
    assert [b.render() for b in deleted.feasible_sets()] == ["1 -2", "-1 2"]
    projected = tripod.minor(project=[1])
    assert [b.render() for b in projected.feasible_sets()] == ["1 -2", "-1 2", "-1 -2"]
    everything = tripod.minor(project=[1, 2, 3])
    assert everything.n == 0 and everything.feasible == (0,)
    with pytest.raises(ValueError):
        tripod.minor(contract=[1], delete=[1])
    with pytest.raises(ValueError):
        tripod.minor(project=[4])


def test_minor_at_loop_and_coloop_coincide(coloop1, loop1):
    for d, i in ((coloop1, 1), (loop1, 1)):
        variants = {
            d.minor(contract=[i]),
            d.minor(delete=[i]),
            d.minor(project=[i]),
        }
        assert len(variants) == 1


def test_minor_operations_commute():
    rng = random.Random(11)
    ops = {1: "contract", 2: "delete", 3: "project"}
    for d in rng.sample(all_valid(3), 25):
        expected = d.minor(contract=[1], delete=[2], project=[3])
        for order in permutations([1, 2, 3]):
            step = d
            removed = []
            for orig in order:
                position = orig - sum(1 for r in removed if r < orig)
                step = step.minor(**{ops[orig]: [position]})
                removed.append(orig)
            assert step == expected


def test_minors_stay_valid():
    rng = random.Random(13)
    for d in rng.sample(all_valid(3), 30):
        for i in (1, 2, 3):
            for kind in ("contract", "delete", "project"):
                m = d.minor(**{kind: [i]})
                assert m.validate("exchange").ok, (d, kind, i)


def test_loops_coloops(tripod, coloop1, loop1):
    assert coloop1.loops_coloops() == ((), (1,))
    assert loop1.loops_coloops() == ((1,), ())
    assert tripod.loops_coloops() == ((), ())


def test_product_examples(coloop1, loop1, free1):
    cc = coloop1.product(coloop1)
    assert cc.n == 2 and [b.render() for b in cc.feasible_sets()] == ["1 2"]
    cl = coloop1.product(loop1)
    assert [b.render() for b in cl.feasible_sets()] == ["1 -2"]
    ff = free1.product(free1)
    assert len(ff.feasible) == 4


def test_twist_examples(tripod, coloop1, loop1):
    assert tripod.twist(SignedPermutation.identity(3)) == tripod
    assert coloop1.twist(SignedPermutation.bar_swap(1)) == loop1
    flipped = tripod.twist(SignedPermutation.bar_swap(3))
    assert flipped.g(sset(3, -1, -2)) == tripod.g(sset(3, 1, 2)) == 0


def test_twist_is_group_action(tripod):
    w1 = SignedPermutation(3, (2, -3, 1))
    w2 = SignedPermutation(3, (-1, 3, 2))
    assert tripod.twist(w1).twist(w2) == tripod.twist(w2.compose(w1))


def test_independents(tripod, coloop1):
    assert [s.render() for s in coloop1.independents()] == ["", "1"]
    ind = tripod.independents()
    assert len(ind) == 19
    assert not tripod.is_independent(sset(3, 1, 2))
    sizes = sorted(s.size for s in ind)
    assert sizes.count(0) == 1 and sizes.count(1) == 6
    assert sizes.count(2) == 9 and sizes.count(3) == 3


def test_lattice_point_test(tripod, coloop1, free1):
    assert free1.lattice_point_test()
    assert tripod.lattice_point_test()
    assert coloop1.lattice_point_test()


def test_validators_agree_on_random_families():
    rng = random.Random(77)
    for _ in range(300):
        n = rng.randint(1, 4)
        fam = rng.sample(range(1 << n), rng.randint(1, min(6, 1 << n)))
        d = DeltaMatroid(n, fam)
        assert d.validate("exchange").ok == d.validate("polytope").ok, d


def test_exchange_witness_is_recheckable():
    bad = DeltaMatroid.from_signed_lists(3, [[1, 2, 3], [-1, -2, -3]])
    rep = bad.validate("exchange")
    x_set, y_set, index = rep.witness
    x_mask, y_mask = x_set.pos, y_set.pos
    diff = x_mask ^ y_mask
    assert diff >> (index - 1) & 1
    fam = set(bad.feasible)
    bit = 1 << (index - 1)
    fixes = [x_mask ^ bit]
    for t in range(3):
        other = 1 << t
        if diff >> t & 1 and other != bit:
            fixes.append(x_mask ^ bit ^ other)
    assert not any(f in fam for f in fixes)
