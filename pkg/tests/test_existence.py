import random

import pytest

from fairdiv import equitable_exists, existence_flags, max_equitable, proportional_exists
from fairdiv.oracle import oracle_report, system_table

from support import random_problem


@pytest.mark.parametrize("name, proportional, equitable", [
    ("example1", True, True),
    ("example3", True, True),
    ("example4", False, False),
    ("example5", True, False),
    ("example6", True, True),
    ("example7", True, True),
    ("example8", True, False),
])
def test_examples(load, name, proportional, equitable):
    p = load(name)
    f = existence_flags(p)
    assert (f.proportional, f.equitable) == (proportional, equitable)
    assert proportional_exists(p) == proportional
    assert equitable_exists(p) == equitable


def test_systems_excluded_from_equality(load):
    f = existence_flags(load("example5"))
    assert f.systems[2] is False
    assert f == type(f)(True, False)


@pytest.mark.parametrize("seed", range(150))
def test_matches_enumeration(seed):
    p = random_problem(random.Random(seed), max_ind=8, zero=0.2)
    f = existence_flags(p)
    rows = system_table(p)
    assert f.systems == tuple(any(getattr(r, k) for r in rows) for k in ("first", "second", "window"))
    # direct reading: a proportional division exists iff max min(gA, gB) >= H/2
    r = oracle_report(p)
    assert f.proportional == (2 * r.max_min >= p.H)
    assert f.equitable == (max_equitable(p) is not None)


def test_all_divisible_always_proportional():
    from fairdiv import make_problem
    for seed in range(30):
        rng = random.Random(seed)
        n = rng.randint(1, 5)
        a = [rng.randint(0, 9) for _ in range(n)]
        b = a[::-1]
        if sum(a) == 0:
            continue
        assert proportional_exists(make_problem([(f"i{k}", 1, a[k], b[k]) for k in range(n)]))


@pytest.mark.parametrize("seed", range(100))
def test_adding_a_symmetric_divisible_item_keeps_proportionality(seed):
    from fairdiv import make_problem
    rng = random.Random(seed)
    p = random_problem(rng, zero=0.2)
    v = rng.randint(0, 10)
    rows = [(it.name, int(it.divisible), it.a, it.b) for it in p.items] + [("extra", 1, v, v)]
    q = make_problem(rows)
    if proportional_exists(p):
        assert proportional_exists(q)
