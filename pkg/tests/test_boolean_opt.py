import itertools
import random

import pytest

from fairdiv.boolean_opt import CapacityTooLarge, equality_family, knapsack_max


def enumerate_family(weights, values, cap):
    best = {}
    for t in itertools.product((0, 1), repeat=len(weights)):
        k = sum(w * x for w, x in zip(weights, t))
        v = sum(w * x for w, x in zip(values, t))
        if k <= cap and (k not in best or v > best[k]):
            best[k] = v
    return best


def test_small_by_hand():
    fam = equality_family([2, 3, 5], [4, 1, 6], 10)
    assert fam.feasible_targets() == [0, 2, 3, 5, 7, 8, 10]
    assert fam.value(5) == 6  # {5} beats {2, 3}
    assert fam.witness(5) == (0, 0, 1)
    assert fam.value(1) is None
    assert not fam.feasible(11)


def test_ties_keep_items_unselected():
    fam = equality_family([1, 1], [3, 3], 2)
    assert fam.witness(1) == (1, 0)


def test_zero_weight_items():
    fam = equality_family([0, 0, 2], [5, -1, 1], 2)
    assert fam.value(0) == 5 and fam.witness(0) == (1, 0, 0)
    assert fam.value(2) == 6 and fam.witness(2) == (1, 0, 1)


@pytest.mark.parametrize("seed", range(60))
def test_matches_enumeration(seed):
    rng = random.Random(seed)
    m = rng.randint(0, 12)
    weights = [rng.randint(0, 15) for _ in range(m)]
    values = [rng.randint(-20, 20) for _ in range(m)]
    cap = rng.randint(0, sum(weights) + 3)
    fam = equality_family(weights, values, cap)
    expect = enumerate_family(weights, values, cap)
    assert fam.feasible_targets() == sorted(expect)
    for k, v in expect.items():
        assert fam.value(k) == v
        t = fam.witness(k)
        assert sum(w * x for w, x in zip(weights, t)) == k
        assert sum(v * x for v, x in zip(values, t)) == expect[k]


@pytest.mark.parametrize("seed", range(30))
def test_knapsack_matches_enumeration(seed):
    rng = random.Random(100 + seed)
    m = rng.randint(0, 10)
    weights = [rng.randint(0, 20) for _ in range(m)]
    values = [rng.randint(0, 20) for _ in range(m)]
    cap = rng.randint(0, 60)
    res = knapsack_max(weights, values, cap)
    expect = max(v for k, v in enumerate_family(weights, values, cap).items())
    assert res.value == expect
    assert sum(w * x for w, x in zip(weights, res.witness)) <= cap
    assert sum(v * x for v, x in zip(values, res.witness)) == expect


def test_guards():
    with pytest.raises(CapacityTooLarge):
        equality_family([1], [1], 2 * 10**6 + 1)
    with pytest.raises(ValueError):
        equality_family([-1], [1], 3)
    with pytest.raises(ValueError):
        equality_family([1, 2], [1], 3)
    with pytest.raises(ValueError):
        knapsack_max([1], [-1], 3)


def test_equality_vectors():
    fam = equality_family([35, 30, 15], [18, 20, 12], 80)
    assert fam.value(15) == 12 and fam.witness(15) == (0, 0, 1)
    fam = equality_family([2, 3], [5, 7], 5)
    assert fam.value(5) == 12 and fam.witness(5) == (1, 1)
    assert not fam.feasible(1)
    assert fam.value(0) == 0 and fam.witness(0) == (0, 0)


def test_knapsack_vectors():
    assert knapsack_max([45, 30, 15, 9], [30, 25, 22, 22], 50).value == 47
    assert knapsack_max([62, 50, 42, 40], [62, 50, 42, 40], 100).value == 92
    res = knapsack_max([3, 4], [5, 6], 0)
    assert res.value == 0 and res.witness == (0, 0)
