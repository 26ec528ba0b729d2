"""Shared helpers for the test suite: fixture loading and random problems."""
import itertools
import os
import random
from fractions import Fraction

from fairdiv import Division, gains, make_problem
from fairdiv.cli import read_problem

DATA = os.path.join(os.path.dirname(__file__), "data")
EXAMPLES = [f"example{k}" for k in range(1, 9)]
OUTCOME_FIELDS = ("equitably_fair", "profitably_fair", "uniformly_fair", "fair")


def load(name):
    return read_problem(os.path.join(DATA, name + ".csv"))


def _split(rng, total, n, zero):
    """``total`` cut into ``n`` non-negative integer parts at random cut points."""
    cuts = sorted(rng.randint(0, total) for _ in range(n - 1))
    parts = [hi - lo for lo, hi in zip([0] + cuts, cuts + [total])]
    if zero:
        # move some parts onto a neighbour to create zero-valued entries
        for k in range(n - 1):
            if rng.random() < zero:
                parts[k + 1] += parts[k]
                parts[k] = 0
        rng.shuffle(parts)
    return parts


def random_problem(rng, max_div=3, max_ind=10, vmax=30, hmax=60, zero=0.0):
    """Random problem with at most ``max_div`` divisible and ``max_ind`` indivisible items.

    The total H is drawn first and each participant's valuation is a random
    split of H; draws with an item value above ``vmax`` are rejected.
    """
    while True:
        L = rng.randint(0, max_div)
        M = rng.randint(0, max_ind)
        n = L + M
        if n == 0:
            continue
        H = rng.randint(1, min(hmax, n * vmax))
        a = _split(rng, H, n, zero)
        b = _split(rng, H, n, zero)
        if max(a + b) > vmax:
            continue
        return make_problem([(f"i{k}", 1 if k < L else 0, a[k], b[k]) for k in range(n)])


def random_divisible_problem(rng, n_max=6, vmax=30):
    while True:
        n = rng.randint(1, n_max)
        a = [rng.randint(0, vmax) for _ in range(n)]
        b = [rng.randint(0, vmax) for _ in range(n)]
        d = sum(a) - sum(b)
        k = rng.randrange(n)
        if d > 0:
            b[k] += d
        else:
            a[k] -= d
        if sum(a) == 0:
            continue
        return make_problem([(f"i{k}", 1, a[k], b[k]) for k in range(n)])


def random_division(rng, p):
    L, M, _ = p.signature
    shares = [Fraction(rng.randint(0, 12), 12) for _ in range(L)]
    return Division(tuple(shares), tuple(rng.randint(0, 1) for _ in range(M)))


def whole_divisions(p):
    """Every division that gives each item wholly to one side."""
    L, M, _ = p.signature
    for bits in itertools.product((0, 1), repeat=L + M):
        yield Division(tuple(Fraction(x) for x in bits[:L]), bits[L:])


def outcome_gains(r, field):
    out = getattr(r, field)
    return None if out is None else out.gains


def check_outcome(p, out):
    """The reported gains really are the gains of the reported division."""
    assert gains(p, out.division) == out.gains


def problem_rng(seed):
    return random.Random(seed)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []
