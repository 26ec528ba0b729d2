import random
from fractions import Fraction

import pytest

from fairdiv import GainPair, is_proportional
from fairdiv.geometry import (
    Point,
    adjusted_winner,
    envelope,
    is_dominated,
    pareto_line,
    ratio_order,
    shifted_lines,
)
from fairdiv.pareto_indivisible import undominated_points

from support import random_divisible_problem, random_problem

F = Fraction


def pairs(p):
    return [(it.a, it.b) for it in p.items]


def test_ratio_order_ties_and_zeros():
    assert ratio_order([(1, 2), (0, 0), (2, 4), (3, 0), (0, 5)]) == [3, 0, 2, 4, 1]


def test_pareto_line_example1(load):
    line = pareto_line(load("example1"))
    assert line.vertices == ((0, 100), (15, 90), (65, 50), (75, 40), (95, 10), (100, 0))
    assert line.shares(2, Fraction(1, 2)) == (1, 0, 1, Fraction(1, 2), 0)


def test_pareto_line_skips_zero_items():
    from fairdiv import make_problem
    p = make_problem([("z", 1, 0, 0), ("x", 1, 2, 1), ("y", 1, 1, 2)])
    line = pareto_line(p)
    assert line.vertices == ((0, 3), (2, 2), (3, 0))
    assert line.shares(2, 0) == (0, 1, 1)


def test_aw_example1(load):
    p = load("example1")
    res = adjusted_winner(pairs(p))
    assert res.r == 2
    assert res.split == p.index("retirement account")
    assert res.shares == (Fraction(5, 6), 0, 1, 0, 0)
    assert res.gains == GainPair(Fraction(170, 3), Fraction(170, 3))


def test_aw_example2(load):
    res = adjusted_winner(pairs(load("example2")))
    assert res.gains == GainPair(Fraction(460, 7), Fraction(460, 7))


def test_aw_first_item_split():
    res = adjusted_winner([(8, 5), (1, 4)])
    assert res.r == 1 and res.shares == (Fraction(9, 13), 0)
    assert res.gains == (Fraction(72, 13), Fraction(72, 13))


def test_aw_rejects_bad_totals():
    with pytest.raises(ValueError):
        adjusted_winner([(1, 2)])


@pytest.mark.parametrize("seed", range(200))
def test_aw_is_equitable_and_proportional(seed):
    p = random_divisible_problem(random.Random(seed))
    res = adjusted_winner(pairs(p))
    assert res.gains.ga == res.gains.gb
    assert is_proportional(p, res.gains)
    assert sum(1 for x in res.shares if 0 < x < 1) <= 1
    ga = sum(it.a * x for it, x in zip(p.items, res.shares))
    gb = sum(it.b * (1 - x) for it, x in zip(p.items, res.shares))
    assert res.gains == (ga, gb)


def test_envelope_example3(load):
    p = load("example3")
    env = envelope(shifted_lines(p, undominated_points(p)))
    assert env
    for pc in env:
        mid = Point((pc.p1.x + pc.p2.x) / 2, (pc.p1.y + pc.p2.y) / 2)
        assert not is_dominated(mid, shifted_lines(p, undominated_points(p)))
    assert not is_dominated((65, 62), shifted_lines(p, undominated_points(p)))
    assert is_dominated((Fraction(170, 3), Fraction(170, 3)), shifted_lines(p, undominated_points(p)))


def _sample_points(lines, steps=6):
    for ln in lines:
        vs = ln.vertices
        if len(vs) == 1:
            yield vs[0]
        for k in range(len(vs) - 1):
            for j in range(steps + 1):
                yield ln.point(k, Fraction(j, steps))


@pytest.mark.parametrize("seed", range(60))
def test_envelope_is_exactly_the_undominated_part(seed):
    p = random_problem(random.Random(seed), max_ind=6, zero=0.15)
    lines = shifted_lines(p, undominated_points(p))
    env = envelope(lines)
    for q in _sample_points(lines):
        assert any(pc.contains(q) for pc in env) == (not is_dominated(q, lines)), q
    for pc in env:
        for q, closed in ((pc.p1, pc.closed1), (pc.p2, pc.closed2)):
            if closed:
                assert not is_dominated(q, lines)


def test_ratio_order_examples(load):
    p = load("example1")
    assert [p.items[i].name for i in ratio_order(pairs(p))] == \
        ["cottage", "retirement account", "portfolio", "house", "other"]
    p = load("example2")
    assert [p.items[i].name for i in ratio_order(pairs(p))] == \
        ["laying off", "CEO assignment", "president assignment", "headquarters", "name"]
    assert ratio_order([(5, 5), (3, 3)]) == [0, 1]
    assert ratio_order([(0, 3), (2, 0), (1, 1)]) == [1, 2, 0]


def test_pareto_line_vectors(load):
    from fairdiv import make_problem
    assert pareto_line(load("example3")).vertices == ((0, 50), (10, 30), (20, 0))
    assert pareto_line(make_problem([("x", 1, 3, 4), ("y", 0, 1, 0)])).vertices == ((0, 4), (3, 0))
    assert pareto_line(load("example8")).vertices == ((0, 0),)


def test_aw_example2_split(load):
    p = load("example2")
    res = adjusted_winner(pairs(p))
    assert res.r == 3
    assert res.split == p.index("president assignment")
    assert res.shares[res.split] == F(5, 7)


def test_aw_single_item():
    res = adjusted_winner([(7, 7)])
    assert res.shares == (F(1, 2),) and res.gains == (F(7, 2), F(7, 2))


def test_shifted_lines_example3(load):
    p = load("example3")
    lines = shifted_lines(p, undominated_points(p))
    assert len(lines) == 6
    shifted = [ln for ln in lines if (ln.base.x, ln.base.y) == (65, 12)]
    assert shifted[0].vertices == ((65, 62), (75, 42), (85, 12))
    assert [ln for ln in lines if (ln.base.x, ln.base.y) == (0, 50)][0].vertices == ((0, 100), (10, 80), (20, 50))


def test_is_dominated_vectors(load):
    p = load("example3")
    lines = shifted_lines(p, undominated_points(p))
    assert is_dominated((F(170, 3), F(170, 3)), lines)
    assert not is_dominated((65, 62), lines)
    assert is_dominated((0, 0), lines)


def test_envelope_example3_pieces(load):
    p = load("example3")
    env = envelope(shifted_lines(p, undominated_points(p)))
    closed = sorted({q for pc in env for q, c in ((pc.p1, pc.closed1), (pc.p2, pc.closed2)) if c})
    assert closed == [(0, 100), (15, 88), (35, 82), (50, 70), (65, 62), (80, 50), (90, 30), (100, 0)]
    entering = [pc for pc in env if pc.p1 == (50, 70)]
    assert len(entering) == 1
    assert entering[0].p2 == (54, 62) and not entering[0].closed2


def test_envelope_single_line_and_points(load):
    from fairdiv import make_problem
    p = make_problem([("x", 1, 2, 1), ("y", 1, 1, 2)])
    env = envelope(shifted_lines(p, undominated_points(p)))
    assert [(pc.p1, pc.p2) for pc in env] == [((0, 3), (2, 2)), ((2, 2), (3, 0))]
    assert all(pc.closed1 and pc.closed2 for pc in env)
    p = load("example8")
    env = envelope(shifted_lines(p, undominated_points(p)))
    assert [pc.p1 for pc in env] == [(0, 100), (4, 90), (51, 60), (55, 50), (96, 10), (100, 0)]
    assert all(pc.degenerate and pc.closed1 for pc in env)
