"""Equitable divisions of maximal common gain.

An optimal equitable division never needs to split more than one item, so
the search tries each divisible item as the single "pivot" that may be
split, turns every other item into a 0/1 choice, and keeps the best pivot.
With one divisible item of values ``(a0, b0)`` the equal-gain condition
becomes the window ``H - (a0 + b0) <= sum(c_i * s_i) <= H`` with
``c_i = a_i + b_i``, and the common gain is an affine function of
``sum(d_i * s_i)`` with ``d_i = b0 * a_i - a0 * b_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .boolean_opt import equality_family
from .model import Division, Problem


class SingleSolution(NamedTuple):
    sigma: tuple[int, ...]
    x: Fraction
    gain: Fraction


@dataclass(frozen=True)
class EquitableSolution:
    gain: Fraction
    division: Division
    pivot: Optional[int]  # index in problem.items of the splittable item; None when L == 0


def solve_single_divisible(a0: int, b0: int, items: Sequence[tuple[int, int]], H: int) -> Optional[SingleSolution]:
    """Best equitable division when only the item ``(a0, b0)`` may be split.

    Returns ``None`` when no 0/1 assignment of ``items`` fits the window.

    >>> sol = solve_single_divisible(17, 17, [(42, 45), (37, 34), (2, 2), (2, 2)], 100)
    >>> sol.sigma, sol.x, sol.gain
    ((0, 1, 0, 0), Fraction(29, 34), Fraction(103, 2))
    """
    a = [it[0] for it in items]
    b = [it[1] for it in items]
    if a0 + sum(a) != H or b0 + sum(b) != H:
        raise ValueError("valuations do not sum to H")
    c = [ai + bi for ai, bi in items]
    span = a0 + b0
    if span == 0:
        # value-free pivot: equal gains need sum(c * s) == H exactly
        fam = equality_family(c, a, H)
        targets = [H]
    else:
        fam = equality_family(c, [b0 * ai - a0 * bi for ai, bi in items], H)
        targets = range(max(0, H - span), H + 1)
    feasible = [k for k in targets if fam.feasible(k)]
    if not feasible:
        return None
    k = max(feasible, key=lambda k: (fam.best[k], -k))
    sigma = fam.witness(k)
    if span == 0:
        return SingleSolution(sigma, Fraction(0), Fraction(fam.best[k]))
    z = sum(ai * s for ai, s in zip(a, sigma)) - sum(bi * (1 - s) for bi, s in zip(b, sigma))
    x = Fraction(b0 - z, span)
    assert 0 <= x <= 1
    gain = Fraction(fam.best[k] + H * a0, span)
    return SingleSolution(sigma, x, gain)


def max_equitable(p: Problem) -> Optional[EquitableSolution]:
    H = p.H
    div_idx = [i for i, it in enumerate(p.items) if it.divisible]
    ind = [(it.a, it.b) for it in p.indivisible]
    if not div_idx:
        sol = solve_single_divisible(0, 0, ind, H)
        if sol is None:
            return None
        return EquitableSolution(sol.gain, Division((), sol.sigma), None)

    best = None
    for j, i in enumerate(div_idx):
        pivot = p.items[i]
        others = [(p.items[o].a, p.items[o].b) for o in div_idx if o != i]
        sol = solve_single_divisible(pivot.a, pivot.b, others + ind, H)
        if sol is None or (best is not None and sol.gain <= best[0].gain):
            continue
        whole = iter(sol.sigma[:len(others)])
        shares = tuple(sol.x if jj == j else Fraction(next(whole)) for jj in range(len(div_idx)))
        best = (sol, Division(shares, sol.sigma[len(others):]), i)
    if best is None:
        return None
    sol, division, i = best
    return EquitableSolution(sol.gain, division, i)
