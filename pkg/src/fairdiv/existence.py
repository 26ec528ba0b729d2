"""Existence of proportional and equitable divisions.

With ``S1``/``S2`` the divisible totals of A and B, ``T`` the indivisible
values and ``c_i = a_i + b_i``, a proportional division exists iff one of
three 0/1 systems is compatible:

* A's whole items alone reach half for B and stay within half for A,
* the mirror image with roles swapped,
* ``H - (S1 + S2) <= sum(c_i * s_i) <= H``, which is also exactly the
  condition for an equitable division to exist.

Each system reduces to a capacity knapsack.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .boolean_opt import knapsack_max
from .model import Problem


@dataclass(frozen=True)
class ExistenceFlags:
    proportional: bool
    equitable: bool
    # which of the three systems are compatible, in the order listed above
    systems: tuple[bool, bool, bool] = field(default=(False, False, False), compare=False)


def _half_system(p: Problem, swap: bool) -> bool:
    items = p.indivisible
    mine = [it.b if swap else it.a for it in items]
    theirs = [it.a if swap else it.b for it in items]
    # B keeps items worth at most H/2 to A but at least H/2 to B (or mirrored)
    best = knapsack_max(mine, theirs, p.H // 2)
    return 2 * best.value >= p.H


def _window_system(p: Problem) -> bool:
    c = [it.a + it.b for it in p.indivisible]
    s = sum(it.a + it.b for it in p.divisible)
    return knapsack_max(c, c, p.H).value >= p.H - s


def equitable_exists(p: Problem) -> bool:
    return _window_system(p)


def proportional_exists(p: Problem) -> bool:
    return existence_flags(p).proportional


def existence_flags(p: Problem) -> ExistenceFlags:
    systems = (_half_system(p, False), _half_system(p, True), _window_system(p))
    return ExistenceFlags(any(systems), systems[2], systems)
