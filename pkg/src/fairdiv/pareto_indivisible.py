"""Undominated gain pairs over whole-item distributions of the indivisible items."""
from __future__ import annotations

from typing import NamedTuple

from .boolean_opt import equality_family
from .model import Problem


class ParetoPoint(NamedTuple):
    x: int
    y: int
    witness: tuple[int, ...]  # owner per indivisible item, 1 = A


def undominated_points(p: Problem) -> list[ParetoPoint]:
    """Pareto-optimal ``(G_A, G_B)`` pairs of the indivisible items, by increasing x.

    The DP selects the items B keeps (``tau``); for each reachable total ``k``
    of A-values left to B it gives B's best gain, i.e. the point
    ``(sum_a - k, F(k))``.  A right-to-left sweep then drops dominated pairs.
    """
    items = p.indivisible
    a = [it.a for it in items]
    b = [it.b for it in items]
    s1 = sum(a)
    fam = equality_family(a, b, s1)
    kept = []
    running = None
    for k in fam.feasible_targets():  # k ascending = x descending
        y = fam.best[k]
        if running is None or y > running:
            running = y
            tau = fam.witness(k)
            kept.append(ParetoPoint(s1 - k, y, tuple(1 - t for t in tau)))
    kept.reverse()
    return kept
