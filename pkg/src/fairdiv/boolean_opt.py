"""0/1 knapsack dynamic programs with witness reconstruction.

``equality_family`` solves, for every target ``k`` in ``0..cap`` at once,

    maximize   sum(values[i] * t[i])
    subject to sum(weights[i] * t[i]) == k,   t[i] in {0, 1}

with the Bellman recursion F(k, p) = max(F(k, p-1), F(k - w_p, p-1) + v_p).
``knapsack_max`` is the usual capacity-constrained variant built on top of it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .model import GuardViolation, MAX_TOTAL

MAX_CAPACITY = 2 * MAX_TOTAL


class CapacityTooLarge(GuardViolation):
    pass


@dataclass(frozen=True)
class EqualityFamilyResult:
    weights: tuple[int, ...]
    values: tuple[int, ...]
    cap: int
    best: tuple[int, ...]
    sentinel: int
    take: tuple[bytes, ...]

    def feasible(self, k: int) -> bool:
        return 0 <= k <= self.cap and self.best[k] != self.sentinel

    def value(self, k: int) -> Optional[int]:
        return self.best[k] if self.feasible(k) else None

    def witness(self, k: int) -> tuple[int, ...]:
        if not self.feasible(k):
            raise ValueError(f"target {k} is infeasible")
        tau = [0] * len(self.weights)
        for p in range(len(self.weights) - 1, -1, -1):
            if self.take[p][k]:
                tau[p] = 1
                k -= self.weights[p]
        assert k == 0
        return tuple(tau)

    def feasible_targets(self) -> list[int]:
        return [k for k in range(self.cap + 1) if self.best[k] != self.sentinel]


@dataclass(frozen=True)
class KnapsackResult:
    value: int
    witness: tuple[int, ...]


def _check(weights, cap):
    if cap < 0:
        raise ValueError("capacity must be non-negative")
    if cap > MAX_CAPACITY:
        raise CapacityTooLarge(f"capacity {cap} exceeds the supported maximum {MAX_CAPACITY}")
    for w in weights:
        if w < 0:
            raise ValueError("weights must be non-negative")


def equality_family(weights: Sequence[int], values: Sequence[int], cap: int) -> EqualityFamilyResult:
    weights = tuple(int(w) for w in weights)
    values = tuple(int(v) for v in values)
    if len(weights) != len(values):
        raise ValueError("weights and values differ in length")
    _check(weights, cap)
    # sits below every reachable sum; never used in arithmetic
    neg = -(sum(abs(v) for v in values) + 1)
    best = [neg] * (cap + 1)
    best[0] = 0
    take = []
    for w, v in zip(weights, values):
        row = bytearray(cap + 1)
        if w == 0:
            if v > 0:
                for k in range(cap + 1):
                    if best[k] != neg:
                        best[k] += v
                        row[k] = 1
        else:
            for k in range(cap, w - 1, -1):
                prev = best[k - w]
                # strict: ties keep the item unselected
                if prev != neg and prev + v > best[k]:
                    best[k] = prev + v
                    row[k] = 1
        take.append(bytes(row))
    return EqualityFamilyResult(weights, values, cap, tuple(best), neg, tuple(take))


def knapsack_max(weights: Sequence[int], values: Sequence[int], capacity: int) -> KnapsackResult:
    """Maximize ``sum(values * t)`` subject to ``sum(weights * t) <= capacity``."""
    if any(v < 0 for v in values):
        raise ValueError("knapsack values must be non-negative")
    if capacity < 0:
        raise ValueError("capacity must be non-negative")
    cap = min(capacity, sum(weights))
    fam = equality_family(weights, values, cap)
    k_best = max(fam.feasible_targets(), key=lambda k: (fam.best[k], -k))
    return KnapsackResult(fam.best[k_best], fam.witness(k_best))
