"""Division problems, divisions and their gains.

A problem is a list of items, each valued by two participants A and B with
non-negative integers.  Both valuations sum to the same total ``H``.  A
division gives every divisible item a fractional share to A and every
indivisible item wholly to one participant (``owner == 1`` means A).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

MAX_TOTAL = 10**6


class FairDivisionError(ValueError):
    """Base class for invalid input."""


class TotalsMismatch(FairDivisionError):
    pass


class ZeroTotal(FairDivisionError):
    pass


class DuplicateName(FairDivisionError):
    pass


class NegativeValue(FairDivisionError):
    pass


class InvalidItem(FairDivisionError):
    pass


class ShapeMismatch(FairDivisionError):
    pass


class GuardViolation(FairDivisionError):
    """Input is valid but larger than the solvers accept."""


class TotalTooLarge(GuardViolation):
    pass


@dataclass(frozen=True)
class Item:
    name: str
    a: int
    b: int
    divisible: bool


class Signature(NamedTuple):
    L: int
    M: int
    H: int


class GainPair(NamedTuple):
    ga: Fraction
    gb: Fraction

    def diff(self) -> Fraction:
        return self.ga - self.gb

    def scaled(self, t) -> "GainPair":
        return GainPair(self.ga * t, self.gb * t)

    def __str__(self) -> str:
        return f"({self.ga}, {self.gb})"


@dataclass(frozen=True)
class Problem:
    items: tuple[Item, ...]

    @property
    def H(self) -> int:
        return sum(it.a for it in self.items)

    @property
    def divisible(self) -> tuple[Item, ...]:
        return tuple(it for it in self.items if it.divisible)

    @property
    def indivisible(self) -> tuple[Item, ...]:
        return tuple(it for it in self.items if not it.divisible)

    @property
    def signature(self) -> Signature:
        L = sum(1 for it in self.items if it.divisible)
        return Signature(L, len(self.items) - L, self.H)

    def index(self, name: str) -> int:
        for i, it in enumerate(self.items):
            if it.name == name:
                return i
        raise KeyError(name)

    def scaled(self, t: int) -> "Problem":
        return Problem(tuple(Item(it.name, it.a * t, it.b * t, it.divisible) for it in self.items))

    def all_divisible(self) -> "Problem":
        return Problem(tuple(Item(it.name, it.a, it.b, True) for it in self.items))


def make_problem(rows: Iterable[Sequence]) -> Problem:
    """Build a validated problem from ``(name, divisible, a, b)`` rows.

    >>> make_problem([("x", 1, 3, 1), ("y", 0, 1, 3)]).signature
    Signature(L=1, M=1, H=4)
    """
    items = []
    seen = set()
    for row in rows:
        name, divisible, a, b = row
        if not isinstance(name, str) or not name or "," in name:
            raise InvalidItem(f"bad item name {name!r}")
        if name in seen:
            raise DuplicateName(f"duplicate item name {name!r}")
        seen.add(name)
        for v in (a, b):
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidItem(f"item {name!r}: value {v!r} is not an integer")
            if v < 0:
                raise NegativeValue(f"item {name!r}: negative value {v}")
        if divisible not in (0, 1):
            raise InvalidItem(f"item {name!r}: divisible flag must be 0 or 1, got {divisible!r}")
        items.append(Item(name, a, b, bool(divisible)))
    if not items:
        raise InvalidItem("a problem needs at least one item")
    ta = sum(it.a for it in items)
    tb = sum(it.b for it in items)
    if ta != tb:
        raise TotalsMismatch(f"valuation totals differ: A sums to {ta}, B sums to {tb}")
    if ta == 0:
        raise ZeroTotal("valuation total H must be positive")
    if ta > MAX_TOTAL:
        raise TotalTooLarge(f"H = {ta} exceeds the supported maximum {MAX_TOTAL}")
    return Problem(tuple(items))


@dataclass(frozen=True)
class Division:
    """Shares of divisible items to A and owners of indivisible items.

    ``shares`` follows the order of ``problem.divisible`` and ``owners`` the
    order of ``problem.indivisible``.
    """

    shares: tuple[Fraction, ...]
    owners: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shares", tuple(Fraction(x) for x in self.shares))
        object.__setattr__(self, "owners", tuple(int(s) for s in self.owners))
        for x in self.shares:
            if not 0 <= x <= 1:
                raise FairDivisionError(f"share {x} outside [0, 1]")
        for s in self.owners:
            if s not in (0, 1):
                raise FairDivisionError(f"owner flag {s} is not 0 or 1")

    @property
    def split_count(self) -> int:
        return sum(1 for x in self.shares if 0 < x < 1)

    @classmethod
    def all_to(cls, p: Problem, owner: int) -> "Division":
        L, M, _ = p.signature
        return cls((Fraction(owner),) * L, (owner,) * M)

    @classmethod
    def from_item_shares(cls, p: Problem, shares: Sequence) -> "Division":
        """Build from one share per item in problem order (0/1 for indivisible)."""
        if len(shares) != len(p.items):
            raise ShapeMismatch("need one share per item")
        div, own = [], []
        for it, x in zip(p.items, shares):
            if it.divisible:
                div.append(Fraction(x))
            else:
                if x not in (0, 1):
                    raise FairDivisionError(f"indivisible item {it.name!r} cannot take share {x}")
                own.append(int(x))
        return cls(tuple(div), tuple(own))

    def item_shares(self, p: Problem) -> list[Fraction]:
        check_shape(p, self)
        d, w = iter(self.shares), iter(self.owners)
        return [next(d) if it.divisible else Fraction(next(w)) for it in p.items]


def check_shape(p: Problem, d: Division) -> None:
    L, M, _ = p.signature
    if len(d.shares) != L or len(d.owners) != M:
        raise ShapeMismatch(
            f"division has {len(d.shares)} shares and {len(d.owners)} owners; "
            f"problem has L={L}, M={M}"
        )


def gains(p: Problem, d: Division) -> GainPair:
    check_shape(p, d)
    ga = Fraction(0)
    gb = Fraction(0)
    for it, x in zip(p.divisible, d.shares):
        ga += it.a * x
        gb += it.b * (1 - x)
    for it, s in zip(p.indivisible, d.owners):
        ga += it.a * s
        gb += it.b * (1 - s)
    return GainPair(ga, gb)


def complement(d: Division) -> Division:
    return Division(tuple(1 - x for x in d.shares), tuple(1 - s for s in d.owners))


def dominates(g: GainPair, h: GainPair) -> bool:
    return g.ga >= h.ga and g.gb >= h.gb and (g.ga > h.ga or g.gb > h.gb)


def is_proportional(p, g: GainPair) -> bool:
    """Both gains reach half the total.  ``p`` is a problem or the total H."""
    H = p if isinstance(p, int) else p.H
    return 2 * g.ga >= H and 2 * g.gb >= H


def is_equitable(g: GainPair) -> bool:
    return g.ga == g.gb
