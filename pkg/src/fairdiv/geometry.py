"""Planar geometry of gain pairs.

Points are ``(x, y) = (G_A, G_B)``.  The divisible items alone reach a convex
polygon whose upper-right border is a concave broken line; adding the gain
pair of an indivisible distribution shifts that line.  The efficient
divisions of a problem live on the union of the shifted lines, and
:func:`envelope` extracts exactly the undominated part of that union.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .model import Division, GainPair, Problem
from .pareto_indivisible import ParetoPoint

ZERO = Fraction(0)
ONE = Fraction(1)


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def ratio_order(pairs: Sequence[tuple[int, int]]) -> list[int]:
    """Indices sorted by ``a/b`` non-increasing; stable; zero items last.

    >>> ratio_order([(15, 10), (50, 40), (10, 10), (20, 30), (5, 10)])
    [0, 1, 2, 3, 4]
    """
    def cmp(i, j):
        (ai, bi), (aj, bj) = pairs[i], pairs[j]
        lhs, rhs = ai * bj, aj * bi
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    live = [i for i, (a, b) in enumerate(pairs) if a or b]
    dead = [i for i, (a, b) in enumerate(pairs) if not (a or b)]
    return sorted(live, key=functools.cmp_to_key(cmp)) + dead


@dataclass(frozen=True)
class BrokenLine:
    """Upper-right border of the divisible-items polygon.

    ``order[k]`` is the position (within ``problem.divisible``) of the item
    whose transfer to A walks segment ``k``.  Zero-valued items have no
    segment and always stay with B.
    """

    vertices: tuple[Point, ...]
    order: tuple[int, ...]
    n_divisible: int

    @property
    def n_segments(self) -> int:
        return len(self.vertices) - 1

    def shares(self, seg: int, t) -> tuple[Fraction, ...]:
        out = [ZERO] * self.n_divisible
        for k, pos in enumerate(self.order):
            if k < seg:
                out[pos] = ONE
            elif k == seg:
                out[pos] = Fraction(t)
        return tuple(out)


def pareto_line(p: Problem) -> BrokenLine:
    items = p.divisible
    pairs = [(it.a, it.b) for it in items]
    order = [i for i in ratio_order(pairs) if pairs[i] != (0, 0)]
    x, y = 0, sum(b for _, b in pairs)
    verts = [Point(x, y)]
    for i in order:
        x += pairs[i][0]
        y -= pairs[i][1]
        verts.append(Point(x, y))
    return BrokenLine(tuple(verts), tuple(order), len(items))


class AWResult(NamedTuple):
    shares: tuple[Fraction, ...]  # per item, input order
    gains: GainPair
    r: int  # 1-based rank of the pivot item in ratio order
    split: Optional[int]  # input index of the divided item, if any


def adjusted_winner(values: Sequence[tuple[int, int]]) -> AWResult:
    """Adjusted-winner division treating every item as divisible.

    >>> res = adjusted_winner([(15, 10), (50, 40), (10, 10), (20, 30), (5, 10)])
    >>> res.r, res.shares[1], res.gains.ga
    (2, Fraction(5, 6), Fraction(170, 3))
    """
    H = sum(a for a, _ in values)
    if H != sum(b for _, b in values) or H <= 0:
        raise ValueError("valuations must share a positive total")
    order = ratio_order(values)
    a = [values[i][0] for i in order]
    b = [values[i][1] for i in order]
    N = len(order)

    if a[0] > sum(b[1:]):
        r, x = 1, Fraction(H, a[0] + b[0])
    elif sum(a[:-1]) <= b[-1]:
        r, x = N, 1 - Fraction(H, a[-1] + b[-1])
    else:
        r = next(
            r for r in range(1, N + 1)
            if sum(a[:r - 1]) <= sum(b[r - 1:]) and sum(a[:r]) > sum(b[r:])
        )
        left, right = sum(a[:r - 1]), sum(b[r - 1:])
        x = ZERO if left == right else Fraction(right - left, a[r - 1] + b[r - 1])

    sorted_shares = [ONE] * (r - 1) + [x] + [ZERO] * (N - r)
    shares = [ZERO] * N
    for pos, i in enumerate(order):
        shares[i] = sorted_shares[pos]
    ga = sum((v[0] * s for v, s in zip(values, shares)), ZERO)
    gb = sum((v[1] * (1 - s) for v, s in zip(values, shares)), ZERO)
    split = order[r - 1] if 0 < x < 1 else None
    return AWResult(tuple(shares), GainPair(ga, gb), r, split)


@dataclass(frozen=True)
class ShiftedLine:
    base: ParetoPoint
    line: BrokenLine

    @property
    def vertices(self) -> tuple[Point, ...]:
        bx, by = self.base.x, self.base.y
        return tuple(Point(v.x + bx, v.y + by) for v in self.line.vertices)

    @property
    def n_segments(self) -> int:
        return self.line.n_segments

    def point(self, seg: int, t) -> Point:
        vs = self.vertices
        if seg >= len(vs) - 1:
            return vs[-1]
        p, q = vs[seg], vs[seg + 1]
        return Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))

    def division(self, seg: int, t) -> Division:
        return Division(self.line.shares(seg, t), self.base.witness)

    def diff_range(self) -> tuple[Fraction, Fraction]:
        """``x - y`` at the left and right vertex (its range over the polygon)."""
        vs = self.vertices
        return vs[0].x - vs[0].y, vs[-1].x - vs[-1].y

    def diagonal_crossing(self) -> Optional[tuple[int, Fraction]]:
        """Location ``(seg, t)`` where the line meets ``x == y``, if it does."""
        vs = self.vertices
        d = [v.x - v.y for v in vs]
        if len(vs) == 1:
            return (0, ZERO) if d[0] == 0 else None
        for k in range(len(vs) - 1):
            if d[k] <= 0 <= d[k + 1]:
                if d[k] == d[k + 1]:
                    return k, ZERO
                return k, Fraction(-d[k]) / (d[k + 1] - d[k])
        return None


def shifted_lines(p: Problem, points: Sequence[ParetoPoint]) -> list[ShiftedLine]:
    line = pareto_line(p)
    return [ShiftedLine(w, line) for w in points]


class _Seg(NamedTuple):
    x1: Fraction
    y1: Fraction
    x2: Fraction
    y2: Fraction
    line: int
    seg: int

    @property
    def degenerate(self) -> bool:
        return self.x1 == self.x2 and self.y1 == self.y2

    def at(self, t) -> Point:
        return Point(self.x1 + t * (self.x2 - self.x1), self.y1 + t * (self.y2 - self.y1))


def _segments(lines: Sequence[ShiftedLine]) -> list[_Seg]:
    out = []
    for i, ln in enumerate(lines):
        vs = ln.vertices
        if len(vs) == 1:
            out.append(_Seg(vs[0].x, vs[0].y, vs[0].x, vs[0].y, i, 0))
        for k in range(len(vs) - 1):
            out.append(_Seg(vs[k].x, vs[k].y, vs[k + 1].x, vs[k + 1].y, i, k))
    return out


def _clip(constraints, lo=ZERO, hi=ONE):
    """Intersect ``[lo, hi]`` with ``alpha * t <= beta`` for each pair."""
    for alpha, beta in constraints:
        if alpha > 0:
            hi = min(hi, Fraction(beta) / alpha)
        elif alpha < 0:
            lo = max(lo, Fraction(beta) / alpha)
        elif beta < 0:
            return None
        if lo > hi:
            return None
    return lo, hi


def _dominated_by_seg(q: Point, s: _Seg) -> bool:
    if s.x2 < q.x or s.y1 < q.y:
        return False
    dx, dy = s.x2 - s.x1, s.y2 - s.y1
    iv = _clip([(-dx, s.x1 - q.x), (-dy, s.y1 - q.y)])
    if iv is None:
        return False
    lo, hi = iv
    if lo < hi and not s.degenerate:
        return True
    return s.at(lo) != q


def is_dominated(q, lines: Sequence[ShiftedLine]) -> bool:
    """True iff some point on some line is >= ``q`` and differs from it."""
    q = Point(Fraction(q[0]), Fraction(q[1]))
    return any(_dominated_by_seg(q, s) for s in _segments(lines))


@dataclass(frozen=True)
class EnvelopeSegment:
    p1: Point
    p2: Point
    closed1: bool
    closed2: bool
    source: int  # index of the shifted line
    segment: int  # segment index within that line
    t1: Fraction
    t2: Fraction

    @property
    def degenerate(self) -> bool:
        return self.p1 == self.p2

    def contains(self, q: Point) -> bool:
        """Whether ``q`` is one of the points this piece stands for."""
        if q == self.p1:
            return self.closed1
        if q == self.p2:
            return self.closed2
        if self.degenerate:
            return False
        dx, dy = self.p2.x - self.p1.x, self.p2.y - self.p1.y
        if dx * (q.y - self.p1.y) != dy * (q.x - self.p1.x):
            return False
        return min(self.p1.x, self.p2.x) <= q.x <= max(self.p1.x, self.p2.x) and \
            min(self.p1.y, self.p2.y) <= q.y <= max(self.p1.y, self.p2.y)


def _param_of_point(s: _Seg, q) -> Optional[Fraction]:
    dx, dy = s.x2 - s.x1, s.y2 - s.y1
    t = Fraction(q[0] - s.x1) / dx if dx else Fraction(q[1] - s.y1) / dy
    if 0 <= t <= 1 and s.at(t) == (q[0], q[1]):
        return t
    return None


def _param_overlap(s: _Seg, o: _Seg) -> Optional[tuple[Fraction, Fraction]]:
    """Parameter range of ``s`` lying on segment ``o`` (both non-degenerate)."""
    dx, dy = s.x2 - s.x1, s.y2 - s.y1
    ex, ey = o.x2 - o.x1, o.y2 - o.y1
    wx, wy = o.x1 - s.x1, o.y1 - s.y1
    den = dx * ey - dy * ex
    if den:
        t = Fraction(wx * ey - wy * ex) / den
        u = Fraction(wx * dy - wy * dx) / den
        if 0 <= t <= 1 and 0 <= u <= 1:
            return t, t
        return None
    if wx * dy - wy * dx:
        return None  # parallel, not collinear
    ta = _line_param(s, o.x1, o.y1)
    tb = _line_param(s, o.x2, o.y2)
    lo, hi = max(ZERO, min(ta, tb)), min(ONE, max(ta, tb))
    return (lo, hi) if lo <= hi else None


def _line_param(s: _Seg, x, y) -> Fraction:
    dx, dy = s.x2 - s.x1, s.y2 - s.y1
    return Fraction(x - s.x1) / dx if dx else Fraction(y - s.y1) / dy


def _dominated_params(s: _Seg, o: _Seg):
    """Intervals ``(lo, lo_closed, hi, hi_closed)`` of ``s`` dominated by points of ``o``."""
    DX, DYn = o.x2 - o.x1, o.y1 - o.y2
    dx, dy = s.x2 - s.x1, s.y2 - s.y1
    # o's weak lower-left region: x <= X2, y <= Y1, below o's supporting line
    region = _clip([
        (dx, o.x2 - s.x1),
        (dy, o.y1 - s.y1),
        (DX * dy + DYn * dx, -DX * (s.y1 - o.y1) - DYn * (s.x1 - o.x1)),
    ])
    if region is None:
        return []
    c0, c1 = region
    # points of o that no other point of o dominates
    if DX > 0 and DYn > 0:
        keep = _param_overlap(s, o)
    else:
        t = _param_of_point(s, (o.x2, o.y2) if DX > 0 else (o.x1, o.y1))
        keep = None if t is None else (t, t)
    if keep is None:
        return [(c0, True, c1, True)]
    k0, k1 = keep
    out = []
    if c0 < k0:
        out.append((c0, True, k0, False))
    if k1 < c1:
        out.append((k1, False, c1, True))
    return out


def _valid(iv) -> bool:
    lo, lc, hi, hc = iv
    return lo < hi or (lo == hi and lc and hc)


def _free_params(dominated) -> list[tuple]:
    """Complement in ``[0, 1]`` of a union of intervals."""
    ivs = sorted((iv for iv in dominated if _valid(iv)), key=lambda iv: (iv[0], not iv[1]))
    merged = []
    for lo, lc, hi, hc in ivs:
        if merged:
            mlo, mlc, mhi, mhc = merged[-1]
            if lo < mhi or (lo == mhi and (mhc or lc)):
                if hi > mhi:
                    merged[-1] = (mlo, mlc, hi, hc)
                elif hi == mhi:
                    merged[-1] = (mlo, mlc, mhi, mhc or hc)
                continue
        merged.append((lo, lc, hi, hc))
    free = []
    pos, pos_in = ZERO, True
    for lo, lc, hi, hc in merged:
        free.append((pos, pos_in, lo, not lc))
        pos, pos_in = hi, not hc
    free.append((pos, pos_in, ONE, True))
    return [iv for iv in free if _valid(iv)]


def envelope(lines: Sequence[ShiftedLine]) -> list[EnvelopeSegment]:
    """Exact undominated part of the union of ``lines``.

    Each returned piece is a straight sub-segment of one line segment with
    flags telling whether its endpoints belong to it.  Pieces are sorted left
    to right.
    """
    segs = _segments(lines)
    pieces = []
    for s in segs:
        if s.degenerate:
            q = Point(s.x1, s.y1)
            if not any(_dominated_by_seg(q, o) for o in segs):
                pieces.append(EnvelopeSegment(q, q, True, True, s.line, s.seg, ZERO, ZERO))
            continue
        dominated = []
        for o in segs:
            # o can only dominate s if it reaches right of s's left end and above its bottom
            if o.x2 < s.x1 or o.y1 < s.y2:
                continue
            dominated.extend(_dominated_params(s, o))
        for lo, lc, hi, hc in _free_params(dominated):
            pieces.append(EnvelopeSegment(s.at(lo), s.at(hi), lc, hc, s.line, s.seg, lo, hi))
    return _tidy(pieces)


def _tidy(pieces: list[EnvelopeSegment]) -> list[EnvelopeSegment]:
    out = []
    seen = set()
    for pc in pieces:
        key = (pc.p1, pc.p2, pc.closed1, pc.closed2)
        if key in seen:
            continue
        if pc.degenerate and any(o is not pc and not o.degenerate and o.contains(pc.p1) for o in pieces):
            continue
        seen.add(key)
        out.append(pc)
    out.sort(key=lambda pc: (pc.p1.x, -pc.p1.y, pc.p2.x))
    return out
