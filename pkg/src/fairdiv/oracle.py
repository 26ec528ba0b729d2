"""Brute-force reference solver for small problems.

Everything here is computed without the dynamic programs or the segment
envelope used by the engine.  All ``2**M`` owner vectors are enumerated,
the divisible polygon's upper-right border comes from a convex hull of the
``2**L`` whole-item distributions, and the efficient set is read from the
function ``g(x) = max{y : (x', y) attainable, x' >= x}``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import NamedTuple, Optional

from .engine import FairnessReport, Outcome
from .existence import ExistenceFlags
from .model import Division, GainPair, GuardViolation, Problem, gains, is_proportional

MAX_INDIVISIBLE = 20
MAX_DIVISIBLE = 6


class InstanceTooLarge(GuardViolation):
    pass


def _check(p: Problem) -> None:
    L, M, _ = p.signature
    if M > MAX_INDIVISIBLE or L > MAX_DIVISIBLE:
        raise InstanceTooLarge(f"oracle handles at most {MAX_DIVISIBLE} divisible and "
                               f"{MAX_INDIVISIBLE} indivisible items (got L={L}, M={M})")


class TableRow(NamedTuple):
    sigma: tuple[int, ...]
    ga: int
    gb: int
    min: int
    diff: int


def indivisible_table(p: Problem) -> list[TableRow]:
    """Gains of every whole-item distribution of the indivisible items.

    Rows follow binary order with the first item as the leading digit.
    """
    _check(p)
    items = p.indivisible
    rows = []
    for sigma in itertools.product((0, 1), repeat=len(items)):
        ga = sum(it.a for it, s in zip(items, sigma) if s)
        gb = sum(it.b for it, s in zip(items, sigma) if not s)
        rows.append(TableRow(sigma, ga, gb, min(ga, gb), abs(ga - gb)))
    return rows


class SystemRow(NamedTuple):
    sigma: tuple[int, ...]
    v1: int  # A-value of the selected items
    v2: int  # B-value of the selected items
    v3: int
    first: bool  # v1 <= H/2 <= v2
    second: bool  # v2 <= H/2 <= v1
    window: bool  # H - (divisible totals) <= v3 <= H


def system_table(p: Problem) -> list[SystemRow]:
    _check(p)
    H = p.H
    items = p.indivisible
    low = H - sum(it.a + it.b for it in p.divisible)
    rows = []
    for sigma in itertools.product((0, 1), repeat=len(items)):
        v1 = sum(it.a for it, s in zip(items, sigma) if s)
        v2 = sum(it.b for it, s in zip(items, sigma) if s)
        v3 = v1 + v2
        rows.append(SystemRow(sigma, v1, v2, v3, 2 * v1 <= H <= 2 * v2, 2 * v2 <= H <= 2 * v1, low <= v3 <= H))
    return rows


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _vertex_reps(p: Problem) -> dict:
    """Gain pair of every whole-item distribution of the divisible items.

    Maps each pair to one distribution reaching it, with zero-valued items
    left with B.  At a vertex of the polygon that distribution is unique.
    """
    items = p.divisible
    reps = {}
    for x in itertools.product((0, 1), repeat=len(items)):
        if any(s and not (it.a or it.b) for it, s in zip(items, x)):
            continue
        pt = (sum(it.a * s for it, s in zip(items, x)), sum(it.b * (1 - s) for it, s in zip(items, x)))
        reps.setdefault(pt, x)
    return reps


def _upper(pts):
    out = []
    for pt in pts:
        while len(out) >= 2 and _cross(out[-2], out[-1], pt) >= 0:
            out.pop()
        out.append(pt)
    return out


def divisible_chain(p: Problem) -> list[tuple[int, int]]:
    """Upper border of the divisible polygon.

    Vertices run from the top of the left edge to the top of the right edge,
    so a leading horizontal or trailing vertical piece is kept.
    """
    upper = _upper(sorted(_vertex_reps(p)))
    start = max(i for i, pt in enumerate(upper) if pt[0] == upper[0][0])
    return upper[start:]


def divisible_hull(p: Problem) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
    """Vertices of the divisible polygon in clockwise order, with a distribution for each."""
    reps = _vertex_reps(p)
    pts = sorted(reps)
    if len(pts) < 3:
        return [(pt, reps[pt]) for pt in pts]
    upper = _upper(pts)
    lower = _upper([(-x, -y) for x, y in reversed(pts)])
    ring = upper[:-1] + [(-x, -y) for x, y in lower[:-1]]
    return [(pt, reps[pt]) for pt in ring]


def _diagonal_max(hull, w) -> Optional[Fraction]:
    """Largest t with (t, t) in the hull shifted by ``w``, or None."""
    pts = [(x + w[0], y + w[1]) for (x, y), _ in hull]
    best = None
    for k in range(len(pts)):
        (x1, y1), (x2, y2) = pts[k], pts[(k + 1) % len(pts)]
        d1, d2 = x1 - y1, x2 - y2
        if d1 == d2:
            cand = [Fraction(x1), Fraction(x2)] if d1 == 0 else []
        elif min(d1, d2) <= 0 <= max(d1, d2):
            cand = [x1 + Fraction(x2 - x1) * (-d1) / (d2 - d1)]
        else:
            cand = []
        for c in cand:
            if best is None or c > best:
                best = c
    return best


def _walk(items, u, v, need_x, need_y):
    """Shares on the hull edge from ``u`` to ``v`` covering the offset ``(need_x, need_y)``.

    Items on which the two distributions differ are moved in index order, so
    at most one of them ends up split.
    """
    shares = [Fraction(s) for s in u]
    need_x, need_y = Fraction(need_x), Fraction(need_y)
    for i, (su, sv) in enumerate(zip(u, v)):
        if su == sv or (need_x == 0 and need_y == 0):
            continue
        step = sv - su
        mx, my = items[i].a * step, -items[i].b * step
        t = min(need_x / mx if mx else need_y / my, Fraction(1))
        shares[i] = su + step * t
        need_x -= mx * t
        need_y -= my * t
    return tuple(shares)


def _strictly_between(p, q, r) -> bool:
    if _cross(p, q, r):
        return False
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]) \
        and r != p and r != q


class _Line(NamedTuple):
    vertices: tuple  # (x, y) integer vertices, x increasing
    sigma: tuple[int, ...]

    @property
    def left(self):
        return self.vertices[0][0]

    @property
    def right(self):
        return self.vertices[-1][0]

    @property
    def top(self):
        return self.vertices[0][1]

    def y_at(self, x):
        """``max{y on the line : x' >= x}``, or None right of the line."""
        vs = self.vertices
        if x > vs[-1][0]:
            return None
        if x <= vs[0][0]:
            return Fraction(vs[0][1])
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            if x <= x2:
                return y1 + Fraction(y2 - y1) * (x - x1) / (x2 - x1)
        raise AssertionError

    def reach(self, level):
        """Largest x on the line with y >= level, or None."""
        vs = self.vertices
        if vs[0][1] < level:
            return None
        if vs[-1][1] >= level:
            return Fraction(vs[-1][0])
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            if y2 < level:
                return x1 + Fraction(x2 - x1) * (level - y1) / (y2 - y1)
        raise AssertionError

    def reach_above(self, level):
        """sup of the x on the line with y > level, or None."""
        vs = self.vertices
        if vs[0][1] <= level:
            return None
        if vs[-1][1] > level:
            return Fraction(vs[-1][0])
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            if y2 <= level:
                return x1 + Fraction(x2 - x1) * (level - y1) / (y2 - y1)
        raise AssertionError

    def contains(self, q):
        return self.left <= q[0] <= self.right and self.y_at(q[0]) == q[1]

    def diagonal_x(self):
        """Where the line meets x == y, or None."""
        vs = self.vertices
        if len(vs) == 1:
            return Fraction(vs[0][0]) if vs[0][0] == vs[0][1] else None
        for (x1, y1), (x2, y2) in zip(vs, vs[1:]):
            d1, d2 = x1 - y1, x2 - y2
            if d1 <= 0 <= d2:
                return x1 + Fraction(x2 - x1) * (-d1) / (d2 - d1)
        return None

    def max_min(self):
        vs = self.vertices
        if vs[0][0] > vs[0][1]:
            return Fraction(vs[0][1])
        if vs[-1][0] < vs[-1][1]:
            return Fraction(vs[-1][0])
        return self.diagonal_x()


class _Frontier:
    """Undominated points of a union of lines, queried through ``g``."""

    def __init__(self, lines):
        self.lines = lines

    def g(self, x):
        vals = [y for y in (ln.y_at(x) for ln in self.lines) if y is not None]
        return max(vals) if vals else None

    def reach(self, level):
        vals = [r for r in (ln.reach(level) for ln in self.lines) if r is not None]
        return max(vals) if vals else None

    def dominated(self, q) -> bool:
        gq = self.g(q[0])
        if gq is None or gq < q[1]:
            return False
        return gq > q[1] or self.reach(q[1]) > q[0]

    def attained(self, q) -> bool:
        return any(ln.contains(q) for ln in self.lines)

    def diagonal_neighbours(self):
        """Attained efficient points closest to the diagonal from each side."""
        xs = max(self._diag_sup(ln) for ln in self.lines)
        ys = self.g(xs)
        xb = self.reach(ys)
        if xb > ys:
            # g is flat at height ys past the diagonal; the left neighbour is the
            # point where g drops to ys, provided g jumps there
            out = [(xb, ys)]
            above = [r for r in (ln.reach_above(ys) for ln in self.lines) if r is not None]
            if above and self.g(max(above)) > ys:
                out.append((max(above), self.g(max(above))))
            return out
        out = [(xs, ys)]
        if ys == xs:
            return out
        right = [ln for ln in self.lines if ln.right > xs]
        if not right:
            return out
        y_plus = max(ln.y_at(xs) for ln in right)
        xc = self.reach(y_plus)
        if xc > xs:
            # g stays at y_plus on (xs, xc], so (xc, y_plus) is efficient
            out.append((xc, y_plus))
        return out

    @staticmethod
    def _diag_sup(ln):
        """sup{x : the line offers some y >= x at a position >= x}."""
        (x0, y0), (x1, y1) = ln.vertices[0], ln.vertices[-1]
        if x0 > y0:
            return Fraction(y0)
        if x1 <= y1:
            return Fraction(x1)
        return ln.diagonal_x()


def _pareto_filter(points):
    """Distinct undominated points by a plain sweep over sorted points."""
    best = []
    top = None
    for x, y in sorted(set(points), key=lambda q: (-q[0], -q[1])):
        if top is None or y > top:
            best.append((x, y))
            top = y
    return best[::-1]


def oracle_report(p: Problem) -> FairnessReport:
    _check(p)
    H = p.H
    ind = p.indivisible
    div_items = p.divisible
    chain_pts = divisible_chain(p)
    hull = divisible_hull(p)

    sigmas = list(itertools.product((0, 1), repeat=len(ind)))
    w_of = {}
    for sigma in sigmas:
        w = (sum(it.a for it, s in zip(ind, sigma) if s), sum(it.b for it, s in zip(ind, sigma) if not s))
        w_of.setdefault(w, []).append(sigma)

    def line_for(w, sigma):
        return _Line(tuple((w[0] + x, w[1] + y) for x, y in chain_pts), sigma)

    all_lines = [line_for(w, sig[0]) for w, sig in w_of.items()]
    v_star = max(ln.max_min() for ln in all_lines)
    eq_x = [x for x in (_diagonal_max(hull, w) for w in w_of) if x is not None]
    e = max(eq_x) if eq_x else None

    front = _Frontier([line_for(w, w_of[w][0]) for w in _pareto_filter(w_of)])

    def outcome(q) -> Outcome:
        q = (Fraction(q[0]), Fraction(q[1]))
        best = None
        for w, sigs in w_of.items():
            dx, dy = q[0] - w[0], q[1] - w[1]
            for k, (pt, rep) in enumerate(hull):
                nxt, nrep = hull[(k + 1) % len(hull)]
                if (dx, dy) == pt:
                    shares = tuple(Fraction(s) for s in rep)
                elif len(hull) > 1 and _strictly_between(pt, nxt, (dx, dy)):
                    shares = _walk(div_items, rep, nrep, dx - pt[0], dy - pt[1])
                else:
                    continue
                for sigma in sigs:
                    d = Division(shares, sigma)
                    if best is None or (d.owners, d.shares) < (best.owners, best.shares):
                        best = d
        assert best is not None
        g = gains(p, best)
        assert (g.ga, g.gb) == q
        return Outcome(g, best)

    flags = ExistenceFlags(
        2 * v_star >= H,
        e is not None,
        tuple(any(getattr(r, f) for r in system_table(p)) for f in ("first", "second", "window")),
    )
    eq_out = outcome((e, e)) if e is not None else None
    if e is not None and not front.dominated((e, e)):
        return FairnessReport(p.signature, flags, eq_out, eq_out, eq_out, eq_out, "oracle", v_star)

    profitably = uniformly = None
    if 2 * v_star >= H:
        xr = front.reach(v_star)
        profitably = outcome((xr, front.g(xr)))
        best = None
        for q in front.diagonal_neighbours():
            if not is_proportional(H, GainPair(*q)):
                continue
            key = (-abs(q[0] - q[1]), q[0])
            if best is None or key > best[0]:
                best = (key, q)
        if best is not None:
            uniformly = outcome(best[1])
    return FairnessReport(p.signature, flags, eq_out, profitably, uniformly, None, "oracle", v_star)


def max_equitable_gain(p: Problem) -> Optional[Fraction]:
    r = oracle_report(p)
    return r.equitably_fair.gains.ga if r.equitably_fair else None
