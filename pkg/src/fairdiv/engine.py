"""End-to-end solver producing a :class:`FairnessReport`.

Two modes are offered.  ``exact`` (the default) reads every answer off the
exact undominated envelope of the attainability set.  ``paper`` follows the
classical step list: it tries the maximal equitable division first and
otherwise scans the extreme vertices of the shifted lines that do not
cross the diagonal.  The two agree on all the textbook examples; on random
instances :func:`compare_modes` reports where they differ.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .equitable import max_equitable
from .existence import ExistenceFlags, existence_flags
from .geometry import (
    EnvelopeSegment,
    Point,
    ShiftedLine,
    envelope,
    is_dominated,
    shifted_lines,
)
from .model import Division, GainPair, Problem, Signature, dominates, gains, is_proportional
from .pareto_indivisible import undominated_points

log = logging.getLogger(__name__)

MODES = ("exact", "paper")


class Outcome(NamedTuple):
    gains: GainPair
    division: Division


@dataclass(frozen=True)
class FairnessReport:
    signature: Signature
    exists: ExistenceFlags
    equitably_fair: Optional[Outcome]
    profitably_fair: Optional[Outcome]
    uniformly_fair: Optional[Outcome]
    fair: Optional[Outcome]
    mode: str
    # best min(G_A, G_B) over the candidates examined; not part of the serialized report
    max_min: Optional[Fraction] = field(default=None, compare=False)


def _division_key(d: Division):
    return d.owners, d.shares


def _better(g: GainPair, d: Division, best: Optional[Outcome], score) -> bool:
    """Compare by ``score`` (larger wins), then larger gA, then smaller division key."""
    if best is None:
        return True
    a, b = score(g), score(best.gains)
    if a != b:
        return a > b
    if g.ga != best.gains.ga:
        return g.ga > best.gains.ga
    return _division_key(d) < _division_key(best.division)


def divisions_at(lines: Sequence[ShiftedLine], q: Point) -> list[Division]:
    """Every division on a shifted line whose gain pair is ``q``."""
    out = []
    for ln in lines:
        vs = ln.vertices
        if len(vs) == 1:
            if vs[0] == q:
                out.append(ln.division(0, 0))
            continue
        for k in range(len(vs) - 1):
            p1, p2 = vs[k], vs[k + 1]
            dx, dy = p2.x - p1.x, p2.y - p1.y
            if dx * (q.y - p1.y) != dy * (q.x - p1.x):
                continue
            t = Fraction(q.x - p1.x) / dx if dx else Fraction(q.y - p1.y) / dy
            if 0 <= t <= 1:
                out.append(ln.division(k, t))
    return out


def _outcome_at(p: Problem, lines, q: Point) -> Outcome:
    d = min(divisions_at(lines, q), key=_division_key)
    g = gains(p, d)
    assert (g.ga, g.gb) == (q.x, q.y)
    return Outcome(g, d)


def _line_max_min(ln: ShiftedLine) -> Fraction:
    """max of min(x, y) over the polygon cut off by a shifted line."""
    vs = ln.vertices
    left, right = vs[0], vs[-1]
    if left.x - left.y > 0:
        return Fraction(left.y)
    if right.x - right.y < 0:
        return Fraction(right.x)
    seg, t = ln.diagonal_crossing()
    return Fraction(ln.point(seg, t).x)


def _piece_point_at_diff_zero(pc: EnvelopeSegment) -> Point:
    d1 = pc.p1.x - pc.p1.y
    d2 = pc.p2.x - pc.p2.y
    t = Fraction(-d1) / (d2 - d1)
    return Point(pc.p1.x + t * (pc.p2.x - pc.p1.x), pc.p1.y + t * (pc.p2.y - pc.p1.y))


def _piece_point_at_y(pc: EnvelopeSegment, y) -> Point:
    t = Fraction(y - pc.p1.y) / (pc.p2.y - pc.p1.y)
    return Point(pc.p1.x + t * (pc.p2.x - pc.p1.x), Fraction(y))


def _attained(env: Sequence[EnvelopeSegment], q: Point) -> bool:
    return any(pc.contains(q) for pc in env)


def diagonal_neighbours(env: Sequence[EnvelopeSegment]):
    """The efficient points closest to the diagonal from either side.

    Returns ``(p_minus, p_plus)``: the rightmost efficient point with
    ``x <= y`` and the leftmost one with ``x >= y`` (either may be None).
    Both are suprema/infima and need not belong to the envelope; check with
    :func:`_attained`.
    """
    p_minus = p_plus = None
    for pc in env:
        d1, d2 = pc.p1.x - pc.p1.y, pc.p2.x - pc.p2.y
        # a piece touching the diagonal only at an excluded end has nothing on that side
        if d1 <= 0 and not (d1 == 0 < d2 and not pc.closed1):
            q = pc.p2 if d2 <= 0 else _piece_point_at_diff_zero(pc)
            if p_minus is None or q.x > p_minus.x:
                p_minus = q
        if d2 >= 0 and not (d1 < 0 == d2 and not pc.closed2):
            q = pc.p1 if d1 >= 0 else _piece_point_at_diff_zero(pc)
            if p_plus is None or q.x < p_plus.x:
                p_plus = q
    return p_minus, p_plus


def _exact(p: Problem, flags: ExistenceFlags, eq_outcome) -> FairnessReport:
    H = p.H
    lines = shifted_lines(p, undominated_points(p))
    v_star = max(_line_max_min(ln) for ln in lines)

    if eq_outcome is not None and not is_dominated((eq_outcome.gains.ga, eq_outcome.gains.gb), lines):
        return FairnessReport(p.signature, flags, eq_outcome, eq_outcome, eq_outcome, eq_outcome, "exact", v_star)

    env = envelope(lines)
    profitably = uniformly = None
    if 2 * v_star >= H:
        # rightmost efficient point with y >= v*; its min is then exactly v*
        cands = []
        for pc in env:
            for q, closed in ((pc.p1, pc.closed1), (pc.p2, pc.closed2)):
                if closed and q.y >= v_star:
                    cands.append(q)
            if min(pc.p1.y, pc.p2.y) < v_star < max(pc.p1.y, pc.p2.y):
                cands.append(_piece_point_at_y(pc, v_star))
        q = max(cands, key=lambda q: q.x)
        profitably = _outcome_at(p, lines, q)
        assert min(q) == v_star

        for q in diagonal_neighbours(env):
            if q is None or not _attained(env, q):
                continue
            g = GainPair(Fraction(q.x), Fraction(q.y))
            if not is_proportional(H, g):
                continue
            cand = _outcome_at(p, lines, q)
            if _better(cand.gains, cand.division, uniformly, lambda g: -abs(g.diff())):
                uniformly = cand
        if uniformly is None:
            log.warning("no attained proportional point next to the diagonal")
    return FairnessReport(p.signature, flags, eq_outcome, profitably, uniformly, None, "exact", v_star)


def _vertex_outcome(p: Problem, ln: ShiftedLine, right: bool) -> Outcome:
    if right and ln.n_segments:
        d = ln.division(ln.n_segments - 1, 1)
    else:
        d = ln.division(0, 0)
    return Outcome(gains(p, d), d)


def _paper(p: Problem, flags: ExistenceFlags, eq_outcome) -> FairnessReport:
    H = p.H
    lines = shifted_lines(p, undominated_points(p))
    if eq_outcome is not None and not is_dominated((eq_outcome.gains.ga, eq_outcome.gains.gb), lines):
        v = eq_outcome.gains.ga
        return FairnessReport(p.signature, flags, eq_outcome, eq_outcome, eq_outcome, eq_outcome, "paper", v)

    q = []
    for ln in lines:
        lo, hi = ln.diff_range()
        if lo > 0:
            q.append(_vertex_outcome(p, ln, right=False))
        elif hi < 0:
            q.append(_vertex_outcome(p, ln, right=True))
    q = [o for o in q if is_proportional(H, o.gains)]
    if not q:
        return FairnessReport(p.signature, flags, eq_outcome, None, None, None, "paper", None)

    pareto = [o for o in q if not any(dominates(r.gains, o.gains) for r in q)]
    pareto = [o for o in pareto if not is_dominated((o.gains.ga, o.gains.gb), lines)]
    profitably = uniformly = None
    for o in pareto:
        if _better(o.gains, o.division, profitably, lambda g: min(g)):
            profitably = o
        if _better(o.gains, o.division, uniformly, lambda g: -abs(g.diff())):
            uniformly = o
    v = min(profitably.gains) if profitably else None
    return FairnessReport(p.signature, flags, eq_outcome, profitably, uniformly, None, "paper", v)


def solve(p: Problem, mode: str = "exact") -> FairnessReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    flags = existence_flags(p)
    eq = max_equitable(p)
    eq_outcome = None
    if eq is not None:
        g = gains(p, eq.division)
        assert g.ga == g.gb == eq.gain
        assert is_proportional(p, g)
        eq_outcome = Outcome(g, eq.division)
    if mode == "paper":
        return _paper(p, flags, eq_outcome)
    return _exact(p, flags, eq_outcome)


class ModeDivergence(NamedTuple):
    field: str
    exact: Optional[GainPair]
    paper: Optional[GainPair]


def compare_modes(p: Problem) -> list[ModeDivergence]:
    """Fields whose gain pairs differ between the exact and paper modes."""
    ex, pa = solve(p, "exact"), solve(p, "paper")
    out = []
    for name in ("equitably_fair", "profitably_fair", "uniformly_fair", "fair"):
        a, b = getattr(ex, name), getattr(pa, name)
        ga = a.gains if a else None
        gb = b.gains if b else None
        if ga != gb:
            out.append(ModeDivergence(name, ga, gb))
    if out:
        log.info("modes diverge on %s", ", ".join(d.field for d in out))
    return out
