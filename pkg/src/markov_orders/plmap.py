"""Exact piecewise-affine circle homeomorphisms with rational data.

A map is stored by its breakpoints ``xs`` (strictly increasing, in
``[0, 1)``) and the lift values ``ys`` at those breakpoints (strictly
increasing, ``ys[0]`` in ``[0, 1)``, ``ys[-1] - ys[0] < 1``).  Between
consecutive breakpoints — including the wrap piece from ``xs[-1]`` to
``xs[0] + 1`` — the lift is affine, and ``F(x + 1) = F(x) + 1``.

All constructors normalize: collinear breakpoints are pruned and a pure
rotation is anchored at 0, so equality of the stored data is equality
of maps.  Composition, inversion and evaluation are exact.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Frac = Fraction


def mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _prune(xs: list[Fraction], ys: list[Fraction]) -> tuple[list, list]:
    n = len(xs)
    if n <= 1:
        return xs, ys
    keep = []
    for j in range(n):
        xp, yp = xs[j - 1], ys[j - 1]
        if j == 0:
            xp, yp = xp - 1, yp - 1
        xn, yn = xs[(j + 1) % n], ys[(j + 1) % n]
        if j == n - 1:
            xn, yn = xn + 1, yn + 1
        if (ys[j] - yp) * (xn - xs[j]) != (yn - ys[j]) * (xs[j] - xp):
            keep.append(j)
    if not keep:  # affine everywhere: a rigid rotation
        return [xs[0]], [ys[0]]
    return [xs[j] for j in keep], [ys[j] for j in keep]


@dataclass(frozen=True)
class PLCircleMap:
    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]

    def __post_init__(self):
        assert self.xs, "need at least one breakpoint"
        assert all(0 <= x < 1 for x in self.xs)
        assert all(a < b for a, b in zip(self.xs, self.xs[1:]))
        assert all(a < b for a, b in zip(self.ys, self.ys[1:]))
        assert 0 <= self.ys[0] < 1
        assert self.ys[-1] - self.ys[0] < 1

    # -- constructors -------------------------------------------------

    @staticmethod
    def _normalized(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> "PLCircleMap":
        xs, ys = _prune(list(xs), list(ys))
        if len(xs) == 1:
            # Rotation: anchor the single breakpoint at 0.
            return PLCircleMap((Fraction(0),), (mod1(ys[0] - xs[0]),))
        off = math.floor(ys[0])
        return PLCircleMap(tuple(xs), tuple(y - off for y in ys))

    @classmethod
    def identity(cls) -> "PLCircleMap":
        return cls((Fraction(0),), (Fraction(0),))

    @classmethod
    def rotation(cls, t: Fraction) -> "PLCircleMap":
        return cls((Fraction(0),), (mod1(Fraction(t)),))

    @classmethod
    def from_circle_pairs(
        cls, pairs: Iterable[tuple[Fraction, Fraction]]
    ) -> "PLCircleMap":
        """Build from ``(point, image)`` pairs covering every breakpoint.

        Points are taken mod 1 and sorted; images are lifted minimally so
        the result is increasing.  Consecutive listed points must map to
        points less than a full turn apart, which holds whenever the
        pairs include all piece boundaries of an actual homeomorphism.
        """
        seen: dict[Fraction, Fraction] = {}
        for x, y in pairs:
            xm, ym = mod1(Fraction(x)), mod1(Fraction(y))
            if xm in seen and seen[xm] != ym:
                raise ValueError(f"conflicting images for breakpoint {xm}")
            seen[xm] = ym
        if not seen:
            raise ValueError("no breakpoints given")
        xs = sorted(seen)
        ys = [seen[xs[0]]]
        for x in xs[1:]:
            y = seen[x]
            while y <= ys[-1]:
                y += 1
            ys.append(y)
        if ys[-1] - ys[0] >= 1:
            raise ValueError("pairs do not describe a degree-one homeomorphism")
        return cls._normalized(xs, ys)

    # -- evaluation ----------------------------------------------------

    def lift(self, x: Fraction) -> Fraction:
        """Value of the lift at any rational ``x`` (not reduced mod 1)."""
        x = Fraction(x)
        n = math.floor(x)
        xm = x - n
        xs, ys = self.xs, self.ys
        if xm < xs[0]:
            x0, y0 = xs[-1] - 1, ys[-1] - 1
            x1, y1 = xs[0], ys[0]
        else:
            i = bisect_right(xs, xm) - 1
            x0, y0 = xs[i], ys[i]
            if i + 1 < len(xs):
                x1, y1 = xs[i + 1], ys[i + 1]
            else:
                x1, y1 = xs[0] + 1, ys[0] + 1
        if xm == x0:
            return y0 + n
        return y0 + (xm - x0) * (y1 - y0) / (x1 - x0) + n

    def __call__(self, x: Fraction) -> Fraction:
        return mod1(self.lift(x))

    # -- algebra -------------------------------------------------------

    def compose(self, other: "PLCircleMap") -> "PLCircleMap":
        """``self`` after ``other`` (apply ``other`` first)."""
        inv = other.inverse()
        pts = set(other.xs)
        pts.update(mod1(inv.lift(x)) for x in self.xs)
        xs = sorted(pts)
        ys = [self.lift(other.lift(x)) for x in xs]
        return PLCircleMap._normalized(xs, ys)

    def inverse(self) -> "PLCircleMap":
        pairs = [(mod1(y), x - math.floor(y)) for x, y in zip(self.xs, self.ys)]
        pairs.sort()
        xs = [p for p, _ in pairs]
        ys = [q for _, q in pairs]
        for i in range(1, len(ys)):
            while ys[i] <= ys[i - 1]:
                ys[i] += 1
        return PLCircleMap._normalized(xs, ys)

    def power(self, n: int) -> "PLCircleMap":
        if n < 0:
            return self.inverse().power(-n)
        out = PLCircleMap.identity()
        for _ in range(n):
            out = out.compose(self)
        return out

    def is_identity(self) -> bool:
        return len(self.xs) == 1 and self.ys[0] == self.xs[0]

    # -- structure -----------------------------------------------------

    def pieces(self) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
        """Affine pieces as ``(x0, x1, y0, y1)`` lift segments covering one turn."""
        out = []
        n = len(self.xs)
        for i in range(n):
            x0, y0 = self.xs[i], self.ys[i]
            if i + 1 < n:
                x1, y1 = self.xs[i + 1], self.ys[i + 1]
            else:
                x1, y1 = self.xs[0] + 1, self.ys[0] + 1
            out.append((x0, x1, y0, y1))
        return out

    def max_slope(self) -> Fraction:
        return max((y1 - y0) / (x1 - x0) for x0, x1, y0, y1 in self.pieces())

    def sup_distance(self, other: "PLCircleMap") -> Fraction:
        """Max of ``|self - other|`` over the circle (difference of lifts,
        minimized over the integer offset)."""
        pts = sorted(set(self.xs) | set(other.xs))
        deltas = [self.lift(x) - other.lift(x) for x in pts]
        mid = (min(deltas) + max(deltas)) / 2
        best = None
        for base in (math.floor(mid), math.ceil(mid)):
            m = max(abs(d - base) for d in deltas)
            if best is None or m < best:
                best = m
        return best

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "breakpoints": [str(x) for x in self.xs],
            "images": [str(y) for y in self.ys],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "PLCircleMap":
        xs = tuple(Fraction(s) for s in doc["breakpoints"])
        ys = tuple(Fraction(s) for s in doc["images"])
        return cls._normalized(xs, ys)


# -- fixed points -------------------------------------------------------


@dataclass(frozen=True)
class FixedPoints:
    points: tuple[Fraction, ...]  # isolated fixed points, mod 1
    arcs: tuple[tuple[Fraction, Fraction], ...]  # pointwise-fixed arcs (lift pairs)

    @property
    def empty(self) -> bool:
        return not self.points and not self.arcs


def fixed_points(
    f: PLCircleMap, arc: tuple[Fraction, Fraction] | None = None
) -> FixedPoints:
    """Exact solutions of ``f(x) = x``, optionally restricted to a closed
    arc given as a lift pair.  Slope-one pieces fixing pointwise are
    reported as arcs, never perturbed away."""
    points: set[Fraction] = set()
    arcs: list[tuple[Fraction, Fraction]] = []
    for x0, x1, y0, y1 in f.pieces():
        s = (y1 - y0) / (x1 - x0)
        d0, d1 = y0 - x0, y1 - x1
        lo, hi = min(d0, d1), max(d0, d1)
        if s == 1:
            if d0 == math.floor(d0):
                arcs.append((x0, x1))
            continue
        n = math.ceil(lo)
        while n <= hi:
            x = (n - y0 + s * x0) / (s - 1)
            if x0 <= x <= x1:
                points.add(mod1(x))
            n += 1
    if arc is not None:
        lo, hi = arc
        points = {p for p in points if _arc_contains(lo, hi, p)}
        arcs = [a for a in arcs if _arcs_overlap(lo, hi, a[0], a[1])]
    return FixedPoints(tuple(sorted(points)), tuple(arcs))


def _arc_contains(lo: Fraction, hi: Fraction, p: Fraction) -> bool:
    p = mod1(p)
    for off in (0, 1):
        if lo <= p + off <= hi:
            return True
    return False


def _arcs_overlap(a0, a1, b0, b1) -> bool:
    for off in (-1, 0, 1):
        if a0 < b1 + off and b0 + off < a1:
            return True
    return False


# -- monotone PL bijections of a closed interval -------------------------


@dataclass(frozen=True)
class IntervalPL:
    """Increasing PL bijection of ``[xs[0], xs[-1]]`` onto ``[ys[0], ys[-1]]``."""

    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.xs) == len(self.ys) >= 2
        assert all(a < b for a, b in zip(self.xs, self.xs[1:]))
        assert all(a < b for a, b in zip(self.ys, self.ys[1:]))

    @classmethod
    def identity_on(cls, p: Fraction, q: Fraction) -> "IntervalPL":
        return cls((p, q), (p, q))

    def __call__(self, x: Fraction) -> Fraction:
        xs, ys = self.xs, self.ys
        assert xs[0] <= x <= xs[-1]
        i = min(bisect_right(xs, x) - 1, len(xs) - 2)
        if i < 0:
            i = 0
        x0, x1, y0, y1 = xs[i], xs[i + 1], ys[i], ys[i + 1]
        return y0 + (x - x0) * (y1 - y0) / (x1 - x0)

    def compose(self, other: "IntervalPL") -> "IntervalPL":
        """``self`` after ``other``; ranges must match domains."""
        assert other.ys[0] == self.xs[0] and other.ys[-1] == self.xs[-1]
        inv = other.inverse()
        pts = sorted(set(other.xs) | {inv(x) for x in self.xs})
        return IntervalPL(tuple(pts), tuple(self(other(x)) for x in pts))

    def inverse(self) -> "IntervalPL":
        return IntervalPL(self.ys, self.xs)


def interval_min(f: IntervalPL, g: IntervalPL) -> IntervalPL:
    """Pointwise minimum of two increasing PL bijections of one interval,
    with crossing points inserted exactly."""
    assert f.xs[0] == g.xs[0] and f.xs[-1] == g.xs[-1]
    grid = sorted(set(f.xs) | set(g.xs))
    pts = set(grid)
    for u, v in zip(grid, grid[1:]):
        fu, fv, gu, gv = f(u), f(v), g(u), g(v)
        # Affine on [u, v] for both; insert the crossing if interior.
        den = (fv - fu) - (gv - gu)
        if den != 0:
            t = (gu - fu) / den
            if 0 < t < 1:
                pts.add(u + t * (v - u))
    xs = tuple(sorted(pts))
    return IntervalPL(xs, tuple(min(f(x), g(x)) for x in xs))
