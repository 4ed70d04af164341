"""Finite unions of circle arcs with exact rational endpoints.

An :class:`ArcSet` stores disjoint arcs ``(start, end)`` with ``start``
in ``[0, 1)`` and ``start < end <= start + 1`` (so an arc may wrap once
past 0).  Construction merges overlapping or touching arcs, so the
stored tuple is canonical and equality of data is equality of sets.

The same representation serves closed sets (refinement cells, images)
and open sets (certificate collars); containment checks take a
``strict`` flag to distinguish closed-inside-open from plain inclusion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .plmap import PLCircleMap, mod1

Arc = tuple[Fraction, Fraction]


def _normalize(raw: Iterable[Arc]) -> tuple[Arc, ...]:
    arcs = []
    for s, e in raw:
        s, e = Fraction(s), Fraction(e)
        if e <= s:
            raise ValueError(f"empty or reversed arc ({s}, {e})")
        if e - s >= 1:
            return ((Fraction(0), Fraction(1)),)  # whole circle
        off = math.floor(s)
        arcs.append((s - off, e - off))
    if not arcs:
        return ()
    arcs.sort()
    merged = [arcs[0]]
    for s, e in arcs[1:]:
        ps, pe = merged[-1]
        if s <= pe:
            merged[-1] = (ps, max(pe, e))
        else:
            merged.append((s, e))
    # Wrap pass: the last arc may reach past 1 into the leading arcs.
    while len(merged) > 1:
        ls, le = merged[-1]
        fs, fe = merged[0]
        if le - 1 >= fs:
            new_end = max(le, fe + 1)
            if new_end - ls >= 1:
                return ((Fraction(0), Fraction(1)),)
            merged[-1] = (ls, new_end)
            merged.pop(0)
        else:
            break
    if len(merged) == 1 and merged[0][1] - merged[0][0] >= 1:
        return ((Fraction(0), Fraction(1)),)
    return tuple(merged)


@dataclass(frozen=True)
class ArcSet:
    arcs: tuple[Arc, ...]

    @classmethod
    def of(cls, *arcs: Arc) -> "ArcSet":
        return cls(_normalize(arcs))

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc]) -> "ArcSet":
        return cls(_normalize(arcs))

    @classmethod
    def empty(cls) -> "ArcSet":
        return cls(())

    @classmethod
    def full(cls) -> "ArcSet":
        return cls(((Fraction(0), Fraction(1)),))

    # -- basics ---------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.arcs

    @property
    def is_full(self) -> bool:
        return self.arcs == ((Fraction(0), Fraction(1)),)

    def component_count(self) -> int:
        return len(self.arcs)

    def total_length(self) -> Fraction:
        return sum((e - s for s, e in self.arcs), Fraction(0))

    def max_component_length(self) -> Fraction:
        return max((e - s for s, e in self.arcs), default=Fraction(0))

    def boundary_points(self) -> list[Fraction]:
        if self.is_full:
            return []
        pts = set()
        for s, e in self.arcs:
            pts.add(mod1(s))
            pts.add(mod1(e))
        return sorted(pts)

    def contains_point(self, x: Fraction, *, strict: bool = False) -> bool:
        if self.is_full:
            return True
        x = mod1(x)
        for s, e in self.arcs:
            for off in (0, 1):
                if strict:
                    if s < x + off < e:
                        return True
                elif s <= x + off <= e:
                    return True
        return False

    # -- set algebra ------------------------------------------------------

    def union(self, other: "ArcSet") -> "ArcSet":
        return ArcSet(_normalize(self.arcs + other.arcs))

    def intersection(self, other: "ArcSet") -> "ArcSet":
        if self.is_full:
            return other
        if other.is_full:
            return self
        pieces = []
        for s, e in self.arcs:
            for t, f in other.arcs:
                for off in (-1, 0, 1):
                    lo, hi = max(s, t + off), min(e, f + off)
                    if lo < hi:
                        pieces.append((lo, hi))
        return ArcSet(_normalize(pieces))

    def difference(self, other: "ArcSet") -> "ArcSet":
        """Closure of ``self`` minus ``other`` (isolated points drop out)."""
        if other.is_empty:
            return self
        out = []
        for s, e in self.arcs:
            segments = [(s, e)]
            for t, f in other.arcs:
                for off in (-1, 0, 1):
                    lo, hi = t + off, f + off
                    nxt = []
                    for u, v in segments:
                        if hi <= u or v <= lo:
                            nxt.append((u, v))
                            continue
                        if u < lo:
                            nxt.append((u, min(v, lo)))
                        if hi < v:
                            nxt.append((max(u, hi), v))
                    segments = nxt
            out.extend(segments)
        return ArcSet(_normalize(out))

    def complement(self) -> "ArcSet":
        """Closed complement: the arcs between consecutive components."""
        if self.is_empty:
            return ArcSet.full()
        if self.is_full:
            return ArcSet.empty()
        out = []
        n = len(self.arcs)
        for i in range(n):
            gap_start = self.arcs[i][1]
            if i + 1 < n:
                gap_end = self.arcs[i + 1][0]
            else:
                gap_end = self.arcs[0][0] + 1
            while gap_end <= gap_start:
                gap_end += 1
            out.append((gap_start, gap_end))
        return ArcSet(_normalize(out))

    def issubset(self, other: "ArcSet", *, strict: bool = False) -> bool:
        """Every arc of ``self`` inside a single arc of ``other``.

        With ``strict``, endpoints must be interior (a closed set inside
        an open one).
        """
        if other.is_full:
            return True
        if self.is_full:
            return False
        for s, e in self.arcs:
            if not _arc_in(s, e, other.arcs, strict):
                return False
        return True

    def containment_margin(self, other: "ArcSet") -> Optional[Fraction]:
        """Least endpoint slack of ``self`` inside ``other``; None if the
        strict inclusion fails."""
        if other.is_full:
            return Fraction(1)
        best: Optional[Fraction] = None
        for s, e in self.arcs:
            slack = None
            for t, f in other.arcs:
                for off in (-1, 0, 1):
                    lo, hi = t + off, f + off
                    if lo < s and e < hi:
                        cand = min(s - lo, hi - e)
                        if slack is None or cand > slack:
                            slack = cand
            if slack is None:
                return None
            if best is None or slack < best:
                best = slack
        return best

    # -- geometry -----------------------------------------------------------

    def image(self, f: PLCircleMap) -> "ArcSet":
        if self.is_full:
            return self
        return ArcSet(_normalize((f.lift(s), f.lift(e)) for s, e in self.arcs))

    def to_json(self) -> list[list[str]]:
        return [[str(s), str(e)] for s, e in self.arcs]


def _arc_in(s: Fraction, e: Fraction, arcs: tuple[Arc, ...], strict: bool) -> bool:
    for t, f in arcs:
        for off in (-1, 0, 1):
            lo, hi = t + off, f + off
            if strict:
                if lo < s and e < hi:
                    return True
            elif lo <= s and e <= hi:
                return True
    return False
