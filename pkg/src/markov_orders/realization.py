"""Exact piecewise-linear realizations of valid patterns.

Layout: the circle is split into ``6k`` equal segments; interval ``j``
occupies ``[2j/(6k), (2j+1)/(6k)]`` and gap ``j`` the segment after it.
The order-three map is the rigid rotation by ``shift/(3k)``, which makes
its interval action exact by construction.  The involution maps each
member of the alternating object family (a-intervals and blocks) and
each gap between objects affinely onto the member half a turn along the
family; squaring is then the identity piece by piece.

With all gaps congruent the return map of the start gap degenerates (it
is frequently the identity), so the involution is conjugated by a
one-gap collar map ``h`` chosen strictly below both the diagonal and the
inverse of the return map.  The conjugated return map then moves every
interior point of the start gap toward its a-side endpoint and fixes no
interior point, and since the collar fixes every point of the interval
family the conjugation changes nothing on the label dynamics.

The collar is deliberately strong (midpoint driven 1/64 of the way to
the attracting end): the one-sided contraction it creates is what the
neighborhood certificates in :mod:`markov_orders.pingpong` feed on.
"""

from __future__ import annotations

import json
import math
import random
from fractions import Fraction
from typing import Iterable, Optional

from .arcs import Arc, ArcSet
from .patterns import (
    GapCycle,
    MarkovPattern,
    ValidationReport,
    canonicalize,
    find_shift,
    object_spans,
    validate,
)
from .plmap import Frac, IntervalPL, PLCircleMap, fixed_points, interval_min, mod1
from .words import is_admissible, reduce_word

# How far the collar map drives the gap midpoint toward the attracting
# endpoint: 2**-COLLAR_DEPTH of the gap length.
COLLAR_DEPTH = 6


class RealizationError(RuntimeError):
    pass


class CodingEscape(RuntimeError):
    """An iterate left the interval family before the requested depth."""

    def __init__(self, partial: str):
        super().__init__(f"coding escaped after {len(partial)} letters")
        self.partial = partial


class ExtractionError(RuntimeError):
    pass


class Realization:
    """A validated pattern together with exact PL maps realizing it."""

    def __init__(
        self,
        pattern: MarkovPattern,
        report: ValidationReport,
        intervals: tuple[Arc, ...],
        gaps: tuple[Arc, ...],
        a: PLCircleMap,
        b: PLCircleMap,
        x0: Fraction,
    ):
        self.pattern = pattern
        self.report = report
        self.intervals = intervals
        self.gaps = gaps
        self.a = a
        self.b = b
        self.x0 = x0
        self._letter = {"a": a, "b": b, "B": b.inverse()}
        self._word_maps: dict[str, PLCircleMap] = {"": PLCircleMap.identity()}
        self._cells: dict[str, ArcSet] = {}
        self._orbit: dict[str, Fraction] = {"": x0}

    # -- convenience ------------------------------------------------------

    @property
    def k(self) -> int:
        return self.pattern.k

    @property
    def cycle(self) -> GapCycle:
        return self.report.cycle

    @property
    def f1(self) -> str:
        return self.cycle.f1

    @property
    def start_gap_arc(self) -> Arc:
        return self.gaps[self.cycle.start_gap]

    def letter_map(self, letter: str) -> PLCircleMap:
        return self._letter[letter]

    def word_map(self, word: str) -> PLCircleMap:
        """The map of an admissible word (rightmost letter applied first)."""
        m = self._word_maps.get(word)
        if m is None:
            m = self.word_map(word[:-1]).compose(self._letter[word[-1]])
            self._word_maps[word] = m
        return m

    def orbit_point(self, word: str) -> Fraction:
        p = self._orbit.get(word)
        if p is None:
            p = apply_word(self, word, self.x0)
            self._orbit[word] = p
        return p

    # -- refinement cells --------------------------------------------------

    def cell(self, word: str) -> ArcSet:
        """The members of the interval family reached by ``word``.

        For a single letter this is the union of its labelled intervals;
        longer words prepend letters by exact image arithmetic.
        """
        got = self._cells.get(word)
        if got is not None:
            return got
        if not is_admissible(word) or not word:
            raise ValueError(f"not an admissible nonempty word: {word!r}")
        if len(word) == 1:
            cell = ArcSet.from_arcs(
                arc
                for arc, label in zip(self.intervals, self.pattern.word)
                if label == word
            )
        else:
            cell = self.cell(word[1:]).image(self._letter[word[0]])
        self._cells[word] = cell
        return cell

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "pattern": {"word": self.pattern.word, "shift": self.pattern.shift},
            "intervals": [[str(s), str(e)] for s, e in self.intervals],
            "gaps": [[str(s), str(e)] for s, e in self.gaps],
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "x0": str(self.x0),
            "f1": self.f1,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Realization":
        pattern = MarkovPattern(doc["pattern"]["word"], doc["pattern"]["shift"])
        report = validate(pattern.word, pattern.shift)
        if not report.valid:
            raise ExtractionError(f"stored pattern invalid: {report.violations}")
        intervals = tuple(
            (Fraction(s), Fraction(e)) for s, e in doc["intervals"]
        )
        gaps = tuple((Fraction(s), Fraction(e)) for s, e in doc["gaps"])
        return cls(
            pattern,
            report,
            intervals,
            gaps,
            PLCircleMap.from_json(doc["a"]),
            PLCircleMap.from_json(doc["b"]),
            Fraction(doc["x0"]),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# -- construction ------------------------------------------------------------


def _layout(k: int) -> tuple[tuple[Arc, ...], tuple[Arc, ...]]:
    unit = Fraction(1, 6 * k)
    intervals = tuple((2 * j * unit, (2 * j + 1) * unit) for j in range(3 * k))
    gaps = tuple(((2 * j + 1) * unit, (2 * j + 2) * unit) for j in range(3 * k))
    return intervals, gaps


def _involution_map(word: str, intervals, gaps) -> PLCircleMap:
    """Affine piece-exchange on the object/gap family (see module doc)."""
    n = len(word)
    k = n // 3
    spans = object_spans(word)
    pieces: list[Arc] = []
    for s, e in spans:
        start = intervals[s % n][0] + (1 if s >= n else 0)
        end = intervals[e % n][1] + (1 if e >= n else 0)
        pieces.append((start, end))
        gap = gaps[e % n]
        off = 1 if e >= n else 0
        pieces.append((gap[0] + off, gap[1] + off))
    assert len(pieces) == 4 * k
    for (s0, e0), (s1, _) in zip(pieces, pieces[1:]):
        assert e0 == s1, "object/gap pieces must tile the circle"
    assert pieces[-1][1] == pieces[0][0] + 1
    pairs = []
    for j, (s, _) in enumerate(pieces):
        t = (j + 2 * k) % (4 * k)
        target = pieces[t][0] + (1 if j + 2 * k >= 4 * k else 0)
        pairs.append((mod1(s), target))
    return PLCircleMap.from_circle_pairs(pairs)


def _restrict_fixing(f: PLCircleMap, p: Fraction, q: Fraction) -> IntervalPL:
    """Restriction of a circle map to ``[p, q]`` (lift coordinates),
    assuming it maps the arc onto itself fixing both endpoints."""
    off = f.lift(p) - p
    assert off == math.floor(off), "arc endpoints must be fixed"
    assert f.lift(q) - off == q, "arc endpoints must be fixed"
    xs = {p, q}
    for x in f.xs:
        for lift in (x, x + 1):
            if p < lift < q:
                xs.add(lift)
    nodes = tuple(sorted(xs))
    return IntervalPL(nodes, tuple(f.lift(x) - off for x in nodes))


def _collar(p: Fraction, q: Fraction, return_inv: IntervalPL) -> IntervalPL:
    """Increasing PL bijection of ``[p, q]`` strictly below both the
    diagonal and ``return_inv`` on the interior.

    The knee sits at three quarters and drops nearly to the bottom, so
    the slope into the attracting end is tiny and the slope out of the
    repelling end is nearly four: transits entering the gap shrink hard
    in one pass, which is what the certificate collars rely on.
    """
    floor_fn = interval_min(IntervalPL.identity_on(p, q), return_inv)
    knee = p + 3 * (q - p) / 4
    low = p + (q - p) / 2**COLLAR_DEPTH
    squeeze = IntervalPL((p, knee, q), (p, low, q))
    # squeeze(u) < u on the interior, so squeeze(floor_fn(x)) < floor_fn(x)
    # <= min(x, return_inv(x)).
    return squeeze.compose(floor_fn)


def build_realization(pattern: MarkovPattern) -> Realization:
    """Exact realization of a valid pattern.

    Raises :class:`RealizationError` when the pattern does not validate.
    """
    report = validate(pattern.word, pattern.shift if pattern.shift else None)
    if not report.valid:
        raise RealizationError(
            f"cannot realize invalid pattern {pattern.word!r}: {report.violations}"
        )
    pattern = MarkovPattern(pattern.word, report.shift)
    k = report.k
    n = 3 * k
    intervals, gaps = _layout(k)
    b = PLCircleMap.rotation(Fraction(report.shift, n))
    a0 = _involution_map(pattern.word, intervals, gaps)
    assert a0.compose(a0).is_identity()

    cycle = report.cycle
    p, q = gaps[cycle.start_gap]
    assert pattern.word[cycle.start_gap] == "a", "start gap must touch an a-interval on the left"

    # Return map of the start gap before the collar, and the a-partner
    # gap the final involution step comes from.
    letter0 = {"a": a0, "b": b, "B": b.inverse()}
    ret = PLCircleMap.identity()
    for c in cycle.f1:
        ret = ret.compose(letter0[c])
    partner = cycle.gaps[-1]
    ps, pe = gaps[partner]
    assert mod1(a0.lift(ps)) == mod1(p) and a0.lift(pe) - a0.lift(ps) == q - p, (
        "involution must carry the cycle's last gap onto the start gap"
    )

    ret_restricted = _restrict_fixing(ret, p, q)
    collar = _collar(p, q, ret_restricted.inverse())
    collar_pairs = [(mod1(x), mod1(y)) for x, y in zip(collar.xs, collar.ys)]
    hmap = PLCircleMap.from_circle_pairs(collar_pairs)
    a = hmap.compose(a0).compose(hmap.inverse())
    assert a.compose(a).is_identity()

    x0 = mod1((p + q) / 2)
    real = Realization(pattern, report, intervals, gaps, a, b, x0)
    _check_exactness(real)
    return real


def _check_exactness(real: Realization) -> None:
    """Build-time postconditions, all exact."""
    if not real.a.compose(real.a).is_identity():
        raise RealizationError("involution fails to square to the identity")
    if not real.b.power(3).is_identity():
        raise RealizationError("rotation fails to cube to the identity")
    n = 3 * real.k
    m = real.pattern.shift
    for j, (s, e) in enumerate(real.intervals):
        t = real.intervals[(j + m) % n]
        if mod1(real.b.lift(s)) != mod1(t[0]) or mod1(real.b.lift(e)) != mod1(t[1]):
            raise RealizationError("rotation misplaces an interval")
    blocks = real.cell("b").union(real.cell("B")).union(_complementary_gaps(real))
    if real.cell("a").image(real.a) != blocks:
        raise RealizationError("involution fails to exchange a-intervals and blocks")
    p, q = real.start_gap_arc
    inner = fixed_points(real.word_map(real.f1), (p, q))
    interior = [
        z for z in inner.points if p < z < q or p < z + 1 < q
    ]
    if interior or inner.arcs:
        raise RealizationError("return map still fixes an interior point")
    mid = (p + q) / 2
    y = real.word_map(real.f1).lift(mid)
    y -= math.floor(y - p)  # the image stays inside the start gap
    if not p < y < mid:
        raise RealizationError("return map does not attract toward the a-side endpoint")


def _complementary_gaps(real: Realization) -> ArcSet:
    from .patterns import COMPLEMENTARY

    return ArcSet.from_arcs(
        real.gaps[e.index] for e in real.report.gaps if e.kind == COMPLEMENTARY
    )


# -- evaluation ---------------------------------------------------------------


def apply_word(real: Realization, word: str, x: Fraction) -> Fraction:
    """Evaluate the word's map at a point, rightmost letter first."""
    word = reduce_word(word)
    y = Fraction(x)
    for c in reversed(word):
        y = real.letter_map(c)(y)
    return mod1(y)


def conjugate(real: Realization, h: PLCircleMap) -> Realization:
    """The same system transported by an orientation-preserving PL map."""
    hinv = h.inverse()
    a = h.compose(real.a).compose(hinv)
    b = h.compose(real.b).compose(hinv)
    intervals = tuple((h.lift(s), h.lift(e)) for s, e in real.intervals)
    gaps = tuple((h.lift(s), h.lift(e)) for s, e in real.gaps)
    return Realization(real.pattern, real.report, intervals, gaps, a, b, h(real.x0))


def refine(real: Realization, depth: int) -> dict[str, ArcSet]:
    """All cells for admissible words of length 1..depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    out: dict[str, ArcSet] = {}
    frontier = ["a", "b", "B"]
    for w in frontier:
        out[w] = real.cell(w)
    for _ in range(depth - 1):
        nxt = []
        for w in frontier:
            heads = "bB" if w[0] == "a" else "a"
            for c in heads:
                nw = c + w
                out[nw] = real.cell(nw)
                nxt.append(nw)
        frontier = nxt
    return out


def contraction_profile(real: Realization, depth: int) -> list[Fraction]:
    """Max cell component length at each depth 1..depth (frontier only)."""
    maxima = []
    frontier = {w: real.cell(w) for w in "abB"}
    for d in range(1, depth + 1):
        maxima.append(max(c.max_component_length() for c in frontier.values()))
        if d == depth:
            break
        nxt = {}
        for w, cell in frontier.items():
            heads = "bB" if w[0] == "a" else "a"
            for c in heads:
                nxt[c + w] = cell.image(real.letter_map(c))
        frontier = nxt
    return maxima


def coding(real: Realization, x: Fraction, depth: int) -> str:
    """Symbolic itinerary of a point of the interval family.

    Raises :class:`CodingEscape` (carrying the partial word) if some
    iterate leaves the family before ``depth`` letters are produced.
    """
    inverse_letter = {"a": "a", "b": "B", "B": "b"}
    word = []
    y = mod1(Fraction(x))
    for _ in range(depth):
        hit = None
        for c in "abB":
            if real.cell(c).contains_point(y):
                hit = c
                break
        if hit is None:
            raise CodingEscape("".join(word))
        word.append(hit)
        y = real.letter_map(inverse_letter[hit])(y)
    return "".join(word)


def extract_pattern(real: Realization, depth: int) -> MarkovPattern:
    """Recover the canonical label word from a realization.

    Computes the depth-``depth`` cells, classifies each component by the
    first letter of its word, merges consecutive same-letter components
    around the circle and reads off the labels; the shift is then
    checked against the actual rotation map.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    comps: list[tuple[Fraction, Fraction, str]] = []
    for w, cell in refine(real, depth).items():
        if len(w) != depth:
            continue
        for s, e in cell.arcs:
            comps.append((s, e, w[0]))
    comps.sort()
    if not comps:
        raise ExtractionError("no cells at the requested depth")
    # Components of one member carry the same first letter, and members
    # with equal labels are separated by other labels, so maximal
    # same-letter runs in circular order are exactly the members.
    runs: list[tuple[Fraction, Fraction, str]] = []
    for s, e, c in comps:
        if runs and runs[-1][2] == c:
            runs[-1] = (runs[-1][0], max(runs[-1][1], e), c)
        else:
            runs.append((s, e, c))
    if len(runs) > 1 and runs[0][2] == runs[-1][2]:
        runs[0] = (runs[-1][0] - 1, runs[0][1], runs[0][2])
        runs.pop()
    word = "".join(c for _, _, c in runs)
    report = validate(word) if len(word) % 3 == 0 and word else None
    if report is None or not report.valid:
        raise ExtractionError(f"merged cells do not spell a valid pattern: {word!r}")
    # Cross-check the shift against the rotation map itself.
    mid0 = (runs[0][0] + runs[0][1]) / 2
    image = real.b(mid0)
    target = None
    for idx, (s, e, _) in enumerate(runs):
        for off in (0, 1):
            if s <= image + off <= e:
                target = idx
        if target is not None:
            break
    if target != report.shift % len(runs):
        raise ExtractionError("rotation map disagrees with the inferred shift")
    return canonicalize(MarkovPattern(word, report.shift))


def random_circle_homeo(
    rng: random.Random, pieces: int = 5, denominator: int = 720
) -> PLCircleMap:
    """Seeded random orientation-preserving PL circle map with rational data."""
    xs = sorted(rng.sample(range(denominator), pieces))
    ys = sorted(rng.sample(range(denominator), pieces))
    turn = rng.randrange(pieces)
    pairs = []
    for i, x in enumerate(xs):
        y = ys[(i + turn) % pieces] + (1 if i + turn >= pieces else 0)
        pairs.append((Fraction(x, denominator), Fraction(y, denominator)))
    return PLCircleMap.from_circle_pairs(pairs)
