"""Evaluation of the circular order carried by a realization.

Triples of group elements are compared through the exact orbit of the
base point: the order value is the orientation of the three orbit
points on the circle.  Orders are never materialized as tables; every
query is an exact rational comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .plmap import mod1
from .realization import Realization
from .words import ball, flip, multiply, reduce_word


class FreenessError(RuntimeError):
    """Two distinct words hit the same orbit point: the realization is
    defective at its base point."""


def order_triple(real: Realization, g1: str, g2: str, g3: str) -> int:
    """0 when two arguments coincide, +1 anticlockwise, -1 clockwise."""
    w1, w2, w3 = reduce_word(g1), reduce_word(g2), reduce_word(g3)
    if w1 == w2 or w1 == w3 or w2 == w3:
        return 0
    p1 = real.orbit_point(w1)
    p2 = real.orbit_point(w2)
    p3 = real.orbit_point(w3)
    if p1 == p2 or p1 == p3 or p2 == p3:
        raise FreenessError(
            f"orbit collision among {w1!r}, {w2!r}, {w3!r} at the base point"
        )
    d2 = mod1(p2 - p1)
    d3 = mod1(p3 - p1)
    return 1 if d2 < d3 else -1


def configuration(real: Realization, words: list[str]) -> list[str]:
    """The words arranged anticlockwise starting from the least orbit point."""
    reduced = [reduce_word(w) for w in words]
    if len(set(reduced)) != len(reduced):
        raise ValueError("configuration needs distinct group elements")
    pts = [(real.orbit_point(w), w) for w in reduced]
    if len({p for p, _ in pts}) != len(pts):
        raise FreenessError("orbit collision inside the configuration set")
    pts.sort()
    return [w for _, w in pts]


@dataclass
class CheckReport:
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"checked": self.checked, "violations": self.violations}


def check_cocycle(real: Realization, quadruples) -> CheckReport:
    """The alternating sum over each quadruple must vanish."""
    report = CheckReport()
    for g1, g2, g3, g4 in quadruples:
        total = (
            order_triple(real, g2, g3, g4)
            - order_triple(real, g1, g3, g4)
            + order_triple(real, g1, g2, g4)
            - order_triple(real, g1, g2, g3)
        )
        report.checked += 1
        if total != 0:
            report.violations.append(
                {"args": [g1, g2, g3, g4], "lhs": total, "rhs": 0}
            )
    return report


def check_left_invariance(real: Realization, samples) -> CheckReport:
    """``samples`` yields (g4, g1, g2, g3); translation must not change
    the order value."""
    report = CheckReport()
    for g4, g1, g2, g3 in samples:
        lhs = order_triple(
            real, multiply(g4, g1), multiply(g4, g2), multiply(g4, g3)
        )
        rhs = order_triple(real, g1, g2, g3)
        report.checked += 1
        if lhs != rhs:
            report.violations.append(
                {"args": [g4, g1, g2, g3], "lhs": lhs, "rhs": rhs}
            )
    return report


def check_flip_negation(
    real: Realization, radius: int, *, expect_equal: bool = False
) -> CheckReport:
    """Does swapping b with B in all arguments negate every order value?

    Exhaustive over ordered triples of distinct elements of the given
    ball.  ``expect_equal`` flips the comparison and serves as a
    negative control: a healthy system then reports violations.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    report = CheckReport()
    pool = ball(radius)
    for g1 in pool:
        for g2 in pool:
            if g2 == g1:
                continue
            for g3 in pool:
                if g3 == g1 or g3 == g2:
                    continue
                base = order_triple(real, g1, g2, g3)
                flipped = order_triple(real, flip(g1), flip(g2), flip(g3))
                want = base if expect_equal else -base
                report.checked += 1
                if flipped != want:
                    report.violations.append(
                        {"args": [g1, g2, g3], "lhs": flipped, "rhs": want}
                    )
    return report


def random_words(rng: random.Random, radius: int, count: int) -> list[str]:
    pool = ball(radius)
    return [rng.choice(pool) for _ in range(count)]


def based_order_triple(
    real: Realization, base: Fraction, g1: str, g2: str, g3: str
) -> int:
    """Order of the same action read off at another base point."""
    w = [reduce_word(g) for g in (g1, g2, g3)]
    if w[0] == w[1] or w[0] == w[2] or w[1] == w[2]:
        return 0
    from .realization import apply_word

    p1, p2, p3 = (apply_word(real, g, base) for g in w)
    if p1 == p2 or p1 == p3 or p2 == p3:
        raise FreenessError("orbit collision at the alternate base point")
    d2 = mod1(p2 - p1)
    d3 = mod1(p3 - p1)
    return 1 if d2 < d3 else -1
