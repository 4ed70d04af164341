"""Combinatorial interval systems on the circle.

A system of multiplicity ``k`` is recorded as a cyclic word of ``3k``
labels over ``{a, b, B}`` (one label per closed interval, anticlockwise)
together with the position shift ``m`` of the order-three map on the
intervals.  Everything else — gap kinds, the block decomposition, the
gap cycle and its return word — is forced data computed here.

Validity of a labelling means:

* each label occurs ``k`` times;
* no two cyclically adjacent labels are equal;
* ``k`` is odd (the involution must exchange the ``k`` a-intervals with
  the ``k`` blocks inside an alternating cyclic family of ``2k``);
* exactly one ``m`` in ``{k, 2k}`` satisfies the label-shift relation
  ``word[i + m] == step(word[i])`` with ``step: a -> b -> B -> a``;
* the walk on principal gaps (alternate the unique principal-preserving
  ``b``-step with the involution step) closes after visiting all ``2k``
  of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .words import LETTER_RANK, is_admissible

# How the order-three map advances interval labels.
LABEL_STEP = {"a": "b", "b": "B", "B": "a"}
LABEL_STEP_INV = {v: k for k, v in LABEL_STEP.items()}
LABEL_SWAP = str.maketrans("bB", "Bb")

PRINCIPAL = "principal"
COMPLEMENTARY = "complementary"


class MalformedPatternError(ValueError):
    """Structurally broken input (bad alphabet or length), as opposed to a
    well-formed labelling that merely fails validation."""


@dataclass(frozen=True)
class MarkovPattern:
    word: str
    shift: int

    @property
    def k(self) -> int:
        return len(self.word) // 3

    def text(self) -> str:
        return f"{self.word}:{self.shift}"

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class GapEntry:
    index: int
    kind: str
    a_interval: Optional[int]  # adjacent a-interval when principal


@dataclass(frozen=True)
class GapCycle:
    """The single cycle of principal gaps.

    ``gaps`` lists the 2k gap ids in walk order: from ``gaps[2i]`` a
    ``b``-step (letter ``letters[i]``) leads to ``gaps[2i+1]``, from
    which the involution step leads to ``gaps[2i+2]``.  ``f1`` is the
    return word of the start gap, letter ``letters[0]`` applied first.
    """

    gaps: tuple[int, ...]
    letters: tuple[str, ...]
    start_gap: int

    @property
    def f1(self) -> str:
        return "".join("a" + c for c in reversed(self.letters))

    def edges(self) -> list[tuple[int, str, int]]:
        """Directed edges ``(gap, via, next_gap)`` around the cycle."""
        out = []
        n = len(self.gaps)
        for i, g in enumerate(self.gaps):
            via = self.letters[i // 2] if i % 2 == 0 else "a"
            out.append((g, via, self.gaps[(i + 1) % n]))
        return out


@dataclass(frozen=True)
class ValidationReport:
    word: str
    valid: bool
    k: int
    shift: Optional[int]
    violations: tuple[str, ...]
    gaps: Optional[tuple[GapEntry, ...]] = None
    cycle: Optional[GapCycle] = None

    def to_json(self) -> dict:
        doc = {
            "word": self.word,
            "k": self.k,
            "shift": self.shift,
            "valid": self.valid,
            "violations": list(self.violations),
        }
        if self.cycle is not None:
            doc["principal_cycle"] = [
                {"gap": g, "via": via} for g, via, _ in self.cycle.edges()
            ]
            doc["f1"] = self.cycle.f1
        return doc


def _check_alphabet_and_length(word: str) -> None:
    if not word or len(word) % 3 != 0:
        raise MalformedPatternError(
            f"label word must have positive length divisible by 3, got {len(word)}"
        )
    for c in word:
        if c not in LETTER_RANK:
            raise MalformedPatternError(f"label {c!r} not in alphabet 'abB'")


def find_shift(word: str) -> Optional[int]:
    """The unique m in {k, 2k} satisfying the label-shift relation, if any."""
    n = len(word)
    k = n // 3
    found = None
    for m in (k, 2 * k):
        if all(word[(i + m) % n] == LABEL_STEP[word[i]] for i in range(n)):
            # At most one shift can work: both would force step == step^2.
            assert found is None, "two shifts satisfy the label relation"
            found = m
    return found


def gap_table(word: str) -> tuple[GapEntry, ...]:
    """Kind of every gap; gap ``i`` sits between intervals ``i`` and ``i+1``."""
    n = len(word)
    entries = []
    for i in range(n):
        left, right = word[i], word[(i + 1) % n]
        if left == "a":
            entries.append(GapEntry(i, PRINCIPAL, i))
        elif right == "a":
            entries.append(GapEntry(i, PRINCIPAL, (i + 1) % n))
        else:
            entries.append(GapEntry(i, COMPLEMENTARY, None))
    return tuple(entries)


def object_spans(word: str) -> list[tuple[int, int]]:
    """The alternating family of a-intervals and blocks, in circle order.

    Returns ``(first_interval, last_interval)`` index pairs; a block's
    span may wrap past the last interval.  Requires the adjacency
    condition (no two equal labels adjacent), which forces alternation.
    """
    n = len(word)
    starts = [
        i
        for i in range(n)
        if word[i] == "a" or word[(i - 1) % n] == "a"
    ]
    spans = []
    for s in starts:
        if word[s] == "a":
            spans.append((s, s))
        else:
            e = s
            while word[(e + 1) % n] != "a":
                e += 1
            spans.append((s, e))  # e may exceed n - 1 when the block wraps
    return spans


def _walk_cycle(word: str, shift: int) -> Optional[GapCycle]:
    """Alternating walk on principal gaps; None if it closes early."""
    n = len(word)
    k = n // 3
    table = gap_table(word)
    spans = object_spans(word)
    # Principal gaps in circle order double as the gaps between objects.
    principal_order = [e % n for _, e in spans]
    assert sorted(principal_order) == sorted(
        e.index for e in table if e.kind == PRINCIPAL
    )
    pos = {g: t for t, g in enumerate(principal_order)}
    is_principal = [e.kind == PRINCIPAL for e in table]

    start = min(g for g in principal_order if word[g] == "a")
    seq = [start]
    letters = []
    g = start
    for _ in range(k):
        plus, minus = (g + shift) % n, (g - shift) % n
        candidates = []
        if is_principal[plus]:
            candidates.append((plus, "b"))
        if is_principal[minus]:
            candidates.append((minus, "B"))
        assert len(candidates) == 1, "shift relation must leave one principal image"
        g, letter = candidates[0]
        letters.append(letter)
        seq.append(g)
        g = principal_order[(pos[g] + k) % (2 * k)]
        seq.append(g)
    if seq[-1] != start or len(set(seq[:-1])) != 2 * k:
        return None
    return GapCycle(tuple(seq[:-1]), tuple(letters), start)


def validate(word: str, shift: Optional[int] = None) -> ValidationReport:
    """Full validation; reports the first failed condition."""
    _check_alphabet_and_length(word)
    n = len(word)
    k = n // 3

    def invalid(code: str) -> ValidationReport:
        return ValidationReport(word, False, k, None, (code,))

    if any(word.count(c) != k for c in "abB"):
        return invalid("interval-counts")
    for i in range(n):
        if word[i] == word[(i + 1) % n]:
            return invalid("adjacent-equal-labels")
    if k % 2 == 0:
        return invalid("multiplicity-even")
    m = find_shift(word)
    if m is None:
        return invalid("no-label-shift")
    if shift is not None and shift != m:
        return invalid("shift-mismatch")
    cycle = _walk_cycle(word, m)
    if cycle is None:
        return invalid("gap-cycle-split")
    report = ValidationReport(word, True, k, m, (), gap_table(word), cycle)
    entries = report.gaps
    assert sum(e.kind == PRINCIPAL for e in entries) == 2 * k
    assert sum(e.kind == COMPLEMENTARY for e in entries) == k
    return report


def principal_cycle(pattern: MarkovPattern) -> GapCycle:
    report = validate(pattern.word, pattern.shift)
    if not report.valid:
        raise ValueError(f"invalid pattern {pattern.text()}: {report.violations}")
    return report.cycle


def rotations(word: str) -> list[str]:
    return [word[r:] + word[:r] for r in range(len(word))]


def _cyclic_key(word: str):
    return tuple(LETTER_RANK[c] for c in word)


def canonicalize(pattern: MarkovPattern) -> MarkovPattern:
    """Least rotation of the cyclic word (order a < b < B); shift unchanged."""
    best = min(rotations(pattern.word), key=_cyclic_key)
    return MarkovPattern(best, pattern.shift)


def swap_labels(pattern: MarkovPattern) -> MarkovPattern:
    """Swap b with B throughout; the shift flips between k and 2k."""
    n = len(pattern.word)
    return MarkovPattern(pattern.word.translate(LABEL_SWAP), n - pattern.shift)


def reverse_orientation(pattern: MarkovPattern) -> MarkovPattern:
    """Read the cyclic word backwards (the mirror-image system)."""
    word = pattern.word[::-1]
    m = find_shift(word)
    if m is None:
        raise ValueError("reversal of a valid pattern lost its shift")
    return MarkovPattern(word, m)


def parse_pattern(text: str) -> MarkovPattern:
    """Parse ``word`` or ``word:shift``; infers the shift when absent."""
    word, sep, tail = text.partition(":")
    _check_alphabet_and_length(word)
    if sep:
        try:
            shift = int(tail)
        except ValueError as exc:
            raise MalformedPatternError(f"bad shift suffix {tail!r}") from exc
    else:
        shift = find_shift(word)
        if shift is None:
            # Leave it to validate() to report; 0 marks "no valid shift".
            shift = 0
    return MarkovPattern(word, shift)


def cycle_dot(report: ValidationReport) -> str:
    """Gap cycle as a DOT digraph (nodes are principal gap ids)."""
    if report.cycle is None:
        raise ValueError("pattern has no gap cycle")
    lines = ["digraph gap_cycle {"]
    for g, via, h in report.cycle.edges():
        lines.append(f'  {g} -> {h} [label="{via}"];')
    lines.append("}")
    return "\n".join(lines)


def report_json(report: ValidationReport) -> str:
    return json.dumps(report.to_json(), indent=2)


def pattern_f1(pattern: MarkovPattern) -> str:
    f1 = principal_cycle(pattern).f1
    assert is_admissible(f1)
    return f1
