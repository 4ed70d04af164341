"""Exhaustive search for valid patterns of a given multiplicity.

The label-shift relation determines a word from its first ``k`` labels
(positions ``i``, ``i+m``, ``i+2m`` carry ``x``, ``step(x)``,
``step(step(x))``), so the search space is ``3^k`` seeds per candidate
shift instead of ``3^{3k}`` raw words.  The raw search is kept as a
verification oracle behind ``naive=True``.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .patterns import (
    LABEL_STEP,
    MarkovPattern,
    canonicalize,
    reverse_orientation,
    swap_labels,
    validate,
)
from .words import LETTER_RANK

_ALPHA = "abB"


def expand_seed(k: int, shift: int, seed: tuple[str, ...]) -> str:
    """Word of length 3k with ``seed`` in positions 0..k-1, completed by
    the shift relation."""
    n = 3 * k
    word = [""] * n
    for i, x in enumerate(seed):
        word[i] = x
        word[(i + shift) % n] = LABEL_STEP[x]
        word[(i + 2 * shift) % n] = LABEL_STEP[LABEL_STEP[x]]
    assert all(word)
    return "".join(word)


def _scan_seed_range(k: int, shift: int, lo: int, hi: int) -> set[str]:
    """Canonical words of valid expansions for seed indices [lo, hi)."""
    found: set[str] = set()
    n = 3 * k
    for index in range(lo, hi):
        seed = []
        v = index
        for _ in range(k):
            seed.append(_ALPHA[v % 3])
            v //= 3
        word = expand_seed(k, shift, tuple(seed))
        # Cheap adjacency reject before the full walk.
        if any(word[i] == word[(i + 1) % n] for i in range(n)):
            continue
        report = validate(word)
        if report.valid:
            found.add(canonicalize(MarkovPattern(word, report.shift)).word)
    return found


def default_threads() -> int:
    env = os.environ.get("MKORDERS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def enumerate_patterns(
    k: int, *, naive: bool = False, threads: int | None = None
) -> list[MarkovPattern]:
    """All valid patterns of multiplicity ``k``, one canonical form each.

    Even ``k`` yields the empty list outright (the involution forces
    odd multiplicity).  Output is sorted, hence deterministic.
    """
    if k <= 0:
        raise ValueError("multiplicity must be positive")
    if k % 2 == 0:
        return []
    if naive:
        canon = _naive_canonical_words(k)
    else:
        canon = _seed_canonical_words(k, threads or default_threads())
    ordered = sorted(canon, key=lambda w: tuple(LETTER_RANK[c] for c in w))
    out = []
    for word in ordered:
        report = validate(word)
        assert report.valid
        out.append(MarkovPattern(word, report.shift))
    return out


def _seed_canonical_words(k: int, threads: int) -> set[str]:
    total = 3**k
    found: set[str] = set()
    if threads > 1 and total >= 729:
        chunk = (total + threads - 1) // threads
        jobs = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for shift in (k, 2 * k):
                for lo in range(0, total, chunk):
                    jobs.append(
                        pool.submit(_scan_seed_range, k, shift, lo, min(lo + chunk, total))
                    )
            for job in jobs:
                found |= job.result()
    else:
        for shift in (k, 2 * k):
            found |= _scan_seed_range(k, shift, 0, total)
    return found


def _naive_canonical_words(k: int) -> set[str]:
    found: set[str] = set()
    for tup in itertools.product(_ALPHA, repeat=3 * k):
        word = "".join(tup)
        report = validate(word)
        if report.valid:
            found.add(canonicalize(MarkovPattern(word, report.shift)).word)
    return found


@dataclass(frozen=True)
class OrbitClass:
    """One orbit under label-swap and orientation-reversal."""

    members: tuple[str, ...]  # canonical words, sorted
    k: int
    f1_letter_counts: tuple[tuple[str, int], ...]
    cycle_signature: str

    def to_json(self) -> dict:
        return {
            "members": list(self.members),
            "k": self.k,
            "f1_letter_counts": dict(self.f1_letter_counts),
            "cycle_signature": self.cycle_signature,
        }


def _signature(pattern: MarkovPattern) -> str:
    """Least rotation of the walk's b-letter sequence."""
    report = validate(pattern.word, pattern.shift)
    letters = "".join(report.cycle.letters)
    return min(
        letters[r:] + letters[:r] for r in range(len(letters))
    )


def classify(patterns: list[MarkovPattern]) -> list[OrbitClass]:
    """Group canonical patterns into orbits of {swap_labels, reverse}.

    Only that subgroup is applied; orbits under the full automorphism
    action could conceivably be coarser.
    """
    remaining = {canonicalize(p).word: canonicalize(p) for p in patterns}
    orbits = []
    while remaining:
        word, rep = next(iter(remaining.items()))
        orbit = {}
        queue = [rep]
        while queue:
            p = queue.pop()
            cp = canonicalize(p)
            if cp.word in orbit:
                continue
            orbit[cp.word] = cp
            queue.append(swap_labels(cp))
            queue.append(reverse_orientation(cp))
        members = tuple(sorted(w for w in orbit if w in remaining))
        for w in members:
            remaining.pop(w, None)
        any_rep = orbit[members[0]]
        rep_report = validate(any_rep.word, any_rep.shift)
        counts = tuple(
            sorted(
                (c, rep_report.cycle.letters.count(c))
                for c in set(rep_report.cycle.letters)
            )
        )
        sig = min(_signature(orbit[w]) for w in members)
        orbits.append(OrbitClass(members, any_rep.k, counts, sig))
    orbits.sort(key=lambda o: o.members)
    return orbits


@dataclass(frozen=True)
class CountRow:
    k: int
    patterns: int
    orbits: int
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "patterns": self.patterns,
            "orbits": self.orbits,
            "elapsed_ms": self.elapsed_ms,
        }


def count_report(k_max: int, *, threads: int | None = None) -> list[CountRow]:
    """Run the search for every odd k <= k_max and tabulate the results."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rows = []
    for k in range(1, k_max + 1, 2):
        start = time.perf_counter()
        patterns = enumerate_patterns(k, threads=threads)
        orbits = classify(patterns)
        elapsed = (time.perf_counter() - start) * 1000.0
        rows.append(CountRow(k, len(patterns), len(orbits), elapsed))
    return rows
