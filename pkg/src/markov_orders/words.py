"""Exact word arithmetic in the group ``<a, b | a^2 = b^3 = e>``.

Group elements are *admissible* words: strings over the three-letter
alphabet ``a`` (the involution), ``b`` (the order-three generator) and
``B`` (its inverse), in which letters strictly alternate between ``a``
and ``{b, B}``.  Every element has exactly one admissible spelling, so
plain string equality is group-element equality.  The empty string is
the identity; it prints as ``e``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

ALPHABET = "abB"

INVERSE = {"a": "a", "b": "B", "B": "b"}

# Fixed letter order a < b < B, used wherever a deterministic ordering
# of words or cyclic label sequences is needed.
LETTER_RANK = {"a": 0, "b": 1, "B": 2}

IDENTITY = ""


def word_key(word: str) -> tuple:
    """Sort key: length first, then letter rank (a < b < B)."""
    return (len(word), tuple(LETTER_RANK[c] for c in word))


def is_admissible(word: str) -> bool:
    """True if ``word`` is a normal form (letters alternate a / {b, B})."""
    for c in word:
        if c not in LETTER_RANK:
            return False
    for x, y in zip(word, word[1:]):
        if (x == "a") == (y == "a"):
            return False
    return True


def reduce_word(letters: Iterable[str]) -> str:
    """Normal form of a raw letter sequence.

    Applies ``aa -> e``, ``bb -> B``, ``BB -> b`` and ``bB, Bb -> e``
    until stable.  Total: accepts any sequence over the alphabet.
    """
    out: list[str] = []
    for c in letters:
        if c not in LETTER_RANK:
            raise ValueError(f"letter {c!r} not in alphabet {ALPHABET!r}")
        out.append(c)
        while len(out) >= 2:
            x, y = out[-2], out[-1]
            if x == "a" and y == "a":
                del out[-2:]
            elif x == "b" and y == "b":
                del out[-2:]
                out.append("B")
            elif x == "B" and y == "B":
                del out[-2:]
                out.append("b")
            elif (x == "b" and y == "B") or (x == "B" and y == "b"):
                del out[-2:]
            else:
                break
    return "".join(out)


def multiply(u: str, v: str) -> str:
    return reduce_word(u + v)


def inverse(u: str) -> str:
    return "".join(INVERSE[c] for c in reversed(u))


def prefix(u: str) -> str:
    """First letter of the normal form; empty string for the identity."""
    return u[:1]


def larvae(u: str) -> list[str]:
    """All proper suffixes of ``u`` (each again admissible)."""
    return [u[i:] for i in range(1, len(u))]


def flip(u: str) -> str:
    """The outer automorphism fixing ``a`` and swapping ``b`` with ``B``.

    An involution; letter-wise on normal forms.
    """
    return u.translate(str.maketrans("bB", "Bb"))


def words_of_length(n: int) -> Iterator[str]:
    """All admissible words of length exactly ``n``, in ``word_key`` order."""
    if n == 0:
        yield IDENTITY
        return
    if n < 0:
        return
    # Letters alternate, so a word is determined by its start letter and
    # the choices made in the {b, B} slots.
    results: list[str] = []
    for first in ("a", "b", "B"):
        words = [first]
        for _ in range(n - 1):
            nxt: list[str] = []
            for w in words:
                if w[-1] == "a":
                    nxt.append(w + "b")
                    nxt.append(w + "B")
                else:
                    nxt.append(w + "a")
            words = nxt
        results.extend(words)
    results.sort(key=word_key)
    yield from results


def ball(n: int) -> list[str]:
    """All admissible words of length <= ``n`` (identity included), sorted."""
    if n < 0:
        raise ValueError("radius must be >= 0")
    out = [IDENTITY]
    for m in range(1, n + 1):
        out.extend(words_of_length(m))
    return out


def ball_size(n: int) -> int:
    """Predicted size of ``ball(n)`` from the start-letter recurrence."""
    total = 1
    sa, sb = 1, 2  # words of length 1 starting with a / with b or B
    for m in range(1, n + 1):
        if m > 1:
            sa, sb = sb, 2 * sa
        total += sa + sb
    return total


def raw_sequences(max_len: int) -> Iterator[str]:
    """Every raw letter string of length <= ``max_len`` (exhaustive)."""
    for n in range(max_len + 1):
        for tup in itertools.product(ALPHABET, repeat=n):
            yield "".join(tup)


def format_word(u: str) -> str:
    """Serialize for display: the identity prints as ``e``."""
    return u if u else "e"


def parse_word(text: str) -> str:
    """Parse a word from text (``e`` for the identity) and reduce it."""
    if text == "e":
        return IDENTITY
    return reduce_word(text)
