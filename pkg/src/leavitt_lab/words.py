"""Finite words over {a, b}, prefix combinatorics and complete prefix codes.

Words are plain ``str`` values over the letters ``a`` and ``b``; the empty
word is ``""`` internally and renders as ``e``.  Python's string order on
this alphabet is exactly the order used for canonical sorting everywhere:
``a < b`` and a proper prefix sorts before its extensions.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Iterable, Iterator

ALPHABET = "ab"
EMPTY = ""


class PrefixRelation(enum.Enum):
    EQUAL = "Equal"
    FIRST_IS_PROPER_PREFIX = "FirstIsProperPrefix"
    SECOND_IS_PROPER_PREFIX = "SecondIsProperPrefix"
    INCOMPARABLE = "Incomparable"


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip(ALPHABET):
        raise ValueError(f"not a word over {{a,b}}: {w!r}")
    return w


def parse_word(text: str) -> str:
    text = text.strip()
    if text == "e":
        return EMPTY
    return check_word(text)


def format_word(w: str) -> str:
    return w if w else "e"


def prefix_relation(w1: str, w2: str) -> PrefixRelation:
    if w1 == w2:
        return PrefixRelation.EQUAL
    if w2.startswith(w1):
        return PrefixRelation.FIRST_IS_PROPER_PREFIX
    if w1.startswith(w2):
        return PrefixRelation.SECOND_IS_PROPER_PREFIX
    return PrefixRelation.INCOMPARABLE


def comparable(w1: str, w2: str) -> bool:
    """True iff the cylinders Z(w1) and Z(w2) intersect."""
    return w1.startswith(w2) or w2.startswith(w1)


def words_of_length(n: int) -> Iterator[str]:
    """All words of length ``n`` in increasing order."""
    for letters in itertools.product(ALPHABET, repeat=n):
        yield "".join(letters)


def is_antichain(words: Iterable[str]) -> bool:
    ws = sorted(words)
    # in sorted order a prefix (or a duplicate) always sits right before an extension
    return all(not v.startswith(u) for u, v in zip(ws, ws[1:]))


def kraft_sum(words: Iterable[str]) -> Fraction:
    return sum((Fraction(1, 2 ** len(w)) for w in words), Fraction(0))


class PrefixCode(tuple):
    """A sorted antichain of words.

    Completeness (the cylinders cover every infinite path) is not required;
    test it with :func:`is_complete_code`.
    """

    def __new__(cls, words: Iterable[str] = ()):
        ws = [check_word(w) for w in words]
        if len(set(ws)) != len(ws):
            raise ValueError("repeated word in prefix code")
        ws.sort()
        for u, v in zip(ws, ws[1:]):
            if v.startswith(u):
                raise ValueError(f"not an antichain: {format_word(u)} is a prefix of {format_word(v)}")
        return super().__new__(cls, ws)

    def __repr__(self):
        return "PrefixCode({%s})" % ", ".join(format_word(w) for w in self)

    def max_length(self) -> int:
        return max((len(w) for w in self), default=0)


def is_complete_code(c: Iterable[str]) -> bool:
    ws = list(c)
    return is_antichain(ws) and kraft_sum(ws) == 1


def refine_code(c: Iterable[str], m: int) -> PrefixCode:
    ws = list(c)
    if not is_antichain(ws):
        raise ValueError("refine_code needs an antichain")
    longest = max((len(w) for w in ws), default=0)
    if m < longest:
        raise ValueError(f"refinement level {m} is below the longest word length {longest}")
    out = [w + g for w in ws for g in words_of_length(m - len(w))]
    return PrefixCode(out)


def merge_siblings(words: Iterable[str]) -> PrefixCode:
    """Collapse sibling pairs {wa, wb} into w until none remain.

    The input must be an antichain; the covered set of infinite paths is
    unchanged.
    """
    current = set(words)
    if not current:
        return PrefixCode()
    # deepest level first; a merge can only create a new candidate one level up
    for n in range(max(len(w) for w in current), 0, -1):
        for w in sorted(x for x in current if len(x) == n and x[-1] == "a"):
            sib = w[:-1] + "b"
            if sib in current:
                current -= {w, sib}
                current.add(w[:-1])
    return PrefixCode(current)
