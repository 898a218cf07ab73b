"""
Braid words, their closures, and the knot families studied by this package.

A braid word on n strands is a sequence of nonzero letters; letter i stands
for the standard generator sigma_i (crossing strands at positions i, i+1)
and -i for its inverse.  Words are kept fully expanded: the surface syntax
``(a,b)^k`` for repeated blocks is flattened at parse time, so everything
downstream loops over a flat letter tuple.

Letters act on positions left to right; the induced permutation maps the
start position of each strand to its end position, and the closure has one
link component per permutation cycle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "BraidWord",
    "ClosureSummary",
    "BraidSyntaxError",
    "NotPositiveError",
    "NotAKnotError",
    "parse_braid",
    "render_braid",
    "closure_summary",
    "positive_braid_genus",
    "family_word",
    "FAMILY_NAMES",
]


class BraidSyntaxError(ValueError):
    """Malformed braid-word text."""


class NotPositiveError(ValueError):
    """An operation restricted to positive braids met a negative letter."""


class NotAKnotError(ValueError):
    """An operation restricted to knots met a multi-component closure."""


@dataclass(frozen=True)
class BraidWord:
    """A braid word: strand count plus a flat tuple of signed letters."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise ValueError(
                    f"letter {letter} invalid on {self.strands} strands "
                    f"(need 1 <= |letter| <= {self.strands - 1})"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def writhe(self) -> int:
        """Exponent sum; equals the crossing count for positive words."""
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def is_positive(self) -> bool:
        return all(letter > 0 for letter in self.letters)

    def __str__(self) -> str:
        return render_braid(self)


@dataclass(frozen=True)
class ClosureSummary:
    """Combinatorics of a braid closure.

    ``permutation[p-1]`` is the end position of the strand that starts at
    position p (1-indexed); the closure has one component per cycle.
    """

    permutation: tuple[int, ...]
    component_count: int
    writhe: int


_TOKEN = re.compile(r"-?\d+|[\[\](),^]")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse braid-word text such as ``[3,2,2,1,3,2,2,3,2,(1,2)^6]``.

    Grammar: a bracketed, comma-separated list of items, where an item is a
    signed integer or a parenthesized group ``(a,b,...)^k`` repeated k >= 0
    times.  Whitespace is ignored.  When ``strands`` is omitted it is
    inferred as max|letter| + 1 (minimum 2).

    >>> parse_braid("[1,1,1]").letters
    (1, 1, 1)
    >>> parse_braid("[(1,2)^2]", strands=4).letters
    (1, 2, 1, 2)
    """
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise BraidSyntaxError(f"unexpected characters in {text!r}")
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise BraidSyntaxError(f"unexpected end of input in {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise BraidSyntaxError(f"expected {expected!r} but found {tok!r} in {text!r}")
        pos += 1
        return tok

    def take_int() -> int:
        tok = take()
        try:
            return int(tok)
        except ValueError:
            raise BraidSyntaxError(f"expected an integer but found {tok!r} in {text!r}") from None

    def parse_item(out: list[int]) -> None:
        if peek() == "(":
            take("(")
            group = [take_int()]
            while peek() == ",":
                take(",")
                group.append(take_int())
            take(")")
            take("^")
            count = take_int()
            if count < 0:
                raise BraidSyntaxError(f"negative repeat count in {text!r}")
            out.extend(group * count)
        else:
            out.append(take_int())

    take("[")
    letters: list[int] = []
    if peek() != "]":
        parse_item(letters)
        while peek() == ",":
            take(",")
            parse_item(letters)
    take("]")
    if pos != len(tokens):
        raise BraidSyntaxError(f"trailing tokens after closing bracket in {text!r}")

    if any(letter == 0 for letter in letters):
        raise BraidSyntaxError(f"zero letter in {text!r}")
    if strands is None:
        strands = max((abs(letter) for letter in letters), default=1) + 1
    for letter in letters:
        if abs(letter) > strands - 1:
            raise BraidSyntaxError(f"letter {letter} out of range on {strands} strands")
    return BraidWord(strands, tuple(letters))


def render_braid(word: BraidWord) -> str:
    """Canonical flat form ``[l1,l2,...]``; inverse of parse_braid on its output."""
    return "[" + ",".join(str(letter) for letter in word.letters) + "]"


def closure_summary(word: BraidWord) -> ClosureSummary:
    """Permutation, component count, and writhe of the braid closure."""
    n = word.strands
    # occupant[j] = strand currently at position j (0-indexed).
    occupant = list(range(n))
    for letter in word.letters:
        i = abs(letter) - 1
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    end_position = [0] * n
    for j, s in enumerate(occupant):
        end_position[s] = j + 1
    permutation = tuple(end_position)

    seen = [False] * n
    components = 0
    for start in range(n):
        if not seen[start]:
            components += 1
            p = start
            while not seen[p]:
                seen[p] = True
                p = permutation[p] - 1
    return ClosureSummary(permutation, components, word.writhe)


def positive_braid_genus(word: BraidWord) -> int:
    """Seifert genus of the closure of a positive braid word with knot closure.

    For a positive word with c letters on n strands whose closure is a knot,
    the fiber surface realizes genus (c - n + 1)/2.
    """
    if not word.is_positive():
        raise NotPositiveError("genus formula requires a positive braid word")
    summary = closure_summary(word)
    if summary.component_count != 1:
        raise NotAKnotError(
            f"closure has {summary.component_count} components; genus formula requires a knot"
        )
    return (len(word.letters) - word.strands + 1) // 2


# The three 4-strand families: Kn(n) for n >= 0, and the two candidate
# generalizations A(m), B(n) for parameters >= 1.
FAMILY_NAMES = ("Kn", "A", "B")

_KN_BASE = (3, 2, 2, 1, 3, 2, 2, 3, 2)
_AB_MIDDLE = (2, 1, 3, 2, 2)


def family_word(family: str, parameter: int) -> BraidWord:
    """The defining 4-strand braid word of one of the knot families.

    Kn(n) = [3,2,2,1,3,2,2,3,2,(1,2)^(3n)] for n >= 0;
    A(m)  = [(1,2,3)^4,2,1,3,2,2,3^(2m)]   for m >= 1;
    B(n)  = [(1,2,3)^(4n),2,1,3,2,2,3^6]   for n >= 1.

    >>> render_braid(family_word("Kn", 0))
    '[3,2,2,1,3,2,2,3,2]'
    """
    if family == "Kn":
        if parameter < 0:
            raise ValueError("family Kn requires parameter >= 0")
        letters = _KN_BASE + (1, 2) * (3 * parameter)
    elif family == "A":
        if parameter < 1:
            raise ValueError("family A requires parameter >= 1")
        letters = (1, 2, 3) * 4 + _AB_MIDDLE + (3,) * (2 * parameter)
    elif family == "B":
        if parameter < 1:
            raise ValueError("family B requires parameter >= 1")
        letters = (1, 2, 3) * (4 * parameter) + _AB_MIDDLE + (3,) * 6
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILY_NAMES}")
    return BraidWord(4, letters)
