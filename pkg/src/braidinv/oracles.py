"""
Small-scale independent oracles for the test and verification suites.

Nothing here is meant for production callers: skein_homfly_naive is
exponential in the word length by design (it resolves the skein relation on
a tree of diagrams instead of working in the Hecke algebra), and the torus
and cable formulas exist to cross-check the matrix routes.  The package
API deliberately does not re-export this module.
"""

from __future__ import annotations

import functools
import math

from .braid import BraidWord, closure_summary
from .laurent import LaurentPoly1, LaurentPoly2, exact_div, normalize_alexander

__all__ = ["torus_alexander", "cable_alexander", "skein_homfly_naive"]

_VZ = ("v", "z")

# Split-union factor (v^{-1} - v)/z; the value of an m-component unlink is
# this to the (m-1)-st power.
_DELTA = LaurentPoly2({(-1, -1): 1, (1, -1): -1}, _VZ)

_V2 = LaurentPoly2({(2, 0): 1}, _VZ)
_VZ1 = LaurentPoly2({(1, 1): 1}, _VZ)
_VM2 = LaurentPoly2({(-2, 0): 1}, _VZ)
_VM1Z = LaurentPoly2({(-1, 1): 1}, _VZ)


def torus_alexander(p: int, q: int) -> LaurentPoly1:
    """Alexander polynomial of the torus knot T(p, q), coprime p, q >= 1.

    Classical formula (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), evaluated
    by exact division; T(p, 1) and T(1, q) are unknots with polynomial 1.
    """
    if p < 1 or q < 1:
        raise ValueError("torus parameters must be positive")
    if math.gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is a link, not a knot: parameters must be coprime")
    t = LaurentPoly1.gen()
    one = LaurentPoly1.one()
    numerator = (t ** (p * q) - one) * (t - one)
    return normalize_alexander(exact_div(numerator, (t**p - one) * (t**q - one)))


def cable_alexander(companion: LaurentPoly1, cable_p: int, cable_q: int) -> LaurentPoly1:
    """Alexander polynomial of the (2, q)-cable of a knot with the given polynomial.

    Satellite formula: Delta_companion(t^2) * Delta_{T(2,q)}(t).  Only the
    2-cable shape is supported; q must be odd.
    """
    if cable_p != 2:
        raise ValueError("only (2, q)-cables are supported")
    if cable_q % 2 == 0:
        raise ValueError("a (2, q)-cable of a knot needs odd q")
    return normalize_alexander(companion.compose_power(2) * torus_alexander(2, cable_q))


def _traversal(strands: int, letters: tuple[int, ...]):
    """Crossing visits of the closure, in traversal order, as (index, is_over).

    The closure is walked component by component from the smallest unvisited
    top position.  At letter l the strand entering on the left passes over
    exactly when l > 0 (switching a letter's sign flips its over/under flags
    but never the walk itself, which only sees |l|).
    """
    visited_top = [False] * strands
    events: list[tuple[int, bool]] = []
    for start in range(strands):
        if visited_top[start]:
            continue
        p = start
        while True:
            visited_top[p] = True
            for k, letter in enumerate(letters):
                i = abs(letter) - 1
                if p == i:
                    events.append((k, letter > 0))
                    p = i + 1
                elif p == i + 1:
                    events.append((k, letter < 0))
                    p = i
            if p == start:
                break
    return events


def _first_under_crossing(strands: int, letters: tuple[int, ...]) -> int | None:
    """Index of the first crossing met from underneath, or None if descending.

    A diagram whose every crossing is first met from above is a descending
    diagram, hence an unlink.
    """
    seen: set[int] = set()
    for k, over in _traversal(strands, letters):
        if k not in seen:
            seen.add(k)
            if not over:
                return k
    return None


@functools.lru_cache(maxsize=None)
def _resolve(strands: int, letters: tuple[int, ...]) -> LaurentPoly2:
    k = _first_under_crossing(strands, letters)
    if k is None:
        components = closure_summary(BraidWord(strands, letters)).component_count
        return _DELTA ** (components - 1)
    letter = letters[k]
    switched = letters[:k] + (-letter,) + letters[k + 1 :]
    smoothed = letters[:k] + letters[k + 1 :]
    if letter > 0:
        # v^{-1} P(+) - v P(-) = z P(0)  =>  P(+) = v^2 P(-) + v z P(0)
        return _V2 * _resolve(strands, switched) + _VZ1 * _resolve(strands, smoothed)
    # P(-) = v^{-2} P(+) - v^{-1} z P(0)
    return _VM2 * _resolve(strands, switched) - _VM1Z * _resolve(strands, smoothed)


def skein_homfly_naive(word: BraidWord, max_letters: int = 14) -> LaurentPoly2:
    """HOMFLY-PT of a braid closure by brute-force skein-tree resolution.

    Repeatedly switches the first crossing that breaks the descending
    condition (the switched diagram is strictly closer to descending, the
    smoothed one strictly shorter, so the tree is finite) and evaluates
    descending leaves as unlinks.  Worst case 3^length diagrams; refuses
    words longer than ``max_letters``.
    """
    if max_letters > 14:
        raise ValueError("naive resolution is capped at 14 letters")
    if len(word.letters) > max_letters:
        raise ValueError(f"word has {len(word.letters)} letters; limit is {max_letters}")
    return _resolve(word.strands, tuple(word.letters))
