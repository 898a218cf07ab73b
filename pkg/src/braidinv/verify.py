"""
The full verification sweep behind ``braidinv verify --paper``.

Each check replays one of the published computations for the K_n family (or
a supporting identity) and compares exactly; there are no tolerances
anywhere.  The checks are deliberately redundant: closed forms against
matrix computations, matrix computations against brute-force oracles, and
specializations across independently implemented invariants.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from . import oracles
from .alexander import (
    addition_witness,
    alexander_poly,
    formal_semigroup,
    is_closed_under_addition,
)
from .braid import BraidWord, closure_summary, family_word, positive_braid_genus
from .homfly import alexander_specialization, homfly, mfw_bracket
from .laurent import LaurentPoly1
from .report import invariant_report
from .torres import closed_form_kn_alexander, closed_form_kn_semigroup, kn_base_link, twist_alexander

__all__ = ["CheckResult", "CHECKS", "run_all"]

_SEED = 0x5EED


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, failures: list[str], detail_ok: str) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures))
    return CheckResult(name, True, detail_ok)


def check_alexander_routes() -> CheckResult:
    """Matrix route = twist route = closed form for n = 1..8."""
    base = kn_base_link()
    failures = []
    for n in range(1, 9):
        burau = alexander_poly(family_word("Kn", n))
        twist = twist_alexander(base, n)
        closed = closed_form_kn_alexander(n)
        if not (burau == twist == closed):
            failures.append(f"n={n}: routes disagree")
    return _result(
        "alexander-routes", failures, "Burau = twist = closed form for n=1..8"
    )


def check_baseline_identifications() -> CheckResult:
    """K_0 = T(3,4) and K_1 = the (2,9)-cable of T(2,3), at the polynomial level."""
    failures = []
    if alexander_poly(family_word("Kn", 0)) != oracles.torus_alexander(3, 4):
        failures.append("K_0 polynomial != T(3,4) torus formula")
    trefoil = oracles.torus_alexander(2, 3)
    if closed_form_kn_alexander(1) != oracles.cable_alexander(trefoil, 2, 9):
        failures.append("K_1 polynomial != (2,9)-cable of T(2,3)")
    return _result(
        "baseline-identifications", failures, "K_0 = T(3,4); K_1 = (2,9)-cable of T(2,3)"
    )


def check_genus() -> CheckResult:
    """Genus 3n+3 from the word and from the polynomial degree, n = 0..8."""
    failures = []
    for n in range(9):
        word = family_word("Kn", n)
        g = positive_braid_genus(word)
        span = alexander_poly(word).degree_span()
        if g != 3 * n + 3 or span != 2 * g:
            failures.append(f"n={n}: genus {g}, degree span {span}")
    return _result("genus", failures, "genus(K_n) = 3n+3 = deg(Delta)/2 for n=0..8")


def check_formal_semigroup() -> CheckResult:
    """Expanded semigroup equals the closed form for n = 1..8; exact n=1 value."""
    failures = []
    for n in range(1, 9):
        expanded = formal_semigroup(alexander_poly(family_word("Kn", n)))
        if expanded != closed_form_kn_semigroup(n):
            failures.append(f"n={n}: semigroup routes disagree")
    s1 = formal_semigroup(alexander_poly(family_word("Kn", 1)))
    if s1.finite_part != (0, 4, 6, 8, 9, 10) or s1.threshold != 12:
        failures.append(f"n=1 semigroup is {s1}")
    return _result(
        "formal-semigroup",
        failures,
        "expansion = closed form for n=1..8; n=1 gives {0,4,6,8,9,10} mod 12",
    )


def check_non_closure() -> CheckResult:
    """Additive closure fails exactly for n >= 2, witnessed by a pair summing to 8."""
    failures = []
    s1 = closed_form_kn_semigroup(1)
    if not is_closed_under_addition(s1):
        failures.append("n=1 set should be closed under addition")
    for n in range(2, 9):
        s = closed_form_kn_semigroup(n)
        witness = addition_witness(s)
        if witness is None:
            failures.append(f"n={n}: no witness found")
        elif sum(witness) != 8 or 8 in s:
            failures.append(f"n={n}: witness {witness} does not exhibit 8 as a gap")
    return _result(
        "non-closure-witness", failures, "closed only at n=1; witness 4+4=8 missing for n=2..8"
    )


def check_mfw_degrees() -> CheckResult:
    """v-degree span [18, 24] for K_2, so both braid-index bounds equal 4."""
    failures = []
    word = family_word("Kn", 2)
    d_minus, d_plus = homfly(word).var_span("v")
    if (d_minus, d_plus) != (18, 24):
        failures.append(f"K_2 v-span is [{d_minus}, {d_plus}]")
    bracket = mfw_bracket(word)
    if bracket.lower_bound != 4 or bracket.upper_bound != 4:
        failures.append(f"K_2 bracket is {bracket}")
    return _result("mfw-degrees", failures, "K_2: d+=24, d-=18, braid index = 4")


def check_torus_semigroups() -> CheckResult:
    """Torus-knot formal semigroups are genuine semigroups (coprime p<q, pq<=40)."""
    import math

    failures = []
    pairs = [
        (p, q)
        for p in range(2, 7)
        for q in range(p + 1, 41)
        if p * q <= 40 and math.gcd(p, q) == 1
    ]
    for p, q in pairs:
        if not is_closed_under_addition(formal_semigroup(oracles.torus_alexander(p, q))):
            failures.append(f"T({p},{q}) semigroup not closed")
    return _result(
        "torus-semigroups", failures, f"all {len(pairs)} coprime pairs with pq<=40 closed"
    )


def check_candidate_coincidence() -> CheckResult:
    """The two candidate families meet: A(3) and B(1) agree on every invariant."""
    a = invariant_report(family_word("A", 3), include_homfly=True)
    b = invariant_report(family_word("B", 1), include_homfly=True)
    failures = []
    if a.alexander != b.alexander:
        failures.append("Alexander polynomials differ")
    if a.genus != 10 or b.genus != 10:
        failures.append(f"genus {a.genus} / {b.genus}, expected 10")
    if a.formal_semigroup != b.formal_semigroup:
        failures.append("formal semigroups differ")
    if a.homfly != b.homfly:
        failures.append("HOMFLY-PT polynomials differ")
    return _result(
        "candidate-coincidence", failures, "A(3) = B(1): Alexander, genus 10, semigroup, HOMFLY"
    )


def _random_knot_word(rng: random.Random, allow_negative: bool) -> BraidWord:
    """A random word (<= 12 letters, 3 or 4 strands) whose closure is a knot."""
    while True:
        strands = rng.choice((3, 4))
        length = rng.randint(1, 12)
        letters = []
        for _ in range(length):
            letter = rng.randint(1, strands - 1)
            if allow_negative and rng.random() < 0.4:
                letter = -letter
            letters.append(letter)
        word = BraidWord(strands, tuple(letters))
        if closure_summary(word).component_count == 1:
            return word


def _markov_variants(rng: random.Random, word: BraidWord) -> list[BraidWord]:
    g = rng.randint(1, word.strands - 1) * rng.choice((1, -1))
    conjugated = BraidWord(word.strands, (g,) + word.letters + (-g,))
    sign = rng.choice((1, -1))
    stabilized = BraidWord(word.strands + 1, word.letters + (sign * word.strands,))
    return [conjugated, stabilized]


def check_property_suite() -> CheckResult:
    """Randomized Markov moves, palindromicity, and cross-invariant coherence."""
    rng = random.Random(_SEED)
    failures = []

    # Corpus of knot-closure words used for the global identities.
    corpus = [family_word("Kn", n) for n in range(9)]
    corpus += [family_word("A", m) for m in (1, 2, 3)]
    corpus += [family_word("B", n) for n in (1, 2)]
    corpus += [BraidWord(2, (1, 1, 1)), BraidWord(3, (1, 2) * 4), BraidWord(2, (1,) * 9)]
    corpus += [_random_knot_word(rng, allow_negative=True) for _ in range(20)]

    # Markov invariance of both invariants on >= 200 randomized pairs.
    pairs = 0
    while pairs < 200:
        word = _random_knot_word(rng, allow_negative=True)
        delta = alexander_poly(word)
        poly = homfly(word)
        for variant in _markov_variants(rng, word):
            if alexander_poly(variant) != delta:
                failures.append(f"Alexander not Markov-invariant on {variant}")
            if homfly(variant) != poly:
                failures.append(f"HOMFLY not Markov-invariant on {variant}")
            pairs += 1

    # Palindromicity and value 1 at t=1 across the corpus.
    for word in corpus:
        delta = alexander_poly(word)
        span = delta.degree_span()
        if delta.evaluate(1) != 1:
            failures.append(f"Delta(1) != 1 for {word}")
        if any(delta.coeff(e) != delta.coeff(span - e) for e in range(span + 1)):
            failures.append(f"Delta not palindromic for {word}")

    # Hecke engine against the exponential skein oracle, exhaustively.
    for strands, gens in ((2, (1,)), (3, (1, 2))):
        for length in range(8):
            for letters in itertools.product(gens, repeat=length):
                word = BraidWord(strands, letters)
                if oracles.skein_homfly_naive(word) != homfly(word):
                    failures.append(f"Hecke != naive skein on {word}")

    # HOMFLY specializes to the Alexander polynomial across the corpus.
    for word in corpus:
        if alexander_specialization(homfly(word)) != alexander_poly(word):
            failures.append(f"specialization mismatch on {word}")

    return _result(
        "property-suite",
        failures[:5],
        f"{pairs} Markov pairs, corpus of {len(corpus)}, exhaustive short-word skein audit",
    )


CHECKS: list[tuple[str, Callable[[], CheckResult]]] = [
    ("1", check_alexander_routes),
    ("2", check_baseline_identifications),
    ("3", check_genus),
    ("4", check_formal_semigroup),
    ("5", check_non_closure),
    ("6", check_mfw_degrees),
    ("7", check_torus_semigroups),
    ("8", check_candidate_coincidence),
    ("9", check_property_suite),
]


def run_all() -> list[tuple[str, CheckResult]]:
    """Run every check in order; returns (criterion number, result) pairs."""
    return [(number, fn()) for number, fn in CHECKS]
