"""
HOMFLY-PT polynomials of braid closures through a Hecke-algebra trace, and
the Morton-Franks-Williams braid-index bounds read off from them.

The engine works in the algebra spanned by positive permutation braids
{g_w : w in S_n} over Z[z], with quadratic relation g_i^2 = z*g_i + 1
(equivalently g_i - g_i^{-1} = z).  Mapping sigma_i to v*g_i then satisfies
the skein relation

    v^{-1} P(L+) - v P(L-) = z P(L0),      P(unknot) = 1,

and under this convention the positive trefoil is 2v^2 - v^4 + v^2 z^2,
which pins all signs.  A word is expanded letter by letter (one basis pass
per letter, using the ascent/descent rule), so long words stay cheap; the
skein-tree alternative would be exponential in the word length.

The Markov trace sends 1 to 1 and satisfies tr(x g_top y) = tau * tr(x y)
for x, y in the subalgebra without the top generator.  Writing each basis
permutation as u * (g_{n-2} ... g_p) with u fixing the top strand, the top
generator is stripped with a factor tau and the leftover chain is folded
back into the smaller algebra.  Traces are polynomials in tau over Z[z];
substituting tau -> z/(1 - v^2) and multiplying by the split-union factor
delta^(n-1) = ((v^{-1} - v)/z)^(n-1) together with v^writhe produces the
final polynomial without ever leaving integer Laurent arithmetic, since
delta^(n-1) * tau^k = delta^(n-1-k) * v^{-k}.

Basis size is n!, so strand counts above 6 are rejected rather than left
to grind (720 basis elements is the practical wall for this design).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb

from .braid import BraidWord
from .laurent import LaurentPoly1, LaurentPoly2, normalize_alexander

__all__ = [
    "MfwBracket",
    "OddExponentError",
    "MAX_HECKE_STRANDS",
    "homfly",
    "mfw_bracket",
    "alexander_specialization",
]

MAX_HECKE_STRANDS = 6

_ZVAR = "z"
_VZ = ("v", "z")


class OddExponentError(ValueError):
    """The Alexander specialization hit mixed exponent parity (not a knot input)."""


def _z_poly(degree: int, coeff: int = 1) -> LaurentPoly1:
    return LaurentPoly1.term(coeff, degree, _ZVAR)


@functools.lru_cache(maxsize=None)
def _gen_table(w: tuple[int, ...], i: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Right multiplication of basis element g_w by g_i.

    Returns ((perm, z_degree), ...): g_{ws_i} alone on an ascent, otherwise
    g_{ws_i} + z*g_w.  Cached per permutation and letter, which doubles as
    the letter-multiplication table for each strand count.
    """
    ws = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
    if w[i] < w[i + 1]:
        return ((ws, 0),)
    return ((ws, 0), (w, 1))


def _mul_letter(
    elem: dict[tuple[int, ...], LaurentPoly1], letter: int
) -> dict[tuple[int, ...], LaurentPoly1]:
    """Multiply an algebra element by the image of one braid letter."""
    i = abs(letter) - 1
    out: dict[tuple[int, ...], LaurentPoly1] = {}
    for w, c in elem.items():
        for perm, zdeg in _gen_table(w, i):
            add = c if zdeg == 0 else c * _z_poly(zdeg)
            prev = out.get(perm)
            out[perm] = add if prev is None else prev + add
    if letter < 0:
        # g_i^{-1} = g_i - z
        z = _z_poly(1)
        for w, c in elem.items():
            dec = c * z
            prev = out.get(w)
            total = -dec if prev is None else prev - dec
            out[w] = total
    return {w: c for w, c in out.items() if not c.is_zero()}


@functools.lru_cache(maxsize=None)
def _trace_perm(w: tuple[int, ...]) -> tuple[tuple[int, LaurentPoly1], ...]:
    """Markov trace of basis element g_w as ((tau_degree, z_poly), ...)."""
    n = len(w)
    if n == 1:
        return ((0, LaurentPoly1.one(_ZVAR)),)
    p = w.index(n - 1)
    if p == n - 1:
        return _trace_perm(w[:-1])

    # w = u * (g_{n-2} g_{n-3} ... g_p) with u fixing the top strand; strip
    # the top generator (factor tau) and fold the leftover chain into the
    # (n-1)-strand algebra.
    bubbled = list(w)
    for j in range(p, n - 1):
        bubbled[j], bubbled[j + 1] = bubbled[j + 1], bubbled[j]
    elem = {tuple(bubbled[:-1]): LaurentPoly1.one(_ZVAR)}
    for gen in range(n - 3, p - 1, -1):
        elem = _mul_letter(elem, gen + 1)

    acc: dict[int, LaurentPoly1] = {}
    for perm, c in elem.items():
        for k, poly in _trace_perm(perm):
            key = k + 1
            add = c * poly
            prev = acc.get(key)
            acc[key] = add if prev is None else prev + add
    return tuple(sorted((k, poly) for k, poly in acc.items() if not poly.is_zero()))


def homfly(word: BraidWord) -> LaurentPoly2:
    """HOMFLY-PT polynomial P(v, z) of the closure of ``word``.

    Accepts any closure (knot or link).  Invariant under Markov moves;
    P(unknot) = 1 and a distant split union multiplies by (v^{-1}-v)/z.
    """
    n = word.strands
    if n > MAX_HECKE_STRANDS:
        raise ValueError(
            f"{n} strands needs a {n}!-element basis; this engine stops at "
            f"{MAX_HECKE_STRANDS} (basis growth is factorial)"
        )
    identity = tuple(range(n))
    elem: dict[tuple[int, ...], LaurentPoly1] = {identity: LaurentPoly1.one(_ZVAR)}
    for letter in word.letters:
        elem = _mul_letter(elem, letter)

    tau_coeffs: dict[int, LaurentPoly1] = {}
    for w, c in elem.items():
        for k, poly in _trace_perm(w):
            add = c * poly
            prev = tau_coeffs.get(k)
            tau_coeffs[k] = add if prev is None else prev + add

    e = word.writhe
    v_inv_minus_v = LaurentPoly2({(-1, 0): 1, (1, 0): -1}, _VZ)
    result = LaurentPoly2.zero(_VZ)
    for k, a_k in tau_coeffs.items():
        factor = v_inv_minus_v ** (n - 1 - k)
        embedded = LaurentPoly2(
            {(e - k, ze + k - n + 1): c for ze, c in a_k.items()}, _VZ
        )
        result = result + embedded * factor
    return result


@dataclass(frozen=True)
class MfwBracket:
    """Morton-Franks-Williams braid-index bracket for one braid presentation.

    lower_bound = (d_plus - d_minus)/2 + 1 from the v-degree span of P;
    upper_bound is the strand count of the presenting word.
    """

    d_plus: int
    d_minus: int
    lower_bound: int
    upper_bound: int


def mfw_bracket(word: BraidWord) -> MfwBracket:
    """Braid-index bounds of the closure from the v-span of its HOMFLY-PT."""
    poly = homfly(word)
    d_minus, d_plus = poly.var_span("v")
    return MfwBracket(
        d_plus=d_plus,
        d_minus=d_minus,
        lower_bound=(d_plus - d_minus) // 2 + 1,
        upper_bound=word.strands,
    )


def alexander_specialization(p: LaurentPoly2) -> LaurentPoly1:
    """Collapse a knot's P(v, z) to its Alexander polynomial.

    Substitutes v = 1 and z = s - s^{-1}, rewrites the (single-parity)
    result in t = s^2 and normalizes.  Mixed exponent parity raises
    OddExponentError: the input was not the polynomial of a knot.
    """
    z_of: dict[int, int] = {}
    for (ev, ez), c in p.items():
        z_of[ez] = z_of.get(ez, 0) + c
    z_of = {e: c for e, c in z_of.items() if c}
    if not z_of:
        raise ValueError("specializes to zero at v = 1: not a knot polynomial")
    if min(z_of) < 0:
        raise ValueError("negative z-degree survives v = 1: not a knot polynomial")

    s_of: dict[int, int] = {}
    for b, c in z_of.items():
        for j in range(b + 1):
            e = b - 2 * j
            s_of[e] = s_of.get(e, 0) + c * comb(b, j) * (-1) ** j
    s_of = {e: c for e, c in s_of.items() if c}
    if not s_of:
        raise ValueError("specializes to zero: not a knot polynomial")

    parities = {e & 1 for e in s_of}
    if len(parities) > 1:
        raise OddExponentError("mixed s-exponent parity: not a knot polynomial")
    if parities == {1}:
        s_of = {e + 1: c for e, c in s_of.items()}
    return normalize_alexander(LaurentPoly1({e // 2: c for e, c in s_of.items()}, "t"))
