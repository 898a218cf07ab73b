"""
Alexander polynomials of the twist family K_n from the two-component base
link, plus closed-form evaluators for the family's polynomial and formal
semigroup.

Untwisting K_n back to K_0 identifies the link exteriors, so the
two-variable Alexander polynomial of K_n together with its twisting circle
is the base polynomial with y replaced by y*x^(w*n), where w = 3 is the
linking number of the circle with the knot.  Setting y = 1 and dividing by
(x^w - 1)/(x - 1) (the Torres relation between a two-component link
polynomial and the polynomial of one component) then yields Delta_{K_n}.
That division is exact whenever the base polynomial is genuinely the
polynomial of such a link; inexactness signals corrupt input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import FormalSemigroup
from .laurent import (
    LaurentPoly1,
    LaurentPoly2,
    exact_div,
    normalize_alexander,
    substitute_monomial,
)

__all__ = [
    "TwistFamilySpec",
    "kn_base_link",
    "twist_alexander",
    "closed_form_kn_alexander",
    "closed_form_kn_semigroup",
]


@dataclass(frozen=True)
class TwistFamilySpec:
    """A two-component base link driving a twist family of knots.

    ``base_poly`` is the two-variable Alexander polynomial of the link
    (knot variable first, circle variable second) and ``winding`` the
    linking number of the two components; n twists substitute
    y -> y * x^(winding*n).
    """

    base_poly: LaurentPoly2
    winding: int

    def __post_init__(self):
        if self.winding <= 1:
            raise ValueError("twist families here require linking number > 1")
        if self.base_poly.is_zero():
            raise ValueError("base polynomial must be nonzero")


def kn_base_link() -> TwistFamilySpec:
    """The base link of the K_n family: K_0 with its twisting circle.

    Its two-variable Alexander polynomial is
    (x^8-x^5+x^4) y^2 + (x^5-x^4+x^3) y + (x^4-x^3+1), with linking number 3.
    """
    base = LaurentPoly2(
        {
            (8, 2): 1,
            (5, 2): -1,
            (4, 2): 1,
            (5, 1): 1,
            (4, 1): -1,
            (3, 1): 1,
            (4, 0): 1,
            (3, 0): -1,
            (0, 0): 1,
        },
        ("x", "y"),
    )
    return TwistFamilySpec(base, 3)


def twist_alexander(spec: TwistFamilySpec, n: int) -> LaurentPoly1:
    """Alexander polynomial of the n-twist member of the family, normalized.

    Substitutes y -> y*x^(w*n), sets y = 1, multiplies by (x-1) and divides
    exactly by (x^w - 1); InexactDivisionError propagates when the base
    polynomial violates the Torres relation.
    """
    if n < 0:
        raise ValueError("twist parameter must be nonnegative")
    w = spec.winding
    twisted = substitute_monomial(spec.base_poly, 1, LaurentPoly2.term(1, w * n, 1, spec.base_poly.vars))
    collapsed = substitute_monomial(twisted, 1, 1)
    x = LaurentPoly1.gen(collapsed.var)
    one = LaurentPoly1.one(collapsed.var)
    quotient = exact_div(collapsed * (x - one), x**w - one)
    return normalize_alexander(quotient).with_var("t")


def _torus_alexander(p: int, q: int) -> LaurentPoly1:
    # (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), the torus-knot polynomial.
    t = LaurentPoly1.gen()
    one = LaurentPoly1.one()
    num = (t ** (p * q) - one) * (t - one)
    return normalize_alexander(exact_div(num, (t**p - one) * (t**q - one)))


def closed_form_kn_alexander(n: int) -> LaurentPoly1:
    """Delta_{K_n} assembled term by term from its closed form.

    For n >= 1:

        (t^(6n+6) - t^(6n+5)) + sum_{i<n} (t^(3n+3i+5) - t^(3n+3i+4))
        + t^(3n+3) - sum_{i<n} (t^(3i+5) - t^(3i+4)) - t + 1.

    n = 0 falls outside the sums and delegates to the torus-knot polynomial
    of T(3,4), which K_0 is.
    """
    if n < 0:
        raise ValueError("family parameter must be nonnegative")
    if n == 0:
        return _torus_alexander(3, 4)
    coeffs: dict[int, int] = {6 * n + 6: 1, 6 * n + 5: -1, 3 * n + 3: 1, 1: -1, 0: 1}
    for i in range(n):
        coeffs[3 * n + 3 * i + 5] = coeffs.get(3 * n + 3 * i + 5, 0) + 1
        coeffs[3 * n + 3 * i + 4] = coeffs.get(3 * n + 3 * i + 4, 0) - 1
        coeffs[3 * i + 5] = coeffs.get(3 * i + 5, 0) - 1
        coeffs[3 * i + 4] = coeffs.get(3 * i + 4, 0) + 1
    return LaurentPoly1(coeffs)


def closed_form_kn_semigroup(n: int) -> FormalSemigroup:
    """The formal semigroup of K_n, n >= 1, assembled without any expansion.

    Members below the threshold 6n+6: 0; the arithmetic run 4, 7, ..., 3n+1;
    the isolated 3n+3; the pairs 3n+3i+5, 3n+3i+6 for 0 <= i <= n-2 (empty
    when n = 1); and the top block 6n+2, 6n+3, 6n+4.
    """
    if n < 1:
        raise ValueError("the semigroup closed form requires n >= 1")
    members = [0]
    members += [3 * i + 4 for i in range(n)]          # 4, 7, ..., 3n+1
    members += [3 * n + 3]
    for i in range(n - 1):                            # pairs skipping every third
        members += [3 * n + 3 * i + 5, 3 * n + 3 * i + 6]
    members += [6 * n + 2, 6 * n + 3, 6 * n + 4]
    return FormalSemigroup(6 * n + 6, tuple(members))
