"""
Alexander polynomials of braid closures via the reduced Burau representation,
and the formal semigroup read off from the power-series expansion of Delta.

The reduced Burau image of sigma_i in B_n is the (n-1)x(n-1) identity matrix
except in column i, which picks up entries t (row i-1), -t (row i) and 1
(row i+1), in 1-indexed terms; the sign convention is pinned by requiring
sigma_1 in B_2 to map to the 1x1 matrix (-t).  For a word beta whose closure
is a knot,

    Delta(t) = det(rho(beta) - I) * (1 - t) / (1 - t^n)

up to units, and the division is always exact.  All arithmetic is exact
integer Laurent arithmetic; nothing here is numeric.

The formal semigroup of an L-space knot collects the exponents appearing in
Delta(t)/(1-t) as a power series: a finite subset of [0, 2g) plus every
integer >= 2g.  Expansion coefficients are prefix sums of Delta's
coefficients, so no series machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, NotAKnotError, closure_summary
from .laurent import LaurentPoly1, exact_div, normalize_alexander

__all__ = [
    "BurauMatrix",
    "FormalSemigroup",
    "NotLSpaceFormError",
    "reduced_burau",
    "alexander_poly",
    "formal_semigroup",
    "is_closed_under_addition",
    "addition_witness",
]


class NotLSpaceFormError(ValueError):
    """Delta/(1-t) has a coefficient outside {0,1}: not an L-space knot form."""


@dataclass(frozen=True)
class BurauMatrix:
    """Square matrix of one-variable Laurent polynomials (reduced Burau image)."""

    size: int
    entries: tuple[tuple[LaurentPoly1, ...], ...]

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        if self.size != other.size:
            raise ValueError("size mismatch")
        m = self.size
        rows = tuple(
            tuple(
                sum(
                    (self.entries[i][k] * other.entries[k][j] for k in range(m)),
                    LaurentPoly1.zero(),
                )
                for j in range(m)
            )
            for i in range(m)
        )
        return BurauMatrix(m, rows)

    @classmethod
    def identity(cls, m: int) -> BurauMatrix:
        one, zero = LaurentPoly1.one(), LaurentPoly1.zero()
        return cls(m, tuple(tuple(one if i == j else zero for j in range(m)) for i in range(m)))


def _burau_generator(n: int, letter: int) -> BurauMatrix:
    """Reduced Burau image of sigma_i (letter i > 0) or its inverse (i < 0) in B_n."""
    m = n - 1
    i = abs(letter)
    rows = [[LaurentPoly1.zero() for _ in range(m)] for _ in range(m)]
    for d in range(m):
        rows[d][d] = LaurentPoly1.one()
    col = i - 1
    if letter > 0:
        if i >= 2:
            rows[i - 2][col] = LaurentPoly1.term(1, 1)
        rows[i - 1][col] = LaurentPoly1.term(-1, 1)
        if i <= m - 1:
            rows[i][col] = LaurentPoly1.one()
    else:
        if i >= 2:
            rows[i - 2][col] = LaurentPoly1.one()
        rows[i - 1][col] = LaurentPoly1.term(-1, -1)
        if i <= m - 1:
            rows[i][col] = LaurentPoly1.term(1, -1)
    return BurauMatrix(m, tuple(tuple(row) for row in rows))


def reduced_burau(word: BraidWord) -> BurauMatrix:
    """Product of the reduced Burau images of the word's letters."""
    if word.strands < 2:
        raise ValueError("reduced Burau needs at least 2 strands")
    result = BurauMatrix.identity(word.strands - 1)
    for letter in word.letters:
        result = result @ _burau_generator(word.strands, letter)
    return result


def _det(entries: list[list[LaurentPoly1]]) -> LaurentPoly1:
    """Cofactor-expansion determinant; exact, fine for the small sizes used here."""
    m = len(entries)
    if m == 0:
        return LaurentPoly1.one()
    if m == 1:
        return entries[0][0]
    total = LaurentPoly1.zero()
    for r in range(m):
        lead = entries[r][0]
        if lead.is_zero():
            continue
        minor = [row[1:] for k, row in enumerate(entries) if k != r]
        cofactor = lead * _det(minor)
        total = total + cofactor if r % 2 == 0 else total - cofactor
    return total


def alexander_poly(word: BraidWord) -> LaurentPoly1:
    """Alexander polynomial of the knot closure of ``word``, normalized.

    The output has minimum exponent 0 and value 1 at t = 1.  Raises
    NotAKnotError when the closure has several components.
    """
    summary = closure_summary(word)
    if summary.component_count != 1:
        raise NotAKnotError(
            f"closure has {summary.component_count} components; Alexander polynomial "
            "is computed for knots only"
        )
    if word.strands == 1:
        return LaurentPoly1.one()
    n = word.strands
    burau = reduced_burau(word)
    one = LaurentPoly1.one()
    shifted = [
        [burau.entries[i][j] - one if i == j else burau.entries[i][j] for j in range(n - 1)]
        for i in range(n - 1)
    ]
    det = _det(shifted)
    t = LaurentPoly1.gen()
    # (1-t)/(1-t^n) correction, done as multiply-then-exact-divide; inexactness
    # here would be an internal fault, not bad user input.
    numerator = det * (one - t)
    quotient = exact_div(numerator, one - t**n)
    return normalize_alexander(quotient)


@dataclass(frozen=True)
class FormalSemigroup:
    """The set finite_part ∪ {s : s >= threshold} of nonnegative integers.

    For an L-space knot of genus g the threshold is 2g and finite_part lists
    the members below it.  The unknot is the degenerate case threshold 0 with
    empty finite part (every s >= 0 is a member).
    """

    threshold: int
    finite_part: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(self.finite_part))
        object.__setattr__(self, "finite_part", members)
        if any(s < 0 or s >= self.threshold for s in members):
            raise ValueError("finite part must lie in [0, threshold)")
        if len(set(members)) != len(members):
            raise ValueError("finite part has repeated members")

    def __contains__(self, s: int) -> bool:
        return s >= self.threshold or s in self.finite_part

    def gaps(self) -> tuple[int, ...]:
        """The nonnegative integers missing from the set."""
        return tuple(s for s in range(self.threshold) if s not in self.finite_part)


def formal_semigroup(delta: LaurentPoly1) -> FormalSemigroup:
    """Exponent set of the power-series expansion of ``delta``/(1-t).

    ``delta`` must be normalized (minimum exponent 0, value 1 at t = 1) with
    even degree 2g.  Raises NotLSpaceFormError when some expansion
    coefficient below 2g is neither 0 nor 1; beyond 2g the coefficients all
    equal delta(1) = 1, so the finite check is complete.
    """
    if delta.is_zero() or delta.min_exp != 0:
        raise ValueError("delta must be normalized with minimum exponent 0")
    if delta.evaluate(1) != 1:
        raise ValueError("delta must take value 1 at t = 1")
    two_g = delta.max_exp
    if two_g % 2:
        raise ValueError(f"degree {two_g} is odd; expected an even degree 2g")

    members = []
    prefix = 0
    for s in range(two_g):
        prefix += delta.coeff(s)
        if prefix not in (0, 1):
            raise NotLSpaceFormError(
                f"series coefficient {prefix} at exponent {s}: "
                "not the Alexander polynomial of an L-space knot"
            )
        if prefix == 1:
            members.append(s)
    return FormalSemigroup(two_g, tuple(members))


def addition_witness(s: FormalSemigroup) -> tuple[int, int] | None:
    """A pair of members whose sum is missing, or None when the set is closed.

    Only pairs from the finite part matter: any sum reaching the threshold is
    automatically a member.
    """
    for i, a in enumerate(s.finite_part):
        for b in s.finite_part[i:]:
            if a + b not in s:
                return (a, b)
    return None


def is_closed_under_addition(s: FormalSemigroup) -> bool:
    """Whether the set is a genuine numerical semigroup (closed under +)."""
    return addition_witness(s) is None
