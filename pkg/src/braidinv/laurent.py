"""
Exact integer Laurent polynomials in one and two variables.

A polynomial is stored sparsely as a map from exponent (or exponent pair)
to nonzero integer coefficient; the zero polynomial is the empty map.
Coefficients are Python ints, so they never overflow.  Exponents are plain
machine integers guarded against runaway growth (|e| <= 2^30) rather than
silently wrapping.

Every operation returns a new polynomial; instances are immutable and safe
to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "InexactDivisionError",
    "exact_div",
    "substitute_monomial",
    "normalize_alexander",
]

# Exponents beyond this are almost certainly a bug upstream (the largest
# degrees in this package grow linearly with the twist parameter).
_EXP_LIMIT = 1 << 30


class InexactDivisionError(ArithmeticError):
    """A quotient that must be exact left a nonzero remainder."""


def _checked_exp(e: int) -> int:
    if abs(e) > _EXP_LIMIT:
        raise OverflowError(f"exponent {e} outside supported range [-2^30, 2^30]")
    return e


def _fmt_coeff_var(c: int, var_part: str, first: bool) -> str:
    """One display term, e.g. ``- 2 t^3`` (with separator) or ``-2 t^3`` (leading)."""
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    body = var_part if (mag == 1 and var_part) else (f"{mag} {var_part}".strip() or str(mag))
    if first:
        return body if c > 0 else f"-{body}"
    return f" {sign} {body}"


class LaurentPoly1:
    """An integer Laurent polynomial in a single variable (default ``t``).

    >>> t = LaurentPoly1.gen()
    >>> print((t - 1) * (t + 1))
    t^2 - 1
    >>> print(LaurentPoly1({-1: 1, 0: -1, 1: 1}))
    t - 1 + t^-1
    """

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs: dict[int, int] | Iterable[tuple[int, int]] = (), var: str = "t"):
        acc: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for e, c in items:
            if c:
                e = _checked_exp(e)
                acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "_coeffs", {e: c for e, c in acc.items() if c})
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly1 is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "t") -> LaurentPoly1:
        return cls((), var)

    @classmethod
    def one(cls, var: str = "t") -> LaurentPoly1:
        return cls({0: 1}, var)

    @classmethod
    def term(cls, coeff: int, exp: int, var: str = "t") -> LaurentPoly1:
        return cls({exp: coeff}, var)

    @classmethod
    def gen(cls, var: str = "t") -> LaurentPoly1:
        """The variable itself."""
        return cls({1: 1}, var)

    # -- inspection --------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        """Term list sorted by ascending exponent."""
        return sorted(self._coeffs.items())

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def degree_span(self) -> int:
        """max_exp - min_exp; 0 for monomials."""
        return self.max_exp - self.min_exp

    def evaluate(self, x: int) -> int:
        """Exact integer evaluation; requires x != 0 when negative exponents occur."""
        total = 0
        for e, c in self._coeffs.items():
            if e >= 0:
                total += c * x**e
            else:
                q, r = divmod(c, x ** (-e))
                if r:
                    raise ValueError(f"{self} does not evaluate to an integer at {x}")
                total += q
        return total

    # -- ring operations ---------------------------------------------------

    def _compat(self, other: LaurentPoly1) -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: LaurentPoly1 | int) -> LaurentPoly1:
        if isinstance(other, int):
            other = LaurentPoly1({0: other}, self.var)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        self._compat(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly1:
        return LaurentPoly1({e: -c for e, c in self._coeffs.items()}, self.var)

    def __sub__(self, other: LaurentPoly1 | int) -> LaurentPoly1:
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly1:
        return (-self) + other

    def __mul__(self, other: LaurentPoly1 | int) -> LaurentPoly1:
        if isinstance(other, int):
            return LaurentPoly1({e: c * other for e, c in self._coeffs.items()}, self.var)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        self._compat(other)
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly1(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly1:
        if n < 0:
            raise ValueError("only nonnegative powers are defined")
        result = LaurentPoly1.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, k: int) -> LaurentPoly1:
        """Multiply by ``var^k``."""
        return LaurentPoly1({e + k: c for e, c in self._coeffs.items()}, self.var)

    def compose_power(self, k: int) -> LaurentPoly1:
        """Substitute ``var -> var^k`` (k >= 1)."""
        if k < 1:
            raise ValueError("power substitution requires k >= 1")
        return LaurentPoly1({e * k: c for e, c in self._coeffs.items()}, self.var)

    def with_var(self, var: str) -> LaurentPoly1:
        return LaurentPoly1(self._coeffs, var)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self.var == other.var and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            var_part = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            parts.append(_fmt_coeff_var(c, var_part, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly1('{self}')"


class LaurentPoly2:
    """An integer Laurent polynomial in an ordered pair of variables.

    Exponent keys are pairs ``(e1, e2)`` matching the variable order.

    >>> x, y = LaurentPoly2.gens("x", "y")
    >>> print(x * y - y ** 2)
    x y - y^2
    """

    __slots__ = ("_coeffs", "vars")

    def __init__(
        self,
        coeffs: dict[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
        vars: tuple[str, str] = ("x", "y"),
    ):
        acc: dict[tuple[int, int], int] = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for (e1, e2), c in items:
            if c:
                key = (_checked_exp(e1), _checked_exp(e2))
                acc[key] = acc.get(key, 0) + c
        object.__setattr__(self, "_coeffs", {k: c for k, c in acc.items() if c})
        object.__setattr__(self, "vars", tuple(vars))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly2 is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple[str, str] = ("x", "y")) -> LaurentPoly2:
        return cls((), vars)

    @classmethod
    def one(cls, vars: tuple[str, str] = ("x", "y")) -> LaurentPoly2:
        return cls({(0, 0): 1}, vars)

    @classmethod
    def term(cls, coeff: int, e1: int, e2: int, vars: tuple[str, str] = ("x", "y")) -> LaurentPoly2:
        return cls({(e1, e2): coeff}, vars)

    @classmethod
    def gens(cls, v1: str = "x", v2: str = "y") -> tuple[LaurentPoly2, LaurentPoly2]:
        return cls({(1, 0): 1}, (v1, v2)), cls({(0, 1): 1}, (v1, v2))

    # -- inspection --------------------------------------------------------

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Term list sorted ascending by exponent pair."""
        return sorted(self._coeffs.items())

    def coeff(self, e1: int, e2: int) -> int:
        return self._coeffs.get((e1, e2), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def var_index(self, which: int | str) -> int:
        if isinstance(which, str):
            if which not in self.vars:
                raise ValueError(f"unknown variable {which!r}; have {self.vars}")
            return self.vars.index(which)
        if which not in (0, 1):
            raise ValueError("variable index must be 0 or 1")
        return which

    def var_span(self, which: int | str) -> tuple[int, int]:
        """(min, max) exponent of one variable over all terms."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        i = self.var_index(which)
        exps = [k[i] for k in self._coeffs]
        return min(exps), max(exps)

    def coefficient_poly(self, which: int | str, k: int) -> LaurentPoly1:
        """Coefficient of ``which^k`` as a polynomial in the other variable."""
        i = self.var_index(which)
        j = 1 - i
        out = {key[j]: c for key, c in self._coeffs.items() if key[i] == k}
        return LaurentPoly1(out, self.vars[j])

    def evaluate(self, x: int, y: int) -> int:
        total = 0
        for (e1, e2), c in self._coeffs.items():
            term = c
            for base, e in ((x, e1), (y, e2)):
                if e >= 0:
                    term *= base**e
                else:
                    q, r = divmod(term, base ** (-e))
                    if r:
                        raise ValueError("does not evaluate to an integer")
                    term = q
            total += term
        return total

    # -- ring operations ---------------------------------------------------

    def _compat(self, other: LaurentPoly2) -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: LaurentPoly2 | int) -> LaurentPoly2:
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other}, self.vars)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        self._compat(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out, self.vars)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2({k: -c for k, c in self._coeffs.items()}, self.vars)

    def __sub__(self, other: LaurentPoly2 | int) -> LaurentPoly2:
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly2:
        return (-self) + other

    def __mul__(self, other: LaurentPoly2 | int) -> LaurentPoly2:
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._coeffs.items()}, self.vars)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        self._compat(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, a2), c1 in self._coeffs.items():
            for (b1, b2), c2 in other._coeffs.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly2:
        if n < 0:
            raise ValueError("only nonnegative powers are defined")
        result = LaurentPoly2.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, k1: int, k2: int) -> LaurentPoly2:
        """Multiply by ``v1^k1 v2^k2``."""
        return LaurentPoly2({(e1 + k1, e2 + k2): c for (e1, e2), c in self._coeffs.items()}, self.vars)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({(0, 0): other} if other else {})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.vars == other.vars and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self._coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for (e1, e2), c in sorted(self._coeffs.items(), reverse=True):
            factors = []
            for var, e in zip(self.vars, (e1, e2)):
                if e == 1:
                    factors.append(var)
                elif e != 0:
                    factors.append(f"{var}^{e}")
            parts.append(_fmt_coeff_var(c, " ".join(factors), first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly2('{self}')"


def exact_div(numerator: LaurentPoly1, denominator: LaurentPoly1) -> LaurentPoly1:
    """Divide two one-variable Laurent polynomials, requiring a zero remainder.

    Raises InexactDivisionError when the denominator does not divide the
    numerator in the Laurent ring.

    >>> t = LaurentPoly1.gen()
    >>> print(exact_div(t**3 - 1, t - 1))
    t^2 + t + 1
    """
    numerator._compat(denominator)
    if denominator.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if numerator.is_zero():
        return LaurentPoly1.zero(numerator.var)

    # Work with ordinary polynomials (min exponent 0); units shift back at the end.
    shift = numerator.min_exp - denominator.min_exp
    rem = dict(numerator.shifted(-numerator.min_exp)._coeffs)
    den = denominator.shifted(-denominator.min_exp)
    dmax = den.max_exp
    dlead = den.coeff(dmax)
    quot: dict[int, int] = {}
    while rem:
        rmax = max(rem)
        if rmax < dmax:
            raise InexactDivisionError(f"{numerator} is not divisible by {denominator}")
        q, r = divmod(rem[rmax], dlead)
        if r:
            raise InexactDivisionError(f"{numerator} is not divisible by {denominator}")
        quot[rmax - dmax] = q
        for e, c in den._coeffs.items():
            k = e + rmax - dmax
            new = rem.get(k, 0) - q * c
            if new:
                rem[k] = new
            else:
                rem.pop(k, None)
    return LaurentPoly1(quot, numerator.var).shifted(shift)


def substitute_monomial(
    p: LaurentPoly2, which: int | str, image: LaurentPoly2 | int
) -> LaurentPoly2 | LaurentPoly1:
    """Substitute a unit monomial (or the constant 1) for one variable of ``p``.

    ``image`` is either the integer 1, collapsing the result to a one-variable
    polynomial in the remaining variable, or a LaurentPoly2 consisting of a
    single term with coefficient 1 (e.g. ``y -> y * x**3``), keeping both
    variables.  Exponents transform linearly, so the substitution is a ring
    homomorphism.
    """
    i = p.var_index(which)
    j = 1 - i
    if isinstance(image, int):
        if image != 1:
            raise ValueError("only the constant 1 may be substituted")
        out = {}
        for key, c in p._coeffs.items():
            e = key[j]
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out, p.vars[j])

    terms = image.items()
    if len(terms) != 1 or terms[0][1] != 1:
        raise ValueError("image must be a single monomial with coefficient 1")
    (m1, m2), _ = terms[0]
    out2: dict[tuple[int, int], int] = {}
    for key, c in p._coeffs.items():
        e_sub, e_keep = key[i], key[j]
        new = [0, 0]
        new[i] = m1 * e_sub if i == 0 else m2 * e_sub
        new[j] = e_keep + (m2 * e_sub if i == 0 else m1 * e_sub)
        k = (new[0], new[1])
        out2[k] = out2.get(k, 0) + c
    return LaurentPoly2(out2, p.vars)


def normalize_alexander(p: LaurentPoly1) -> LaurentPoly1:
    """Strip the ±var^k unit ambiguity from an Alexander-type polynomial.

    The representative has minimum exponent 0 and positive value at 1 (for a
    knot polynomial that value is exactly 1); if the polynomial vanishes at 1,
    the constant term is made positive instead.

    >>> t = LaurentPoly1.gen()
    >>> print(normalize_alexander(LaurentPoly1({1: 1, 0: -1, -1: 1})))
    t^2 - t + 1
    """
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    q = p.shifted(-p.min_exp)
    at_one = q.evaluate(1)
    sign = at_one if at_one else q.coeff(0)
    return -q if sign < 0 else q
