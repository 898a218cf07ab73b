"""
braidinv: exact knot invariants of braid closures.

Everything is exact integer Laurent arithmetic: Alexander polynomials via
the reduced Burau representation or via twist-family substitution, formal
semigroups of L-space knots, positive-braid genus, HOMFLY-PT polynomials
through a Hecke-algebra trace, and the Morton-Franks-Williams braid-index
bounds.  The ``oracles`` module (brute-force cross-checks) is intentionally
not re-exported; it exists for the test and verification suites.
"""

from .alexander import (
    BurauMatrix,
    FormalSemigroup,
    NotLSpaceFormError,
    addition_witness,
    alexander_poly,
    formal_semigroup,
    is_closed_under_addition,
    reduced_burau,
)
from .braid import (
    BraidWord,
    BraidSyntaxError,
    ClosureSummary,
    NotAKnotError,
    NotPositiveError,
    closure_summary,
    family_word,
    parse_braid,
    positive_braid_genus,
    render_braid,
)
from .homfly import (
    MfwBracket,
    OddExponentError,
    alexander_specialization,
    homfly,
    mfw_bracket,
)
from .laurent import (
    InexactDivisionError,
    LaurentPoly1,
    LaurentPoly2,
    exact_div,
    normalize_alexander,
    substitute_monomial,
)
from .report import FamilyVerdict, InvariantReport, invariant_report, verify_family
from .torres import (
    TwistFamilySpec,
    closed_form_kn_alexander,
    closed_form_kn_semigroup,
    kn_base_link,
    twist_alexander,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "ClosureSummary",
    "BraidSyntaxError",
    "NotAKnotError",
    "NotPositiveError",
    "parse_braid",
    "render_braid",
    "closure_summary",
    "positive_braid_genus",
    "family_word",
    "LaurentPoly1",
    "LaurentPoly2",
    "InexactDivisionError",
    "exact_div",
    "substitute_monomial",
    "normalize_alexander",
    "BurauMatrix",
    "FormalSemigroup",
    "NotLSpaceFormError",
    "reduced_burau",
    "alexander_poly",
    "formal_semigroup",
    "is_closed_under_addition",
    "addition_witness",
    "TwistFamilySpec",
    "kn_base_link",
    "twist_alexander",
    "closed_form_kn_alexander",
    "closed_form_kn_semigroup",
    "MfwBracket",
    "OddExponentError",
    "homfly",
    "mfw_bracket",
    "alexander_specialization",
    "InvariantReport",
    "FamilyVerdict",
    "invariant_report",
    "verify_family",
    "__version__",
]
