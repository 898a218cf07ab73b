"""
Per-knot invariant reports and whole-family verification sweeps.

A report gathers every invariant this package computes for one braid word,
degrading per field: when a field's preconditions fail (non-knot closure,
negative letters, not an L-space form, HOMFLY not requested) the field is
absent and a machine-readable reason is recorded instead, so report
assembly itself never fails.

Reports serialize to a stable JSON shape: polynomials are
``{"vars": [...], "terms": [[exponents, coeff], ...]}`` with terms sorted
ascending by exponent, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .alexander import (
    FormalSemigroup,
    NotLSpaceFormError,
    addition_witness,
    alexander_poly,
    formal_semigroup,
)
from .braid import (
    BraidWord,
    NotAKnotError,
    NotPositiveError,
    closure_summary,
    family_word,
    positive_braid_genus,
    render_braid,
)
from .homfly import MfwBracket, homfly, mfw_bracket
from .laurent import LaurentPoly1, LaurentPoly2
from .torres import closed_form_kn_alexander, closed_form_kn_semigroup, kn_base_link, twist_alexander

__all__ = [
    "InvariantReport",
    "FamilyVerdict",
    "invariant_report",
    "verify_family",
    "poly1_to_json",
    "poly2_to_json",
]

# Reason codes for absent report fields.
NOT_A_KNOT = "NotAKnot"
NOT_POSITIVE = "NotPositive"
NOT_LSPACE_FORM = "NotLSpaceForm"
NOT_REQUESTED = "NotRequested"
TOO_MANY_STRANDS = "TooManyStrands"


def poly1_to_json(p: LaurentPoly1) -> dict:
    return {"vars": [p.var], "terms": [[e, c] for e, c in p.items()]}


def poly2_to_json(p: LaurentPoly2) -> dict:
    return {"vars": list(p.vars), "terms": [[[e1, e2], c] for (e1, e2), c in p.items()]}


@dataclass(frozen=True)
class InvariantReport:
    """Aggregated invariants of one braid closure; absent fields carry reasons."""

    braid: str
    strands: int
    writhe: int
    components: int
    genus: int | None
    alexander: LaurentPoly1 | None
    formal_semigroup: FormalSemigroup | None
    semigroup_closed: bool | None
    semigroup_witness: tuple[int, int] | None
    homfly: LaurentPoly2 | None
    mfw: MfwBracket | None
    skipped: dict[str, str]

    def to_dict(self) -> dict:
        out: dict = {
            "braid": self.braid,
            "strands": self.strands,
            "writhe": self.writhe,
            "components": self.components,
        }
        if self.genus is not None:
            out["genus"] = self.genus
        if self.alexander is not None:
            out["alexander"] = poly1_to_json(self.alexander)
        if self.formal_semigroup is not None:
            out["formal_semigroup"] = {
                "finite_part": list(self.formal_semigroup.finite_part),
                "threshold": self.formal_semigroup.threshold,
            }
        if self.semigroup_closed is not None:
            out["semigroup_closed"] = self.semigroup_closed
        if self.semigroup_witness is not None:
            out["semigroup_witness"] = list(self.semigroup_witness)
        if self.homfly is not None:
            out["homfly"] = poly2_to_json(self.homfly)
        if self.mfw is not None:
            out["mfw"] = {
                "d_plus": self.mfw.d_plus,
                "d_minus": self.mfw.d_minus,
                "lower_bound": self.mfw.lower_bound,
                "upper_bound": self.mfw.upper_bound,
            }
        out["skipped"] = {k: self.skipped[k] for k in sorted(self.skipped)}
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def invariant_report(word: BraidWord, include_homfly: bool = False) -> InvariantReport:
    """Compute every available invariant of ``word``'s closure.

    HOMFLY-PT (and the braid-index bracket riding on it) is opt-in because
    it dominates runtime on long words; everything else is always computed
    when its preconditions hold.
    """
    summary = closure_summary(word)
    skipped: dict[str, str] = {}

    genus: int | None = None
    try:
        genus = positive_braid_genus(word)
    except NotPositiveError:
        skipped["genus"] = NOT_POSITIVE
    except NotAKnotError:
        skipped["genus"] = NOT_A_KNOT

    delta: LaurentPoly1 | None = None
    if summary.component_count == 1:
        delta = alexander_poly(word)
    else:
        skipped["alexander"] = NOT_A_KNOT

    semigroup: FormalSemigroup | None = None
    closed: bool | None = None
    witness: tuple[int, int] | None = None
    if delta is None:
        skipped["formal_semigroup"] = NOT_A_KNOT
    else:
        try:
            semigroup = formal_semigroup(delta)
            witness = addition_witness(semigroup)
            closed = witness is None
        except NotLSpaceFormError:
            skipped["formal_semigroup"] = NOT_LSPACE_FORM

    homfly_poly: LaurentPoly2 | None = None
    bracket: MfwBracket | None = None
    if include_homfly:
        try:
            homfly_poly = homfly(word)
            d_minus, d_plus = homfly_poly.var_span("v")
            bracket = MfwBracket(d_plus, d_minus, (d_plus - d_minus) // 2 + 1, word.strands)
        except ValueError:
            skipped["homfly"] = TOO_MANY_STRANDS
    else:
        skipped["homfly"] = NOT_REQUESTED

    return InvariantReport(
        braid=render_braid(word),
        strands=word.strands,
        writhe=summary.writhe,
        components=summary.component_count,
        genus=genus,
        alexander=delta,
        formal_semigroup=semigroup,
        semigroup_closed=closed,
        semigroup_witness=witness,
        homfly=homfly_poly,
        mfw=bracket,
        skipped=skipped,
    )


@dataclass(frozen=True)
class FamilyVerdict:
    """Machine-checked agreement record for one family member."""

    family: str
    n: int
    genus: int
    route_agreement: bool
    semigroup_agreement: bool
    semigroup_closed: bool
    genus_ok: bool
    mfw_lower: int | None

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "genus": self.genus,
            "route_agreement": self.route_agreement,
            "semigroup_agreement": self.semigroup_agreement,
            "semigroup_closed": self.semigroup_closed,
            "genus_ok": self.genus_ok,
            "mfw_lower": self.mfw_lower,
        }


def verify_family(
    family: str, n_from: int, n_to: int, include_homfly: bool = False
) -> list[FamilyVerdict]:
    """Check every computable route agreement for family members n_from..n_to.

    For the Kn family the Burau-matrix route, the twist-substitution route
    and (for n >= 1) the closed form are compared exactly, as are both
    semigroup routes; families A and B only have the matrix route, so their
    agreement flags are vacuously true.  All comparisons are exact.
    """
    if n_from > n_to:
        raise ValueError(f"empty range: {n_from} > {n_to}")
    verdicts = []
    base = kn_base_link() if family == "Kn" else None
    for n in range(n_from, n_to + 1):
        word = family_word(family, n)
        delta = alexander_poly(word)
        genus = positive_braid_genus(word)
        semigroup = formal_semigroup(delta)

        if family == "Kn":
            routes = [twist_alexander(base, n)]
            if n >= 1:
                routes.append(closed_form_kn_alexander(n))
            route_agreement = all(r == delta for r in routes)
            semigroup_agreement = (
                closed_form_kn_semigroup(n) == semigroup if n >= 1 else True
            )
        else:
            route_agreement = True
            semigroup_agreement = True

        verdicts.append(
            FamilyVerdict(
                family=family,
                n=n,
                genus=genus,
                route_agreement=route_agreement,
                semigroup_agreement=semigroup_agreement,
                semigroup_closed=addition_witness(semigroup) is None,
                genus_ok=2 * genus == delta.degree_span(),
                mfw_lower=mfw_bracket(word).lower_bound if include_homfly else None,
            )
        )
    return verdicts
