"""Transport-shaped operations shared by the HTTP routes and the
command line.

Every function takes and returns plain JSON-ready values, so the
command line produces byte-identical output whether it computes locally
or asks a server.  Math endpoints refuse invalid data by raising
InvalidRepresentation, which carries the full validation report.
"""

from __future__ import annotations

from fractions import Fraction

from ..classify import ValidationReport, enumerate_sp, validate_sp
from ..core import CuspidalLine, GroupFamily, SPRep, rational_str
from ..documents import document_to_rep, langlands_to_document, rep_to_document
from ..dual import dual
from ..jacquet import mu_star
from ..render import langlands_latex, langlands_text, term_latex, term_text
from ..verify import SuiteConfig, SuiteReport, run_suite


class InvalidRepresentation(Exception):
    """A well-formed document that violates the classification."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("representation data failed validation")


def report_to_dict(report: ValidationReport) -> dict:
    return {
        "ok": report.ok,
        "violations": [
            {"code": v.code, "message": v.message, "where": v.where}
            for v in report.violations
        ],
        "warnings": list(report.warnings),
    }


def _valid_rep(doc: dict) -> SPRep:
    rep = document_to_rep(doc)
    report = validate_sp(rep)
    if not report.ok:
        raise InvalidRepresentation(report)
    return rep


def validate_payload(doc: dict) -> dict:
    return report_to_dict(validate_sp(document_to_rep(doc)))


def dual_payload(doc: dict) -> dict:
    rep = _valid_rep(doc)
    data = dual(rep)
    out = langlands_to_document(data)
    out["text"] = langlands_text(data)
    out["latex"] = langlands_latex(data)
    return out


def mu_star_payload(doc: dict) -> dict:
    rep = _valid_rep(doc)
    terms = mu_star(rep)
    return {
        "count": len(terms),
        "terms": [
            {
                "gl": [
                    {
                        "rho": s.rho_label,
                        "lo": rational_str(s.lo),
                        "hi": rational_str(s.hi),
                    }
                    for s in term.gl_part
                ],
                "sp": rep_to_document(term.sp_part),
                "multiplicity": term.multiplicity,
                "text": term_text(term),
                "latex": term_latex(term),
            }
            for term in terms
        ],
    }


def enumerate_payload(
    alpha: Fraction,
    max_offset: int,
    rho: str,
    group: "str | GroupFamily",
    cuspidal_support: str,
    with_duals: bool,
) -> dict:
    family = GroupFamily.coerce(group)
    line = CuspidalLine(rho, alpha)
    tuples = enumerate_sp(line, alpha - 1 + max_offset)
    out = {
        "alpha": rational_str(alpha),
        "count": len(tuples),
        "tuples": [[rational_str(a) for a in t.entries] for t in tuples],
        "duals": None,
    }
    if with_duals:
        duals = []
        for t in tuples:
            rep = SPRep(family, (t,), cuspidal_support)
            data = dual(rep)
            entry = langlands_to_document(data)
            duals.append(
                {
                    "tuple": [rational_str(a) for a in t.entries],
                    "segments": entry["segments"],
                    "text": langlands_text(data),
                    "latex": langlands_latex(data),
                }
            )
        out["duals"] = duals
    return out


def suite_report_to_dict(report: SuiteReport) -> dict:
    return {
        "ok": report.ok,
        "wall_time": report.wall_time,
        "tuples_enumerated": report.tuples_enumerated,
        "samples_run": report.samples_run,
        "checks": [
            {
                "name": c.name,
                "checked": c.checked,
                "failures": c.failures,
                "counterexamples": [
                    {
                        "check": x.check,
                        "input": x.input_document,
                        "expected": x.expected,
                        "actual": x.actual,
                    }
                    for x in c.counterexamples
                ],
            }
            for c in report.checks
        ],
    }


def verify_payload(config: SuiteConfig) -> dict:
    return suite_report_to_dict(run_suite(config))
