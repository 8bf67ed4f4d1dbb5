"""Text and LaTeX rendering of data, duals, and expansion terms.

Text forms are stable one-liners meant for terminals and diffs:

    (-1/2, 3/2)                                  tuple
    d([-3/2,-1/2];rho1)                          segment
    L( d([-3/2,-1/2];rho1) x sigma_cusp )        Langlands datum
    sigma(rho1:(-1/2, 3/2))                      strongly positive factor
    d([1/2,5/2];rho1) (x) sigma(rho1:(-1/2))     expansion term

LaTeX forms follow the usual conventions: segments as
\\delta([\\nu^{-3/2}\\rho_1, \\nu^{-1/2}\\rho_1]), products joined by
\\times, the final factor attached with \\rtimes.  Labels render
greek-aware: rho1 becomes \\rho_1, sigma_cusp becomes \\sigma_{cusp},
anything unrecognized is wrapped in \\mathrm.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .core import LanglandsData, Segment, SPRep, entries_str, rational_str
from .jacquet import MuStarTerm

_GREEK = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota", "kappa", "lambda", "mu", "nu", "xi", "pi", "rho", "sigma",
    "tau", "upsilon", "phi", "chi", "psi", "omega",
}


def tuple_text(entries: Iterable[Fraction]) -> str:
    return entries_str(entries)


def segment_text(s: Segment) -> str:
    return f"d([{rational_str(s.lo)},{rational_str(s.hi)}];{s.rho_label})"


def sp_text(rep: SPRep) -> str:
    """Strongly positive factor: the bare support label for a datum with
    no lines, otherwise the per-line tuples."""
    if not rep.lines:
        return rep.cuspidal_support_label
    body = "; ".join(f"{t.line.rho_label}:{tuple_text(t.entries)}" for t in rep.lines)
    return f"sigma({body})"


def langlands_text(data: LanglandsData) -> str:
    if not data.segments:
        return data.cuspidal_support_label
    factors = [segment_text(s) for s in data.segments]
    return "L( " + " x ".join([*factors, data.cuspidal_support_label]) + " )"


def term_text(term: MuStarTerm) -> str:
    gl = " x ".join(segment_text(s) for s in term.gl_part) or "1"
    return f"{gl} (x) {sp_text(term.sp_part)}"


def _subscript(sub: str) -> str:
    escaped = sub.replace("_", r"\_")
    return f"_{escaped}" if len(escaped) == 1 else f"_{{{escaped}}}"


def label_latex(label: str) -> str:
    """Greek-aware label: base name plus optional digit or underscore
    subscript; single-character subscripts stay unbraced."""
    m = re.fullmatch(r"([A-Za-z]+?)(\d+)", label) or re.fullmatch(
        r"([A-Za-z]+)_(\w+)", label
    )
    if m:
        base, sub = m.group(1), _subscript(m.group(2))
    else:
        base, sub = label, ""
    if base in _GREEK:
        return f"\\{base}{sub}"
    safe = base.replace("_", r"\_")
    return f"\\mathrm{{{safe}}}{sub}"


def _twist_latex(exponent: Fraction, label: str) -> str:
    return f"\\nu^{{{rational_str(exponent)}}}{label_latex(label)}"


def segment_latex(s: Segment) -> str:
    lo = _twist_latex(s.lo, s.rho_label)
    if s.lo == s.hi:
        return f"\\delta([{lo}])"
    return f"\\delta([{lo}, {_twist_latex(s.hi, s.rho_label)}])"


def langlands_latex(data: LanglandsData) -> str:
    support = label_latex(data.cuspidal_support_label)
    if not data.segments:
        return support
    product = " \\times ".join(segment_latex(s) for s in data.segments)
    return f"{product} \\rtimes {support}"


def sp_latex(rep: SPRep) -> str:
    if not rep.lines:
        return label_latex(rep.cuspidal_support_label)
    body = "; ".join(
        f"{label_latex(t.line.rho_label)}\\colon {tuple_text(t.entries)}"
        for t in rep.lines
    )
    return f"\\sigma({body})"


def term_latex(term: MuStarTerm) -> str:
    gl = " \\times ".join(segment_latex(s) for s in term.gl_part) or "1"
    return f"{gl} \\otimes {sp_latex(term.sp_part)}"
