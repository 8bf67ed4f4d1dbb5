"""Jacquet-module expansion for strongly positive data.

For a single line (a_1, ..., a_k) the expansion has exactly one term per
admissible tuple (b_1, ..., b_k) with

    alpha - k + i - 1 <= b_i <= a_i,  b_1 < b_2 < ... < b_k,

all on the lattice alpha + Z.  The term's general-linear factor is the
product of the nonempty segments [b_i + 1, a_i] in canonical order, and
its strongly positive factor is the datum of the b-tuple.  Every
multiplicity is 1; the b-tuple b = a gives the identity term 1 (x) pi.

For several lines the expansion is the product of the per-line
expansions: one term per choice of b-tuple on each line.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .classify import require_valid, require_valid_tuple
from .core import (
    GroupFamily,
    Segment,
    SegmentLike,
    SPRep,
    SPTuple,
    segment,
    sort_segments,
)


@dataclass(frozen=True)
class MuStarTerm:
    """One term gl (x) sp of the expansion; gl is a canonically ordered
    tuple of nonempty segments, the empty tuple meaning the factor 1."""

    gl_part: tuple[Segment, ...]
    sp_part: SPRep
    multiplicity: int = 1


def _b_tuples(t: SPTuple) -> list[tuple[Fraction, ...]]:
    """All admissible b-tuples below t, in lexicographic order.

    Strict increase prunes the recursion: b_i starts at
    max(empty floor, b_{i-1} + 1).
    """
    line = t.line
    a = t.entries
    out: list[tuple[Fraction, ...]] = []

    def extend(prefix: tuple[Fraction, ...], i: int) -> None:
        if i > line.k:
            out.append(prefix)
            return
        lo = line.empty_value(i)
        if prefix and prefix[-1] + 1 > lo:
            lo = prefix[-1] + 1
        b = lo
        while b <= a[i - 1]:
            extend(prefix + (b,), i + 1)
            b += 1

    extend((), 1)
    return out


def term_for_b(
    t: SPTuple,
    b: tuple[Fraction, ...],
    cuspidal_support_label: str,
    family: GroupFamily,
    central_character_label: "str | None" = None,
) -> "MuStarTerm | None":
    """The term a given b-tuple contributes, or None when b is not
    admissible below t."""
    line = t.line
    if len(b) != line.k:
        raise ValueError(f"b-tuple has {len(b)} entries but k = {line.k}")
    segs: list[Segment] = []
    prev: "Fraction | None" = None
    for i, (bi, ai) in enumerate(zip(b, t.entries), start=1):
        if (bi - line.alpha).denominator != 1:
            return None
        if bi < line.empty_value(i) or bi > ai:
            return None
        if prev is not None and bi <= prev:
            return None
        prev = bi
        s: SegmentLike = segment(line.rho_label, bi + 1, ai)
        if isinstance(s, Segment):
            segs.append(s)
    sp = SPRep(family, (SPTuple(line, b),), cuspidal_support_label, central_character_label)
    return MuStarTerm(sort_segments(segs), sp)


def mu_star_line(
    t: SPTuple,
    cuspidal_support_label: str,
    family: GroupFamily,
    central_character_label: "str | None" = None,
) -> list[MuStarTerm]:
    """Expansion of a single-line datum, in lexicographic b-tuple order."""
    require_valid_tuple(t)
    terms = []
    for b in _b_tuples(t):
        term = term_for_b(t, b, cuspidal_support_label, family, central_character_label)
        assert term is not None
        terms.append(term)
    return terms


def mu_star(rep: SPRep) -> list[MuStarTerm]:
    """Expansion of a datum with any number of lines.

    Terms are ordered lexicographically by the lines' b-tuples, first
    line outermost.  A datum with no lines is cuspidal: the expansion is
    the single identity term.
    """
    require_valid(rep)
    if not rep.lines:
        return [MuStarTerm((), rep)]
    per_line = [_b_tuples(t) for t in rep.lines]
    terms: list[MuStarTerm] = []
    for choice in itertools.product(*per_line):
        gl: list[Segment] = []
        new_lines: list[SPTuple] = []
        for t, b in zip(rep.lines, choice):
            part = term_for_b(
                t, b, rep.cuspidal_support_label, rep.family, rep.central_character_label
            )
            assert part is not None
            gl.extend(part.gl_part)
            new_lines.extend(part.sp_part.lines)
        sp = SPRep(
            rep.family,
            tuple(new_lines),
            rep.cuspidal_support_label,
            rep.central_character_label,
        )
        terms.append(MuStarTerm(sort_segments(gl), sp))
    return terms
