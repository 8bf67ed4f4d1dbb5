"""Classification-tuple validation and enumeration.

A candidate tuple (a_1, ..., a_k) over a line with reducibility alpha is
admissible when:

* the length equals k = ceil(alpha),
* the entries strictly increase,
* a_1 > -1,
* every a_i lies on the lattice alpha + Z,
* every a_i >= alpha - k + i - 1 (the empty-segment floor).

The floor constraint is implied by the first four but is reported as its
own violation so a caller sees every broken constraint, not just the
first.  Validation never raises on bad data; it returns a report.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    CuspidalLine,
    Segment,
    SegmentLike,
    SPRep,
    SPTuple,
    as_rational,
    entries_str,
    lattice_range,
    segment,
)

ALPHA_NEGATIVE = "alpha-negative"
LENGTH_MISMATCH = "length-mismatch"
NOT_INCREASING = "not-increasing"
FIRST_ENTRY_LOW = "first-entry-low"
OFF_LATTICE = "off-lattice"
BELOW_EMPTY_FLOOR = "below-empty-floor"
DUPLICATE_RHO = "duplicate-rho"


@dataclass(frozen=True)
class Violation:
    """One broken constraint: a stable code, a human message, and the
    cuspidal label it occurred on (empty for whole-datum violations)."""

    code: str
    message: str
    where: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validation pass; ok exactly when no violations.

    Warnings are advisory only and never affect ok.
    """

    violations: tuple[Violation, ...]
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class ValidationError(ValueError):
    """Raised by require_* helpers; carries the full report."""

    def __init__(self, report: ValidationReport):
        self.report = report
        lines = [f"[{v.code}] {v.message}" for v in report.violations]
        super().__init__("; ".join(lines) or "validation failed")


def validate_tuple(t: SPTuple) -> ValidationReport:
    """Check one line's tuple against the classification constraints.

    Each constraint kind is reported at most once per tuple.
    """
    line = t.line
    where = line.rho_label
    violations: list[Violation] = []

    if line.alpha < 0:
        violations.append(
            Violation(ALPHA_NEGATIVE, f"alpha = {line.alpha} < 0", where)
        )
        return ValidationReport(tuple(violations))

    k = line.k
    a = t.entries
    if len(a) != k:
        violations.append(
            Violation(
                LENGTH_MISMATCH,
                f"tuple has {len(a)} entries but ceil(alpha) = {k}",
                where,
            )
        )
        return ValidationReport(tuple(violations))

    if any(x >= y for x, y in zip(a, a[1:])):
        violations.append(
            Violation(
                NOT_INCREASING, f"entries {entries_str(a)} are not strictly increasing", where
            )
        )
    if a and a[0] <= -1:
        violations.append(
            Violation(FIRST_ENTRY_LOW, f"a_1 = {a[0]} is not > -1", where)
        )
    off = [x for x in a if (x - line.alpha).denominator != 1]
    if off:
        violations.append(
            Violation(
                OFF_LATTICE,
                f"entries {entries_str(off)} are not in alpha + Z (alpha = {line.alpha})",
                where,
            )
        )
    low = [
        (i, x)
        for i, x in enumerate(a, start=1)
        if (x - line.alpha).denominator == 1 and x < line.empty_value(i)
    ]
    if low:
        i, x = low[0]
        violations.append(
            Violation(
                BELOW_EMPTY_FLOOR,
                f"a_{i} = {x} is below the empty-segment floor {line.empty_value(i)}",
                where,
            )
        )
    return ValidationReport(tuple(violations))


def validate_sp(rep: SPRep) -> ValidationReport:
    """Validate a whole datum: every line's tuple, plus pairwise distinct
    cuspidal labels across lines."""
    violations: list[Violation] = []
    warnings: list[str] = []
    seen = Counter(t.line.rho_label for t in rep.lines)
    for label, n in sorted(seen.items()):
        if n > 1:
            violations.append(
                Violation(
                    DUPLICATE_RHO,
                    f"cuspidal label {label!r} appears on {n} lines",
                    label,
                )
            )
    for t in rep.lines:
        sub = validate_tuple(t)
        violations.extend(sub.violations)
        warnings.extend(sub.warnings)
    return ValidationReport(tuple(violations), tuple(warnings))


def require_valid_tuple(t: SPTuple) -> SPTuple:
    report = validate_tuple(t)
    if not report.ok:
        raise ValidationError(report)
    return t


def require_valid(rep: SPRep) -> SPRep:
    report = validate_sp(rep)
    if not report.ok:
        raise ValidationError(report)
    return rep


def k_prime(t: SPTuple) -> "int | None":
    """Index of the first nonempty classification segment, or None when
    every segment is empty."""
    line = t.line
    for i, a in enumerate(t.entries, start=1):
        if a >= line.segment_start(i):
            return i
    return None


def inducing_segments(t: SPTuple) -> tuple[Segment, ...]:
    """The nonempty classification segments [alpha-k+i, a_i], in index order."""
    line = t.line
    out: list[Segment] = []
    for i, a in enumerate(t.entries, start=1):
        s: SegmentLike = segment(line.rho_label, line.segment_start(i), a)
        if isinstance(s, Segment):
            out.append(s)
    return tuple(out)


def tuple_support(t: SPTuple) -> Counter:
    """Multiset of exponents covered by the line's inducing segments."""
    c: Counter = Counter()
    for s in inducing_segments(t):
        c.update(s.exponents())
    return c


def cuspidal_support(rep: SPRep) -> dict[str, Counter]:
    """Exponent multiset per cuspidal label; every line present, even
    when its multiset is empty."""
    return {t.line.rho_label: tuple_support(t) for t in rep.lines}


def enumerate_sp(line: CuspidalLine, max_entry) -> list[SPTuple]:
    """All admissible tuples on one line with a_k <= max_entry, in
    lexicographic order.

    For k = 0 the single admissible tuple is empty, whatever the bound.
    max_entry must lie on alpha + Z and be >= alpha - 1 (the bound must
    admit at least the all-empty tuple).
    """
    max_entry = as_rational(max_entry)
    if line.alpha < 0:
        raise ValueError(f"alpha = {line.alpha} < 0")
    k = line.k
    if k == 0:
        return [SPTuple(line, ())]
    if (max_entry - line.alpha).denominator != 1:
        raise ValueError(
            f"max_entry = {max_entry} is not on the lattice alpha + Z (alpha = {line.alpha})"
        )
    if max_entry < line.alpha - 1:
        raise ValueError(
            f"max_entry = {max_entry} excludes even the all-empty tuple "
            f"(needs >= {line.alpha - 1})"
        )
    points = lattice_range(line.empty_value(1), max_entry)
    out = [SPTuple(line, combo) for combo in itertools.combinations(points, k)]
    return out
