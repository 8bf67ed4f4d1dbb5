"""Aubert duals of strongly positive data, by two independent routes.

The dual of a valid datum is a Langlands datum: a canonically ordered
list of negative-center segments over the same cuspidal support.  Lines
are independent; each line is dualized on its own.

Closed route.  With a_0 = alpha - k - 1 and the convention that an empty
exponent range contributes nothing, the dual of (a_1, ..., a_k) is the
product over i = 1..k of the segments

    [j - i + 1, j]   for j = -a_{k-i+1}, -a_{k-i+1} + 1, ..., -a_{k-i} - 2.

Iterative route.  Peel one segment at a time: x is the last entry, j is
the largest index l >= 2 with b_l >= b_{l-1} + 2 (else 1), y = b_j; emit
[-x, -y], decrement entries j..k by 1, and repeat until the tuple is all
empty.  Each pass removes one exponent from each of the segments j..k,
so the loop runs at most (support size) times.

The two routes are algebraically unrelated in shape, which is the point:
agreement on every input is the correctness check, see
:mod:`spdual.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import (
    ValidationReport,
    Violation,
    k_prime,
    require_valid,
    require_valid_tuple,
    tuple_support,
    validate_tuple,
)
from .core import (
    LanglandsData,
    Segment,
    SPRep,
    SPTuple,
    all_empty_tuple,
    entries_str,
    lattice_range,
    sort_segments,
)

CLOSED = "closed"
ITERATIVE = "iterative"

TRACE_VIOLATION = "trace-violation"


@dataclass(frozen=True)
class TraceStep:
    """One peeling pass: the tuple it acted on, the chosen index j, the
    exponents x = b_k and y = b_j, and the emitted segment [-x, -y]."""

    tuple_before: SPTuple
    j: int
    x: Fraction
    y: Fraction
    emitted: Segment


@dataclass(frozen=True)
class DualTrace:
    """Full run of the iterative route on one line."""

    steps: tuple[TraceStep, ...]
    final_tuple: SPTuple


def dual_closed_line(t: SPTuple) -> tuple[Segment, ...]:
    """Dual segments of one line by the closed route, canonically ordered."""
    require_valid_tuple(t)
    line = t.line
    k = line.k
    a = [line.alpha - k - 1, *t.entries]
    segs: list[Segment] = []
    for i in range(1, k + 1):
        for j in lattice_range(-a[k - i + 1], -a[k - i] - 2):
            segs.append(Segment(line.rho_label, j - i + 1, j))
    return sort_segments(segs)


def _peel_index(t: SPTuple) -> int:
    """Largest l >= 2 with b_l >= b_{l-1} + 2, else 1."""
    b = t.entries
    for l in range(len(b), 1, -1):
        if b[l - 1] >= b[l - 2] + 2:
            return l
    return 1


def dual_iterative_line(t: SPTuple) -> tuple[tuple[Segment, ...], DualTrace]:
    """Dual segments of one line by the iterative route, with the full
    peeling trace; segments come back canonically ordered."""
    require_valid_tuple(t)
    line = t.line
    target = all_empty_tuple(line)
    bound = sum(tuple_support(t).values())
    steps: list[TraceStep] = []
    current = t
    while current != target:
        if len(steps) >= bound:
            raise RuntimeError(f"peeling did not terminate within {bound} passes")
        b = current.entries
        j = _peel_index(current)
        x = b[-1]
        y = b[j - 1]
        emitted = Segment(line.rho_label, -x, -y)
        steps.append(TraceStep(current, j, x, y, emitted))
        current = SPTuple(
            line, b[: j - 1] + tuple(v - 1 for v in b[j - 1 :])
        )
    segs = sort_segments(step.emitted for step in steps)
    return segs, DualTrace(tuple(steps), current)


def dual(rep: SPRep, algorithm: str = CLOSED) -> LanglandsData:
    """Aubert dual of a valid datum as a Langlands datum.

    algorithm selects the route ("closed" or "iterative"); the result is
    the same either way.
    """
    if algorithm not in (CLOSED, ITERATIVE):
        raise ValueError(f"unknown algorithm {algorithm!r}")
    require_valid(rep)
    segs: list[Segment] = []
    for t in rep.lines:
        if algorithm == CLOSED:
            segs.extend(dual_closed_line(t))
        else:
            line_segs, _ = dual_iterative_line(t)
            segs.extend(line_segs)
    return LanglandsData.build(
        segs,
        rep.cuspidal_support_label,
        rep.family,
        rep.central_character_label,
    )


def _step_violations(step: TraceStep, m: int) -> list[Violation]:
    """Constraints internal to one step; m is 1-based for messages."""
    where = step.tuple_before.line.rho_label
    out: list[Violation] = []
    b = step.tuple_before.entries
    sub = validate_tuple(step.tuple_before)
    if not sub.ok:
        out.append(
            Violation(
                TRACE_VIOLATION,
                f"step {m}: intermediate tuple {entries_str(b)} is not admissible",
                where,
            )
        )
        return out
    k = len(b)
    if not 1 <= step.j <= k:
        out.append(
            Violation(TRACE_VIOLATION, f"step {m}: index j = {step.j} out of range", where)
        )
        return out
    if step.x != b[-1]:
        out.append(
            Violation(
                TRACE_VIOLATION,
                f"step {m}: x = {step.x} but the last entry is {b[-1]}",
                where,
            )
        )
    if step.y != b[step.j - 1]:
        out.append(
            Violation(
                TRACE_VIOLATION,
                f"step {m}: y = {step.y} but b_{step.j} = {b[step.j - 1]}",
                where,
            )
        )
    if step.j >= 2 and b[step.j - 1] < b[step.j - 2] + 2:
        out.append(
            Violation(
                TRACE_VIOLATION,
                f"step {m}: j = {step.j} but b_{step.j} = {b[step.j - 1]} is not "
                f">= b_{step.j - 1} + 2 = {b[step.j - 2] + 2}",
                where,
            )
        )
    if step.y <= 0:
        out.append(
            Violation(TRACE_VIOLATION, f"step {m}: y = {step.y} is not > 0", where)
        )
    if (step.emitted.lo, step.emitted.hi) != (-step.x, -step.y):
        out.append(
            Violation(
                TRACE_VIOLATION,
                f"step {m}: emitted [{step.emitted.lo}, {step.emitted.hi}] "
                f"is not [-x, -y] = [{-step.x}, {-step.y}]",
                where,
            )
        )
    return out


def check_trace(t: SPTuple, trace: DualTrace) -> ValidationReport:
    """Audit a peeling trace against the invariants of the iterative route.

    Hard checks: the first x is a_k, x drops by exactly 1 per step, y
    strictly decreases, j never increases, y > 0, each step acts on an
    admissible tuple with the gap condition at j, each emission is
    [-x, -y], and the final tuple is all empty.  Advisory only: j at or
    past the first nonempty index of the tuple it acts on.
    """
    violations: list[Violation] = []
    warnings: list[str] = []
    where = t.line.rho_label
    steps = trace.steps
    if steps and steps[0].tuple_before != t:
        violations.append(
            Violation(TRACE_VIOLATION, "step 1 does not start at the input tuple", where)
        )
    if steps and t.entries and steps[0].x != t.entries[-1]:
        violations.append(
            Violation(
                TRACE_VIOLATION,
                f"x_1 = {steps[0].x} but a_k = {t.entries[-1]}",
                where,
            )
        )
    for m, step in enumerate(steps, start=1):
        violations.extend(_step_violations(step, m))
        kp = k_prime(step.tuple_before)
        if kp is not None and step.j < kp:
            warnings.append(
                f"step {m}: j = {step.j} precedes the first nonempty segment index {kp}"
            )
    for m, (prev, cur) in enumerate(zip(steps, steps[1:]), start=2):
        if cur.x != prev.x - 1:
            violations.append(
                Violation(
                    TRACE_VIOLATION,
                    f"step {m}: x = {cur.x} does not follow {prev.x} by exactly 1",
                    where,
                )
            )
        if cur.y >= prev.y:
            violations.append(
                Violation(
                    TRACE_VIOLATION,
                    f"step {m}: y = {cur.y} does not strictly decrease from {prev.y}",
                    where,
                )
            )
        if cur.j > prev.j:
            violations.append(
                Violation(
                    TRACE_VIOLATION,
                    f"step {m}: j = {cur.j} increases from {prev.j}",
                    where,
                )
            )
    if not trace.final_tuple.is_all_empty():
        violations.append(
            Violation(
                TRACE_VIOLATION,
                f"final tuple {entries_str(trace.final_tuple.entries)} is not all empty",
                where,
            )
        )
    return ValidationReport(tuple(violations), tuple(warnings))
