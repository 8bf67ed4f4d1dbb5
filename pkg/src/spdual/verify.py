"""Self-verification suite: cross-checks between independent routes.

The suite enumerates every admissible single-line tuple up to a bound
for each configured reducibility point, then samples seeded multi-line
data, and on each input checks:

* closed-vs-iterative: both dual routes give the same segments,
* trace-recurrences: the peeling trace satisfies its step invariants,
* support-negation: dual exponents are exactly the negated support,
* langlands-shape: dual segments all have e < 0 and arrive sorted,
* mu-term-count: the expansion size matches a brute-force recount,
* mu-closure: every expansion term's strongly positive factor is valid,
* mu-bookkeeping: each term conserves the exponent multiset, the
  identity term appears exactly once, every multiplicity is 1,
* family-neutrality: both group families produce identical exponent
  data.

A failing check records replayable counterexamples (as documents) and
never aborts the run.  Mutations exist to prove the harness has teeth:
running with mutation="closed-shift" plants a deliberate off-by-one in
the closed route's output and must produce failures.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .classify import cuspidal_support, enumerate_sp, tuple_support, validate_sp
from .core import (
    CuspidalLine,
    GroupFamily,
    LanglandsData,
    Rational,
    Segment,
    SPRep,
    SPTuple,
    segment_e,
    segment_sort_key,
)
from .documents import rep_to_document
from .dual import check_trace, dual, dual_closed_line, dual_iterative_line
from .jacquet import mu_star
from .render import segment_text

CLOSED_VS_ITERATIVE = "closed-vs-iterative"
TRACE_RECURRENCES = "trace-recurrences"
SUPPORT_NEGATION = "support-negation"
LANGLANDS_SHAPE = "langlands-shape"
MU_TERM_COUNT = "mu-term-count"
MU_CLOSURE = "mu-closure"
MU_BOOKKEEPING = "mu-bookkeeping"
FAMILY_NEUTRALITY = "family-neutrality"

DEFAULT_ALPHAS = (
    Fraction(1, 2),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
    Fraction(5, 2),
    Fraction(3),
)

MAX_COUNTEREXAMPLES = 5

MU_PRODUCT_CAP = 2000


def _shift_segments(segs: tuple[Segment, ...]) -> tuple[Segment, ...]:
    return tuple(Segment(s.rho_label, s.lo + 1, s.hi + 1) for s in segs)


MUTATIONS = {
    "closed-shift": _shift_segments,
}


@dataclass(frozen=True)
class SuiteConfig:
    """Knobs for one suite run; defaults match the command line's."""

    alphas: tuple[Rational, ...] = DEFAULT_ALPHAS
    max_offset: int = 4
    families: tuple[GroupFamily, ...] = (GroupFamily.METAPLECTIC, GroupFamily.GSPIN_ODD)
    max_lines: int = 3
    seed: int = 0
    samples: int = 200
    mutation: "str | None" = None


@dataclass(frozen=True)
class Counterexample:
    """A replayable failure: the input as a document plus what the check
    expected and what it saw."""

    check: str
    input_document: dict
    expected: str
    actual: str


@dataclass
class _Check:
    name: str
    checked: int = 0
    failures: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    def record(self, ok: bool, rep: SPRep, expected: str, actual: str) -> None:
        self.checked += 1
        if ok:
            return
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(
                Counterexample(self.name, rep_to_document(rep), expected, actual)
            )


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    failures: int
    counterexamples: tuple[Counterexample, ...]


@dataclass(frozen=True)
class SuiteReport:
    """Everything a caller needs to judge a run and replay any failure."""

    checks: tuple[CheckResult, ...]
    wall_time: float
    tuples_enumerated: int
    samples_run: int

    @property
    def ok(self) -> bool:
        return all(c.failures == 0 for c in self.checks)


def brute_force_mu_count(t: SPTuple) -> int:
    """Expansion size by unpruned recount: walk the full box of
    candidate b-tuples and keep the strictly increasing ones.

    Deliberately shares no code with the expansion itself.
    """
    line = t.line
    boxes = []
    for i, a in enumerate(t.entries, start=1):
        box = []
        b = line.empty_value(i)
        while b <= a:
            box.append(b)
            b += 1
        boxes.append(box)
    count = 0
    for combo in itertools.product(*boxes):
        if all(x < y for x, y in zip(combo, combo[1:])):
            count += 1
    return count


def _segments_text(segs) -> str:
    return " ".join(segment_text(s) for s in segs) or "(none)"


def _support_multiset(rep: SPRep) -> Counter:
    total: Counter = Counter()
    for label, c in cuspidal_support(rep).items():
        for e, n in c.items():
            total[(label, e)] += n
    return total


def _counter_text(c: Counter) -> str:
    items = sorted(c.items())
    return " ".join(f"{label}@{e}x{n}" for (label, e), n in items) or "(empty)"


class _Suite:
    def __init__(self, config: SuiteConfig):
        self.config = config
        self.checks = {
            name: _Check(name)
            for name in (
                CLOSED_VS_ITERATIVE,
                TRACE_RECURRENCES,
                SUPPORT_NEGATION,
                LANGLANDS_SHAPE,
                MU_TERM_COUNT,
                MU_CLOSURE,
                MU_BOOKKEEPING,
                FAMILY_NEUTRALITY,
            )
        }
        self.mutate = MUTATIONS[config.mutation] if config.mutation else None
        self.tuples_enumerated = 0
        self.samples_run = 0

    def _closed(self, t: SPTuple) -> tuple[Segment, ...]:
        segs = dual_closed_line(t)
        return self.mutate(segs) if self.mutate else segs

    def _dual_checks(self, rep: SPRep) -> None:
        closed: list[Segment] = []
        iterative: list[Segment] = []
        traces_ok = True
        trace_detail = ""
        for t in rep.lines:
            closed.extend(self._closed(t))
            segs, trace = dual_iterative_line(t)
            iterative.extend(segs)
            report = check_trace(t, trace)
            if not report.ok:
                traces_ok = False
                trace_detail = report.violations[0].message
        closed.sort(key=segment_sort_key)
        iterative.sort(key=segment_sort_key)

        self.checks[CLOSED_VS_ITERATIVE].record(
            tuple(closed) == tuple(iterative),
            rep,
            _segments_text(iterative),
            _segments_text(closed),
        )
        self.checks[TRACE_RECURRENCES].record(
            traces_ok, rep, "trace invariants hold", trace_detail or "ok"
        )

        support = _support_multiset(rep)
        negated = Counter({(label, -e): n for (label, e), n in support.items()})
        dual_exps: Counter = Counter()
        for s in iterative:
            for e in s.exponents():
                dual_exps[(s.rho_label, e)] += 1
        self.checks[SUPPORT_NEGATION].record(
            dual_exps == negated,
            rep,
            _counter_text(negated),
            _counter_text(dual_exps),
        )

        shape_ok = all(segment_e(s) < 0 for s in iterative)
        detail = "all e < 0, canonically ordered"
        if shape_ok:
            try:
                LanglandsData.build(iterative, rep.cuspidal_support_label, rep.family)
            except ValueError as exc:
                shape_ok = False
                detail = str(exc)
        else:
            detail = _segments_text([s for s in iterative if segment_e(s) >= 0])
        self.checks[LANGLANDS_SHAPE].record(
            shape_ok, rep, "all e < 0, canonically ordered", detail
        )

    def _mu_checks(self, rep: SPRep) -> None:
        expected = 1
        for t in rep.lines:
            expected *= brute_force_mu_count(t)
        if expected > MU_PRODUCT_CAP:
            return
        terms = mu_star(rep)
        self.checks[MU_TERM_COUNT].record(
            len(terms) == expected, rep, str(expected), str(len(terms))
        )

        bad = next((term for term in terms if not validate_sp(term.sp_part).ok), None)
        self.checks[MU_CLOSURE].record(
            bad is None,
            rep,
            "every term's strongly positive factor is admissible",
            "ok" if bad is None else validate_sp(bad.sp_part).violations[0].message,
        )

        support = _support_multiset(rep)
        identity_terms = 0
        book_ok = True
        book_detail = "conserved"
        for term in terms:
            if term.multiplicity != 1:
                book_ok = False
                book_detail = f"multiplicity {term.multiplicity}"
                break
            if not term.gl_part and term.sp_part.lines == rep.lines:
                identity_terms += 1
            moved: Counter = Counter()
            for s in term.gl_part:
                for e in s.exponents():
                    moved[(s.rho_label, e)] += 1
            if moved + _support_multiset(term.sp_part) != support:
                book_ok = False
                book_detail = f"term leaks support: {_segments_text(term.gl_part)}"
                break
        if book_ok and identity_terms != 1:
            book_ok = False
            book_detail = f"identity term appears {identity_terms} times"
        self.checks[MU_BOOKKEEPING].record(
            book_ok, rep, "support conserved, identity term once", book_detail
        )

    def _family_check(self, rep: SPRep) -> None:
        twin_family = (
            GroupFamily.GSPIN_ODD
            if rep.family is GroupFamily.METAPLECTIC
            else GroupFamily.METAPLECTIC
        )
        twin = SPRep(twin_family, rep.lines, rep.cuspidal_support_label)
        here = dual(rep).segments
        there = dual(twin).segments
        self.checks[FAMILY_NEUTRALITY].record(
            here == there,
            rep,
            _segments_text(here),
            _segments_text(there),
        )

    def _run_rep(self, rep: SPRep) -> None:
        self._dual_checks(rep)
        self._mu_checks(rep)
        self._family_check(rep)

    def _exhaustive_phase(self) -> None:
        family = self.config.families[0]
        for alpha in self.config.alphas:
            line = CuspidalLine("rho1", alpha)
            bound = alpha - 1 + self.config.max_offset
            for t in enumerate_sp(line, bound):
                self.tuples_enumerated += 1
                rep = SPRep(family, (t,), "sigma_cusp")
                self._run_rep(rep)

    def _sample_rep(self, rng: random.Random) -> SPRep:
        n_lines = rng.randint(1, self.config.max_lines)
        family = rng.choice(self.config.families)
        central = None
        if family is GroupFamily.GSPIN_ODD:
            central = rng.choice((None, "omega"))
        lines = []
        for n in range(1, n_lines + 1):
            line = CuspidalLine(f"rho{n}", rng.choice(self.config.alphas))
            bound = line.alpha - 1 + rng.randint(0, self.config.max_offset)
            lines.append(rng.choice(enumerate_sp(line, bound)))
        return SPRep(family, tuple(lines), "sigma_cusp", central)

    def _sampling_phase(self) -> None:
        rng = random.Random(self.config.seed)
        for _ in range(self.config.samples):
            self.samples_run += 1
            self._run_rep(self._sample_rep(rng))

    def run(self) -> SuiteReport:
        start = time.perf_counter()
        self._exhaustive_phase()
        self._sampling_phase()
        results = tuple(
            CheckResult(c.name, c.checked, c.failures, tuple(c.counterexamples))
            for c in self.checks.values()
        )
        return SuiteReport(
            results,
            time.perf_counter() - start,
            self.tuples_enumerated,
            self.samples_run,
        )


def run_suite(config: SuiteConfig = SuiteConfig()) -> SuiteReport:
    """Run every check over the configured inputs; see SuiteReport."""
    return _Suite(config).run()
