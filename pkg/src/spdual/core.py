"""Exact arithmetic and the shared vocabulary for strongly positive
representation data.

Every exponent in the system is an exact rational (`fractions.Fraction`);
there is no floating point anywhere.  A *cuspidal line* is an opaque
cuspidal label together with its reducibility point alpha >= 0; data on
the line lives on the lattice alpha + Z.  A *segment* [lo, hi] stands for
the consecutive exponent twists lo, lo+1, ..., hi of one cuspidal datum,
with center e = (lo + hi)/2.  The empty segment is a designated value,
``EMPTY``, never an arithmetic trick.

All values are immutable after construction and safe to share between
concurrent tasks.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


class RationalParseError(ValueError):
    """Text that is not an exact integer or fraction."""


class SegmentError(ValueError):
    """Endpoints that do not describe a segment."""


class EmptySegmentError(ValueError):
    """An operation that is undefined on the empty segment."""


def rational_parse(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into an exact rational in lowest terms.

    Decimal notation is rejected on purpose: ``"1.5"`` is a parse error,
    not three halves.
    """
    token = text.strip() if isinstance(text, str) else text
    if not isinstance(token, str) or not _RATIONAL_RE.match(token):
        raise RationalParseError(f"not an exact rational: {text!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise RationalParseError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def rational_str(x: Fraction) -> str:
    """Render as ``"p"`` or ``"p/q"``; round-trips through rational_parse."""
    return str(Fraction(x))


def entries_str(entries: Iterable[Fraction]) -> str:
    """Render an exponent tuple as ``"(-1/2, 3/2)"``; ``"()"`` when empty."""
    return "(" + ", ".join(rational_str(a) for a in entries) + ")"


def ceiling(x: Fraction) -> int:
    """Least integer >= x."""
    return math.ceil(x)


def as_rational(x) -> Fraction:
    """Coerce an int/Fraction to Fraction; floats are refused outright."""
    if isinstance(x, float):
        raise TypeError(f"floating point is banned here, got {x!r}")
    return Fraction(x)


def lattice_range(lo: Fraction, hi: Fraction) -> list[Fraction]:
    """The points lo, lo+1, ..., hi; empty when lo > hi.

    hi need not be on the lattice of lo: the walk stops at the last point
    <= hi either way.
    """
    out = []
    x = as_rational(lo)
    hi = as_rational(hi)
    while x <= hi:
        out.append(x)
        x += 1
    return out


class GroupFamily(str, Enum):
    """Which family the data lives over.

    The tag decides rendered metadata only (the self-contragredience
    twist differs: an alpha-character twist for the metaplectic family, a
    central-character twist for odd general spin); exponent arithmetic is
    identical in both families.
    """

    METAPLECTIC = "metaplectic"
    GSPIN_ODD = "gspin_odd"

    @classmethod
    def coerce(cls, tag: "str | GroupFamily") -> "GroupFamily":
        if isinstance(tag, cls):
            return tag
        aliases = {"mp": cls.METAPLECTIC, "gspin": cls.GSPIN_ODD, "gspin-odd": cls.GSPIN_ODD}
        if tag in aliases:
            return aliases[tag]
        return cls(tag)


@dataclass(frozen=True)
class CuspidalLine:
    """An opaque cuspidal label with its reducibility point.

    ``k`` is the ceiling of alpha and is always derived, never stored;
    k = 0 exactly when alpha = 0.  Candidate data with alpha < 0 can be
    constructed (validation reports it rather than raising).
    """

    rho_label: str
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))

    @property
    def k(self) -> int:
        return ceiling(self.alpha)

    def segment_start(self, i: int) -> Fraction:
        """First exponent alpha - k + i of the i-th classification segment (1-based)."""
        return self.alpha - self.k + i

    def empty_value(self, i: int) -> Fraction:
        """Tuple entry alpha - k + i - 1 that encodes an empty i-th segment."""
        return self.alpha - self.k + i - 1


@dataclass(frozen=True)
class Segment:
    """A nonempty segment: exponents lo, lo+1, ..., hi on one cuspidal label.

    Direct construction rejects endpoints with hi - lo not a non-negative
    integer; use :func:`segment` to get the sanctioned off-by-one empty
    encoding (lo = hi + 1 yields EMPTY).
    """

    rho_label: str
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo = as_rational(self.lo)
        hi = as_rational(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        d = hi - lo
        if d < 0 or d.denominator != 1:
            raise SegmentError(
                f"[{lo}, {hi}] is not a segment: hi - lo must be a non-negative "
                f"integer (segment() maps lo = hi + 1 to EMPTY)"
            )

    def exponents(self) -> list[Fraction]:
        return lattice_range(self.lo, self.hi)

    def __len__(self) -> int:
        return int(self.hi - self.lo) + 1


class _EmptySegment:
    """The designated empty segment; a single shared instance ``EMPTY``."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _EmptySegment()

SegmentLike = Union[Segment, _EmptySegment]


def segment(rho_label: str, lo, hi) -> SegmentLike:
    """Build a segment, mapping the off-by-one pair lo = hi + 1 to EMPTY.

    Any other pair with hi - lo not a non-negative integer is rejected.
    """
    lo = as_rational(lo)
    hi = as_rational(hi)
    if lo == hi + 1:
        return EMPTY
    return Segment(rho_label, lo, hi)


def segment_e(s: SegmentLike) -> Fraction:
    """Center exponent (lo + hi)/2; undefined for EMPTY."""
    if isinstance(s, _EmptySegment):
        raise EmptySegmentError("e is undefined for the empty segment")
    return (s.lo + s.hi) / 2


def segment_sort_key(s: Segment):
    """Canonical order: e ascending, ties by (rho_label, lo)."""
    return (segment_e(s), s.rho_label, s.lo)


def sort_segments(segments: Iterable[Segment]) -> tuple[Segment, ...]:
    return tuple(sorted(segments, key=segment_sort_key))


@dataclass(frozen=True)
class SPTuple:
    """One cuspidal line's exponent tuple (a_1, ..., a_k).

    Construction is permissive on purpose: arbitrary candidate entries are
    accepted, and :func:`spdual.classify.validate_tuple` reports every
    violated classification constraint instead of raising.
    """

    line: CuspidalLine
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(as_rational(a) for a in self.entries))

    def is_all_empty(self) -> bool:
        """True when every classification segment is empty (the tuple
        encodes the cuspidal representation itself)."""
        line = self.line
        return self.entries == tuple(line.empty_value(i) for i in range(1, line.k + 1))


def all_empty_tuple(line: CuspidalLine) -> SPTuple:
    """The tuple (alpha-k, alpha-k+1, ..., alpha-1) with every segment empty."""
    return SPTuple(line, tuple(line.empty_value(i) for i in range(1, line.k + 1)))


@dataclass(frozen=True)
class SPRep:
    """A strongly positive representation datum.

    One exponent tuple per cuspidal line (labels pairwise distinct), over
    an opaque partial cuspidal support.  No lines, or all-empty tuples,
    encodes the cuspidal representation itself.  The central character
    label is GSpin-only metadata and never enters the arithmetic.
    """

    family: GroupFamily
    lines: tuple[SPTuple, ...]
    cuspidal_support_label: str
    central_character_label: "str | None" = None

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))

    def is_cuspidal(self) -> bool:
        return all(t.is_all_empty() for t in self.lines)


def cuspidal_rep(
    family: GroupFamily,
    cuspidal_support_label: str,
    central_character_label: "str | None" = None,
) -> SPRep:
    return SPRep(family, (), cuspidal_support_label, central_character_label)


@dataclass(frozen=True)
class LanglandsData:
    """Inducing data of a Langlands subrepresentation: nonempty segments,
    every e < 0, in canonical (e, rho_label, lo) order."""

    segments: tuple[Segment, ...]
    cuspidal_support_label: str
    family: GroupFamily
    central_character_label: "str | None" = None

    @classmethod
    def build(
        cls,
        segments: Iterable[Segment],
        cuspidal_support_label: str,
        family: GroupFamily,
        central_character_label: "str | None" = None,
    ) -> "LanglandsData":
        """Sort canonically and enforce e < 0 on every segment."""
        segs = sort_segments(segments)
        for s in segs:
            if segment_e(s) >= 0:
                raise ValueError(f"segment [{s.lo}, {s.hi}] on {s.rho_label} has e >= 0")
        return cls(segs, cuspidal_support_label, family, central_character_label)
