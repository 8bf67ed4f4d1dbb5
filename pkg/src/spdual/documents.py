"""Plain-dict document form of representation data.

The document is the interchange format shared by the command line, the
HTTP service, and the verification suite's counterexample reports:

    {
      "group": "metaplectic" | "gspin_odd",
      "cuspidal_support": "<label>",
      "central_character": "<label>",        # gspin_odd only, optional
      "lines": [
        {"rho": "<label>", "alpha": "1/2", "tuple": ["1/2", "5/2"]},
        ...
      ]
    }

Rationals travel as strings ("p" or "p/q"), never as floats.  Parsing is
strict about shape and number format but permissive about the tuple
values themselves: an off-lattice or disordered tuple parses fine and is
then reported by validation.
"""

from __future__ import annotations

from .core import (
    CuspidalLine,
    GroupFamily,
    LanglandsData,
    RationalParseError,
    SPRep,
    SPTuple,
    rational_parse,
    rational_str,
)


class DocumentError(ValueError):
    """Malformed document: wrong shape, types, or number format."""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentError(message)


def _parse_rational(value, where: str):
    _expect(isinstance(value, str), f"{where} must be a rational string, got {value!r}")
    try:
        return rational_parse(value)
    except RationalParseError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def document_to_rep(doc) -> SPRep:
    """Parse a document into a representation datum.

    Raises DocumentError on malformed input; classification violations
    are not checked here.
    """
    _expect(isinstance(doc, dict), f"document must be an object, got {type(doc).__name__}")
    unknown = set(doc) - {"group", "cuspidal_support", "central_character", "lines"}
    _expect(not unknown, f"unknown document keys: {sorted(unknown)}")

    group = doc.get("group")
    try:
        family = GroupFamily.coerce(group)
    except (ValueError, TypeError):
        raise DocumentError(f"group must be one of {[f.value for f in GroupFamily]}, got {group!r}")

    support = doc.get("cuspidal_support")
    _expect(
        isinstance(support, str) and support != "",
        "cuspidal_support must be a nonempty string",
    )

    central = doc.get("central_character")
    if central is not None:
        _expect(isinstance(central, str), "central_character must be a string")
        _expect(
            family is GroupFamily.GSPIN_ODD,
            "central_character applies to the gspin_odd group only",
        )

    lines_doc = doc.get("lines", [])
    _expect(isinstance(lines_doc, list), "lines must be a list")
    lines: list[SPTuple] = []
    for n, entry in enumerate(lines_doc):
        where = f"lines[{n}]"
        _expect(isinstance(entry, dict), f"{where} must be an object")
        unknown = set(entry) - {"rho", "alpha", "tuple"}
        _expect(not unknown, f"{where}: unknown keys {sorted(unknown)}")
        rho = entry.get("rho")
        _expect(isinstance(rho, str) and rho != "", f"{where}.rho must be a nonempty string")
        alpha = _parse_rational(entry.get("alpha"), f"{where}.alpha")
        tup = entry.get("tuple")
        _expect(isinstance(tup, list), f"{where}.tuple must be a list")
        entries = tuple(
            _parse_rational(v, f"{where}.tuple[{m}]") for m, v in enumerate(tup)
        )
        lines.append(SPTuple(CuspidalLine(rho, alpha), entries))
    return SPRep(family, tuple(lines), support, central)


def rep_to_document(rep: SPRep) -> dict:
    """Serialize a datum; round-trips through document_to_rep."""
    doc = {
        "group": rep.family.value,
        "cuspidal_support": rep.cuspidal_support_label,
        "lines": [
            {
                "rho": t.line.rho_label,
                "alpha": rational_str(t.line.alpha),
                "tuple": [rational_str(a) for a in t.entries],
            }
            for t in rep.lines
        ],
    }
    if rep.central_character_label is not None:
        doc["central_character"] = rep.central_character_label
    return doc


def langlands_to_document(data: LanglandsData) -> dict:
    """Serialize a Langlands datum for transport."""
    doc = {
        "group": data.family.value,
        "cuspidal_support": data.cuspidal_support_label,
        "segments": [
            {"rho": s.rho_label, "lo": rational_str(s.lo), "hi": rational_str(s.hi)}
            for s in data.segments
        ],
    }
    if data.central_character_label is not None:
        doc["central_character"] = data.central_character_label
    return doc
