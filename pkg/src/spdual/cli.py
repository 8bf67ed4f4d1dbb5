"""Command line for the calculator.

Commands compute in-process by default; --server URL sends the same
request to a running service instead, with identical output either way.

Exit codes: 0 success, 1 domain failure (validation violations, a
failing verification run, server 4xx of the same kind), 2 usage or
parse errors (bad flags, malformed documents, malformed rationals).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import GroupFamily, RationalParseError, rational_parse
from .documents import DocumentError
from .service import handlers
from .verify import DEFAULT_ALPHAS, MUTATIONS, SuiteConfig


class UsageError(Exception):
    """Operator mistake: exit 2."""


class DomainError(Exception):
    """Valid request, failing answer: exit 1.  May carry a validation
    report payload to render."""

    def __init__(self, message: str, report: "dict | None" = None):
        super().__init__(message)
        self.report = report


def _load_document(path: str) -> dict:
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError(f"{path}: document must be a JSON object")
    return doc


def _remote_post(server: str, route: str, body: dict) -> dict:
    import httpx

    url = server.rstrip("/") + route
    try:
        response = httpx.post(url, json=body, timeout=600.0)
    except httpx.HTTPError as exc:
        raise DomainError(f"cannot reach server at {url}: {exc}") from exc
    if response.status_code == 200:
        return response.json()
    detail = response.json().get("detail", response.text)
    if response.status_code == 400:
        report = detail if isinstance(detail, dict) else None
        raise DomainError("representation data failed validation", report)
    if response.status_code == 422:
        raise UsageError(f"server rejected the request: {detail}")
    raise DomainError(f"server error {response.status_code}: {detail}")


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _print_report(payload: dict, stream=None) -> None:
    stream = stream if stream is not None else sys.stdout
    print("ok" if payload["ok"] else "invalid", file=stream)
    for v in payload["violations"]:
        where = f" ({v['where']})" if v.get("where") else ""
        print(f"[{v['code']}] {v['message']}{where}", file=stream)
    for w in payload.get("warnings", ()):
        print(f"warning: {w}", file=stream)


def cmd_validate(args) -> int:
    doc = _load_document(args.input)
    if args.server:
        payload = _remote_post(args.server, "/validate", doc)
    else:
        try:
            payload = handlers.validate_payload(doc)
        except DocumentError as exc:
            raise UsageError(str(exc)) from exc
    if args.format == "json":
        _print_json(payload)
    else:
        _print_report(payload)
    return 0 if payload["ok"] else 1


def _math_payload(args, route: str, local) -> dict:
    doc = _load_document(args.input)
    if args.server:
        return _remote_post(args.server, route, doc)
    try:
        return local(doc)
    except DocumentError as exc:
        raise UsageError(str(exc)) from exc
    except handlers.InvalidRepresentation as exc:
        raise DomainError(
            "representation data failed validation",
            handlers.report_to_dict(exc.report),
        ) from exc


def cmd_dual(args) -> int:
    payload = _math_payload(args, "/dual", handlers.dual_payload)
    if args.format == "json":
        _print_json(payload)
    elif args.format == "latex":
        print(payload["latex"])
    else:
        print(payload["text"])
    return 0


def cmd_mu_star(args) -> int:
    payload = _math_payload(args, "/mu-star", handlers.mu_star_payload)
    if args.format == "json":
        _print_json(payload)
    elif args.format == "latex":
        for term in payload["terms"]:
            print(term["latex"])
    else:
        print(f"{payload['count']} terms")
        for term in payload["terms"]:
            print(term["text"])
    return 0


def _parse_alpha(text: str):
    try:
        alpha = rational_parse(text)
    except RationalParseError as exc:
        raise UsageError(str(exc)) from exc
    if alpha < 0:
        raise UsageError(f"alpha = {alpha} must be >= 0")
    return alpha


def cmd_enumerate(args) -> int:
    alpha = _parse_alpha(args.alpha)
    if args.server:
        body = {
            "alpha": args.alpha,
            "max_offset": args.max_offset,
            "rho": args.rho,
            "group": GroupFamily.coerce(args.group).value,
            "cuspidal_support": args.cuspidal_support,
            "with_duals": args.with_duals,
        }
        payload = _remote_post(args.server, "/enumerate", body)
    else:
        payload = handlers.enumerate_payload(
            alpha=alpha,
            max_offset=args.max_offset,
            rho=args.rho,
            group=args.group,
            cuspidal_support=args.cuspidal_support,
            with_duals=args.with_duals,
        )
    if args.format == "json":
        _print_json(payload)
        return 0
    duals = payload.get("duals")
    for n, entries in enumerate(payload["tuples"]):
        shown = "(" + ", ".join(entries) + ")"
        if duals is not None:
            key = "latex" if args.format == "latex" else "text"
            shown = f"{shown} -> {duals[n][key]}"
        print(shown)
    return 0


def cmd_verify(args) -> int:
    try:
        alphas = tuple(_parse_alpha(a) for a in args.alphas.split(","))
        families = tuple(GroupFamily.coerce(f) for f in args.families.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.mutate is not None and args.mutate not in MUTATIONS:
        raise UsageError(f"unknown mutation {args.mutate!r}; known: {sorted(MUTATIONS)}")
    if args.server:
        body = {
            "alphas": [str(a) for a in alphas],
            "max_offset": args.max_offset,
            "families": [f.value for f in families],
            "max_lines": args.max_lines,
            "seed": args.seed,
            "samples": args.samples,
            "mutation": args.mutate,
        }
        payload = _remote_post(args.server, "/verify", body)
    else:
        config = SuiteConfig(
            alphas=alphas,
            max_offset=args.max_offset,
            families=families,
            max_lines=args.max_lines,
            seed=args.seed,
            samples=args.samples,
            mutation=args.mutate,
        )
        payload = handlers.verify_payload(config)
    if args.format == "json":
        _print_json(payload)
    else:
        for check in payload["checks"]:
            print(
                f"{check['name']:<22} {check['checked']:>6} checked  "
                f"{check['failures']:>4} failures"
            )
            for ce in check["counterexamples"]:
                print(f"  expected: {ce['expected']}")
                print(f"  actual:   {ce['actual']}")
                print(f"  input:    {json.dumps(ce['input'])}")
        verdict = "ok" if payload["ok"] else "FAILED"
        print(
            f"{verdict}: {payload['tuples_enumerated']} tuples, "
            f"{payload['samples_run']} samples, {payload['wall_time']:.2f}s"
        )
    return 0 if payload["ok"] else 1


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("spdual.service.main:app", host=args.host, port=args.port)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("text", "json", "latex"),
        default="text",
        help="output format (latex falls back to text where it does not apply)",
    )
    p.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send the request to a running service instead of computing in-process",
    )


def _add_document_input(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "input",
        nargs="?",
        default="-",
        help="JSON document file, or - for stdin (default)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spdual",
        description=(
            "Exact calculator for strongly positive representation data: "
            "validation, Jacquet-module expansion, and Aubert duals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document against the classification")
    _add_common(p)
    _add_document_input(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dual", help="Aubert dual of a document, as Langlands data")
    _add_common(p)
    _add_document_input(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("mu-star", help="full Jacquet-module expansion of a document")
    _add_common(p)
    _add_document_input(p)
    p.set_defaults(func=cmd_mu_star)

    p = sub.add_parser(
        "enumerate", help="all admissible single-line tuples up to a bound"
    )
    _add_common(p)
    p.add_argument("--alpha", required=True, help="reducibility point, e.g. 3/2")
    p.add_argument(
        "--max-offset",
        type=int,
        default=4,
        metavar="N",
        help="bound a_k <= alpha - 1 + N (default 4)",
    )
    p.add_argument("--rho", default="rho1", help="cuspidal label (default rho1)")
    p.add_argument(
        "--group",
        choices=("mp", "gspin"),
        default="mp",
        help="group family (default mp)",
    )
    p.add_argument(
        "--cuspidal-support",
        default="sigma_cusp",
        help="support label used when rendering duals (default sigma_cusp)",
    )
    p.add_argument(
        "--with-duals", action="store_true", help="append each tuple's Aubert dual"
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the self-verification suite")
    _add_common(p)
    p.add_argument(
        "--alphas",
        default=",".join(str(a) for a in DEFAULT_ALPHAS),
        help="comma-separated reducibility points (default %(default)s)",
    )
    p.add_argument(
        "--max-offset",
        type=int,
        default=4,
        metavar="N",
        help="enumeration bound a_k <= alpha - 1 + N (default 4)",
    )
    p.add_argument(
        "--families",
        default="mp,gspin",
        help="comma-separated group families (default mp,gspin)",
    )
    p.add_argument(
        "--max-lines", type=int, default=3, help="lines per sampled datum (default 3)"
    )
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p.add_argument(
        "--samples",
        type=int,
        default=200,
        help="number of sampled multi-line data (default 200)",
    )
    p.add_argument(
        "--mutate",
        default=None,
        metavar="NAME",
        help="plant a deliberate bug to confirm the suite catches it",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        if exc.report is not None:
            _print_report(exc.report, stream=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
