"""Command-line client for the conversion service.

By default every command is served in-process (no network, byte-identical
output for identical inputs); pass ``--server URL`` to talk to a running
instance instead.  Exit codes: 0 success, 1 selftest failure, 2 usage or
parse error, 3 semantic error (kind mismatch, sequence shorter than the
requested order, parameter outside its domain).
"""

from __future__ import annotations

import argparse
import json
import sys

from fastapi import HTTPException
from pydantic import ValidationError

from . import service
from .encoding import (
    ScalarParseError,
    parse_rational,
    parse_scalar,
    parse_sequence_text,
    render_scalar,
)
from .scalars import rational_str
from .schemas import (
    BenchRequest,
    ConvertRequest,
    DistributionSpec,
    MomentsRequest,
    PolynomialWire,
    SelftestRequest,
    TableRequest,
)

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_USAGE = 2
EXIT_SEMANTIC = 3

_ENDPOINTS = {
    "/convert": service.convert_endpoint,
    "/moments": service.moments_endpoint,
    "/table": service.table_endpoint,
    "/bench": service.bench_endpoint,
    "/selftest": service.selftest_endpoint,
}


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _status_to_exit(status: int) -> int:
    return EXIT_SEMANTIC if status == 409 else EXIT_USAGE


def _dispatch(path: str, request, server: str | None) -> dict:
    """Run one request, either in-process or against a remote server."""
    if server is None:
        try:
            response = _ENDPOINTS[path](request)
        except HTTPException as exc:
            raise CliError(str(exc.detail), _status_to_exit(exc.status_code))
        return response.model_dump(mode="json", exclude_none=True)
    import httpx

    try:
        r = httpx.post(
            server.rstrip("/") + path,
            json=request.model_dump(mode="json", by_alias=True, exclude_none=True),
            timeout=300.0,
        )
    except httpx.HTTPError as exc:
        raise CliError(f"cannot reach {server}: {exc}", EXIT_USAGE)
    if r.status_code != 200:
        try:
            detail = r.json().get("detail", r.text)
        except ValueError:
            detail = r.text
        raise CliError(str(detail), _status_to_exit(r.status_code))
    return r.json()


def _parse_params(pairs) -> dict:
    """--param NAME gives the symbolic indeterminate NAME; NAME=VALUE a rational."""
    params = {}
    for item in pairs or []:
        if "=" in item:
            name, value = item.split("=", 1)
            try:
                params[name] = rational_str(parse_rational(value))
            except ScalarParseError as exc:
                raise CliError(str(exc), EXIT_USAGE)
        else:
            name = item
            params[name] = PolynomialWire(symbol=name, coeffs=["0", "1"])
        if not name:
            raise CliError(f"bad --param: {item!r}", EXIT_USAGE)
    return params


def _parse_seq(text: str):
    try:
        return [str(q) for q in parse_sequence_text(text)]
    except ScalarParseError as exc:
        raise CliError(str(exc), EXIT_USAGE)


def _render_value(v) -> str:
    if isinstance(v, dict):
        return render_scalar(parse_scalar(v))
    return str(v)


def _emit(payload: dict, fmt: str, text_renderer, json_body=None) -> None:
    if fmt == "json":
        print(json.dumps(payload if json_body is None else json_body(payload)))
    else:
        text_renderer(payload)


def _sequence_text(payload: dict) -> None:
    print(",".join(_render_value(v) for v in payload["values"]))


def _sequence_json(payload: dict):
    # a sequence's JSON form is the bare array of scalar encodings
    return payload["values"]


def _table_text(payload: dict) -> None:
    for row in payload["rows"]:
        cells = [str(row["i"]), _render_value(row["value"])]
        if "catalan" in row and row["catalan"] is not None:
            cells.append(row["catalan"])
        print("\t".join(cells))


def _bench_text(payload: dict) -> None:
    print("order\tterms\tmedian_ms")
    for row in payload["rows"]:
        print(f"{row['order']}\t{row['terms']}\t{row['median_ms']:.3f}")


def _selftest_text(payload: dict) -> None:
    for suite in payload["suites"]:
        print(f"ok\t{suite['name']}\t{suite['cases']} cases")
    if payload["passed"]:
        total = sum(s["cases"] for s in payload["suites"])
        print(f"all suites passed ({len(payload['suites'])} suites, {total} cases)")
    else:
        print(f"FAIL\t{payload.get('failure', 'unknown failure')}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cumulants",
        description="Exact moment/cumulant conversions (classical, boolean, free)",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--server", default=None, help="base URL of a running service")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("convert", parents=[common], help="convert between bases")
    p.add_argument("--from", dest="from_kind", required=True,
                   choices=("moments", "classical", "boolean", "free"))
    p.add_argument("--to", dest="to_kind", required=True,
                   choices=("moments", "classical", "boolean", "free"))
    p.add_argument("--seq", help="comma-separated rationals, e.g. 0,1/2,3")
    p.add_argument("--dist", choices=tuple(sorted(
        ("poisson", "compound_poisson", "exponential", "uniform", "bernoulli",
         "binomial", "gaussian", "wigner", "marchenko_pastur"))))
    p.add_argument("--param", action="append", metavar="NAME[=VALUE]",
                   help="distribution parameter; bare NAME means symbolic")
    p.add_argument("--order", type=int)
    p.add_argument("--parallel", action="store_true")

    p = sub.add_parser("moments", parents=[common], help="moments of a distribution")
    p.add_argument("--dist", required=True, choices=tuple(sorted(
        ("poisson", "compound_poisson", "exponential", "uniform", "bernoulli",
         "binomial", "gaussian", "wigner", "marchenko_pastur"))))
    p.add_argument("--param", action="append", metavar="NAME[=VALUE]")
    p.add_argument("--seq", help="inner moment sequence (compound_poisson)")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="reference tables")
    p.add_argument("name", choices=("wigner_catalan", "marchenko_pastur"))
    p.add_argument("--max-order", type=int, default=8)

    p = sub.add_parser("bench", parents=[common], help="time the free-cumulant transform")
    p.add_argument("--orders", required=True, help="comma-separated orders, e.g. 15,18,21")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--input", choices=("rational", "symbolic"), default="rational")

    p = sub.add_parser("selftest", parents=[common], help="oracle and round-trip suites")
    p.add_argument("--max-order", type=int, default=8)
    return parser


def _cmd_convert(args) -> int:
    distribution = None
    sequence = None
    if args.dist is not None:
        distribution = DistributionSpec(
            name=args.dist,
            params=_parse_params(args.param),
            inner=_parse_seq(args.seq) if args.seq else None,
        )
    elif args.seq is not None:
        sequence = _parse_seq(args.seq)
    else:
        raise CliError("convert needs --seq or --dist", EXIT_USAGE)
    request = ConvertRequest(
        from_kind=args.from_kind,
        to_kind=args.to_kind,
        sequence=sequence,
        distribution=distribution,
        order=args.order,
        parallel=args.parallel,
    )
    payload = _dispatch("/convert", request, args.server)
    _emit(payload, args.format, _sequence_text, _sequence_json)
    return EXIT_OK


def _cmd_moments(args) -> int:
    request = MomentsRequest(
        distribution=DistributionSpec(
            name=args.dist,
            params=_parse_params(args.param),
            inner=_parse_seq(args.seq) if args.seq else None,
        ),
        order=args.order,
    )
    payload = _dispatch("/moments", request, args.server)
    _emit(payload, args.format, _sequence_text, _sequence_json)
    return EXIT_OK


def _cmd_table(args) -> int:
    request = TableRequest(name=args.name, max_order=args.max_order)
    payload = _dispatch("/table", request, args.server)
    _emit(payload, args.format, _table_text)
    return EXIT_OK


def _cmd_bench(args) -> int:
    try:
        orders = [int(x) for x in args.orders.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"bad --orders: {args.orders!r}", EXIT_USAGE)
    if not orders:
        raise CliError("bench needs at least one order", EXIT_USAGE)
    request = BenchRequest(orders=orders, repetitions=args.reps, input=args.input)
    payload = _dispatch("/bench", request, args.server)
    _emit(payload, args.format, _bench_text)
    return EXIT_OK


def _cmd_selftest(args) -> int:
    request = SelftestRequest(max_order=args.max_order)
    payload = _dispatch("/selftest", request, args.server)
    _emit(payload, args.format, _selftest_text)
    return EXIT_OK if payload["passed"] else EXIT_SELFTEST


_COMMANDS = {
    "convert": _cmd_convert,
    "moments": _cmd_moments,
    "table": _cmd_table,
    "bench": _cmd_bench,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
