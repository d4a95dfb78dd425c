"""Command-line front door.

Subcommands map one-to-one onto library calls; this layer only parses
flags and formats results, it never does arithmetic of its own.

Exit codes: 0 success, 1 validation error (bad flags, bad values, bad
data), 2 I/O error (unreadable or missing files).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (
    PRESETS,
    NegotiationFrame,
    evaluate,
    price_for_decreasing,
    price_for_increasing,
    classify_zone,
    round_percent,
    sample_curves,
)
from .errors import InvalidTargetError, WinWinError
from .io import SCHEMA_VERSION, read_deal_records, render_output
from .ledger import DerivationRule, evaluate_records, summarize


class CliError(WinWinError):
    """Flag combination the parser cannot express as a per-flag constraint."""


def _compact(value: float) -> str:
    return format(value, ".12g")


def parse_target(text: str) -> float:
    """Accept a win-share target as a fraction ('0.4') or percent ('40%')."""
    s = text.strip()
    body, is_percent = (s[:-1], True) if s.endswith("%") else (s, False)
    try:
        value = float(body)
    except ValueError:
        raise InvalidTargetError(f"cannot parse target {text!r}") from None
    return value / 100.0 if is_percent else value


def _frame_from_args(args: argparse.Namespace) -> NegotiationFrame:
    if args.preset:
        if args.lower is not None or args.upper is not None:
            raise CliError("give either --preset or --lower/--upper, not both")
        return PRESETS[args.preset]
    if args.lower is None or args.upper is None:
        raise CliError("--lower and --upper are required (or use --preset)")
    return NegotiationFrame(args.lower, args.upper)


def _add_frame_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lower", type=float, help="lower bound of the interval")
    parser.add_argument("--upper", type=float, help="upper bound of the interval")
    parser.add_argument(
        "--preset",
        choices=sorted(PRESETS),
        help="use a named frame instead of explicit bounds",
    )


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_eval(args: argparse.Namespace) -> int:
    frame = _frame_from_args(args)
    result = evaluate(frame, args.value)
    swp, bwp = round_percent(result.increasing_share), round_percent(result.decreasing_share)
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "lower": frame.lower,
                    "upper": frame.upper,
                    "value": result.settled_value,
                    "swp_raw": result.increasing_share,
                    "swp_percent": swp,
                    "bwp_raw": result.decreasing_share,
                    "bwp_percent": bwp,
                    "zone": result.zone.value,
                }
            )
        )
    else:
        _emit(
            f"{frame.increasing_party}: {swp}% (raw {result.increasing_share!r})\n"
            f"{frame.decreasing_party}: {bwp}% (raw {result.decreasing_share!r})\n"
            f"zone: {result.zone.value}"
        )
    return 0


def cmd_inverse(args: argparse.Namespace) -> int:
    frame = _frame_from_args(args)
    target = parse_target(args.target)
    if args.party == "increasing":
        price = price_for_increasing(frame, target)
    else:
        price = price_for_decreasing(frame, target)
    if args.format == "json":
        _emit(json.dumps({"schema_version": SCHEMA_VERSION, "price": price}))
    else:
        _emit(_compact(price))
    return 0


def cmd_zone(args: argparse.Namespace) -> int:
    frame = _frame_from_args(args)
    zone = classify_zone(frame, args.value)
    if args.format == "json":
        _emit(json.dumps({"schema_version": SCHEMA_VERSION, "zone": zone.value}))
    else:
        _emit(zone.value)
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    frame = _frame_from_args(args)
    start = frame.lower if args.start is None else args.start
    end = frame.upper if args.end is None else args.end
    points = sample_curves(frame, start, end, args.samples)
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "points": [[p.value, p.increasing_share, p.decreasing_share] for p in points],
                }
            )
        )
    elif args.format == "csv":
        lines = ["value,swp_raw,bwp_raw"]
        lines += [f"{p.value!r},{p.increasing_share!r},{p.decreasing_share!r}" for p in points]
        _emit("\n".join(lines))
    else:
        header = f"{'value':>16}  {'swp_raw':>16}  {'bwp_raw':>16}"
        rows = [
            f"{_compact(p.value):>16}  {_compact(p.increasing_share):>16}  {_compact(p.decreasing_share):>16}"
            for p in points
        ]
        _emit("\n".join([header, *rows]))
    return 0


def cmd_ledger(args: argparse.Namespace) -> int:
    records = read_deal_records(args.input)
    rule = DerivationRule(
        constant_cost=args.cost,
        settled_offset=args.offset,
        increasing_party=args.increasing_party,
        decreasing_party=args.decreasing_party,
    )
    scored = evaluate_records(rule, records)
    summary = summarize(scored)
    sys.stdout.write(render_output(scored, summary, args.format))
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(console_dir=args.console_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="winwin",
        description="Quantify each negotiating party's degree of winning.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="win shares and zone for a settled value")
    _add_frame_flags(p_eval)
    p_eval.add_argument("--value", type=float, required=True, help="settled value")
    p_eval.add_argument("--format", choices=["text", "json"], default="text")
    p_eval.set_defaults(handler=cmd_eval)

    p_inv = sub.add_parser("inverse", help="value needed to reach a target share")
    _add_frame_flags(p_inv)
    p_inv.add_argument(
        "--party", choices=["increasing", "decreasing"], required=True,
        help="whose target share to hit",
    )
    p_inv.add_argument(
        "--target", required=True,
        help="desired win share, as a fraction (0.4) or percent (40%%)",
    )
    p_inv.add_argument("--format", choices=["text", "json"], default="text")
    p_inv.set_defaults(handler=cmd_inverse)

    p_zone = sub.add_parser("zone", help="classify a settled value")
    _add_frame_flags(p_zone)
    p_zone.add_argument("--value", type=float, required=True)
    p_zone.add_argument("--format", choices=["text", "json"], default="text")
    p_zone.set_defaults(handler=cmd_zone)

    p_curve = sub.add_parser("curve", help="sample both membership curves")
    _add_frame_flags(p_curve)
    p_curve.add_argument("--start", type=float, help="grid start (default: lower bound)")
    p_curve.add_argument("--end", type=float, help="grid end (default: upper bound)")
    p_curve.add_argument("--samples", type=int, default=101, help="grid size (>= 2)")
    p_curve.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p_curve.set_defaults(handler=cmd_curve)

    p_ledger = sub.add_parser("ledger", help="score a CSV/JSON deal ledger")
    p_ledger.add_argument("--input", required=True, help="path to a records file")
    p_ledger.add_argument(
        "--cost", type=float,
        help="constant lower bound (default: per-record cost_price column)",
    )
    p_ledger.add_argument(
        "--offset", type=float,
        help="settled = reference_price + offset (default: settled_price column)",
    )
    p_ledger.add_argument("--increasing-party", default="seller")
    p_ledger.add_argument("--decreasing-party", default="buyer")
    p_ledger.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p_ledger.set_defaults(handler=cmd_ledger)

    p_serve = sub.add_parser("serve", help="run the HTTP JSON service")
    p_serve.add_argument("--host", default=os.environ.get("WINWIN_HOST", "127.0.0.1"))
    p_serve.add_argument(
        "--port", type=int, default=int(os.environ.get("WINWIN_PORT", "8080"))
    )
    p_serve.add_argument(
        "--console-dir",
        help="serve a built web console from this directory at /",
    )
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.handler(args)
    except WinWinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
