"""Command-line front end.

Exit codes: 0 success, 2 invalid input or usage, 3 internal guard tripped.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional

from . import instance as inst
from .errors import GeoFrechetError, NonTermination, ValidationError
from .freespace import FreeSpace
from .geodesic import GeodesicDomain
from .geometry import _as_point
from .hausdorff import directed_hausdorff
from .optimize import DEFAULT_TOL, frechet
from .plot import render_svg

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_GUARD = 3


def format_number(x: float) -> str:
    """A float with 12 significant digits, always valid JSON."""
    if not math.isfinite(x):
        raise ValueError(f"cannot print non-finite value {x}")
    s = f"{x:#.12g}"
    if "e" in s:
        mant, exp = s.split("e")
        s = f"{mant}e{int(exp)}"
    return s


def to_json(value) -> str:
    """JSON text with floats at 12 significant digits (``json`` cannot do this)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f'"{k}": {to_json(v)}' for k, v in value.items()) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _point_arg(text: str):
    try:
        x, y = text.split(",")
        return _as_point((float(x), float(y)))
    except (ValueError, GeoFrechetError):
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}")


def _nonneg_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(v) or v < 0:
        raise argparse.ArgumentTypeError(f"expected a finite non-negative number, got {text!r}")
    return v


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geofrechet",
                                description="Geodesic Frechet and Hausdorff distances in a simple polygon.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="is the Frechet distance at most epsilon?")
    d.add_argument("--epsilon", type=_nonneg_float, required=True)
    d.add_argument("file")

    f = sub.add_parser("frechet", help="exact Frechet distance")
    f.add_argument("--euclidean", action="store_true", help="ignore the polygon and use straight leashes")
    f.add_argument("--seed", type=_seed, default=0)
    f.add_argument("--tol", type=_nonneg_float, default=DEFAULT_TOL, help="relative root tolerance")
    f.add_argument("file")

    h = sub.add_parser("hausdorff", help="geodesic Hausdorff distance of setA and setB")
    h.add_argument("file")

    s = sub.add_parser("shortest-path", help="geodesic shortest path between two points")
    s.add_argument("--from", dest="source", type=_point_arg, required=True)
    s.add_argument("--to", dest="target", type=_point_arg, required=True)
    s.add_argument("file")

    g = sub.add_parser("plot-fsd", help="write the free-space diagram as SVG")
    g.add_argument("--epsilon", type=_nonneg_float, required=True)
    g.add_argument("--out", required=True)
    g.add_argument("file")
    return p


def _space(v: inst.ValidatedInstance) -> FreeSpace:
    return FreeSpace(v.A, v.B, v.polygon)


def _need_polygon(v: inst.ValidatedInstance, command: str):
    if v.polygon is None:
        raise inst.InstanceFormatError(f"{command} needs a polygon in the instance file")
    return v.polygon


def dispatch(args, stdout, stderr) -> int:
    raw = inst.load(args.file)
    if args.command == "frechet" and args.euclidean:
        if raw.polygon is not None:
            print("warning: --euclidean ignores the polygon in the instance file", file=stderr)
        v = inst.validate(raw, use_polygon=False)
    else:
        v = inst.validate(raw)

    if args.command == "decide":
        result = {"decision": _space(v).decide(args.epsilon)}
    elif args.command == "frechet":
        r = frechet(_space(v), seed=args.seed, tol=args.tol)
        result = {"epsilon_star": float(r.epsilon_star), "iterations": r.iterations,
                  "decision_calls": r.decision_calls}
    elif args.command == "hausdorff":
        domain = GeodesicDomain(_need_polygon(v, "hausdorff"))
        A = v.setA if v.setA is not None else list(v.A.vertices)
        B = v.setB if v.setB is not None else list(v.B.vertices)
        ab = directed_hausdorff(A, B, domain=domain)
        ba = directed_hausdorff(B, A, domain=domain)
        result = {"hausdorff": max(ab, ba), "directed_ab": ab, "directed_ba": ba}
    elif args.command == "shortest-path":
        domain = GeodesicDomain(_need_polygon(v, "shortest-path"))
        path = domain.shortest_path(args.source, args.target)
        result = {"length": path.length, "path": [list(q) for q in path.vertices]}
    elif args.command == "plot-fsd":
        svg = render_svg(_space(v), args.epsilon)
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(svg)
        except OSError as exc:
            raise inst.InstanceFormatError(f"cannot write {args.out}: {exc}") from exc
        result = {"out": args.out, "epsilon": args.epsilon}
    else:  # pragma: no cover - argparse rejects unknown commands
        raise ValueError(args.command)
    print(to_json(result), file=stdout)
    return EXIT_OK


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return dispatch(args, stdout, stderr)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except NonTermination as exc:
        print(f"internal guard: {exc}", file=stderr)
        return EXIT_GUARD
    except GeoFrechetError as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_GUARD


def main() -> None:
    sys.exit(run())
