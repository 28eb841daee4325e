"""Command-line interface.

Subcommands:
    weyl          group info or JSON export (order, lengths, cover relations)
    klpoly        one Kazhdan-Lusztig coefficient
    basis-change  coordinates of a distinguished class in another basis
    verify        run the weyl / hecke / k0 suites for a Cartan type
    block-check   run the rank-one categorical suites

Exit codes: 0 all good, 1 at least one check failed, 2 usage error.

Optional key=value config file (enumeration cap, default format, table
width): ./heckeo.cfg, overridden by the HECKEO_CONFIG environment variable;
flags override the file.  All output is UTF-8 and deterministic: identical
invocations produce byte-identical output (timings are opt-in and never
included in JSON).
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys

from .k0 import BasisKind, K0Block
from .hecke import HeckeAlgebra
from .laurent import LaurentPoly
from .report import VerificationReport, emit
from .weyl import (
    DEFAULT_ENUMERATION_CAP,
    CartanDatum,
    WeylError,
    build_group,
    weyl_suite,
)

CONFIG_ENV = "HECKEO_CONFIG"
CONFIG_FILE = "heckeo.cfg"


class UsageError(Exception):
    pass


def load_config() -> dict:
    path = os.environ.get(CONFIG_ENV, CONFIG_FILE)
    cfg: dict = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#") or "=" not in line:
                    continue
                key, _, val = line.partition("=")
                cfg[key.strip()] = val.strip()
    except OSError:
        return {}
    out = {}
    if "cap" in cfg:
        try:
            out["cap"] = int(cfg["cap"])
        except ValueError:
            raise UsageError(f"config error: cap must be an integer, got {cfg['cap']!r}")
    if "format" in cfg:
        out["format"] = cfg["format"]
    if "table_width" in cfg:
        try:
            out["table_width"] = int(cfg["table_width"])
        except ValueError:
            raise UsageError("config error: table_width must be an integer")
    return out


def _build(type_str: str, cap: int):
    try:
        return build_group(CartanDatum.parse(type_str), cap=cap)
    except WeylError as exc:
        raise UsageError(str(exc)) from None


def _parse_word(group, text: str):
    try:
        return group.parse_word(text)
    except WeylError as exc:
        raise UsageError(str(exc)) from None


def _poly_json(p: LaurentPoly) -> dict:
    return p.to_json()


def _cmd_weyl(args, cfg) -> tuple[int, str]:
    g = _build(args.type, args.cap)
    if args.format == "json":
        return 0, json.dumps(g.to_json_dict(), separators=(",", ":")) + "\n"
    lines = [
        f"type {g.datum.label}",
        f"order {g.order}",
        f"longest_length {g.length(g.w0)}",
        f"longest_word {g.name(g.w0)}",
        f"positive_roots {g.n_positive_roots}",
        f"simple_reflections {g.rank}",
    ]
    return 0, "\n".join(lines) + "\n"


def _cmd_klpoly(args, cfg) -> tuple[int, str]:
    g = _build(args.type, args.cap)
    x = _parse_word(g, args.x)
    y = _parse_word(g, args.y)
    alg = HeckeAlgebra(g)
    coeff = alg.kl_element(x, args.variant).coeff(y)
    if args.format == "json":
        obj = {
            "schema": 1,
            "x": g.name(x),
            "y": g.name(y),
            "coeff": _poly_json(coeff),
        }
        return 0, json.dumps(obj, separators=(",", ":")) + "\n"
    label = "C" if args.variant == "C" else "C'"
    return 0, f"coefficient of H[{g.name(y)}] in {label}[{g.name(x)}] = {coeff}\n"


def _cmd_basis_change(args, cfg) -> tuple[int, str]:
    g = _build(args.type, args.cap)
    x = _parse_word(g, args.x)
    try:
        src = BasisKind.coerce(args.from_basis)
        dst = BasisKind.coerce(args.to_basis)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    blk = K0Block(g)
    coords = blk.coords_in_basis(blk.class_of(x, src), dst)
    named = {g.name(z): p for z, p in sorted(coords.items(), key=lambda t: t[0].idx)}
    if args.format == "json":
        obj = {
            "schema": 1,
            "type": g.datum.label,
            "from": src.value,
            "to": dst.value,
            "x": g.name(x),
            "coords": {k: _poly_json(p) for k, p in named.items()},
        }
        return 0, json.dumps(obj, separators=(",", ":")) + "\n"
    lines = [f"[{src.value}_{g.name(x)}] in the {dst.value} basis:"]
    for k, p in named.items():
        lines.append(f"  {k}: {p}")
    return 0, "\n".join(lines) + "\n"


def _cmd_verify(args, cfg) -> tuple[int, str]:
    g = _build(args.type, args.cap)
    rep = VerificationReport(args.suite)
    if args.suite in ("weyl", "all"):
        rep.extend(weyl_suite(g))
    if args.suite in ("hecke", "all"):
        rep.extend(HeckeAlgebra(g).suite())
    if args.suite in ("k0", "all"):
        rep.extend(K0Block(g).suite())
    text = emit(rep, args.format, width=cfg.get("table_width", 60), timings=args.timings)
    return (0 if rep.passed else 1), text


def _cmd_block_check(args, cfg) -> tuple[int, str]:
    from .block import build_rank_one
    from .block.catalog import CATALOG_NAMES
    from .block.checks import suite as block_suite

    ctx = build_rank_one()
    if args.format == "csv":
        # homology table of the two equivalences over the whole catalog
        buf = io.StringIO()
        buf.write("module,degree,dimension\n")
        rows = []
        for variant, fc in (("Theta*", ctx.theta_star()), ("Theta!", ctx.theta_shriek())):
            for name in CATALOG_NAMES:
                applied = fc.apply(ctx.catalog.modules[name]).complex
                for n, dims in sorted(applied.homology_dims().items()):
                    rows.append((f"{variant}({name})", n, sum(dims.values())))
        for label, degree, dim in sorted(rows):
            buf.write(f"{label},{degree},{dim}\n")
        return 0, buf.getvalue()
    rep = block_suite(ctx, args.suite)
    text = emit(rep, args.format, width=cfg.get("table_width", 60), timings=args.timings)
    return (0 if rep.passed else 1), text


def _parser(cfg: dict) -> argparse.ArgumentParser:
    default_format = cfg.get("format", "table")
    default_cap = cfg.get("cap", DEFAULT_ENUMERATION_CAP)
    top = argparse.ArgumentParser(prog="heckeo", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "table")):
        p.add_argument("--format", choices=formats, default=default_format
                       if default_format in formats else formats[-1])
        p.add_argument("--cap", type=int, default=default_cap)
        p.add_argument("--timings", action="store_true")

    p = sub.add_parser("weyl", help="group info / JSON export")
    p.add_argument("--type", required=True)
    p.add_argument("--info", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_weyl)

    p = sub.add_parser("klpoly", help="one KL coefficient")
    p.add_argument("--type", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--variant", choices=("C", "Cprime"), default="C")
    common(p)
    p.set_defaults(fn=_cmd_klpoly)

    p = sub.add_parser("basis-change", help="class coordinates in another basis")
    p.add_argument("--type", required=True)
    p.add_argument("--from", dest="from_basis", required=True)
    p.add_argument("--to", dest="to_basis", required=True)
    p.add_argument("--x", required=True)
    common(p)
    p.set_defaults(fn=_cmd_basis_change)

    p = sub.add_parser("verify", help="run verification suites for a type")
    p.add_argument("--type", required=True)
    p.add_argument("--suite", choices=("weyl", "hecke", "k0", "all"), default="all")
    common(p, formats=("json", "csv", "table"))
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("block-check", help="rank-one categorical suites")
    p.add_argument(
        "--suite",
        choices=("all", "catalog", "adjunctions", "equivalence", "tilting"),
        default="all",
    )
    common(p, formats=("json", "csv", "table"))
    p.set_defaults(fn=_cmd_block_check)
    return top


def run(argv: list[str]) -> tuple[int, str]:
    """Parse and execute; returns (exit code, output text)."""
    try:
        cfg = load_config()
    except UsageError as exc:
        return 2, str(exc) + "\n"
    parser = _parser(cfg)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""
    try:
        return args.fn(args, cfg)
    except UsageError as exc:
        return 2, f"error: {exc}\n"


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code != 2 else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
