"""Command-line entry point.

Subcommands::

    bringcover cells       cell census of the moduli complexes
    bringcover cover       base surface and its orientation double cover
    bringcover dessins     the built dessins, their passports and symmetries
    bringcover monodromy   numerically tracked Belyi monodromy
    bringcover verify-all  the full verification suite
    bringcover export      DOT export of a named dessin

Exit codes: 0 all gated checks pass, 1 some check failed, 2 usage or I/O
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import __version__, cells, cover, dessins, verify
from .monodromy import monodromy_triple, sheet_constellation
from .tracking import TrackingConfig, kernel_name


def _add_tracking_flags(p):
    p.add_argument("--steps", type=int, default=None,
                   help="waypoints per loop circle (default 1024)")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for the sampled identity checks")
    p.add_argument("--base-t", type=float, default=None,
                   help="real base point between 0 and 1 (default 0.5)")
    p.add_argument("--radius0", type=float, default=None)
    p.add_argument("--radius1", type=float, default=None)
    p.add_argument("--radius-inf", type=float, default=None)
    p.add_argument("--tol-residual", type=float, default=None)
    p.add_argument("--tol-match-ratio", type=float, default=None)
    p.add_argument("--tol-lambda", type=float, default=None)


def _config_from(args) -> TrackingConfig:
    cfg = TrackingConfig()
    overrides = {
        "steps": args.steps,
        "seed": args.seed,
        "base_t": getattr(args, "base_t", None),
        "radius0": args.radius0,
        "radius1": args.radius1,
        "radius_inf": args.radius_inf,
        "tol_residual": args.tol_residual,
        "tol_match_ratio": args.tol_match_ratio,
        "tol_lambda": args.tol_lambda,
    }
    return replace(cfg, **{k: v for k, v in overrides.items()
                           if v is not None})


def _write_json(path, payload) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _print_report(report) -> None:
    for check in report["checks"]:
        print(f"[{check['status']:>4}] {check['name']}")
    n_pass = sum(1 for c in report["checks"] if c["status"] == "pass")
    n_fail = sum(1 for c in report["checks"] if c["status"] == "fail")
    n_info = sum(1 for c in report["checks"] if c["status"] == "info")
    print(f"{report['status'].upper()}: {n_pass} passed, {n_fail} failed, "
          f"{n_info} informational")


def _cmd_module(args, module: str) -> int:
    cfg = _config_from(args)
    report = verify.run_checks(cfg, only=module)
    _print_report(report)
    if args.json:
        payload = report
        if module == "cells":
            payload = dict(report)
            payload["enumerations"] = {
                f"n={n},k={k}": [
                    {"text": c.to_text(), "dimension": c.dimension,
                     "orbit_size": c.orbit_size}
                    for c in cells.enumerate_cells(n, k)
                ]
                for n, k in ((4, 0), (4, 1), (5, 0), (5, 1), (5, 2), (6, 0))
            }
        elif module == "cover":
            payload = dict(report)
            base = cover.surface_from_cells(cells.build_complex5())
            lifted = cover.orientation_cover(base)
            payload["base"] = {
                "faces": base.n_faces, "edges": base.n_edges,
                "vertices": base.n_vertices,
                "euler_characteristic": cover.euler_characteristic(base),
                "orientable": cover.is_orientable(base),
            }
            payload["cover"] = lifted.summary()
            payload["dessin"] = cover.cover_to_dessin(lifted).to_text()
        _write_json(args.json, payload)
    return 0 if report["status"] == "pass" else 1


def _cmd_dessins(args) -> int:
    cfg = _config_from(args)
    report = verify.run_checks(cfg, only="dessins")
    _print_report(report)
    if args.json:
        payload = dict(report)
        payload["dessins"] = {
            name: d.to_text()
            for name, d in _named_dessins(cfg, with_sheet=False).items()
        }
        _write_json(args.json, payload)
    return 0 if report["status"] == "pass" else 1


def _cmd_monodromy(args) -> int:
    cfg = _config_from(args)
    report = verify.run_checks(cfg, only="monodromy")
    _print_report(report)
    if args.json:
        payload = dict(report)
        try:
            payload["monodromy"] = monodromy_triple(cfg).report()
        except Exception as exc:
            payload["monodromy"] = {"error": f"{type(exc).__name__}: {exc}"}
        _write_json(args.json, payload)
    return 0 if report["status"] == "pass" else 1


def _cmd_verify_all(args) -> int:
    cfg = _config_from(args)
    report = verify.run_checks(cfg, only=args.only)
    print(f"bringcover {__version__} ({kernel_name()} kernel)")
    _print_report(report)
    if args.json:
        _write_json(args.json, report)
    return 0 if report["status"] == "pass" else 1


def _named_dessins(cfg: TrackingConfig, with_sheet: bool) -> dict:
    i4 = dessins.build_i4()
    union = i4.union_with_dual()
    out = {
        "icosahedron": dessins.build_icosahedron(),
        "I4": i4,
        "union": union,
        "J": union.dual().recolor(),
        "D": cover.build_d(),
    }
    if with_sheet:
        out["sheet"] = sheet_constellation(monodromy_triple(cfg))
    return out


def _cmd_export(args) -> int:
    cfg = _config_from(args)
    if args.target == "sheet":
        d = sheet_constellation(monodromy_triple(cfg))
    else:
        d = _named_dessins(cfg, with_sheet=False)[args.target]
    try:
        with open(args.path, "w", encoding="utf-8") as fh:
            fh.write(d.to_dot())
    except OSError as exc:
        print(f"error: cannot write {args.path}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    print(f"wrote {args.target} to {args.path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bringcover",
        description="verification suite for the genus-4 moduli-cover dessin "
                    "and its Bring-curve Belyi pair")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("cells", "cell census of the moduli complexes"),
        ("cover", "base surface and orientation double cover"),
        ("dessins", "built dessins, passports, symmetries"),
        ("monodromy", "numerically tracked Belyi monodromy"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", metavar="PATH", default=None)
        _add_tracking_flags(p)

    p = sub.add_parser("verify-all", help="run every check")
    p.add_argument("--json", metavar="PATH", default=None)
    p.add_argument("--only", choices=verify.MODULES, default=None,
                   help="restrict to one module's checks")
    _add_tracking_flags(p)

    p = sub.add_parser("export", help="write a dessin as DOT")
    p.add_argument("--target", required=True,
                   choices=("D", "I4", "union", "J", "sheet"))
    p.add_argument("--path", required=True)
    _add_tracking_flags(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    command = {
        "cells": lambda a: _cmd_module(a, "cells"),
        "cover": lambda a: _cmd_module(a, "cover"),
        "dessins": _cmd_dessins,
        "monodromy": _cmd_monodromy,
        "verify-all": _cmd_verify_all,
        "export": _cmd_export,
    }[args.command]
    return command(args)


if __name__ == "__main__":
    sys.exit(main())
