"""Command-line entry point.

Exit status: 0 when every executed check passes, 1 when a check fails or is
inconclusive, 2 on parse or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields

from .scalars import ExponentOverflowError, GaussQ

COMMANDS = ("normalize", "verify-galois", "verify-connection", "projector", "chern", "heegaard-check", "all")


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    max_degree: int = 5
    lambda0: GaussQ = GaussQ(3, 4) / 5
    padding: int = 2
    grid: int = 400
    seed: int = 42
    samples: int = 200
    charge: int = 1
    output: str = "text"

    def validate(self) -> "Config":
        for name in ("max_degree", "padding", "grid", "samples"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        if not self.lambda0.is_unimodular():
            raise ConfigError(f"lambda {self.lambda0} is not exactly unimodular")
        if self.output not in ("text", "json"):
            raise ConfigError("output must be text or json")
        return self


def _convert(name: str, value: str):
    if name == "lambda0":
        try:
            return GaussQ.parse(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(str(exc)) from None
    if name == "output":
        return value
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{name} expects an integer, got {value!r}") from None


def read_config_file(path: str) -> dict:
    """``key=value`` lines; ``#`` starts a comment; dashes and underscores are interchangeable."""
    known = {f.name for f in fields(Config)} | {"lambda"}
    out = {}
    try:
        lines = open(path, encoding="utf-8").read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    for no, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{no}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ConfigError(f"{path}:{no}: unknown key {key!r}")
        key = "lambda0" if key == "lambda" else key
        out[key] = _convert(key, value)
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="key=value file; flags override it")
    common.add_argument("--max-degree", type=int, dest="max_degree")
    common.add_argument("--lambda", dest="lambda0", help="unimodular Gaussian rational, e.g. (3+4i)/5")
    common.add_argument("--padding", type=int)
    common.add_argument("--grid", type=int)
    common.add_argument("--charge", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--json", action="store_const", const="json", dest="output")

    parser = _Parser(prog="ncsphere", description="Exact checks for the noncommutative Hopf fibration.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("normalize", parents=[common], help="print the normal form of an expression")
    p.add_argument("expr")
    sub.add_parser("verify-galois", parents=[common], help="can o chi, chi o can and the kernel certificate")
    sub.add_parser("verify-connection", parents=[common], help="strong connection properties")
    p = sub.add_parser("projector", parents=[common], help="exact checks of the charge-n projector")
    p.add_argument("--show", action="store_true")
    sub.add_parser("chern", parents=[common], help="numerical first Chern number")
    sub.add_parser("heegaard-check", parents=[common], help="solid-torus gluing relations")
    sub.add_parser("all", parents=[common], help="every suite")
    return parser


def resolve_config(args: argparse.Namespace) -> Config:
    values = read_config_file(args.config) if args.config else {}
    for f in fields(Config):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = _convert(f.name, v) if f.name == "lambda0" else v
    return Config(**values).validate()


def _suites(command: str, cfg: Config):
    """Yield report factories in fixed order."""
    from .bundle import chern_report, verify_projector
    from .connection import verify_connection
    from .galois import kernel_certificate, verify_chi_can, verify_translation
    from .heegaard import verify_boundary_maps, verify_pair_presentation
    from .ncalg import verify_rewriting

    N = cfg.max_degree
    galois = [
        lambda: verify_translation(N),
        lambda: verify_chi_can(N, cfg.lambda0, cfg.padding),
        lambda: kernel_certificate(max(2, N), cfg.lambda0, cfg.padding),
    ]
    connection = [lambda: verify_connection(N, cfg.samples, cfg.seed)]
    projector = [lambda: verify_projector(cfg.charge)]
    chern = [lambda: chern_report(cfg.charge, cfg.grid)]
    heegaard = [verify_pair_presentation, lambda: verify_boundary_maps(cfg.samples, cfg.seed)]
    table = {
        "verify-galois": galois,
        "verify-connection": connection,
        "projector": projector,
        "chern": chern,
        "heegaard-check": heegaard,
        "all": [lambda: verify_rewriting(seed=cfg.seed)] + galois + connection + projector + chern + heegaard,
    }
    return table[command]


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cfg = resolve_config(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "normalize":
        from .parsing import ParseError, parse_expr, print_expr

        try:
            nf = print_expr(parse_expr(args.expr))
        except (ParseError, ExponentOverflowError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if cfg.output == "json":
            print(json.dumps({"command": "normalize", "input": args.expr, "normal_form": nf}), file=out)
        else:
            print(nf, file=out)
        return 0

    try:
        reports = [make() for make in _suites(args.command, cfg)]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for rep in reports:
        print(rep.to_json() if cfg.output == "json" else rep.summary(), file=out)
    if args.command == "projector" and args.show:
        from .bundle import projector

        print(projector(cfg.charge).show(), file=out)
    return 0 if all(r.passed for r in reports) else 1


def main() -> None:
    sys.exit(run())
