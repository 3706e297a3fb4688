"""Command line: ``qriccati verify`` and ``qriccati eval``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import catalog, qspecial
from .errors import QDomainError
from .qcore import DEFAULT_POLICY, Q_RANGE_MESSAGE, TruncationPolicy


@dataclass(frozen=True)
class RunConfig:
    q_grid: tuple
    n_grid: tuple
    tolerance: float
    truncation: TruncationPolicy
    cases: tuple
    fmt: str
    out: Optional[str]
    printed: bool = False
    workers: int = 1

    def echo(self) -> dict:
        return {
            "q_grid": list(self.q_grid),
            "n_grid": list(self.n_grid),
            "tol": self.tolerance,
            "max_terms": self.truncation.max_terms,
            "cases": list(self.cases),
            "printed": self.printed,
        }


def _floats(values) -> list:
    out = []
    for v in values:
        out.extend(float(s) for s in str(v).split(",") if s)
    return out


def _ints(values) -> list:
    out = []
    for v in values:
        out.extend(int(s) for s in str(v).split(",") if s)
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qriccati", description="q-integral identity verifier")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity catalog")
    v.add_argument("--q", action="append", default=None, help="q value(s); repeat or comma-separate")
    v.add_argument("--n", action="append", default=None, help="degree(s) for polynomial cases")
    v.add_argument("--tol", type=float, default=1e-8)
    v.add_argument("--case", action="append", default=None, help="case id glob; repeatable")
    v.add_argument("--format", choices=("human", "json", "csv"), default="human")
    v.add_argument("--out", default=None, help="write the report here instead of stdout")
    v.add_argument("--max-terms", type=int, default=DEFAULT_POLICY.max_terms)
    v.add_argument("--printed", action="store_true", help="check the forms as originally printed")
    v.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("eval", help="evaluate a special function")
    e.add_argument("family", help="one of: " + ", ".join(f.value for f in qspecial.Family))
    e.add_argument("params", nargs="*", help="extra key=value parameters")
    e.add_argument("--x", type=float, required=True)
    e.add_argument("--q", type=float, required=True)
    for name, kind in (("n", int), ("nu", float), ("alpha", float), ("a", float), ("b", float), ("kind", int)):
        e.add_argument(f"--{name}", type=kind, default=None)
    return parser


def _parse_config(parser, args) -> RunConfig:
    try:
        qs = _floats(args.q) if args.q else list(catalog.Q_GRID)
        ns = _ints(args.n) if args.n else list(catalog.N_GRID)
    except ValueError as exc:
        parser.error(str(exc))
    if not all(0.0 < q < 1.0 for q in qs):
        parser.error(Q_RANGE_MESSAGE)
    if not args.tol > 0:
        parser.error("tolerance must be positive")
    if args.max_terms < 1:
        parser.error("--max-terms must be positive")
    if not ns:
        parser.error("empty n grid")
    policy = TruncationPolicy(DEFAULT_POLICY.rel_term_cutoff, DEFAULT_POLICY.consecutive_small, args.max_terms)
    return RunConfig(tuple(qs), tuple(ns), args.tol, policy, tuple(args.case or ()), args.format, args.out,
                     args.printed, max(1, args.workers))


def cmd_verify(config: RunConfig) -> int:
    cases = catalog.select(catalog.build_catalog(config.q_grid, config.n_grid), config.cases)
    if config.printed:
        cases = [c.as_printed() for c in cases]
    report = catalog.verify_all(cases, config.tolerance, config.truncation, workers=config.workers,
                                config=config.echo())
    text = report.render(config.fmt)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report.failing:
        print("failing cases: " + " ".join(report.failing), file=sys.stderr)
        return 1
    return 0


_FIELDS = {"n": int, "nu": float, "alpha": float, "a": float, "b": float, "kind": int}


def cmd_eval(parser, args) -> int:
    try:
        tag = qspecial.Family(args.family)
    except ValueError:
        parser.error(f"unknown family {args.family!r}")
    kw = {k: getattr(args, k) for k in _FIELDS if getattr(args, k) is not None}
    for item in args.params:
        key, sep, val = item.partition("=")
        if not sep or key not in _FIELDS:
            parser.error(f"bad parameter {item!r}; expected one of {', '.join(_FIELDS)} as key=value")
        try:
            kw[key] = _FIELDS[key](val)
        except ValueError:
            parser.error(f"bad value in {item!r}")
    if not 0.0 < args.q < 1.0:
        parser.error(Q_RANGE_MESSAGE)
    try:
        fam = qspecial.SpecialFamily(tag, **kw)
        value = qspecial.eval_special(fam, args.x, args.q)
    except QDomainError as exc:
        parser.error(str(exc))
    print(repr(value))
    if fam.has_equation and args.x != 0:
        try:
            print(f"ode_residual {qspecial.ode_residual(fam, args.x, args.q):.3e}")
        except (ArithmeticError, ValueError) as exc:
            print(f"ode_residual unavailable ({exc})")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    if args.command == "verify":
        return cmd_verify(_parse_config(parser, args))
    return cmd_eval(parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
