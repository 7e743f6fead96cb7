"""Command-line interface: tab, curve, verify, sweep.

Exit codes: 0 success, 1 an in-hypothesis suite configuration failed,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import functools
import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass, replace

import numpy as np

from .config import DEFAULT_CONFIG, PQError
from .convexity import FUNCTION_TAGS, GridSpec, check_ab_convex, custom, natural_domain, target
from .lame import extend_four_quadrants, sample_curve_C, sample_curve_D, write_csv
from .pqfunctions import PQParams
from .suites import SUITES, SuiteConfig, fmt, run_theorem_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

SWEEP_LATTICE = tuple(np.round(np.arange(-2.0, 2.0 + 1e-9, 0.5), 10))
# sweep draws this many seeded random (r, s) pairs per grid point requested
PAIRS_PER_POINT = 4


@dataclass(frozen=True)
class CliConfig:
    command: str
    p: float | None = 2.0
    q: float | None = 2.0
    function: str = "arcsin_pq"
    a: float | None = None
    b: float | None = None
    grid_n: int | None = 100
    lo: float | None = None
    hi: float | None = None
    tol: float = 1e-9
    out: str = "-"
    seed: int = 0
    suite: str | None = None
    direction: str = "convex"
    fmt: str = "csv"


def _exponent(name: str):
    def parse(text: str) -> float:
        try:
            v = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be a real number > 1 (got {text!r})")
        if not (v > 1 and math.isfinite(v)):
            raise argparse.ArgumentTypeError(f"{name} must be > 1 (got {text})")
        return v

    return parse


def _grid_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"n must be an integer >= 2 (got {text!r})")
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2 (got {n})")
    return n


def _seed(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"seed must be nonnegative (got {n})")
    return n


class _Parser(argparse.ArgumentParser):
    # one-line diagnostics instead of the usage block
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pqtrig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, pq_default=2.0, n_default=100):
        sp.add_argument("--p", type=_exponent("p"), default=pq_default)
        sp.add_argument("--q", type=_exponent("q"), default=pq_default)
        sp.add_argument("--n", dest="grid_n", type=_grid_n, default=n_default)
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--out", default="-", help="output path, '-' for stdout")
        sp.add_argument("--seed", type=_seed, default=0)

    tab = sub.add_parser("tab", help="tabulate one function on its natural domain")
    common(tab)
    tab.add_argument("--fn", dest="function", choices=FUNCTION_TAGS, required=True)
    tab.add_argument("--lo", type=float)
    tab.add_argument("--hi", type=float)

    curve = sub.add_parser("curve", help="Lamé curve samples (both parametrizations, four quadrants)")
    common(curve)

    verify = sub.add_parser("verify", help="run one theorem or lemma suite")
    # without --p/--q/--n the suite's documented defaults are used
    common(verify, pq_default=None, n_default=None)
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("--a", type=float)
    verify.add_argument("--b", type=float)
    verify.add_argument("--format", dest="fmt", choices=("csv", "text"), default="csv")

    sweep = sub.add_parser("sweep", help="(a,b) lattice raster of check_ab_convex for one function")
    common(sweep)
    sweep.add_argument("--fn", dest="function", choices=FUNCTION_TAGS + ("identity",), required=True)
    sweep.add_argument("--direction", choices=("convex", "concave"), default="convex")
    sweep.add_argument("--lo", type=float)
    sweep.add_argument("--hi", type=float)
    return parser


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _interval(cfg: CliConfig, P: PQParams | None) -> tuple[float, float]:
    if cfg.function == "identity":
        lo, hi = 0.0, 1.0
    else:
        lo, hi = natural_domain(cfg.function, P, DEFAULT_CONFIG)
    lo = lo if cfg.lo is None else cfg.lo
    hi = hi if cfg.hi is None else cfg.hi
    if not lo < hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    return lo, hi


def cmd_tab(cfg: CliConfig) -> int:
    P = PQParams(cfg.p, cfg.q)
    f = target(cfg.function, P)
    lo, hi = _interval(cfg, P)
    xs = GridSpec(lo, hi, cfg.grid_n).points()
    rows = [(float(x), f(float(x))) for x in xs]
    with _open_out(cfg.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("x", cfg.function))
        w.writerows((fmt(x), fmt(y)) for x, y in rows)
    return EXIT_OK


def cmd_curve(cfg: CliConfig) -> int:
    P = PQParams(cfg.p, cfg.q)
    samples = extend_four_quadrants(sample_curve_C(P, cfg.grid_n + 2))
    samples += extend_four_quadrants(sample_curve_D(P, cfg.grid_n))
    with _open_out(cfg.out) as fh:
        write_csv(samples, fh)
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    kwargs = {"tol": cfg.tol, "seed": cfg.seed}
    if cfg.p is not None or cfg.q is not None:
        kwargs["pq_set"] = ((cfg.p or 2.0, cfg.q or 2.0),)
    if cfg.a is not None or cfg.b is not None:
        a = cfg.a if cfg.a is not None else cfg.b
        b = cfg.b if cfg.b is not None else a
        kwargs["ab_set"] = ((a, b),)
    if cfg.grid_n is not None:
        kwargs["n_points"] = cfg.grid_n
    report = run_theorem_suite(cfg.suite, SuiteConfig(**kwargs))
    with _open_out(cfg.out) as fh:
        fh.write(report.to_csv() if cfg.fmt == "csv" else report.to_text())
    for r in report.violations:
        c = r.case
        print(
            f"violation: {c.suite} {c.function} p={c.p:g} q={c.q:g} a={c.a:g} b={c.b} "
            f"gap={r.gap:.3e} at r={r.witness_r} s={r.witness_s}",
            file=sys.stderr,
        )
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_sweep(cfg: CliConfig) -> int:
    if cfg.function == "identity":
        f = custom(lambda x: x, lambda x: 1.0, (0.0, 1.0), tag="identity")
        P = None
    else:
        P = PQParams(cfg.p, cfg.q)
        f = target(cfg.function, P)
    lo, hi = _interval(cfg, P)
    # the same r, s pairs recur at every lattice point
    f = replace(f, value=functools.lru_cache(maxsize=None)(f.value))
    grid = GridSpec(lo, hi, cfg.grid_n, random_pairs=PAIRS_PER_POINT * cfg.grid_n, seed=cfg.seed)
    with _open_out(cfg.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("a", "b", "verdict", "gap"))
        for a in SWEEP_LATTICE:
            for b in SWEEP_LATTICE:
                v = check_ab_convex(f, float(a), float(b), grid, cfg.tol, cfg.direction)
                w.writerow((fmt(float(a)), fmt(float(b)), "holds" if v.holds else "fails", fmt(v.worst_gap)))
    return EXIT_OK


COMMANDS = {"tab": cmd_tab, "curve": cmd_curve, "verify": cmd_verify, "sweep": cmd_sweep}


def parse_config(argv=None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(**vars(ns))


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse already printed its message
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[cfg.command](cfg)
    except (PQError, ValueError) as exc:
        print(f"pqtrig {cfg.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
