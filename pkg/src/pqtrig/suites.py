"""Executable suites for the convexity theorems and monotonicity lemmas.

Each suite expands into configurations (function, p, q, a, b, check, grid).
Configurations are tagged with a scope:

* ``hypothesis``  - the parameters satisfy the statement's hypotheses; the
  suite passes only if all of these hold;
* ``alt_reading`` - parameters allowed by an alternative reading of an
  ambiguous hypothesis (the T1_4 condition "a <= 0 >= b"), reported only;
* ``probe``       - outside the hypotheses, informational only.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from .config import DEFAULT_CONFIG, NumericConfig, PQError
from .convexity import (
    X_MAX,
    GridSpec,
    TargetFunction,
    check_ab_convex,
    check_derivative_criterion,
    classify_sequence,
    target,
)
from .pqfunctions import PQParams, pi_pq_half

SUITES = ("T1_1", "T1_2", "T1_3", "T1_4", "T1_5", "corollary_T1_5", "L2_7", "L2_8", "L2_9")

DEFAULT_PQ = ((2.0, 2.0), (3.0, 1.5), (4.0, 3.0), (1.2, 5.0), (1.5, 3.0))

HYPOTHESIS = "hypothesis"
ALT_READING = "alt_reading"
PROBE = "probe"


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters shared by all suites; ``ab_set`` replaces a suite's default (a, b) lattice."""

    pq_set: tuple[tuple[float, float], ...] = DEFAULT_PQ
    ab_set: tuple[tuple[float, float], ...] | None = None
    n_points: int = 30
    tol: float = 1e-9
    x_max: float = X_MAX
    probes: bool = True
    random_pairs: int | None = None
    seed: int = 0
    numeric: NumericConfig = DEFAULT_CONFIG


@dataclass(frozen=True)
class Case:
    suite: str
    function: str
    p: float
    q: float
    a: float
    b: float | None
    check: str  # convex | concave | increasing | decreasing | increasing_convex | increasing_concave
    scope: str
    lo: float
    hi: float
    spacing: str = "linear"
    note: str = ""


@dataclass(frozen=True)
class CaseResult:
    case: Case
    verdict: str  # holds | fails | error
    gap: float
    witness_r: float | None = None
    witness_s: float | None = None
    method_agree: bool | None = None
    detail: str = ""


# --------------------------------------------------------------- hypotheses


def in_hypothesis(suite: str, p: float, q: float, a: float, b: float | None) -> str:
    """Scope of (p, q, a, b) for a suite: hypothesis, alt_reading or probe."""
    if suite in ("T1_1", "T1_2"):
        return HYPOTHESIS if a >= 1 and b == a else PROBE
    if suite == "T1_3":
        return HYPOTHESIS if a <= 0 or (0 < a <= b <= 1) else PROBE
    if suite == "T1_4":
        if (a >= 0 >= b) or (0 < b <= a <= 1):
            return HYPOTHESIS
        return ALT_READING if (a <= 0 and b <= 0) else PROBE
    if suite == "T1_5":
        if (p <= 2 and a < 0) or (a <= 0 and b >= 0):
            return HYPOTHESIS
        return PROBE
    if suite == "corollary_T1_5":
        return HYPOTHESIS if a == 0 and b == 0 else PROBE
    if suite in ("L2_7",):
        return HYPOTHESIS
    if suite in ("L2_8", "L2_9"):
        return HYPOTHESIS if a >= 0 else PROBE
    raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")


_DEFAULT_AB = {
    "T1_1": [(a, a) for a in (1.0, 2.0, 3.5)],
    "T1_2": [(a, a) for a in (1.0, 2.0, 3.5)],
    "T1_3": [(a, b) for a in (-2.0, -0.5, 0.0) for b in (-2.0, 0.0, 1.0, 3.0)]
    + [(0.5, 0.5), (0.5, 1.0), (1.0, 1.0)],
    "T1_4": [(a, b) for a in (0.0, 0.5, 1.0, 2.0) for b in (-2.0, -0.5, 0.0)]
    + [(0.5, 0.5), (1.0, 0.5), (1.0, 1.0)]
    + [(a, b) for a in (-2.0, -0.5) for b in (-2.0, -0.5, 0.0)],
    "T1_5": [(a, b) for a in (-2.0, -0.5) for b in (-1.0, 0.0, 2.0)]
    + [(a, b) for a in (-2.0, -0.5, 0.0) for b in (0.0, 1.0, 3.0)],
    "corollary_T1_5": [(0.0, 0.0)],
    "L2_7": [(0.0, 0.0)],
    "L2_8": [(a, 0.0) for a in (0.0, 1.0, 2.5)],
    "L2_9": [(a, 0.0) for a in (0.0, 1.0, 2.5)],
}

_PROBES = {
    "T1_1": [(0.5, 0.5), (1.0, 3.0)],
    "T1_2": [(0.5, 0.5)],
    "T1_3": [(1.0, -5.0), (2.0, 1.0), (0.5, 0.25)],
    "T1_4": [(-1.0, 1.0), (2.0, 1.5)],
    "T1_5": [(0.5, -1.0), (1.0, 1.0)],
    "corollary_T1_5": [],
    "L2_7": [],
    "L2_8": [],
    "L2_9": [],
}

# (function, check, domain kind) per suite; "unit" is (0,1), "half_pi" is (0, pi_pq/2), "long" is (0, x_max]
_FUNCTIONS = {
    "T1_1": [
        ("arcsin_pq", "convex", "unit", ""),
        ("arctan_pq", "concave", "unit", "stated with arctan_p(r), arctan_p(s) on the right; tested as arctan_pq"),
        ("arsinh_pq", "concave", "long", ""),
    ],
    "T1_2": [
        ("sin_pq", "concave", "unit", ""),
        ("cos_pq", "convex", "unit", ""),
        ("tan_pq", "convex", "unit", ""),
        ("sinh_pq", "convex", "unit", "stated with arsinh_pq(s) on the right; tested as sinh_pq"),
    ],
    "T1_3": [("arcsin_pq", "convex", "unit", "")],
    "T1_4": [("arsinh_pq", "concave", "long", "")],
    "T1_5": [("pi_half_minus_arccos_pq", "convex", "unit", "")],
    "corollary_T1_5": [("pi_half_minus_arccos_pq", "convex", "unit", "")],
    "L2_7": [
        ("tan_pq", "increasing_convex", "half_pi", ""),
        ("arctan_pq", "increasing_concave", "unit", ""),
    ],
    "L2_8": [
        ("arcsin_pq", "increasing", "unit", "f"),
        ("arsinh_pq", "decreasing", "long", "g"),
        ("arctan_pq", "decreasing", "unit", "h"),
    ],
    "L2_9": [
        ("sin_pq", "decreasing", "unit", ""),
        ("cos_pq", "increasing", "unit", ""),
        ("tan_pq", "increasing", "unit", ""),
        ("sinh_pq", "increasing", "unit", ""),
    ],
}


def build_cases(suite: str, cfg: SuiteConfig = SuiteConfig()) -> list[Case]:
    """Expand a suite into its configurations, in a fixed order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    pq_set = list(cfg.pq_set)
    if suite == "corollary_T1_5" and (3.0, 3.0) not in pq_set:
        pq_set.append((3.0, 3.0))
    if cfg.ab_set is not None:
        ab_set = list(cfg.ab_set)
    else:
        ab_set = list(_DEFAULT_AB[suite]) + (list(_PROBES[suite]) if cfg.probes else [])
    cases: list[Case] = []
    seen = set()
    for p, q in pq_set:
        for a, b in ab_set:
            scope = in_hypothesis(suite, p, q, a, b)
            for function, check, dom, note in _FUNCTIONS[suite]:
                key = (p, q, a, b, function, check)
                if key in seen:
                    continue
                seen.add(key)
                lo, hi, spacing = _domain(dom, cfg.x_max)
                lemma = suite.startswith("L")
                cases.append(
                    Case(
                        suite=suite,
                        function=function,
                        p=p,
                        q=q,
                        a=a,
                        b=None if lemma else b,
                        check=check,
                        scope=scope,
                        lo=lo,
                        hi=hi,
                        spacing=spacing,
                        note=note,
                    )
                )
    return cases


def _domain(kind: str, x_max: float) -> tuple[float, float, str]:
    if kind == "unit":
        return 0.0, 1.0, "linear"
    if kind == "long":
        return 0.0, x_max, "log"
    if kind == "half_pi":
        return 0.0, math.nan, "linear"  # resolved per (p, q) at run time
    raise ValueError(kind)


# ------------------------------------------------------------------ running


def _grid(case: Case, cfg: SuiteConfig, P: PQParams) -> GridSpec:
    hi = pi_pq_half(P, cfg.numeric) if math.isnan(case.hi) else case.hi
    margin = 1e-4 * (hi - case.lo)
    if case.spacing == "log":
        # log grid over (0, x_max]: start one margin above zero
        return GridSpec(case.lo, hi, cfg.n_points, edge_margin=margin, spacing="log",
                        random_pairs=cfg.random_pairs, seed=cfg.seed)
    return GridSpec(case.lo, hi, cfg.n_points, edge_margin=margin,
                    random_pairs=cfg.random_pairs, seed=cfg.seed)


def _composite(f: TargetFunction, a: float):
    """x -> (f(x)/x)^a f'(x), the functions of the monotonicity lemmas."""
    return lambda x: (f(x) / x) ** a * f.deriv(x)


def run_case(case: Case, cfg: SuiteConfig = SuiteConfig()) -> CaseResult:
    try:
        P = PQParams(case.p, case.q)
        f = target(case.function, P, cfg.numeric)
        grid = _grid(case, cfg, P)
        if case.check in ("convex", "concave"):
            v = check_ab_convex(f, case.a, case.b, grid, cfg.tol, case.check)
            d = check_derivative_criterion(f, case.a, case.b, grid, cfg.tol, case.check)
            w = v.witness
            return CaseResult(
                case,
                "holds" if v.holds else "fails",
                v.worst_gap,
                w.r if w else None,
                w.s if w else None,
                method_agree=(v.holds == d.holds),
                detail=f"criterion trend {d.trend}",
            )
        xs = [float(x) for x in grid.points()]
        if case.check in ("increasing", "decreasing"):
            g = _composite(f, case.a)
            res = classify_sequence(xs, [g(x) for x in xs], cfg.tol)
            holds = res.increasing if case.check == "increasing" else res.decreasing
            gap = res.worst_drop if case.check == "increasing" else res.worst_rise
            return _monotone_result(case, holds, gap, res, xs)
        if case.check in ("increasing_convex", "increasing_concave"):
            vals = [f(x) for x in xs]
            quotients = [(vals[i + 1] - vals[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)]
            mids = [0.5 * (xs[i] + xs[i + 1]) for i in range(len(xs) - 1)]
            res = classify_sequence(mids, quotients, cfg.tol)
            shape_ok = res.increasing if case.check == "increasing_convex" else res.decreasing
            positive = min(quotients) > 0
            gap = res.worst_drop if case.check == "increasing_convex" else res.worst_rise
            return _monotone_result(case, shape_ok and positive, gap, res, mids,
                                    "" if positive else "nonpositive difference quotient")
        raise ValueError(f"unknown check {case.check!r}")
    except PQError as exc:
        return CaseResult(case, "error", math.nan, detail=f"{type(exc).__name__}: {exc}")


def _monotone_result(case, holds, gap, res, xs, detail="") -> CaseResult:
    if holds:
        return CaseResult(case, "holds", gap, detail=detail or res.kind)
    w = res.witness
    if w is None:
        # monotone the wrong way: report the first step
        return CaseResult(case, "fails", gap, xs[0], xs[1], detail=detail or res.kind)
    return CaseResult(case, "fails", gap, w.r, w.s, detail=detail or res.kind)


@dataclass
class SuiteReport:
    results: list[CaseResult] = field(default_factory=list)

    @property
    def hypothesis_results(self) -> list[CaseResult]:
        return [r for r in self.results if r.case.scope == HYPOTHESIS]

    @property
    def passed(self) -> bool:
        return all(r.verdict == "holds" for r in self.hypothesis_results)

    @property
    def violations(self) -> list[CaseResult]:
        return [r for r in self.hypothesis_results if r.verdict != "holds"]

    def extend(self, other: "SuiteReport") -> None:
        self.results.extend(other.results)

    def rows(self) -> list[dict]:
        return [_row(r) for r in self.results]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows())
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [" ".join(f"{k}={v}" for k, v in row.items()) for row in self.rows()]
        return "\n".join(lines) + ("\n" if lines else "")


REPORT_FIELDS = [
    "suite", "p", "q", "a", "b", "verdict", "gap", "witness_r", "witness_s",
    "function", "check", "scope", "method_agree", "note",
]


def fmt(x) -> str:
    """Float formatting used in every CSV: 17 significant digits, empty for None."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "yes" if x else "no"
    return f"{x:.17g}"


def _row(r: CaseResult) -> dict:
    c = r.case
    note = "; ".join(s for s in (c.note, r.detail) if s)
    return {
        "suite": c.suite,
        "p": fmt(c.p),
        "q": fmt(c.q),
        "a": fmt(c.a),
        "b": fmt(c.b),
        "verdict": r.verdict,
        "gap": fmt(r.gap),
        "witness_r": fmt(r.witness_r),
        "witness_s": fmt(r.witness_s),
        "function": c.function,
        "check": c.check,
        "scope": c.scope,
        "method_agree": fmt(r.method_agree),
        "note": note,
    }


def run_theorem_suite(which: str, cfg: SuiteConfig = SuiteConfig()) -> SuiteReport:
    """Run every configuration of one suite, in deterministic order."""
    return SuiteReport([run_case(c, cfg) for c in build_cases(which, cfg)])
