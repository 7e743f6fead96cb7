"""Run every suite with its defaults and write one CSV report per suite."""

import argparse
from pathlib import Path

from pqtrig.suites import SUITES, SuiteConfig, run_theorem_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out/suites")
    ap.add_argument("--n", type=int, default=30)
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for name in SUITES:
        report = run_theorem_suite(name, SuiteConfig(n_points=args.n))
        (outdir / f"{name}.csv").write_text(report.to_csv())
        n_bad = len(report.violations)
        print(f"{name:16s} {'PASS' if report.passed else 'FAIL'}  {len(report.results)} configs, {n_bad} violations")


if __name__ == "__main__":
    main()
