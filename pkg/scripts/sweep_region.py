"""Print the (a,b) region where a function is (a,b)-convex, as an ASCII raster."""

import argparse
import csv
import io
from contextlib import redirect_stdout

from pqtrig.cli import SWEEP_LATTICE, main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fn", default="arcsin_pq")
    ap.add_argument("--p", default="3")
    ap.add_argument("--q", default="4")
    ap.add_argument("--n", default="40")
    ap.add_argument("--direction", default="convex")
    args = ap.parse_args()

    buf = io.StringIO()
    with redirect_stdout(buf):
        cli_main(["sweep", "--fn", args.fn, "--p", args.p, "--q", args.q,
                  "--n", args.n, "--direction", args.direction])
    verdict = {(float(r["a"]), float(r["b"])): r["verdict"] for r in csv.DictReader(io.StringIO(buf.getvalue()))}

    print(f"{args.fn} p={args.p} q={args.q} {args.direction}; '#' holds, '.' fails; rows b, columns a")
    for b in reversed(SWEEP_LATTICE):
        row = "".join("#" if verdict[(float(a), float(b))] == "holds" else "." for a in SWEEP_LATTICE)
        print(f"b={float(b):+5.1f}  {row}")
    print(" " * 9 + "".join("|" if float(a) == 0 else " " for a in SWEEP_LATTICE) + "  a=0 marked")


if __name__ == "__main__":
    main()
