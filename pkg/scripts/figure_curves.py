"""Write Lamé curve samples for a few (p, q) pairs, and a PNG if matplotlib is around."""

import argparse
from pathlib import Path

from pqtrig import PQParams
from pqtrig.lame import c_d_distance, extend_four_quadrants, sample_curve_C, sample_curve_D, to_csv

PAIRS = ((2.0, 2.0), (4.0, 3.0), (1.5, 3.0), (3.0, 1.5))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    curves = {}
    for p, q in PAIRS:
        P = PQParams(p, q)
        c = sample_curve_C(P, args.n + 2)
        d = sample_curve_D(P, args.n)
        curves[(p, q)] = (c, d)
        (outdir / f"curve_p{p:g}_q{q:g}.csv").write_text(
            to_csv(extend_four_quadrants(c) + extend_four_quadrants(d))
        )
        dist, spacing = c_d_distance(P, args.n)
        print(f"p={p:g} q={q:g}  C vs swapped D: {dist:.3e}  (mean spacing {spacing:.3e})")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return
    fig, ax = plt.subplots(figsize=(5, 5))
    for (p, q), (c, _) in curves.items():
        pts = extend_four_quadrants(c)
        ax.plot([s.x for s in pts], [s.y for s in pts], ".", ms=1.5, label=f"p={p:g}, q={q:g}")
    ax.set_aspect("equal")
    ax.legend(fontsize=7)
    fig.savefig(outdir / "curves.png", dpi=150)


if __name__ == "__main__":
    main()
