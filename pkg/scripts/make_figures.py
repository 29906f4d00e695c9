#!/usr/bin/env python3
"""Emit the four bundled sweep grids as CSV (negativity and survival-time
surfaces) ready for rendering.

Usage: python scripts/make_figures.py [--outdir out] [--steps 101] [--workers 4]
"""

import argparse
from pathlib import Path

from entbath.sweep import SweepConfig, run_sweep, write_csv, write_metadata

PRESETS = ("fig1a", "fig1b", "fig2a", "fig2b")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out", help="output directory (default: out)")
    ap.add_argument("--steps", type=int, default=101, help="grid points per axis")
    ap.add_argument("--workers", type=int, default=4, help="parallel row workers")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for preset in PRESETS:
        cfg = SweepConfig.from_preset(preset, steps=args.steps)
        grid = run_sweep(cfg, workers=args.workers)
        csv_path = outdir / f"{preset}.csv"
        write_csv(grid, str(csv_path))
        write_metadata(grid, str(outdir / f"{preset}.meta.json"))
        kind = grid.metadata["kind"]
        print(f"wrote {csv_path}  ({kind}, {args.steps}x{args.steps})")
    print(
        "render with: entbath-figures render --in out/fig1a.csv --kind en --out fig1a.png"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
