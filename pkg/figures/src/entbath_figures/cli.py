"""Command line for rendering sweep CSV grids."""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, render_surface


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entbath-figures",
        description="Render negativity / survival-time sweep grids as 3-D surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one CSV grid to an image")
    p.add_argument("--in", dest="input_csv", required=True, help="sweep CSV path")
    p.add_argument("--kind", choices=("en", "ts"), required=True,
                   help="surface kind: negativity (en) or survival time (ts)")
    p.add_argument("--out", dest="output_image", required=True, help="image path")
    p.add_argument("--clip", type=float, default=None,
                   help="ceiling for infinite cells (default: largest finite cell)")
    p.add_argument("--policy", choices=("clip", "hole"), default="clip",
                   help="how to treat infinite cells")
    p.add_argument("--xlabel", default="axis1")
    p.add_argument("--ylabel", default="axis2")
    p.add_argument("--title", default="")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    spec = FigureSpec(
        input_csv=args.input_csv,
        output_image=args.output_image,
        kind=args.kind,
        xlabel=args.xlabel,
        ylabel=args.ylabel,
        title=args.title,
        infinite_policy=args.policy,
        clip_value=args.clip,
    )
    try:
        render_surface(spec)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    sys.exit(main())
