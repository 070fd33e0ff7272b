"""render_figure <id> <csv...> -o <file>  (SVG or PNG by extension)."""

from __future__ import annotations

import argparse
import sys

from .render import RenderError, load_spec, render


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="render_figure", description=__doc__)
    ap.add_argument("figure_id", type=int, help="figure id (2, 3, 4, or 5)")
    ap.add_argument("csvs", nargs="+", metavar="csv", help="input CSV files")
    ap.add_argument("-o", "--out", required=True, help="output image path")
    args = ap.parse_args(argv)
    try:
        spec = load_spec(args.figure_id, args.csvs, args.out)
        render(spec)
    except (RenderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
