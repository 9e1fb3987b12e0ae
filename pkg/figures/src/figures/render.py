"""Render a bound-sweep CSV as one figure: four estimate curves, two
reference entropy curves, everything against the mixing parameter lambda.

The input schema is the sweep CSV written by the designent command line
tool; this package consumes the file format only and never imports the
library that produced it.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import matplotlib
import numpy as np
from matplotlib.figure import Figure

REQUIRED_COLUMNS = ("lambda", "LT", "UT", "LCh", "UCh", "H1", "H2")

# estimates drawn solid/dashed by scheme, reference entropies dotted
DEFAULT_STYLES: dict[str, str] = {
    "LT": "solid",
    "UT": "solid",
    "LCh": "dashed",
    "UCh": "dashed",
    "H1": "dotted",
    "H2": "dotted",
}

_LEGEND = {
    "LT": "LT-estimate",
    "UT": "UT-estimate",
    "LCh": "LCh-estimate",
    "UCh": "UCh-estimate",
    "H1": "H1",
    "H2": "H2",
}

# fixed salt and no date stamp keep repeated renders byte-identical
_DETERMINISTIC_RC = {"svg.fonttype": "none", "svg.hashsalt": "figures"}


@dataclass(frozen=True)
class FigureSpec:
    """One figure: where the sweep lives, what to call it, where to draw it.

    The output suffix picks the format; vector (.svg) is the default when
    the path has no suffix or no output is given at all.
    """

    input_csv: str | Path
    title: str = ""
    output: str | Path | None = None
    styles: Mapping[str, str] = field(
        default_factory=lambda: dict(DEFAULT_STYLES)
    )

    def output_path(self) -> Path:
        if self.output is None:
            return Path(self.input_csv).with_suffix(".svg")
        out = Path(self.output)
        return out if out.suffix else out.with_suffix(".svg")


def read_sweep(path: str | Path) -> dict[str, np.ndarray]:
    """Parse a sweep CSV into named columns, validating the schema."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected a sweep CSV")
        missing = [name for name in REQUIRED_COLUMNS if name not in header]
        if missing:
            raise ValueError(f"{path}: missing columns {', '.join(missing)}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} cells")
            try:
                rows.append([float(cell) for cell in row])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric cell") from None
    if len(rows) < 2:
        raise ValueError(f"{path}: need at least 2 data rows, got {len(rows)}")
    table = np.asarray(rows)
    return {name: table[:, header.index(name)] for name in REQUIRED_COLUMNS}


def build_figure(spec: FigureSpec) -> Figure:
    """Assemble the six-curve figure without touching the filesystem."""
    columns = read_sweep(spec.input_csv)
    grid = columns["lambda"]
    fig = Figure(figsize=(6.4, 4.8))
    ax = fig.add_subplot()
    for name in REQUIRED_COLUMNS[1:]:
        style = spec.styles.get(name, DEFAULT_STYLES[name])
        ax.plot(grid, columns[name], linestyle=style, label=_LEGEND[name])
    ax.set_xlabel("$\\lambda$")
    ax.set_ylabel("entropy")
    if spec.title:
        ax.set_title(spec.title)
    ax.legend()
    return fig


def render(spec: FigureSpec) -> Path:
    """Write the figure for spec and return the image path."""
    fig = build_figure(spec)
    out = spec.output_path()
    with matplotlib.rc_context(_DETERMINISTIC_RC):
        if out.suffix == ".svg":
            fig.savefig(out, metadata={"Date": None})
        else:
            fig.savefig(out)
    return out


def _parse_style(text: str) -> tuple[str, str]:
    name, _, style = text.partition("=")
    if name not in DEFAULT_STYLES or not style:
        raise argparse.ArgumentTypeError(
            f"expected COLUMN=LINESTYLE with column one of {', '.join(DEFAULT_STYLES)}"
        )
    return name, style


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="designfig", description=__doc__.splitlines()[0]
    )
    parser.add_argument("--input", required=True, help="sweep CSV to plot")
    parser.add_argument("--title", default="", help="figure title")
    parser.add_argument(
        "--output",
        default=None,
        help="image path; suffix picks the format, default <input>.svg",
    )
    parser.add_argument(
        "--style",
        type=_parse_style,
        action="append",
        default=[],
        metavar="COLUMN=LINESTYLE",
        help="override a curve's line style (repeatable)",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    styles = dict(DEFAULT_STYLES)
    styles.update(args.style)
    spec = FigureSpec(
        input_csv=args.input, title=args.title, output=args.output, styles=styles
    )
    try:
        out = render(spec)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
