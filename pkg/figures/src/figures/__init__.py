"""Figures for bound-sweep CSVs."""

from .render import (
    DEFAULT_STYLES,
    REQUIRED_COLUMNS,
    FigureSpec,
    build_figure,
    read_sweep,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_STYLES",
    "FigureSpec",
    "REQUIRED_COLUMNS",
    "build_figure",
    "read_sweep",
    "render",
]
