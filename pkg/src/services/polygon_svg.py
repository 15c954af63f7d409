# -*- coding: utf-8 -*-
"""Newton polygon SVG snapshots."""

import io
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

from matplotlib import rcParams  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from src.core.config import get_settings  # noqa: E402
from src.core.logging import get_logger  # noqa: E402
from src.services.mpoly import Point  # noqa: E402
from src.services.poly_parser import format_rational  # noqa: E402

logger = get_logger(__name__)

# Stable element ids so identical inputs give identical files
rcParams["svg.hashsalt"] = "newton-polygon"


def _label(point: Point) -> str:
    b, a = point
    return f"({b},{format_rational(Fraction(a))})"


def render_polygon_svg(
    points: Iterable[Point],
    chain: list[Point],
    title: str = "",
    width: int | None = None,
    height: int | None = None,
) -> str:
    """Render support points and the hull chain as a standalone SVG document.

    Args:
        points: Support points (b, a)
        chain: Lower hull vertices from newton_polygon
        title: Optional plot title
        width: Image width in pixels (default from settings)
        height: Image height in pixels (default from settings)
    """
    settings = get_settings()
    width = width or settings.svg_width
    height = height or settings.svg_height
    # SVG user units are points
    dpi = 72

    points = sorted(points)
    fig = Figure(figsize=(width / dpi, height / dpi), dpi=dpi)
    ax = fig.add_subplot()

    bs = [b for b, _ in points]
    as_ = [float(a) for _, a in points]
    ax.scatter(bs, as_, color="black", zorder=3)
    for point in points:
        ax.annotate(_label(point), (point[0], float(point[1])), textcoords="offset points", xytext=(4, 4))

    if len(chain) > 1:
        ax.plot([b for b, _ in chain], [float(a) for _, a in chain], color="tab:blue", linewidth=1.5)

    ax.set_xlim(-0.5, max(bs) + 1)
    ax.set_ylim(-0.5, max(as_) + 1)
    ax.axhline(0, color="grey", linewidth=0.8)
    ax.axvline(0, color="grey", linewidth=0.8)
    ax.set_xlabel("y-exponent b")
    ax.set_ylabel("x-exponent a")
    ax.grid(True, linestyle=":", linewidth=0.5)
    if title:
        ax.set_title(title)

    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def write_polygon_svg(path: Path, points: Iterable[Point], chain: list[Point], title: str = "") -> Path:
    """Write an SVG snapshot to ``path``, creating parent directories."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_polygon_svg(points, chain, title=title), encoding="utf-8")
    logger.debug("Polygon snapshot written", path=str(path))
    return path
