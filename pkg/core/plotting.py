"""Plot emitter - desk-scale SVG figures and CSV point dumps.

Figures:
- rays: every n <= max_n at its polar placement; points on the 96 thick rays
  styled "thick", the rest "thin", primes additionally classed "prime".
- cycle strip: a number line in rows of 30. By default non-candidates are crosses,
  candidate primes circles, candidate composites squares.
- primes strip: only the primes remain, with realized twin primes linked.

Output is assembled as text (no timestamps, no randomness, fixed float
formatting) so identical input gives byte-identical documents. Every marker
carries data-n and a class naming its verdict so tests can parse it back.
"""

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Union
from xml.sax.saxutils import escape

import numpy as np

from core.exceptions import OutputWriteError, PlotConfigError
from core.oracle import PrimalityOracle, as_oracle
from core.rays import RayKind, polar_array, polar_coordinates, ray_kind, thick_ray_degrees
from core.settings import Settings
from core.twins import is_twin_position
from core.wheel import SPECIAL_PRIMES, is_candidate, require_natural

MIN_VIEWPORT_PX = 64
RADIUS_FILL = 0.48
STRIP_ROW = 30
STRIP_MARGIN = 16

FONT_FAMILY = "Inter, system-ui, Helvetica, Arial"
GLYPHS = frozenset({"circle", "square", "cross"})


@dataclass(frozen=True)
class StrokeStyle:
    width_px: float
    color: str


@dataclass(frozen=True)
class MarkerGlyphs:
    candidate_prime: str = "circle"
    candidate_composite: str = "square"
    non_candidate: str = "cross"


@dataclass(frozen=True)
class PlotConfig:
    """Figure configuration.

    INVARIANTS:
    - width_px, height_px >= 64
    - max_n >= 1
    """
    max_n: int
    width_px: int
    height_px: int
    thick_style: StrokeStyle
    thin_style: StrokeStyle
    prime_color: str = "#c0392b"
    cell_px: int = 24
    point_radius_px: float = 1.2
    markers: MarkerGlyphs = field(default_factory=MarkerGlyphs)

    def __post_init__(self):
        if self.width_px < MIN_VIEWPORT_PX or self.height_px < MIN_VIEWPORT_PX:
            raise PlotConfigError(
                f"viewport {self.width_px}x{self.height_px} is below {MIN_VIEWPORT_PX}x{MIN_VIEWPORT_PX}"
            )
        if isinstance(self.max_n, bool) or not isinstance(self.max_n, int) or self.max_n < 1:
            raise PlotConfigError(f"max_n must be >= 1, got {self.max_n!r}")
        if self.cell_px < 4:
            raise PlotConfigError(f"cell_px must be >= 4, got {self.cell_px}")
        if self.point_radius_px <= 0:
            raise PlotConfigError(f"point_radius_px must be > 0, got {self.point_radius_px}")
        for glyph in (self.markers.candidate_prime, self.markers.candidate_composite,
                      self.markers.non_candidate):
            if glyph not in GLYPHS:
                raise PlotConfigError(f"unknown marker glyph {glyph!r}, expected one of {sorted(GLYPHS)}")

    @classmethod
    def from_settings(cls, max_n: int, width_px: Optional[int] = None,
                      height_px: Optional[int] = None) -> "PlotConfig":
        """Build a config from settings.yaml, overriding size when given."""
        plot = Settings.get().plot
        return cls(
            max_n=max_n,
            width_px=plot.width_px if width_px is None else width_px,
            height_px=plot.height_px if height_px is None else height_px,
            thick_style=StrokeStyle(plot.thick_stroke_px, plot.thick_color),
            thin_style=StrokeStyle(plot.thin_stroke_px, plot.thin_color),
            prime_color=plot.prime_color,
            cell_px=plot.cell_px,
            point_radius_px=plot.point_radius_px,
        )


def _svg_open(width: float, height: float, title: str, style: str) -> List[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:g}" height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f'<title>{escape(title)}</title>',
        f'<style>{style}</style>',
        f'<rect x="0" y="0" width="{width:g}" height="{height:g}" fill="white"/>',
    ]


def _glyph(shape: str, css_class: str, n: int, x: float, y: float, half: float) -> str:
    if shape == "circle":
        return f'<circle class="{css_class}" data-n="{n}" cx="{x:.2f}" cy="{y:.2f}" r="{half:.2f}"/>'
    if shape == "square":
        return (
            f'<rect class="{css_class}" data-n="{n}" x="{x - half:.2f}" y="{y - half:.2f}" '
            f'width="{2 * half:.2f}" height="{2 * half:.2f}"/>'
        )
    return (
        f'<path class="{css_class}" data-n="{n}" '
        f'd="M{x - half:.2f},{y - half:.2f}L{x + half:.2f},{y + half:.2f}'
        f'M{x - half:.2f},{y + half:.2f}L{x + half:.2f},{y - half:.2f}"/>'
    )


def render_rays(config: PlotConfig, oracle: Optional[PrimalityOracle] = None) -> str:
    """One point per n <= max_n at its polar placement, origin centered.

    Radius max_n maps to 48% of the smaller viewport side.
    """
    check = as_oracle(oracle)
    w, h = config.width_px, config.height_px
    cx0, cy0 = w / 2, h / 2
    scale = RADIUS_FILL * min(w, h) / config.max_n
    thick, thin = config.thick_style, config.thin_style

    style = (
        f".thick{{fill:{thick.color}}}"
        f".thin{{fill:{thin.color}}}"
        f".prime{{fill:{config.prime_color}}}"
        f".ray-guide{{stroke:{thick.color};stroke-opacity:0.15;stroke-width:{thick.width_px / 2:g}}}"
    )
    parts = _svg_open(w, h, f"Wheel rays 1-{config.max_n}", style)

    # faint guides along the 96 thick rays
    reach = RADIUS_FILL * min(w, h)
    parts.append('<g class="guides">')
    for degree in thick_ray_degrees():
        end = polar_coordinates(360 + degree)
        ux, uy = end.x / end.n, end.y / end.n
        parts.append(
            f'<line class="ray-guide" data-degree="{degree}" x1="{cx0:.2f}" y1="{cy0:.2f}" '
            f'x2="{cx0 + ux * reach:.2f}" y2="{cy0 - uy * reach:.2f}"/>'
        )
    parts.append('</g>')

    xs, ys = polar_array(np.arange(1, config.max_n + 1, dtype=np.int64))
    parts.append('<g class="points">')
    for n, x, y in zip(range(1, config.max_n + 1), xs.tolist(), ys.tolist()):
        kind = ray_kind(n)
        radius = config.point_radius_px if kind is RayKind.THICK else config.point_radius_px / 2
        classes = kind.value + (" prime" if check(n) else "")
        parts.append(
            f'<circle class="{classes}" data-n="{n}" cx="{cx0 + x * scale:.2f}" '
            f'cy="{cy0 - y * scale:.2f}" r="{radius:g}"/>'
        )
    parts.append('</g>')
    parts.append('</svg>')

    logging.debug(f"Rendered rays figure: {config.max_n} points")
    return "\n".join(parts) + "\n"


def render_cycle_strip(start: int, count: int, oracle: Optional[PrimalityOracle] = None,
                       config: Optional[PlotConfig] = None, primes_only: bool = False) -> str:
    """Number line from start, 30 numbers per row.

    primes_only drops every non-prime marker and links realized twin primes.

    Raises:
        PlotConfigError: count < 1
    """
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise PlotConfigError(f"count must be >= 1, got {count!r}")
    start = require_natural(start, "start")
    check = as_oracle(oracle)
    if config is None:
        config = PlotConfig.from_settings(max_n=start + count - 1)

    cell = config.cell_px
    half = cell * 0.3
    columns = min(count, STRIP_ROW)
    rows = (count + STRIP_ROW - 1) // STRIP_ROW
    width = 2 * STRIP_MARGIN + columns * cell
    height = 2 * STRIP_MARGIN + rows * cell * 1.5

    def center(n: int) -> tuple[float, float]:
        offset = n - start
        return (STRIP_MARGIN + (offset % STRIP_ROW + 0.5) * cell,
                STRIP_MARGIN + (offset // STRIP_ROW) * cell * 1.5 + 0.5 * cell)

    thick, thin = config.thick_style, config.thin_style
    style = (
        f".candidate-prime,.special-prime{{fill:{config.prime_color}}}"
        f".candidate-composite{{fill:{thick.color}}}"
        f".non-candidate{{stroke:{thin.color};stroke-width:{thin.width_px * 2:g};fill:none}}"
        f".twin-link{{stroke:{config.prime_color};stroke-width:{thick.width_px:g}}}"
        f".label{{font-family:{FONT_FAMILY};font-size:{cell * 0.3:g}px;fill:#555;text-anchor:middle}}"
    )
    title = f"{'Primes' if primes_only else 'Cycle strip'} {start}-{start + count - 1}"
    parts = _svg_open(width, height, title, style)

    markers = config.markers
    primes: set[int] = set()
    parts.append('<g class="markers">')
    for n in range(start, start + count):
        x, y = center(n)
        prime = check(n)
        if prime:
            primes.add(n)

        if primes_only and not prime:
            continue
        if n in SPECIAL_PRIMES:
            parts.append(_glyph(markers.candidate_prime, "special-prime", n, x, y, half))
        elif is_candidate(n) and prime:
            parts.append(_glyph(markers.candidate_prime, "candidate-prime", n, x, y, half))
        elif is_candidate(n):
            parts.append(_glyph(markers.candidate_composite, "candidate-composite", n, x, y, half))
        else:
            parts.append(_glyph(markers.non_candidate, "non-candidate", n, x, y, half))
    parts.append('</g>')

    if primes_only:
        parts.append('<g class="twins">')
        for p in sorted(primes):
            if p + 2 in primes and is_twin_position(p):
                (x1, y1), (x2, y2) = center(p), center(p + 2)
                parts.append(
                    f'<line class="twin-link" data-p="{p}" x1="{x1:.2f}" y1="{y1 + half * 1.6:.2f}" '
                    f'x2="{x2:.2f}" y2="{y2 + half * 1.6:.2f}"/>'
                )
        parts.append('</g>')

    parts.append('<g class="labels">')
    for n in range(start, start + count):
        x, y = center(n)
        parts.append(f'<text class="label" x="{x:.2f}" y="{y + cell * 0.75:.2f}">{n}</text>')
    parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"


def write_svg(document: str, path: Union[str, Path]) -> Path:
    """Write an SVG document.

    Raises:
        OutputWriteError: destination not writable
    """
    destination = Path(path)
    try:
        destination.write_text(document, encoding="utf-8", newline="\n")
    except OSError as e:
        raise OutputWriteError(str(destination), e) from e
    logging.info(f"Wrote SVG to {destination} ({len(document)} bytes)")
    return destination


def write_points_csv(max_n: int, path: Union[str, Path], start: int = 1) -> int:
    """Write `n,x,y,ray_degree,kind` rows for start..max_n; returns data rows written.

    Raises:
        OutputWriteError: destination not writable
    """
    max_n = require_natural(max_n, "max_n")
    start = require_natural(start, "start")
    destination = Path(path)
    rows = 0
    try:
        with open(destination, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["n", "x", "y", "ray_degree", "kind"])
            for n in range(start, max_n + 1):
                point = polar_coordinates(n)
                writer.writerow([n, f"{point.x:.6f}", f"{point.y:.6f}", point.ray_degree, ray_kind(n).value])
                rows += 1
    except OSError as e:
        raise OutputWriteError(str(destination), e) from e
    logging.info(f"Wrote {rows} point rows to {destination}")
    return rows
