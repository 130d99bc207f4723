"""Tests for the SVG/CSV plot emitter.

Documents are parsed back with ElementTree; markers are found by class
and data-n.
"""

import csv
import xml.etree.ElementTree as ET

import pytest

from core.exceptions import OutputWriteError, PlotConfigError
from core.oracle import sieve
from core.plotting import MarkerGlyphs, PlotConfig, StrokeStyle, render_cycle_strip, render_rays, write_points_csv, write_svg
from core.rays import RayKind, polar_coordinates, ray_kind

SVG = "{http://www.w3.org/2000/svg}"


def _markers(document: str, tag: str, css_class: str) -> list[int]:
    root = ET.fromstring(document.encode("utf-8"))
    return sorted(
        int(el.get("data-n"))
        for el in root.iter(SVG + tag)
        if css_class in (el.get("class") or "").split()
    )


@pytest.fixture
def primes():
    return sieve(1000)


class TestPlotConfig:
    """PlotConfig validation."""

    def test_from_settings(self):
        """Defaults come from settings.yaml."""
        config = PlotConfig.from_settings(100)
        assert config.width_px == 800
        assert config.height_px == 800
        assert config.thick_style.color == "#1f3a93"

    def test_override_size(self):
        """Explicit sizes win over settings."""
        config = PlotConfig.from_settings(100, width_px=320, height_px=240)
        assert (config.width_px, config.height_px) == (320, 240)

    @pytest.mark.parametrize("width,height", [(63, 800), (800, 10)])
    def test_viewport_too_small(self, width, height):
        """Either side below 64 px raises PlotConfigError."""
        with pytest.raises(PlotConfigError):
            PlotConfig.from_settings(100, width_px=width, height_px=height)

    def test_max_n_positive(self):
        """max_n must be at least 1."""
        with pytest.raises(PlotConfigError):
            PlotConfig(max_n=0, width_px=100, height_px=100,
                       thick_style=StrokeStyle(1.0, "#000"), thin_style=StrokeStyle(0.5, "#999"))

    def test_unknown_glyph(self):
        """Glyphs are circle, square or cross."""
        with pytest.raises(PlotConfigError):
            PlotConfig(max_n=10, width_px=100, height_px=100,
                       thick_style=StrokeStyle(1.0, "#000"), thin_style=StrokeStyle(0.5, "#999"),
                       markers=MarkerGlyphs(non_candidate="star"))


class TestRays:
    """render_rays."""

    def test_one_point_per_number(self, primes):
        """One circle per n in 1..max_n, in order."""
        doc = render_rays(PlotConfig.from_settings(720), primes)
        root = ET.fromstring(doc.encode("utf-8"))
        circles = list(root.iter(SVG + "circle"))
        assert [int(c.get("data-n")) for c in circles] == list(range(1, 721))

    def test_ninety_six_guides(self, primes):
        """One guide per thick ray."""
        doc = render_rays(PlotConfig.from_settings(360), primes)
        root = ET.fromstring(doc.encode("utf-8"))
        guides = [el for el in root.iter(SVG + "line") if el.get("class") == "ray-guide"]
        assert len(guides) == 96

    def test_primes_on_thick_rays(self, primes):
        """Primes above 5 never sit on a thin ray."""
        doc = render_rays(PlotConfig.from_settings(720), primes)
        prime_points = _markers(doc, "circle", "prime")
        thin_points = set(_markers(doc, "circle", "thin"))
        assert prime_points[:4] == [2, 3, 5, 7]
        assert not {p for p in prime_points if p > 5} & thin_points
        assert 7 in _markers(doc, "circle", "thick")
        assert 9 in thin_points

    def test_small_viewport_contains_every_point(self, primes):
        """max_n=100 on 64x64 keeps every point inside the viewBox."""
        doc = render_rays(PlotConfig.from_settings(100, width_px=64, height_px=64), primes)
        root = ET.fromstring(doc.encode("utf-8"))
        points = [c for c in root.iter(SVG + "circle") if c.get("data-n")]
        assert len(points) == 100
        for c in points:
            assert 0 <= float(c.get("cx")) <= 64
            assert 0 <= float(c.get("cy")) <= 64

    def test_point_count_at_3600(self):
        """One point per number up to 3600."""
        doc = render_rays(PlotConfig.from_settings(3600), sieve(3600))
        root = ET.fromstring(doc.encode("utf-8"))
        assert sum(1 for c in root.iter(SVG + "circle") if c.get("data-n")) == 3600

    def test_styling_follows_ray_kind(self):
        """Every point is classed thick or thin exactly as ray_kind says."""
        doc = render_rays(PlotConfig.from_settings(3600), sieve(3600))
        thick = set(_markers(doc, "circle", "thick"))
        thin = set(_markers(doc, "circle", "thin"))
        assert thick | thin == set(range(1, 3601))
        assert not thick & thin
        for n in range(1, 3601):
            assert (n in thick) == (ray_kind(n) is RayKind.THICK)

    def test_points_at_polar_placement(self, primes):
        """Drawn centers are the polar placement scaled into the viewport."""
        config = PlotConfig.from_settings(720)
        doc = render_rays(config, primes)
        root = ET.fromstring(doc.encode("utf-8"))
        scale = 0.48 * min(config.width_px, config.height_px) / config.max_n
        for c in root.iter(SVG + "circle"):
            point = polar_coordinates(int(c.get("data-n")))
            assert float(c.get("cx")) == pytest.approx(config.width_px / 2 + point.x * scale, abs=0.006)
            assert float(c.get("cy")) == pytest.approx(config.height_px / 2 - point.y * scale, abs=0.006)

    def test_deterministic(self, primes):
        """Same config, same bytes."""
        config = PlotConfig.from_settings(500)
        assert render_rays(config, primes) == render_rays(config, primes)


class TestCycleStrip:
    """render_cycle_strip in verdict and primes-only modes."""

    def test_squares_at_77_and_91(self, primes):
        """The only candidate composites in 50..109."""
        doc = render_cycle_strip(50, 60, primes)
        assert _markers(doc, "rect", "candidate-composite") == [77, 91]

    def test_one_block(self, primes):
        """Seven circles, one square and 22 crosses in block 0."""
        doc = render_cycle_strip(50, 30, primes)
        assert len(_markers(doc, "circle", "candidate-prime")) == 7
        assert len(_markers(doc, "rect", "candidate-composite")) == 1
        assert len(_markers(doc, "path", "non-candidate")) == 22

    def test_special_primes(self, primes):
        """2, 3 and 5 are circles; 1 is a candidate composite."""
        doc = render_cycle_strip(1, 10, primes)
        assert _markers(doc, "circle", "special-prime") == [2, 3, 5]
        assert _markers(doc, "path", "non-candidate") == [4, 6, 8, 9, 10]
        assert _markers(doc, "rect", "candidate-composite") == [1]

    def test_primes_only(self, primes):
        """Only primes remain and realized twins are linked."""
        doc = render_cycle_strip(50, 60, primes, primes_only=True)
        assert _markers(doc, "circle", "candidate-prime") == [
            53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
        ]
        assert _markers(doc, "rect", "candidate-composite") == []
        assert _markers(doc, "path", "non-candidate") == []
        root = ET.fromstring(doc.encode("utf-8"))
        links = [int(el.get("data-p")) for el in root.iter(SVG + "line") if el.get("class") == "twin-link"]
        assert links == [59, 71, 101, 107]

    def test_labels(self, primes):
        """Every number is labelled in order."""
        doc = render_cycle_strip(50, 30, primes)
        root = ET.fromstring(doc.encode("utf-8"))
        labels = [el.text for el in root.iter(SVG + "text") if el.get("class") == "label"]
        assert labels == [str(n) for n in range(50, 80)]

    def test_custom_glyphs(self, primes):
        """Configured glyphs replace the defaults per verdict."""
        base = PlotConfig.from_settings(79)
        config = PlotConfig(max_n=79, width_px=base.width_px, height_px=base.height_px,
                            thick_style=base.thick_style, thin_style=base.thin_style,
                            markers=MarkerGlyphs(candidate_composite="cross", non_candidate="square"))
        doc = render_cycle_strip(50, 30, primes, config=config)
        assert _markers(doc, "path", "candidate-composite") == [77]
        assert len(_markers(doc, "rect", "non-candidate")) == 22

    @pytest.mark.parametrize("count", [0, -5])
    def test_empty_strip_rejected(self, count):
        """count must be at least 1."""
        with pytest.raises(PlotConfigError):
            render_cycle_strip(50, count)


class TestWriters:
    """write_svg and write_points_csv."""

    def test_write_svg(self, tmp_path, primes):
        """The document is written unchanged."""
        doc = render_cycle_strip(50, 30, primes)
        path = write_svg(doc, tmp_path / "strip.svg")
        assert path.read_text(encoding="utf-8") == doc

    def test_write_svg_unwritable(self, tmp_path):
        """A directory destination raises OutputWriteError."""
        with pytest.raises(OutputWriteError):
            write_svg("<svg/>", tmp_path)

    def test_points_csv(self, tmp_path):
        """Header and rows for 1..max_n."""
        path = tmp_path / "points.csv"
        assert write_points_csv(10, path) == 10
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["n", "x", "y", "ray_degree", "kind"]
        assert rows[7] == ["7", rows[7][1], rows[7][2], "7", "thick"]
        assert rows[9][4] == "thin"

    def test_points_csv_far_row(self, tmp_path):
        """A single far row carries the worked coordinates and ray."""
        path = tmp_path / "far.csv"
        assert write_points_csv(7310033, path, start=7310033) == 1
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        assert abs(float(rows[1][1]) - (-4399287.68)) <= 0.5
        assert abs(float(rows[1][2]) - (-5838051.93)) <= 0.5
        assert rows[1][3:] == ["233", "thick"]
