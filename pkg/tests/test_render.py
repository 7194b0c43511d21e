import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from hexaflex.geometry import lay_strip
from hexaflex.labeling import StripLabels, build_pattern, strip_labels
from hexaflex.render import render_strip, render_table
from hexaflex.sequences import reduction_history

GOLDEN = Path(__file__).parent / "golden"

_SVG = "{http://www.w3.org/2000/svg}"
_SQRT3_2 = math.sqrt(3.0) / 2.0


def _parts(signs, glue=False):
    strip = lay_strip(signs, glue=glue)
    labels = strip_labels(build_pattern(reduction_history(signs)), glue=glue)
    return strip, labels


def test_golden_front():
    strip, labels = _parts((1, 1, 1))
    svg = render_strip(strip, labels, side="front")
    assert svg == (GOLDEN / "trihexaflexagon_front.svg").read_text()


def test_golden_back():
    strip, labels = _parts((1, 1, 1))
    svg = render_strip(strip, labels, side="back")
    assert svg == (GOLDEN / "trihexaflexagon_back.svg").read_text()


def test_render_deterministic():
    strip, labels = _parts((1, 1, -1, -1), glue=True)
    assert render_strip(strip, labels) == render_strip(strip, labels)


def test_labels_roundtrip():
    strip, labels = _parts((1, 1, 1))
    front = ET.fromstring(render_strip(strip, labels, side="front"))
    back = ET.fromstring(render_strip(strip, labels, side="back"))
    assert [el.text for el in front.iter(f"{_SVG}text")] == [str(v) for v in labels.top]
    assert [el.text for el in back.iter(f"{_SVG}text")] == [str(v) for v in labels.bottom]


def test_polygon_counts():
    strip, labels = _parts((1, 1, -1, -1), glue=True)
    root = ET.fromstring(render_strip(strip, labels))
    assert len(list(root.iter(f"{_SVG}polygon"))) == 13

    plain, short = _parts((1, 1, -1, -1), glue=False)
    root = ET.fromstring(render_strip(plain, short))
    assert len(list(root.iter(f"{_SVG}polygon"))) == 12


def test_polygon_geometry_matches_cells():
    strip, labels = _parts((1, 1, 1))
    scale = 40.0
    root = ET.fromstring(render_strip(strip, labels, scale=scale))
    polys = list(root.iter(f"{_SVG}polygon"))
    assert len(polys) == len(strip.cells)

    corners = [c for cell in strip.cells for c in cell.corners()]
    xs = [a + b / 2.0 for a, b in corners]
    ys = [b * _SQRT3_2 for a, b in corners]
    xmin = min(xs) - 0.25
    ymax = max(ys) + 0.25

    for cell, poly in zip(strip.cells, polys):
        pts = [tuple(map(float, pair.split(","))) for pair in poly.get("points").split()]
        for (px, py), (a, b) in zip(pts, cell.corners()):
            assert px == pytest.approx((a + b / 2.0 - xmin) * scale, abs=2e-3)
            assert py == pytest.approx((ymax - b * _SQRT3_2) * scale, abs=2e-3)


def test_back_is_mirrored():
    strip, labels = _parts((1, 1, 1))
    front = ET.fromstring(render_strip(strip, labels, side="front"))
    back = ET.fromstring(render_strip(strip, labels, side="back"))
    width = float(front.get("width"))

    def poly_points(root):
        out = []
        for poly in root.iter(f"{_SVG}polygon"):
            out.append([tuple(map(float, p.split(","))) for p in poly.get("points").split()])
        return out

    for fpts, bpts in zip(poly_points(front), poly_points(back)):
        for (fx, fy), (bx, by) in zip(fpts, bpts):
            assert bx == pytest.approx(width - fx, abs=2e-3)
            assert by == pytest.approx(fy, abs=2e-3)


def test_render_strip_errors():
    strip, labels = _parts((1, 1, 1))
    with pytest.raises(ValueError):
        render_strip(strip, labels, side="reverse")
    short = StripLabels(top=labels.top[:-1], bottom=labels.bottom[:-1])
    with pytest.raises(ValueError):
        render_strip(strip, short)
    with pytest.raises(ValueError):
        render_strip(strip, labels, scale=0.0)
    with pytest.raises(ValueError):
        render_strip(strip, labels, scale=-4.0)


def test_render_table_plain():
    out = render_table([(3, 1, None), (4, 1, None)])
    assert out == "n,H\n3,1\n4,1\n"


def test_render_table_with_printable():
    out = render_table([(3, 1, 1), (7, 3, 2)])
    assert out == "n,H,Hp\n3,1,1\n7,3,2\n"


def test_render_table_mixed_rows():
    out = render_table([(3, 1, 1), (4, 1, None)])
    assert out == "n,H,Hp\n3,1,1\n4,1,\n"


def test_render_table_empty():
    with pytest.raises(ValueError):
        render_table([])
