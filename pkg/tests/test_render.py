import re
import xml.etree.ElementTree as ET

from hypothesis import given

from conftest import chips
from wiremonoids.chips import circle, hook, identity, parse_chip
from wiremonoids.render import CIRCLE_GLYPH, render

NINE = "W9:1-5',2-4,3-5,6-9',7-9,8-8',1'-2',3'-4',6'-7';3"


def pin_rows(text):
    return [ln for ln in text.splitlines() if not ln.startswith("circles:")]


def test_identity_ascii():
    out = render(identity(2))
    rows = pin_rows(out)
    assert len(rows) == 2
    assert all(re.fullmatch(r"\s*\d ─+ \d'", r) for r in rows)
    assert out.splitlines()[-1] == "circles: 0"


def test_circle_ascii():
    out = render(circle(3))
    assert len(pin_rows(out)) == 3
    assert out.splitlines()[-1] == f"circles: 1 {CIRCLE_GLYPH}"


def test_nine_pin_ascii():
    out = render(parse_chip(NINE))
    assert len(pin_rows(out)) == 9
    assert out.count(CIRCLE_GLYPH) == 3
    # the t-wire from 1 is labelled with its far end
    assert "→5'" in pin_rows(out)[0]


def test_hook_ascii_has_arcs():
    rows = pin_rows(render(hook(3, 1)))
    assert "┐" in rows[0] and "┘" in rows[1]
    assert "┌" in rows[0] and "└" in rows[1]


@given(chips(5))
def test_svg_is_well_formed(xi):
    root = ET.fromstring(render(xi, "svg"))
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f"{ns}path")) == xi.degree
    assert len([c for c in root.findall(f"{ns}circle") if c.get("class") == "loop"]) == xi.circles
    assert len(root.findall(f"{ns}rect")) == 1
