from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from momentkit import builders as b
from momentkit.geometry import convex_hull
from momentkit.lie import build_root_system
from momentkit.render import FigureSpec, RenderError, project, render

NS = "{http://www.w3.org/2000/svg}"


def parse(svg: str) -> ET.Element:
    root = ET.fromstring(svg.split("?>", 1)[1])
    assert root.tag == NS + "svg" and root.get("version") == "1.1"
    return root


def model_figure(m, **kw) -> FigureSpec:
    return FigureSpec(polytopes=[(convex_hull(m.images()), "solid")],
                      points=[(p.image, p.id) for p in m.fixed_points], **kw)


def test_so5_star_figure():
    m = b.so5_example(1, 1)
    root = parse(render(model_figure(m, root_system=m.root_system)))
    solid = root.find(f"{NS}g[@class='solid']")
    assert len(solid.findall(f"{NS}line")) == 8
    circles = root.findall(f".//{NS}circle")
    assert len(circles) == len({p.image for p in m.fixed_points})
    labels = " ".join(t.text for t in root.findall(f".//{NS}text")).split()
    assert sorted(labels) == sorted(p.id for p in m.fixed_points) and len(labels) == 16
    assert len(root.find(f"{NS}g[@class='walls']").findall(f"{NS}line")) == 4


def test_su3_overlay_is_dashed():
    base = b.su3_natural(1, 1)
    fig = model_figure(base)
    fig.polytopes.append((convex_hull(b.su3_natural(F(3, 2), F(3, 4)).images()), "dashed"))
    svg = render(fig)
    root = parse(svg)
    dashed = root.find(f"{NS}g[@class='dashed']")
    assert dashed.get("stroke-dasharray") == "6,4"
    solid = root.find(f"{NS}g[@class='solid']")
    assert len(dashed.findall(f"{NS}line")) == len(solid.findall(f"{NS}line")) == 3
    coords = lambda g: {tuple(el.attrib.items()) for el in g}
    assert coords(dashed).isdisjoint(coords(solid))
    assert render(fig) == svg


def test_empty_overlay_gives_base_only():
    fig = FigureSpec(polytopes=[(convex_hull(b.su3_skew(1, 2).images()), "solid")])
    root = parse(render(fig))
    assert root.find(f"{NS}g[@class='dashed']") is None
    assert root.find(f"{NS}g[@class='solid']") is not None


def test_fixed_decimals():
    svg = render(model_figure(b.su3_natural(F(1, 3), F(2, 7))))
    for el in parse(svg).iter(NS + "line"):
        for key in ("x1", "y1", "x2", "y2"):
            v = el.get(key)
            assert v in ("0", "400") or len(v.split(".")[1]) == 6


def test_projection_frame():
    assert project((1, -1, 0)) == pytest.approx((math.sqrt(2), 0))
    assert project((1, 1, -2)) == pytest.approx((0, math.sqrt(6)))
    assert project((F(1, 2), 3)) == (0.5, 3.0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_projection_is_isometric_on_sum_zero_plane(ab):
    v = (ab[0], ab[1], -ab[0] - ab[1])
    assert math.hypot(*project(v)) == pytest.approx(math.sqrt(sum(c * c for c in v)))


def test_non_planar_input_is_rejected():
    with pytest.raises(RenderError):
        project((1, 0, 0))
    with pytest.raises(RenderError):
        project((1, 0, 0, -1))
    cube = convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    with pytest.raises(RenderError):
        render(FigureSpec(polytopes=[(cube, "solid")]))
    with pytest.raises(RenderError):
        render(FigureSpec())
    with pytest.raises(RenderError):
        render(FigureSpec(polytopes=[(cube, "dotted")]))


def test_title_is_escaped():
    svg = render(FigureSpec(polytopes=[(convex_hull([(0, 0), (1, 0), (0, 1)]), "solid")], title="a<b"))
    assert parse(svg).find(f"{NS}title").text == "a<b"


def test_walls_for_a2():
    fig = model_figure(b.su3_natural(1, 1), root_system=build_root_system("A", 2))
    assert len(parse(render(fig)).find(f"{NS}g[@class='walls']").findall(f"{NS}line")) == 3
