import pytest

from monideal import AmbientConfig, Ideal, RenderSpec, parse_ideal, render_svg
from monideal.errors import DimensionError

D2 = AmbientConfig(2)


def boundary(svg):
    part = svg.split('<g id="boundary"')[1].split("</g>")[0]
    return [line for line in part.splitlines() if line.startswith("<line")]


def corners(svg):
    part = svg.split('<g id="corners"')[1].split("</g>")[0]
    return [line for line in part.splitlines() if line.startswith("<circle")]


def test_open_corner():
    svg = render_svg(parse_ideal("(x1 x2^>1)", D2))
    lines = boundary(svg)
    vertical = [seg for seg in lines if 'x1="160.00"' in seg and 'x2="160.00"' in seg]
    horizontal = [seg for seg in lines if seg not in vertical]
    assert vertical and all("dasharray" not in seg for seg in vertical)
    assert horizontal and all("dasharray" in seg for seg in horizontal)
    (circle,) = corners(svg)
    assert 'fill="#ffffff"' in circle


def test_closed_corner():
    svg = render_svg(parse_ideal("(x1 x2)", D2))
    assert all("dasharray" not in seg for seg in boundary(svg))
    (circle,) = corners(svg)
    assert 'fill="#ffffff"' not in circle


def test_deterministic_and_sized():
    i = parse_ideal("(x1^>1, x2, x1 x2^1/2)", D2)
    spec = RenderSpec(size=200)
    assert render_svg(i, spec) == render_svg(i, spec)
    assert 'width="200"' in render_svg(i, spec)


def test_zero_ideal_has_no_region():
    svg = render_svg(Ideal.zero(D2))
    assert "<rect" not in svg


def test_only_two_variables():
    with pytest.raises(DimensionError):
        render_svg(parse_ideal("(x1)", AmbientConfig(3)))
