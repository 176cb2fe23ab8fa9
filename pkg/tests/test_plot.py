"""Structure and determinism of the arrangement SVG."""

import pytest

from relu_fiber import DimensionError, arrangement_svg, make_parameter
from conftest import F1, F2


def test_worked_example_has_three_lines_and_zero_set():
    svg = arrangement_svg(F1, (-6, -6, 6, 6), 200)
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<line ") == 3
    assert svg.count("<path ") == 1
    d = svg.split('<path d="', 1)[1].split('"', 1)[0]
    assert d.startswith("M ") and len(d) > 10


def test_partner_example_same_shape():
    svg = arrangement_svg(F2, (-6, -6, 6, 6), 200)
    assert svg.count("<line ") == 3
    assert svg.count("<path ") == 1


def test_single_vertical_line():
    p = make_parameter(2, 1, 1, [["1"]], [["1", "0"]], ["0"], ["0"])
    svg = arrangement_svg(p, (-6, -6, 6, 6), 40)
    assert svg.count("<line ") == 1
    # the line x == 0 maps to the canvas midline
    chunk = svg.split("<line ", 1)[1]
    assert 'x1="300.000"' in chunk and 'x2="300.000"' in chunk


def test_deterministic_output():
    a = arrangement_svg(F1, (-6, -6, 6, 6), 120)
    b = arrangement_svg(F1, (-6, -6, 6, 6), 120)
    assert a == b


def test_line_outside_window_is_dropped():
    p = make_parameter(2, 1, 1, [["1"]], [["1", "0"]], ["-100"], ["0"])
    svg = arrangement_svg(p, (-6, -6, 6, 6), 10)
    assert svg.count("<line ") == 0


def test_requires_plane_domain():
    p = make_parameter(1, 1, 1, [["1"]], [["1"]], ["0"], ["0"])
    with pytest.raises(DimensionError):
        arrangement_svg(p)
