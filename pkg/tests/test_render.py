import re
import xml.etree.ElementTree as ET

import pytest

from arcstats import PartitionError, PerfectMatching, parse_partition, set_partitions
from arcstats.render import RenderSpec, count_elements, highlighted_pairs, render_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def _paths(svg, kind):
    root = ET.fromstring(svg.split("\n", 1)[1])
    return [el for el in root.iter(f"{SVG_NS}path") if el.get("data-kind") == kind]


def test_plain_diagram(worked_example):
    svg = render_svg(RenderSpec(worked_example))
    assert count_elements(svg, "vertex") == 8
    assert count_elements(svg, "arc") == 5
    assert count_elements(svg, "half-arc") == 0
    assert {p.get("data-arc") for p in _paths(svg, "arc")} == {"1-3", "2-6", "3-7", "4-5", "7-8"}


def test_extended_diagram(worked_example):
    svg = render_svg(RenderSpec(worked_example, extended=True))
    assert count_elements(svg, "arc") == 5
    halves = {p.get("data-arc") for p in _paths(svg, "half-arc")}
    assert halves == {"-inf-1", "-inf-2", "-inf-4", "5-+inf", "6-+inf", "8-+inf"}


def _end_height(path):
    # y coordinate at the end of the quarter-ellipse before the horizontal run
    nums = re.findall(r"-?\d+\.\d+", path.get("d"))
    return float(nums[-1])


def test_half_arcs_nest_without_crossing(worked_example):
    svg = render_svg(RenderSpec(worked_example, extended=True))
    left = {p.get("data-arc"): _end_height(p) for p in _paths(svg, "half-arc") if "left" in p.get("class")}
    right = {p.get("data-arc"): _end_height(p) for p in _paths(svg, "half-arc") if "right" in p.get("class")}
    # smaller y is higher: openers further right run higher, closers further left run higher
    assert left["-inf-4"] < left["-inf-2"] < left["-inf-1"]
    assert right["5-+inf"] < right["6-+inf"] < right["8-+inf"]


@pytest.mark.parametrize("n", [1, 3, 5])
def test_element_counts_over_family(n):
    for p in set_partitions(n):
        svg = render_svg(RenderSpec(p, extended=True))
        assert count_elements(svg, "arc") == len(p.arcs)
        assert count_elements(svg, "half-arc") == 2 * len(p.blocks)


def test_deterministic(worked_example):
    spec = RenderSpec(worked_example, extended=True, width=500, height=200)
    assert render_svg(spec) == render_svg(spec)


def test_highlight_crossings():
    m = PerfectMatching.from_pairs([(1, 3), (2, 4)])
    assert len(highlighted_pairs(m, "crossings")) == 1
    svg = render_svg(RenderSpec(m, highlight="crossings"))
    marked = [p for p in _paths(svg, "arc") if "highlight" in p.get("class")]
    assert {p.get("data-arc") for p in marked} == {"1-3", "2-4"}
    assert "crossings: (1,3)x(2,4)" in svg
    none = render_svg(RenderSpec(m, highlight="nestings"))
    assert "highlight" not in "".join(p.get("class") for p in _paths(none, "arc"))


def test_spec_validation(worked_example):
    with pytest.raises(PartitionError):
        RenderSpec(worked_example, highlight="crossings")
    with pytest.raises(ValueError):
        RenderSpec(PerfectMatching.from_pairs([(1, 2)]), highlight="loops")
    with pytest.raises(ValueError):
        RenderSpec(worked_example, width=10)


def test_single_vertex():
    svg = render_svg(RenderSpec(parse_partition("1", 1), extended=True))
    assert count_elements(svg, "half-arc") == 2
