"""Rendering: determinism, well-formedness, and path fidelity."""

import re
import xml.etree.ElementTree as ET

import pytest

from qcatalan.inject import geometric_scene
from qcatalan.render import Style, render_ascii, render_svg
from qcatalan.words import path_points

WORKED = ("112112221122", "12111212212212", 2)


def edges(points):
    return {frozenset(pair) for pair in zip(points, points[1:])}


def svg_root(text):
    return ET.fromstring(text)


def path_d_points(d):
    nums = [int(v) for v in re.findall(r"-?\d+", d)]
    return list(zip(nums[0::2], nums[1::2]))


def unmap(pixel_points, big_side, style=None):
    st = style or Style()
    cell, margin = st.cell_size, st.cell_size
    out = []
    for px, py in pixel_points:
        x = (px - margin) // cell
        y = big_side - (py - margin) // cell
        out.append((x, y))
    return out


class TestAscii:
    def test_deterministic(self):
        scene = geometric_scene(*WORKED)
        assert render_ascii(scene) == render_ascii(scene)
        assert render_ascii(scene, "after") == render_ascii(scene, "after")

    def test_seven_bit_only(self):
        scene = geometric_scene(*WORKED)
        for stage in ("before", "after"):
            assert all(ord(ch) < 128 for ch in render_ascii(scene, stage))

    def test_grid_dimensions(self):
        scene = geometric_scene("12", "12", 1)
        lines = render_ascii(scene).split("\n")
        assert len(lines) == 2 * scene.big_side + 1
        assert all(len(line) <= 2 * scene.big_side + 1 for line in lines)

    def test_meet_mark(self):
        scene = geometric_scene("12", "12", 1)
        lines = render_ascii(scene).split("\n")
        mx, my = scene.meet_point
        assert lines[2 * (scene.big_side - my)][2 * mx] == "*"

    def test_worked_example_meet_mark(self):
        scene = geometric_scene(*WORKED)
        lines = render_ascii(scene).split("\n")
        mx, my = scene.meet_point
        assert (mx, my) == (4, 3)
        assert lines[2 * (scene.big_side - my)][2 * mx] == "*"

    def test_stage_validated(self):
        scene = geometric_scene("12", "12", 1)
        with pytest.raises(ValueError):
            render_ascii(scene, stage="during")


class TestSvg:
    def test_deterministic(self):
        scene = geometric_scene(*WORKED)
        for stage in ("before", "after"):
            assert render_svg(scene, stage=stage) == render_svg(scene, stage=stage)

    def test_well_formed_and_element_subset(self):
        scene = geometric_scene(*WORKED)
        for stage in ("before", "after"):
            root = svg_root(render_svg(scene, stage=stage))
            tags = {el.tag.split("}")[-1] for el in root.iter()}
            assert tags <= {"svg", "path", "rect", "circle"}

    def test_path_visits_word_points(self):
        pi, sigma, r = WORKED
        scene = geometric_scene(pi, sigma, r)
        root = svg_root(render_svg(scene))
        paths = [el for el in root.iter() if el.tag.endswith("path")]
        pi_el = [el for el in paths if el.get("stroke") == "red"]
        sigma_el = [el for el in paths if el.get("stroke") == "blue"]
        assert len(pi_el) == 1 and len(sigma_el) == 1
        got_pi = unmap(path_d_points(pi_el[0].get("d")), scene.big_side)
        got_sigma = unmap(path_d_points(sigma_el[0].get("d")), scene.big_side)
        assert got_pi == path_points(pi)
        assert got_sigma == path_points(sigma, origin=(r, r))

    def test_after_stage_recombines_before_segments(self):
        pi, sigma, r = WORKED
        scene = geometric_scene(pi, sigma, r)
        before = edges(scene.pi_path) | edges(scene.sigma_path)
        after = edges(scene.nu_path) | edges(scene.omega_path)
        assert before == after

    def test_shaded_rectangle_area(self):
        scene = geometric_scene(*WORKED)
        root = svg_root(render_svg(scene))
        shaded = [
            el
            for el in root.iter()
            if el.tag.endswith("rect") and el.get("fill") not in (None, "none")
        ]
        assert len(shaded) == 1
        cell = Style().cell_size
        w = int(shaded[0].get("width")) // cell
        h = int(shaded[0].get("height")) // cell
        assert w * h == scene.rectangle_area == 6

    def test_degenerate_inner_square_still_well_formed(self):
        scene = geometric_scene("1122", "12", 2)
        for stage in ("before", "after"):
            svg_root(render_svg(scene, stage=stage))

    def test_custom_style(self):
        scene = geometric_scene("1212", "1122", 1)
        text = render_svg(scene, style=Style(pi_color="#a00", sigma_color="#00a"))
        assert "#a00" in text and "#00a" in text

    def test_meet_circle_present(self):
        scene = geometric_scene("1212", "1122", 1)
        root = svg_root(render_svg(scene))
        circles = [el for el in root.iter() if el.tag.endswith("circle")]
        assert len(circles) == 1
        cell = Style().cell_size
        cx = (int(circles[0].get("cx")) - cell) // cell
        cy = scene.big_side - (int(circles[0].get("cy")) - cell) // cell
        assert (cx, cy) == scene.meet_point
