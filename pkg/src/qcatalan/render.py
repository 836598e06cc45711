"""Deterministic ASCII and SVG pictures of injection scenes.

Both renderers draw the overlapping squares, the two lattice paths, the
meeting point, and the shaded lower-right rectangle whose area is the
inversion shift.  Output is byte-identical for identical inputs: integer
coordinates only, fixed element order, no timestamps.

Coordinates are lattice points with the origin at the lower left; the
vertical axis is flipped only at emission time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .inject import Scene


@dataclass(frozen=True)
class Style:
    pi_color: str = "red"
    sigma_color: str = "blue"
    cell_size: int = 24
    path_stroke: int = 3
    grid_stroke: int = 1

_STAGES = ("before", "after")


def _check_stage(stage: str) -> None:
    if stage not in _STAGES:
        raise ValueError(f"stage must be one of {_STAGES}, got {stage!r}")


def _split_at_meet(scene: Scene) -> tuple[list, list, list, list]:
    """Split nu/omega point lists at the meeting point.

    omega inherits pi's steps before the meet and sigma's after; nu the
    other way around.  Slices share the meeting point so strokes join.
    """
    mx, my = scene.meet_point
    i_omega = mx + my
    i_nu = mx + my - 2 * scene.r
    omega = list(scene.omega_path)
    nu = list(scene.nu_path)
    return (
        omega[: i_omega + 1],   # from pi
        omega[i_omega:],        # from sigma
        nu[: i_nu + 1],         # from sigma
        nu[i_nu:],              # from pi
    )


# --- ASCII ---------------------------------------------------------------

_PI_GLYPHS = ("-", "|")
_SIGMA_GLYPHS = ("=", "!")


def _ascii_draw_path(canvas: list[list[str]], side: int, points, glyphs) -> None:
    hglyph, vglyph = glyphs
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if y1 == y0:  # horizontal edge
            row, col = 2 * (side - y0), 2 * min(x0, x1) + 1
            glyph = hglyph
        else:
            row, col = 2 * (side - max(y0, y1)) + 1, 2 * x0
            glyph = vglyph
        cell = canvas[row][col]
        canvas[row][col] = "#" if cell not in (".", " ", "x", glyph) else glyph


def _ascii_mark(canvas: list[list[str]], side: int, point, glyph: str) -> None:
    x, y = point
    canvas[2 * (side - y)][2 * x] = glyph


def render_ascii(scene: Scene, stage: str = "before") -> str:
    """Fixed-width character grid for one scene stage.

    Glyphs: '-'/'|' edges inherited from pi, '='/'!' from sigma, '#' where
    both paths use an edge, '*' the meeting point, '+' square corners,
    'x' the shaded rectangle, '.' all other lattice points.
    """
    _check_stage(stage)
    side = scene.big_side
    size = 2 * side + 1
    canvas = [[" "] * size for _ in range(size)]
    for y in range(side + 1):
        for x in range(side + 1):
            _ascii_mark(canvas, side, (x, y), ".")

    rx, ry, rw, rh = scene.rectangle
    for y in range(ry, ry + rh):
        for x in range(rx, rx + rw):
            canvas[2 * (side - y) - 1][2 * x + 1] = "x"

    if stage == "before":
        corner_squares = [ (0, 0, scene.k), (scene.r, scene.r, scene.l), (0, 0, side) ]
    else:
        corner_squares = [ (scene.r, scene.r, scene.k - scene.r), (0, 0, side) ]
    for ox, oy, s in corner_squares:
        for cx, cy in ((ox, oy), (ox + s, oy), (ox, oy + s), (ox + s, oy + s)):
            _ascii_mark(canvas, side, (cx, cy), "+")

    if stage == "before":
        _ascii_draw_path(canvas, side, scene.pi_path, _PI_GLYPHS)
        _ascii_draw_path(canvas, side, scene.sigma_path, _SIGMA_GLYPHS)
    else:
        om_pi, om_sigma, nu_sigma, nu_pi = _split_at_meet(scene)
        _ascii_draw_path(canvas, side, om_pi, _PI_GLYPHS)
        _ascii_draw_path(canvas, side, om_sigma, _SIGMA_GLYPHS)
        _ascii_draw_path(canvas, side, nu_sigma, _SIGMA_GLYPHS)
        _ascii_draw_path(canvas, side, nu_pi, _PI_GLYPHS)

    _ascii_mark(canvas, side, scene.meet_point, "*")
    return "\n".join("".join(row).rstrip() for row in canvas)


# --- SVG -----------------------------------------------------------------


def _svg_path(points, color: str, width: int, sx, sy) -> str:
    d = f"M{sx(points[0][0])} {sy(points[0][1])}" + "".join(
        f" L{sx(x)} {sy(y)}" for x, y in points[1:]
    )
    return f'<path d="{d}" fill="none" stroke="{color}" stroke-width="{width}"/>'


def render_svg(scene: Scene, style: Style | None = None, stage: str = "before") -> str:
    """Standalone SVG document (path, rect, and circle elements only)."""
    _check_stage(stage)
    st = style or Style()
    cell = st.cell_size
    side = scene.big_side
    margin = cell
    size = 2 * margin + side * cell

    def sx(x: int) -> int:
        return margin + x * cell

    def sy(y: int) -> int:
        return margin + (side - y) * cell

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]

    grid = []
    for i in range(side + 1):
        grid.append(f"M{sx(0)} {sy(i)} L{sx(side)} {sy(i)}")
        grid.append(f"M{sx(i)} {sy(0)} L{sx(i)} {sy(side)}")
    parts.append(
        f'<path d="{" ".join(grid)}" fill="none" stroke="#dddddd" '
        f'stroke-width="{st.grid_stroke}"/>'
    )

    rx, ry, rw, rh = scene.rectangle
    if rw > 0 and rh > 0:
        parts.append(
            f'<rect x="{sx(rx)}" y="{sy(ry + rh)}" width="{rw * cell}" '
            f'height="{rh * cell}" fill="#cccccc" stroke="none"/>'
        )

    if stage == "before":
        squares = [(0, 0, scene.k), (scene.r, scene.r, scene.l), (0, 0, side)]
    else:
        squares = [(scene.r, scene.r, scene.k - scene.r), (0, 0, side)]
    for ox, oy, s in squares:
        parts.append(
            f'<rect x="{sx(ox)}" y="{sy(oy + s)}" width="{s * cell}" '
            f'height="{s * cell}" fill="none" stroke="#444444" '
            f'stroke-width="{st.grid_stroke}"/>'
        )

    if stage == "before":
        parts.append(_svg_path(scene.pi_path, st.pi_color, st.path_stroke, sx, sy))
        parts.append(_svg_path(scene.sigma_path, st.sigma_color, st.path_stroke, sx, sy))
    else:
        om_pi, om_sigma, nu_sigma, nu_pi = _split_at_meet(scene)
        parts.append(_svg_path(om_pi, st.pi_color, st.path_stroke, sx, sy))
        parts.append(_svg_path(om_sigma, st.sigma_color, st.path_stroke, sx, sy))
        if len(nu_sigma) > 1:
            parts.append(_svg_path(nu_sigma, st.sigma_color, st.path_stroke, sx, sy))
        if len(nu_pi) > 1:
            parts.append(_svg_path(nu_pi, st.pi_color, st.path_stroke, sx, sy))

    mx, my = scene.meet_point
    radius = max(2, cell // 6)
    parts.append(f'<circle cx="{sx(mx)}" cy="{sy(my)}" r="{radius}" fill="#000000"/>')
    parts.append("</svg>")
    return "\n".join(parts)
