"""Finite portion of the developing map: the tessellation by flag triangles.

Starting from the canonical seed triangle, neighbouring tiles are attached
breadth-first across frontier edges, one new flag per edge, with exact
rational flags throughout.  The seed triangle of the surface develops to
the canonical normal form (V0 = [0,0,1], V1 = [1,0,1], V2 = [0,1,1]),
which lies in the affine patch z = 1; convexity and conic tests are run in
that patch.

The inscribed domain is the union of the tiles' point triangles; the
circumscribed family (whose intersection is the dual domain) consists of
the triangles cut out by the three flag lines of each tile and can be
drawn by the SVG emitter, but no intersection polytope is computed.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DepthLimitExceeded, PatchOverflow, TooFewVertices
from .flags import extend_across_edge, reconstruct_triangle
from .linalg import cross, det3

DEFAULT_DEPTH_CAP = 6
DEFAULT_DENOMINATOR_BITS = 4096


@dataclass(frozen=True)
class Tile:
    """One lifted triangle: flags indexed by the surface triangle's corners."""

    id: int
    triangle: int
    flags: tuple
    depth: int
    parent: tuple  # (parent tile id, side crossed) or None


@dataclass
class Tessellation:
    surface: object
    coords: object
    tiles: list = field(default_factory=list)
    adjacency: dict = field(default_factory=dict)  # (tile id, side) -> (tile id, side)

    def vertices(self):
        """Distinct tile-corner points (projective normal forms)."""
        seen = {}
        for tile in self.tiles:
            for f in tile.flags:
                seen.setdefault(f.point._normalized(), f.point)
        return list(seen.values())

    def tile_count_at(self, depth):
        return sum(1 for t in self.tiles if t.depth == depth)


def _check_size(flag, bit_cap):
    for value in flag.point.v + flag.line.v:
        if (
            value.numerator.bit_length() > bit_cap
            or value.denominator.bit_length() > bit_cap
        ):
            raise DepthLimitExceeded(
                f"flag coordinates exceed {bit_cap} bits; lower the depth"
            )


def develop(coords, depth, seed_triangle=0, depth_cap=DEFAULT_DEPTH_CAP,
            denominator_bits=DEFAULT_DENOMINATOR_BITS):
    """Breadth-first tessellation of combinatorial radius ``depth``.

    Every frontier edge of every generation grows one new tile; tiles over
    the same surface triangle reached along different paths are distinct
    (the tessellation lives in the universal cover).
    """
    if depth < 0:
        raise DepthLimitExceeded("depth must be non-negative")
    if depth > depth_cap:
        raise DepthLimitExceeded(
            f"requested depth {depth} exceeds the configured cap {depth_cap}"
        )
    surface = coords.surface
    seed = Tile(
        id=0,
        triangle=seed_triangle,
        flags=tuple(reconstruct_triangle(coords.tri_value(seed_triangle))),
        depth=0,
        parent=None,
    )
    tess = Tessellation(surface=surface, coords=coords, tiles=[seed])
    frontier = [seed]
    for generation in range(1, depth + 1):
        new_frontier = []
        for tile in frontier:
            for side in range(3):
                if (tile.id, side) in tess.adjacency:
                    continue
                new_tile = _attach(tess, tile, side, generation, denominator_bits)
                new_frontier.append(new_tile)
        frontier = new_frontier
    return tess


def _attach(tess, tile, side, generation, bit_cap):
    surface, coords = tess.surface, tess.coords
    slot = (tile.triangle, side)
    rev = surface.reverse(slot)
    t2, k2 = rev
    k = side
    f_tail = tile.flags[(k + 1) % 3]
    f_head = tile.flags[k]
    aux = tile.flags[(k + 2) % 3]
    new_flag = extend_across_edge(
        f_tail,
        f_head,
        coords.edge_value(slot),
        coords.edge_value(rev),
        coords.tri_value(t2),
        aux=aux.point,
    )
    _check_size(new_flag, bit_cap)
    flags = [None, None, None]
    flags[k2] = f_tail
    flags[(k2 + 1) % 3] = f_head
    flags[(k2 + 2) % 3] = new_flag
    new_tile = Tile(
        id=len(tess.tiles),
        triangle=t2,
        flags=tuple(flags),
        depth=generation,
        parent=(tile.id, side),
    )
    tess.tiles.append(new_tile)
    tess.adjacency[(tile.id, side)] = (new_tile.id, k2)
    tess.adjacency[(new_tile.id, k2)] = (tile.id, side)
    return new_tile


# --- exact checks -----------------------------------------------------------


def _affine(point):
    x, y, z = point.v
    if z == 0:
        raise PatchOverflow("vertex left the affine patch z = 1")
    return (x / z, y / z)


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def convexity_check(tess):
    """Exact convexity of the developed union in the affine patch.

    True iff every tile is positively oriented in the patch, tile
    interiors are pairwise disjoint, and the boundary vertices of the
    union are in strictly convex position.  Raises PatchOverflow when a
    vertex escapes the patch.
    """
    tris = []
    for tile in tess.tiles:
        pts = tuple(_affine(f.point) for f in tile.flags)
        if _orient(*pts) <= 0:
            return False
        tris.append(pts)
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            if not _disjoint_interiors(tris[i], tris[j]):
                return False
    boundary = set()
    for tile in tess.tiles:
        for side in range(3):
            if (tile.id, side) not in tess.adjacency:
                boundary.add(_affine(tile.flags[side].point))
                boundary.add(_affine(tile.flags[(side + 1) % 3].point))
    if len(boundary) >= 3:
        hull = _convex_hull(sorted(boundary))
        if set(hull) != boundary:
            return False
    return True


def _disjoint_interiors(t1, t2):
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        for p, q in ((t1, t2), (t2, t1)):
            edge_a, edge_b, inner = p[a], p[b], p[c]
            side = 1 if _orient(edge_a, edge_b, inner) > 0 else -1
            if all(side * _orient(edge_a, edge_b, v) <= 0 for v in q):
                return True
    return False


def _convex_hull(points):
    """Strictly convex hull (no collinear interior points), monotone chain."""
    if len(points) <= 2:
        return list(points)
    def chain(pts):
        out = []
        for p in pts:
            while len(out) >= 2 and _orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out
    lower = chain(points)
    upper = chain(list(reversed(points)))
    return lower[:-1] + upper[:-1]


def conic_residual(tess):
    """Relative smallest singular value of the conic fit through all vertices.

    Each distinct vertex contributes the Veronese row
    (x^2, xy, y^2, xz, yz, z^2) of its unit-normalised homogeneous vector;
    the residual is sigma_min / sigma_max of the row-normalised matrix.
    Near zero exactly when one conic passes through every vertex.
    """
    verts = tess.vertices()
    if len(verts) < 6:
        raise TooFewVertices(f"conic fit needs 6 vertices, got {len(verts)}")
    rows = []
    for p in verts:
        v = np.array([float(x) for x in p.v])
        v = v / np.linalg.norm(v)
        row = np.array(
            [v[0] ** 2, v[0] * v[1], v[1] ** 2, v[0] * v[2], v[1] * v[2], v[2] ** 2]
        )
        rows.append(row / np.linalg.norm(row))
    sing = np.linalg.svd(np.array(rows), compute_uv=False)
    return float(sing[-1] / sing[0])


# --- SVG emitter -----------------------------------------------------------


@dataclass
class SvgOptions:
    width: float = 640.0
    height: float = 640.0
    margin: float = 0.06
    stroke: str = "#1b3a6b"
    stroke_width: float = 1.2
    fill: str = "#dbe7f6"
    draw_flag_lines: bool = False
    flag_stroke: str = "#c0392b"
    warnings: list = field(default_factory=list)


def emit_svg(tess, opts=None):
    """Deterministic SVG 1.1 document with one polygon per tile."""
    opts = opts or SvgOptions()
    if opts.width <= 0 or opts.height <= 0:
        opts.warnings.append(
            f"degenerate viewport {opts.width}x{opts.height}; clamped to 640x640"
        )
        opts.width, opts.height = 640.0, 640.0
    pts = []
    for tile in tess.tiles:
        pts.extend(_affine(f.point) for f in tile.flags)
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = span * opts.margin
    x0, y0, span = x0 - pad, y0 - pad, span + 2 * pad
    scale = min(opts.width, opts.height) / span

    def screen(p):
        return (
            (float(p[0]) - x0) * scale,
            opts.height - (float(p[1]) - y0) * scale,
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opts.width:g}" height="{opts.height:g}" '
        f'viewBox="0 0 {opts.width:g} {opts.height:g}">',
    ]
    for tile in tess.tiles:
        corners = " ".join(
            "%.4f,%.4f" % screen(_affine(f.point)) for f in tile.flags
        )
        lines.append(
            f'<polygon points="{corners}" fill="{opts.fill}" '
            f'stroke="{opts.stroke}" stroke-width="{opts.stroke_width:g}"/>'
        )
    if opts.draw_flag_lines:
        box = (x0, y0, x0 + span, y0 + span)
        for tile in tess.tiles:
            for f in tile.flags:
                seg = _clip_line(f.line.v, box)
                if seg is None:
                    continue
                (ax, ay), (bx, by) = (screen(seg[0]), screen(seg[1]))
                lines.append(
                    f'<line x1="%.4f" y1="%.4f" x2="%.4f" y2="%.4f" '
                    f'stroke="{opts.flag_stroke}" '
                    f'stroke-width="{opts.stroke_width / 2:g}"/>'
                    % (ax, ay, bx, by)
                )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _clip_line(line, box):
    """Clip the projective line a x + b y + c = 0 to a bounding box."""
    a, b, c = (float(v) for v in line)
    x0, y0, x1, y1 = (float(v) for v in box)
    points = []
    if b != 0:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 - 1e-12 <= y <= y1 + 1e-12:
                points.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 - 1e-12 <= x <= x1 + 1e-12:
                points.append((x, y))
    uniq = []
    for p in points:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    return uniq[0], uniq[1]


# --- fidelity helpers (used by tests and reports) ----------------------------


def tile_triple_ratio(tess, tile):
    from .flags import triple_ratio

    return triple_ratio(*tile.flags)


def shared_edge_ratios(tess, tile_id, side):
    """(value on the old tile's slot, value on the partner slot) recomputed.

    The crossing from tile (t, side) to its neighbour develops the
    quadruple (tail, right corner, head, new); its two edge ratios must
    reproduce the coordinates of the corresponding slots exactly.
    """
    from .flags import quadruple_ratio

    tile = tess.tiles[tile_id]
    other_id, k2 = tess.adjacency[(tile_id, side)]
    other = tess.tiles[other_id]
    f_tail = tile.flags[(side + 1) % 3]
    f_head = tile.flags[side]
    aux = tile.flags[(side + 2) % 3]
    new_flag = other.flags[(k2 + 2) % 3]
    out_ratio = quadruple_ratio(f_tail, aux, f_head, new_flag)
    in_ratio = quadruple_ratio(f_head, new_flag, f_tail, aux)
    return out_ratio, in_ratio
