"""Coordinate vectors on a triangulated surface and their transition maps.

A coordinate vector assigns a positive rational to every triangle (triple
ratio) and every oriented edge, i.e. every slot (edge ratio).  The
transition maps implemented here are

* ``reverse_orientation``: every value is inverted;
* ``dualize``: the point/line duality in the edge frame
      e20 -> e02 t012 (t023 + 1) / (t012 + 1),
      e02 -> e20 t023 (t012 + 1) / (t023 + 1),
      t   -> 1/t;
* ``flip_transport``: the change of coordinates for an edge flip.

Flip conventions follow the local square with the flipped edge directed
"0 -> 2", left triangle (0,2,3) and right triangle (0,1,2), both
anticlockwise.  Each oriented edge around the square picks up a
multiplicative correction:

    role e01: e02/(e02+1)                 role e10: (e02+1) t012 e20 / D1
    role e12: D1/(e20+1)                  role e21: (e20+1)
    role e23: e20/(e20+1)                 role e32: e02 t023 (e20+1) / D2
    role e30: D2/(e02+1)                  role e03: (e02+1)

with D1 = e02 t012 e20 + t012 e20 + e20 + 1 and
     D2 = e02 t023 e20 + e02 t023 + e02 + 1; the new diagonal gets
    e13 = (e20+1)/((e02+1) t012 e20),  e31 = (e02+1)/(e02 t023 (e20+1)),
and the triangles t130 = t023 D1/D2, t123 = t012 D2/D1.

On surfaces where boundary sides of the square are identified (the
once-punctured torus, for instance) one slot can play several roles; the
corrections of all its roles multiply.  For an embedded square this
reduces to the displayed transition map.

Cell keys: a triangle is its integer index, an oriented edge is its slot
tuple; a plain dict over these keys works for any scalar ring, which is
how the Poisson module pushes dual numbers through these maps.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveParameter, SelfGluedEdge
from .surface import Surface


def cell_order(surface):
    """Canonical cell order: triangle indices, then slots sorted."""
    return list(range(surface.n_triangles)) + sorted(
        (t, s) for t in range(surface.n_triangles) for s in range(3)
    )


def flip_values(surface, values, flip_result):
    """Transport a cell -> scalar mapping through a flip (any scalar ring).

    The square's inner slots carry (e10, e21, e32, e03) and their partners
    (e01, e12, e23, e30); every slot picks up the corrections of all the
    roles it plays, which matters when boundary sides of the square are
    identified on the surface.
    """
    sq = flip_result.square
    d, sd = sq.diagonal
    e02, e20 = values[d], values[sd]
    t012, t023 = values[sq.tri_right], values[sq.tri_left]
    d1 = e02 * t012 * e20 + t012 * e20 + e20 + 1
    d2 = e02 * t023 * e20 + e02 * t023 + e02 + 1
    inner01, inner12, inner23, inner30 = sq.inner
    role_factor = (
        (inner01, (e02 + 1) * t012 * e20 / d1),  # e10
        (surface.reverse(inner01), e02 / (e02 + 1)),  # e01
        (inner12, e20 + 1),  # e21
        (surface.reverse(inner12), d1 / (e20 + 1)),  # e12
        (inner23, e02 * t023 * (e20 + 1) / d2),  # e32
        (surface.reverse(inner23), e20 / (e20 + 1)),  # e23
        (inner30, e02 + 1),  # e03
        (surface.reverse(inner30), d2 / (e02 + 1)),  # e30
    )
    corr = {}
    for slot, factor in role_factor:
        corr[slot] = corr[slot] * factor if slot in corr else factor
    out = {}
    for t in range(surface.n_triangles):
        out[flip_result.tri_map[t]] = values[t]
    out[flip_result.tri_map[sq.tri_right]] = values[sq.tri_right] * d2 / d1
    out[flip_result.tri_map[sq.tri_left]] = values[sq.tri_left] * d1 / d2
    for slot in surface.slots():
        if slot in sq.diagonal:
            continue
        value = values[slot]
        if slot in corr:
            value = value * corr[slot]
        out[flip_result.slot_map[slot]] = value
    new_d, new_sd = sq.new_diagonal
    out[new_d] = (e20 + 1) / ((e02 + 1) * t012 * e20)  # e13
    out[new_sd] = (e02 + 1) / (e02 * t023 * (e20 + 1))  # e31
    return out


@dataclass(frozen=True)
class CoordVector:
    """Positive rational coordinates: one per triangle, one per oriented edge."""

    surface: Surface
    tri: tuple  # Fraction per triangle index
    edge: dict  # slot -> Fraction

    def __post_init__(self):
        surf = self.surface
        tri = tuple(Fraction(x) for x in self.tri)
        edge = {tuple(k): Fraction(v) for k, v in self.edge.items()}
        if len(tri) != surf.n_triangles:
            raise NonPositiveParameter(
                f"{len(tri)} triangle values for {surf.n_triangles} triangles"
            )
        if set(edge) != set(surf.slots()):
            raise NonPositiveParameter("edge values must cover every oriented edge")
        if any(x <= 0 for x in tri) or any(x <= 0 for x in edge.values()):
            raise NonPositiveParameter("all coordinates must be positive")
        object.__setattr__(self, "tri", tri)
        object.__setattr__(self, "edge", edge)

    # --- access ---------------------------------------------------------

    def tri_value(self, t):
        return self.tri[t]

    def edge_value(self, slot):
        return self.edge[tuple(slot)]

    def value(self, cell):
        return self.tri[cell] if isinstance(cell, int) else self.edge[tuple(cell)]

    def as_dict(self):
        values = {t: self.tri[t] for t in range(self.surface.n_triangles)}
        values.update(self.edge)
        return values

    def __eq__(self, other):
        return (
            isinstance(other, CoordVector)
            and self.surface.same_gluing(other.surface)
            and self.tri == other.tri
            and self.edge == other.edge
        )

    # --- transition maps --------------------------------------------------

    def reverse_orientation(self):
        """Coordinates of the same structure for the opposite orientation."""
        return CoordVector(
            self.surface,
            tuple(1 / x for x in self.tri),
            {s: 1 / v for s, v in self.edge.items()},
        )

    def dualize(self):
        """Coordinates of the projectively dual structure.

        Per unoriented edge, with the slot carrying e02 owned by the right
        triangle t012: e20 -> e02 t012 (t023 + 1)/(t012 + 1) and vice
        versa; every triangle value is inverted.
        """
        surf = self.surface
        if not surf.validate_distinct_faces():
            raise SelfGluedEdge("dualize requires two distinct triangles per edge")
        new_edge = {}
        for slot in surf.slots():
            rev = surf.reverse(slot)
            t_right = self.tri[slot[0]]  # t012 for the value on `slot`
            t_left = self.tri[rev[0]]  # t023
            new_edge[rev] = self.edge[slot] * t_right * (t_left + 1) / (t_right + 1)
        return CoordVector(surf, tuple(1 / x for x in self.tri), new_edge)

    def flip_transport(self, edge):
        """Flip the edge and transport the coordinates.

        Returns (CoordVector on the flipped surface, FlipResult).
        """
        result = self.surface.flip(edge)
        new_values = flip_values(self.surface, self.as_dict(), result)
        new_surf = result.surface
        tri = tuple(new_values[t] for t in range(new_surf.n_triangles))
        edge_vals = {s: new_values[s] for s in new_surf.slots()}
        return CoordVector(new_surf, tri, edge_vals), result

    def parreau_s(self, slot):
        """Parreau edge parameter s_ik = e_ik t_ijk / (1 + t_ijk).

        (i,j,k) is the triangle to the right of the oriented edge i -> k,
        which is the triangle owning the slot that carries e_ik.
        """
        slot = tuple(slot)
        t_right = self.tri[slot[0]]
        return self.edge[slot] * t_right / (1 + t_right)


def mirror_transport(coords):
    """reverse_orientation re-keyed on the mirrored triangulation.

    The opposite-orientation structure has every coordinate inverted; as a
    data structure its cells live on the mirrored surface, with each
    oriented-edge value moving to the mirror of the partner slot.
    Monodromy invariants of any curve agree with the original exactly.
    """
    from .surface import mirror_slot, mirrored

    surf = coords.surface
    new_surf = mirrored(surf)
    edge = {
        mirror_slot(surf.reverse(k)): 1 / v for k, v in coords.edge.items()
    }
    return CoordVector(new_surf, tuple(1 / x for x in coords.tri), edge)


def all_ones(surface):
    one = Fraction(1)
    return CoordVector(
        surface,
        tuple(one for _ in range(surface.n_triangles)),
        {s: one for s in surface.slots()},
    )


def from_values(surface, tri_values, edge_values):
    """CoordVector from {triangle label/index: value} and {edge name: value}."""
    tri = [None] * surface.n_triangles
    for key, val in tri_values.items():
        t = key if isinstance(key, int) else surface.triangle_by_label(str(key))
        tri[t] = Fraction(val)
    if any(x is None for x in tri):
        raise NonPositiveParameter("a triangle value is missing")
    edge = {}
    for key, val in edge_values.items():
        slot = tuple(key) if isinstance(key, tuple) else surface.slot_by_name(str(key))
        edge[slot] = Fraction(val)
    return CoordVector(surface, tuple(tri), edge)
