"""Bundled example surfaces, coordinate presets and curves.

The three triangulated surfaces are reconstructed from their polygonal
maps: the once-punctured torus (square with a diagonal, opposite sides
glued), the thrice-punctured sphere (square with a diagonal and both
boundary pairs folded), and the twice-punctured torus (hexagon with three
diagonals).  Edge names follow the corner labels of the polygon, so the
peripheral monomials come out in the familiar form, e.g. for the torus
X1 = e12 e21 e14 e41 e13 e31 and Y1 = (t143 t132)^3 X1.
"""

from fractions import Fraction
import random

from .coords import CoordVector, all_ones, from_values
from .surface import (
    DualPath,
    build_from_gluing,
    commutator_path,
    path_from_crossings,
)


def torus_once():
    """S_{1,1}: square 1-4-3-2 (anticlockwise) with diagonal 1-3.

    Triangle 0 is t143, triangle 1 is t132; opposite square sides are
    glued, so there is a single ideal vertex.
    """
    return build_from_gluing(
        genus=1,
        punctures=1,
        gluings=[((0, 2), (1, 0)), ((0, 0), (1, 1)), ((0, 1), (1, 2))],
        corner_labels=[("1", "4", "3"), ("1", "3", "2")],
        edge_names={
            (0, 0): "e14",
            (0, 1): "e12",
            (0, 2): "e31",
            (1, 0): "e13",
            (1, 1): "e41",
            (1, 2): "e21",
        },
    )


def sphere_thrice():
    """S_{0,3}: square 1-4-3-2 with diagonal 4-2 and both boundary pairs folded.

    Triangle 0 is t142, triangle 1 is t243.  Corners 1 and 3 are ideal
    vertices of degree one, the diagonal endpoints form the third vertex.
    The folds put both sides of each folded edge in a single triangle, so
    this triangulation does not satisfy assumption (I).
    """
    return build_from_gluing(
        genus=0,
        punctures=3,
        gluings=[((0, 1), (1, 0)), ((0, 0), (0, 2)), ((1, 1), (1, 2))],
        corner_labels=[("1", "4", "2"), ("2", "4", "3")],
        edge_names={
            (0, 0): "e12",
            (0, 2): "e21",
            (0, 1): "e42",
            (1, 0): "e24",
            (1, 1): "e23",
            (1, 2): "e32",
        },
    )


def torus_twice():
    """S_{1,2}: hexagon 1..6 (clockwise labels) with diagonals 2-6, 2-5, 3-5.

    Triangles t162, t265, t253, t354; boundary gluings 43~16, 54~21, 32~65.
    Vertex 0 collects the odd corners, vertex 1 the even corners.
    """
    return build_from_gluing(
        genus=1,
        punctures=2,
        gluings=[
            ((0, 1), (1, 0)),
            ((1, 2), (2, 0)),
            ((2, 1), (3, 0)),
            ((3, 2), (0, 0)),
            ((3, 1), (0, 2)),
            ((2, 2), (1, 1)),
        ],
        corner_labels=[
            ("1", "6", "2"),
            ("2", "6", "5"),
            ("2", "5", "3"),
            ("3", "5", "4"),
        ],
        edge_names={
            (0, 0): "e16",
            (3, 2): "e61",
            (0, 1): "e62",
            (1, 0): "e26",
            (0, 2): "e21",
            (3, 1): "e12",
            (1, 1): "e23",
            (2, 2): "e32",
            (1, 2): "e52",
            (2, 0): "e25",
            (2, 1): "e53",
            (3, 0): "e35",
        },
    )


SURFACES = {
    "s11": torus_once,
    "s03": sphere_thrice,
    "s12": torus_twice,
}


# --- coordinate presets -----------------------------------------------------


def random_coords(surface, rng=None, lo=1, hi=4):
    """Generic positive rational sample with numerators/denominators in [lo, hi]."""
    rng = rng or random.Random(0)
    draw = lambda: Fraction(rng.randint(lo, hi), rng.randint(lo, hi))
    return CoordVector(
        surface,
        tuple(draw() for _ in range(surface.n_triangles)),
        {s: draw() for s in surface.slots()},
    )


def teichmuller_s11(a=Fraction(2), b=Fraction(3, 2)):
    """Teichmuller preset on S_{1,1}: t = 1, e symmetric, e21 e41 e31 = 1."""
    surface = torus_once()
    c = 1 / (a * b)
    sym = {"e13": a, "e31": a, "e12": b, "e21": b, "e14": c, "e41": c}
    return from_values(surface, {"t143": 1, "t132": 1}, sym)


def finite_area_s11(u=Fraction(2)):
    """Finite-area but non-Teichmuller preset on S_{1,1}.

    X1 = Y1 = 1 with asymmetric edge ratios and triangle values t, 1/t.
    """
    surface = torus_once()
    edges = {
        "e12": u,
        "e21": 1 / u,
        "e13": u,
        "e31": 1 / u,
        "e14": u,
        "e41": 1 / u,
    }
    return from_values(surface, {"t143": u, "t132": 1 / u}, edges)


def gluable_s12(u=Fraction(2), w=Fraction(3)):
    """S_{1,2} preset with both ends minimal hyperbolic and gluable.

    All edge ratios u and all triangle values w give X1 = X2 = u^6 and
    Y1 = Y2 = u^6 w^6, which satisfies the gluing conditions when u > 1
    and w != 1.
    """
    surface = torus_twice()
    return CoordVector(
        surface,
        tuple(Fraction(w) for _ in range(surface.n_triangles)),
        {s: Fraction(u) for s in surface.slots()},
    )


def preset(name):
    builders = {
        "s11-ones": lambda: all_ones(torus_once()),
        "s11-generic": lambda: random_coords(torus_once(), random.Random(11)),
        "s11-teich": teichmuller_s11,
        "s11-finite": finite_area_s11,
        "s03-ones": lambda: all_ones(sphere_thrice()),
        "s03-generic": lambda: random_coords(sphere_thrice(), random.Random(3)),
        "s12-ones": lambda: all_ones(torus_twice()),
        "s12-generic": lambda: random_coords(torus_twice(), random.Random(12)),
        "s12-gluable": gluable_s12,
    }
    return builders[name]()


PRESETS = (
    "s11-ones",
    "s11-generic",
    "s11-teich",
    "s11-finite",
    "s03-ones",
    "s03-generic",
    "s12-ones",
    "s12-generic",
    "s12-gluable",
)


# --- curves on S_{1,1} ------------------------------------------------------
#
# With the square drawn with corners 1=(0,0), 4=(1,0), 3=(1,1), 2=(0,1),
# alpha crosses the bottom/top gluing and the diagonal, beta the left/right
# gluing and the diagonal; they intersect once and their commutator is
# peripheral.  Both are based in triangle 0 (t143).

def alpha_s11():
    surface = torus_once()
    return path_from_crossings(surface, [(0, 0), (1, 0)], closed=True)


def beta_s11():
    surface = torus_once()
    return path_from_crossings(surface, [(0, 2), (1, 2)], closed=True)


def alpha_word_s11():
    """The worked generator word T(t143) E(e13,e31) T(t132) E(e14,e41) T(t143).

    Read right to left as a based path; conjugate to alpha_s11's class.
    """
    surface = torus_once()
    path = DualPath(
        (
            ("turn", 0, 1),
            ("cross", (0, 0)),
            ("turn", 1, 1),
            ("cross", (1, 0)),
            ("turn", 0, 1),
        ),
        closed=True,
    )
    path.validate(surface)
    return path


def beta_word_s11():
    """The worked generator word E(e21,e12) T(t132) E(e31,e13) T(t143)^-1."""
    surface = torus_once()
    path = DualPath(
        (
            ("turn", 0, -1),
            ("cross", (0, 2)),
            ("turn", 1, 1),
            ("cross", (1, 2)),
        ),
        closed=True,
    )
    path.validate(surface)
    return path


def commutator_s11():
    """Peripheral commutator path: monodromy A B A^-1 B^-1 for A, B above."""
    surface = torus_once()
    return commutator_path(surface, alpha_s11(), beta_s11())


def curves_s11():
    """Five closed curves on S_{1,1} given by crossing sequences."""
    surface = torus_once()
    seqs = [
        [(0, 0), (1, 0)],  # alpha class
        [(1, 2), (0, 2)],  # beta-type class
        [(0, 0), (1, 2)],  # mixed class
        [(0, 1), (1, 0)],
        [(0, 0), (1, 0), (0, 1), (1, 0)],
    ]
    return [path_from_crossings(surface, seq, closed=True) for seq in seqs]
