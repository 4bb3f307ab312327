"""Monodromy of dual-graph curves and the end classification.

Matrices are kept unnormalized with a cached determinant: the generator of
a triangle turn is

    T(z) = [[0, 0, 1], [0, -1, -1], [z, z+1, 1]],        det z,

and of an edge crossing with leaving-slot value x and reverse value y

    E(x, y) = [[0, 0, y], [0, -1, 0], [1/x, 0, 0]],      det y/x.

The SL(3) representative of a monodromy is entries / det^(1/3); cube roots
are never materialised, every statement is made scale-invariantly through
j-invariants (j1, j2) = (tr^3/det, tr(adj)^3/det^2) or via determinant
corrected identities.

A path step ("turn", t, eps) contributes T(z)^eps with z the triangle
value, a step ("cross", slot) contributes E(value(slot), value(reverse)).
The product composes right-to-left along the path (the first step's factor
is applied first), which is the order in which the worked matrices of the
source material are written.

Peripheral monomials at an ideal vertex are read off the anticlockwise
link: X = product of inbound edge values, Y = product over link positions
of (triangle value * outbound edge value).  The peripheral path with turn
sign -1 has the literal upper-triangular form with diagonal cubes
((X Y^2)^{-1}, Y/X, X^2 Y) after determinant normalisation; sign +1 gives
the lower-triangular inverse.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentPath, NonPositiveParameter, ZeroDeterminant
from .linalg import mat_adjugate, mat_det, mat_identity, mat_mul, mat_scale, mat_trace
from .surface import TURN, peripheral_path


@dataclass(frozen=True)
class MonodromyMatrix:
    """Unnormalized 3x3 rational matrix with cached determinant."""

    entries: tuple
    det: Fraction

    def __post_init__(self):
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "det", Fraction(self.det))
        if self.det == 0 or mat_det(entries) != self.det:
            raise ZeroDeterminant("cached determinant is wrong or zero")

    @classmethod
    def from_entries(cls, entries):
        m = tuple(tuple(Fraction(x) for x in row) for row in entries)
        return cls(m, mat_det(m))

    def __mul__(self, other):
        return MonodromyMatrix(mat_mul(self.entries, other.entries), self.det * other.det)

    def inverse(self):
        return MonodromyMatrix(
            mat_scale(mat_adjugate(self.entries), 1 / self.det), 1 / self.det
        )

    def transpose_inverse(self):
        """Representative of the dual (inverse transpose) projective class."""
        adj = mat_adjugate(self.entries)
        cols = tuple(tuple(adj[j][i] for j in range(3)) for i in range(3))
        return MonodromyMatrix(cols, self.det * self.det)

    def trace(self):
        return mat_trace(self.entries)

    def scaled(self, s):
        s = Fraction(s)
        return MonodromyMatrix(mat_scale(self.entries, s), self.det * s ** 3)

    def is_lower_triangular(self):
        e = self.entries
        return e[0][1] == e[0][2] == e[1][2] == 0

    def is_upper_triangular(self):
        e = self.entries
        return e[1][0] == e[2][0] == e[2][1] == 0

    def diagonal(self):
        return tuple(self.entries[i][i] for i in range(3))

    def char_poly(self):
        """Coefficients (c2, c1, c0) of det(M - x I) = -x^3 + c2 x^2 + c1 x + c0."""
        tr = self.trace()
        tr_adj = mat_trace(mat_adjugate(self.entries))
        return (tr, -tr_adj, self.det)

    def __repr__(self):
        return f"MonodromyMatrix({self.entries}, det={self.det})"


def gen_T(z):
    """Triangle-turn generator, unnormalized; det = z."""
    z = Fraction(z)
    if z <= 0:
        raise NonPositiveParameter("triangle parameter must be positive")
    one, zero = Fraction(1), Fraction(0)
    return MonodromyMatrix(
        ((zero, zero, one), (zero, -one, -one), (z, z + 1, one)), z
    )


def gen_E(x, y):
    """Edge-crossing generator, unnormalized; det = y/x; E(x,y)^-1 = E(y,x)."""
    x, y = Fraction(x), Fraction(y)
    if x <= 0 or y <= 0:
        raise NonPositiveParameter("edge parameters must be positive")
    one, zero = Fraction(1), Fraction(0)
    return MonodromyMatrix(
        ((zero, zero, y), (zero, -one, zero), (1 / x, zero, zero)), y / x
    )


# --- generic-scalar path products -------------------------------------------


def _turn_matrix(z, eps, one):
    zero = one - one
    if eps == 1:
        return ((zero, zero, one), (zero, -one, -one), (z, z + one, one)), z
    # T(z)^-1 = adj(T)/z, rational in z
    return (
        ((one, (z + one) / z, one / z), (-one, -one, zero), (one, zero, zero)),
        one / z,
    )


def _cross_matrix(x, y, one):
    zero = one - one
    return ((zero, zero, y), (zero, -one, zero), (one / x, zero, zero)), y / x


def monodromy_of_path(coords, path, validate=True):
    """Exact monodromy of a dual path at rational coordinates."""
    surface = coords.surface
    if validate:
        path.validate(surface)
    mat = mat_identity(Fraction(1))
    det = Fraction(1)
    for step in path.steps:
        if step[0] == TURN:
            m, d = _turn_matrix(coords.tri_value(step[1]), step[2], Fraction(1))
        else:
            slot = tuple(step[1])
            m, d = _cross_matrix(
                coords.edge_value(slot),
                coords.edge_value(surface.reverse(slot)),
                Fraction(1),
            )
        mat = mat_mul(m, mat)
        det = det * d
    return MonodromyMatrix(mat, det)


def monodromy_generic(surface, values, path, one=1.0):
    """(matrix, det) of a path over floats or dual numbers."""
    mat = mat_identity(one)
    det = one
    for step in path.steps:
        if step[0] == TURN:
            m, d = _turn_matrix(values[step[1]], step[2], one)
        else:
            slot = tuple(step[1])
            m, d = _cross_matrix(values[slot], values[surface.reverse(slot)], one)
        mat = mat_mul(m, mat)
        det = det * d
    return mat, det


def j_invariants(m):
    """Scale- and conjugation-invariant pair (tr^3/det, tr(adj)^3/det^2)."""
    if m.det == 0:
        raise ZeroDeterminant("j-invariants need a nonzero determinant")
    tr = m.trace()
    tr_adj = mat_trace(mat_adjugate(m.entries))
    return (tr ** 3 / m.det, tr_adj ** 3 / m.det ** 2)


# --- peripheral structure ---------------------------------------------------


@dataclass(frozen=True)
class PeripheralMonomials:
    """X = product of inbound edge ratios around a vertex, Y = product of
    (following triangle * outbound edge ratio); both positive rationals."""

    vertex: int
    x: Fraction
    y: Fraction


def peripheral_monomials(coords, v):
    surface = coords.surface
    x = Fraction(1)
    y = Fraction(1)
    for slot_out, tri in surface.vertex_link(v):
        x *= coords.edge_value(surface.reverse(slot_out))
        y *= coords.tri_value(tri) * coords.edge_value(slot_out)
    return PeripheralMonomials(vertex=v, x=x, y=y)


def peripheral_exponents(surface, v):
    """Exponent vectors of (X_v, Y_v) as {cell: int} dicts."""
    x, y = {}, {}
    for slot_out, tri in surface.vertex_link(v):
        rev = surface.reverse(slot_out)
        x[rev] = x.get(rev, 0) + 1
        y[tri] = y.get(tri, 0) + 1
        y[slot_out] = y.get(slot_out, 0) + 1
    return x, y


def eigenvalue_exponents(m):
    """Cubes of the SL(3) eigenvalues of the peripheral holonomy.

    Returns (lambda1^3, lambda2^3, lambda3^3) = ((X Y^2)^-1, Y/X, X^2 Y);
    their product is 1.  lambda1 belongs to the framing vertex, lambda2 to
    the second eigenvector on the framing line.
    """
    x, y = m.x, m.y
    return (1 / (x * y * y), y / x, x * x * y)


# --- end classification -----------------------------------------------------


@dataclass(frozen=True)
class EndType:
    """End geometry tag with the framing subcase of the classification."""

    kind: str  # "cusp" | "special" | "hyperbolic_minimal" | "hyperbolic_maximal"
    subcase: str

    def __str__(self):
        return f"{self.kind}({self.subcase})" if self.subcase else self.kind


def _sign(q):
    return (q > 1) - (q < 1)


_CLASSIFICATION = {
    # (sign(X-1), sign(Y-1), sign(XY-1)) -> (kind, subcase)
    (0, 0, 0): ("cusp", ""),
    (0, 1, 1): ("special", "repelling eigenvector of multiplicity one"),
    (0, -1, -1): ("special", "attracting eigenvector of multiplicity one"),
    (-1, 0, -1): ("special", "attracting double eigenvector, line avoids repelling"),
    (1, 0, 1): ("special", "repelling double eigenvector, line avoids attracting"),
    (1, -1, 0): ("special", "attracting double eigenvector, line through repelling"),
    (-1, 1, 0): ("special", "repelling double eigenvector, line through attracting"),
    (1, 1, 1): ("hyperbolic_minimal", "repelling vertex, line through saddle"),
    (-1, -1, -1): ("hyperbolic_minimal", "attracting vertex, line through saddle"),
    (1, -1, -1): ("hyperbolic_minimal", "attracting vertex, line through repelling"),
    (-1, 1, 1): ("hyperbolic_minimal", "repelling vertex, line through attracting"),
    (-1, 1, -1): ("hyperbolic_maximal", "line through attracting eigenvector"),
    (1, -1, 1): ("hyperbolic_maximal", "line through repelling eigenvector"),
}


def classify_end(m):
    """End type from the sign pattern of (X-1, Y-1, XY-1); total on valid input."""
    key = (_sign(m.x), _sign(m.y), _sign(m.x * m.y))
    try:
        kind, subcase = _CLASSIFICATION[key]
    except KeyError:  # pragma: no cover - impossible for positive X, Y
        raise InconsistentPath(f"impossible sign pattern {key}")
    return EndType(kind, subcase)


def classification_table():
    """All 13 (sign pattern, EndType) cases, for exhaustiveness checks."""
    return {k: EndType(*v) for k, v in _CLASSIFICATION.items()}


def is_finite_area(coords):
    """True iff every end is a cusp: X_v = Y_v = 1 for all vertices."""
    return all(
        (lambda m: m.x == 1 and m.y == 1)(peripheral_monomials(coords, v))
        for v in range(coords.surface.punctures)
    )


def is_teichmuller(coords):
    """True iff the structure is hyperbolic of finite area.

    Every triangle value 1, opposite edge ratios equal, and the outbound
    product around every vertex equal to 1.
    """
    surface = coords.surface
    if any(t != 1 for t in coords.tri):
        return False
    if any(
        coords.edge_value(s) != coords.edge_value(surface.reverse(s))
        for s in surface.slots()
    ):
        return False
    for v in range(surface.punctures):
        prod = Fraction(1)
        for slot_out, _tri in surface.vertex_link(v):
            prod *= coords.edge_value(slot_out)
        if prod != 1:
            return False
    return True


def gluability_check(coords, v1, v2):
    """Whether the ends v1, v2 can be glued into a convex structure.

    Requires equal peripheral eigenvalue data on the positive branch
    (X1 = X2 and Y1 = Y2), both ends hyperbolic minimal, and X != Y so the
    gluing has coherent orientation.
    """
    m1 = peripheral_monomials(coords, v1)
    m2 = peripheral_monomials(coords, v2)
    if m1.x != m2.x or m1.y != m2.y:
        return False
    if m1.x == m1.y:
        return False
    return (
        classify_end(m1).kind == "hyperbolic_minimal"
        and classify_end(m2).kind == "hyperbolic_minimal"
    )


def peripheral_holonomy(coords, v, sign=-1):
    """Monodromy of the peripheral path around v (triangular by construction)."""
    path = peripheral_path(coords.surface, v, sign=sign)
    return monodromy_of_path(coords, path)


# --- path transport through flips -------------------------------------------


def transport_path(path, flip_result):
    """Closed dual path on the flipped triangulation homotopic to ``path``.

    Works on the crossing sequence: crossings of surviving edges are
    remapped through the flip's slot map, crossings of the flipped
    diagonal are dropped, and a crossing of the new diagonal is inserted
    wherever consecutive crossings now land in different triangles of the
    square.  Turns are rederived.
    """
    from .surface import path_from_crossings, reduce_crossings

    if not path.closed:
        raise InconsistentPath("only closed paths can be transported")
    sq = flip_result.square
    new_surface = flip_result.surface
    mapped = []
    for slot in path.crossings():
        slot = tuple(slot)
        if slot in sq.diagonal:
            continue
        mapped.append(flip_result.slot_map[slot])
    if not mapped:
        raise InconsistentPath("path is isotopic into the flipped square")
    with_diagonal = []
    n = len(mapped)
    for i, slot in enumerate(mapped):
        with_diagonal.append(slot)
        entered = new_surface.reverse(slot)[0]
        leaves = mapped[(i + 1) % n][0]
        if entered != leaves:
            if {entered, leaves} != {sq.tri_left, sq.tri_right}:
                raise InconsistentPath("flip transport left the square unexpectedly")
            a_slot, b_slot = sq.new_diagonal
            with_diagonal.append(a_slot if entered == a_slot[0] else b_slot)
    reduced = reduce_crossings(new_surface, with_diagonal)
    if not reduced:
        raise InconsistentPath("transported path is null-homotopic")
    return path_from_crossings(new_surface, reduced, closed=True)
