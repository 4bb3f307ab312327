"""Exact projective kernel: points, lines, flags and their ratio invariants.

All arithmetic is over Fraction; projective equality is tested by
cross-multiplication, never by normalising a coordinate.  Conventions:

* points are homogeneous column 3-vectors, lines are row 3-vectors,
  incidence is l(P) = 0;
* the cross ratio is pinned by T(P0) = inf, T(P1) = -1, T(P2) = 0, so in
  any affine coordinate it equals (x0-x1)(x2-x3) / ((x0-x3)(x1-x2));
* the triple ratio of flags ((V0,h0),(V1,h1),(V2,h2)) is
  h0(V1) h1(V2) h2(V0) / (h0(V2) h1(V0) h2(V1));
* the quadruple (edge) ratio of an ordered 4-tuple is
  cross(h0, V0V3, V0V2, V0V1).

The canonical frames used by ``reconstruct_triangle`` and
``extend_across_edge`` are fixed once and for all so that downstream
modules (holonomy, develop) can cite exact matrices against them.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    CoincidentBasePoints,
    DegenerateConfiguration,
    DegeneratePair,
    NonPositiveParameter,
    NotCollinear,
    NotConcurrent,
)
from .linalg import cross, det3, dot, mat_adjugate, mat_vec, projective_map, vec_mat


class _Infinity:
    """The value cross(P0, P1, P2, P0); compares equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def _to_fraction_triple(v):
    t = tuple(Fraction(x) for x in v)
    if len(t) != 3:
        raise ValueError("homogeneous vectors have three entries")
    if all(x == 0 for x in t):
        raise ValueError("zero vector is not projective")
    return t


def _proportional(u, v):
    return all(x == 0 for x in cross(u, v))


@dataclass(frozen=True)
class ProjPoint:
    """Point of RP^2 as a homogeneous column triple of rationals."""

    v: tuple

    def __init__(self, a, b=None, c=None):
        v = a if b is None else (a, b, c)
        object.__setattr__(self, "v", _to_fraction_triple(v))

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and _proportional(self.v, other.v)

    def __hash__(self):
        return hash(self._normalized())

    def _normalized(self):
        scale = next(x for x in self.v if x != 0)
        return tuple(x / scale for x in self.v)

    def dual_line(self):
        return ProjLine(self.v)

    def __repr__(self):
        return f"ProjPoint{self.v}"


@dataclass(frozen=True)
class ProjLine:
    """Line of RP^2 as a homogeneous row triple; l(P) = dot(l, P)."""

    v: tuple

    def __init__(self, a, b=None, c=None):
        v = a if b is None else (a, b, c)
        object.__setattr__(self, "v", _to_fraction_triple(v))

    def __eq__(self, other):
        return isinstance(other, ProjLine) and _proportional(self.v, other.v)

    def __hash__(self):
        scale = next(x for x in self.v if x != 0)
        return hash(tuple(x / scale for x in self.v))

    def __call__(self, point):
        return dot(self.v, point.v)

    def contains(self, point):
        return self(point) == 0

    def dual_point(self):
        return ProjPoint(self.v)

    def __repr__(self):
        return f"ProjLine{self.v}"


def join(p, q):
    """Line through two distinct points."""
    w = cross(p.v, q.v)
    if all(x == 0 for x in w):
        raise DegenerateConfiguration("join of coincident points")
    return ProjLine(w)


def meet(l, m):
    """Intersection point of two distinct lines."""
    w = cross(l.v, m.v)
    if all(x == 0 for x in w):
        raise DegenerateConfiguration("meet of coincident lines")
    return ProjPoint(w)


@dataclass(frozen=True)
class Flag:
    """Incident (point, line) pair."""

    point: ProjPoint
    line: ProjLine

    def __post_init__(self):
        if self.line(self.point) != 0:
            raise DegenerateConfiguration("flag point must lie on the flag line")

    def dual(self):
        """Duality flag (line^perp, point^perp)."""
        return Flag(self.line.dual_point(), self.point.dual_line())

    def transform(self, m):
        """Image under the projective map with matrix m (point -> m point)."""
        return Flag(
            ProjPoint(mat_vec(m, self.point.v)),
            ProjLine(vec_mat(self.line.v, mat_adjugate(m))),
        )


def general_position(flags):
    """Check the general-position conditions for a tuple of flags.

    No three points collinear, no three lines concurrent, and
    h_i(V_j) = 0 exactly when i = j.
    """
    pts = [f.point for f in flags]
    lns = [f.line for f in flags]
    for i, j in combinations(range(len(flags)), 2):
        if lns[i](pts[j]) == 0 or lns[j](pts[i]) == 0:
            return False
    for i, j, k in combinations(range(len(flags)), 3):
        if det3(pts[i].v, pts[j].v, pts[k].v) == 0:
            return False
        if det3(lns[i].v, lns[j].v, lns[k].v) == 0:
            return False
    return True


@dataclass(frozen=True)
class FlagTriple:
    """Cyclically ordered triple of flags in general position."""

    flags: tuple

    def __init__(self, f0, f1, f2):
        object.__setattr__(self, "flags", (f0, f1, f2))
        if not general_position(self.flags):
            raise DegenerateConfiguration("flag triple not in general position")

    def rotated(self, k=1):
        f = self.flags
        k %= 3
        return FlagTriple(f[k], f[(k + 1) % 3], f[(k + 2) % 3])

    def __iter__(self):
        return iter(self.flags)


@dataclass(frozen=True)
class FlagQuadruple:
    """Ordered quadruple of flags in general position (marked at flags[0])."""

    flags: tuple

    def __init__(self, f0, f1, f2, f3):
        object.__setattr__(self, "flags", (f0, f1, f2, f3))
        if not general_position(self.flags):
            raise DegenerateConfiguration("flag quadruple not in general position")

    def rotated(self, k=1):
        f = self.flags
        k %= 4
        return FlagQuadruple(*(f[(k + i) % 4] for i in range(4)))

    def __iter__(self):
        return iter(self.flags)


def triple_ratio(f0, f1, f2):
    """Triple ratio h0(V1)h1(V2)h2(V0) / (h0(V2)h1(V0)h2(V1)).

    Independent of homogeneous representatives and invariant under cyclic
    permutation and under projective transformations.
    """
    num = f0.line(f1.point) * f1.line(f2.point) * f2.line(f0.point)
    den = f0.line(f2.point) * f1.line(f0.point) * f2.line(f1.point)
    if den == 0 or num == 0:
        raise DegenerateConfiguration("triple ratio undefined: a factor vanishes")
    return num / den


def cross_ratio_points(p0, p1, p2, p3):
    """Cross ratio of four collinear points, Fraction or INFINITY.

    p0, p1, p2 must be pairwise distinct; the value is INFINITY exactly
    when p3 = p0, -1 when p3 = p1 and 0 when p3 = p2.
    """
    if p0 == p1 or p0 == p2 or p1 == p2:
        raise CoincidentBasePoints("first three cross-ratio points must be distinct")
    w = cross(p0.v, p1.v)  # nonzero since p0 != p1
    if dot(w, p2.v) != 0 or dot(w, p3.v) != 0:
        raise NotCollinear("cross-ratio points must lie on one line")
    # Symplectic area form on the spanning 2-plane: d(a,b) = det(a, b, u)
    # for any u off the line gives projective coordinates on it.
    u = max(((1, 0, 0), (0, 1, 0), (0, 0, 1)), key=lambda e: abs(dot(w, e)))
    d = lambda a, b: det3(a.v, b.v, u)
    denom = d(p0, p3) * d(p1, p2)
    numer = d(p0, p1) * d(p2, p3)
    if denom == 0:
        return INFINITY
    return numer / denom


def cross_ratio_lines(l0, l1, l2, l3):
    """Cross ratio of four concurrent lines via duality."""
    if l0 == l1 or l0 == l2 or l1 == l2:
        raise NotConcurrent("first three cross-ratio lines must be distinct")
    p = cross(l0.v, l1.v)
    if dot(l2.v, p) != 0 or dot(l3.v, p) != 0:
        raise NotConcurrent("cross-ratio lines must pass through one point")
    try:
        return cross_ratio_points(
            l0.dual_point(), l1.dual_point(), l2.dual_point(), l3.dual_point()
        )
    except NotCollinear as exc:  # pragma: no cover - concurrency already checked
        raise NotConcurrent(str(exc))


def quadruple_ratio(f0, f1, f2, f3):
    """Edge ratio cross(h0, V0 V3, V0 V2, V0 V1) of an ordered quadruple."""
    if not general_position((f0, f1, f2, f3)):
        raise DegenerateConfiguration("quadruple not in general position")
    v0 = f0.point
    value = cross_ratio_lines(
        f0.line, join(v0, f3.point), join(v0, f2.point), join(v0, f1.point)
    )
    if value is INFINITY or value == 0:
        raise DegenerateConfiguration("quadruple ratio degenerate")
    return value


# --- canonical frames -------------------------------------------------------
#
# reconstruct_triangle uses the normal form of the P_3 parameterisation:
#   V0 = [0,0,1], V1 = [1,0,1], V2 = [0,1,1],
#   h1 = [1:0:-1], h2 = [0:1:-1], h0 = [t:1:0].
#
# extend_across_edge works in the edge frame
#   V0 = [0,0,1], h0 = [1:0:0], V2 = [1,0,0], h2 = [0:0:1], V1 = [1,-1,1],
# in which the new vertex across the directed edge V0 -> V2 is
#   V3 = [e_out * e_in, e_in, 1]
# and its line is h3 = [1 : -e_out (1 + t_new) : t_new e_out e_in].

CANONICAL_AUX_POINT = ProjPoint(1, -1, 1)
_EDGE_FRAME = (
    (Fraction(0), Fraction(0), Fraction(1)),  # V0
    (Fraction(1), Fraction(-1), Fraction(1)),  # V1
    (Fraction(1), Fraction(0), Fraction(0)),  # V2
    (Fraction(0), Fraction(1), Fraction(0)),  # h0 ^ h2
)


def reconstruct_triangle(t):
    """Canonical flag triple with triple ratio t > 0 (P_3 normal form)."""
    t = Fraction(t)
    if t <= 0:
        raise NonPositiveParameter("triple ratio parameter must be positive")
    f0 = Flag(ProjPoint(0, 0, 1), ProjLine(t, 1, 0))
    f1 = Flag(ProjPoint(1, 0, 1), ProjLine(1, 0, -1))
    f2 = Flag(ProjPoint(0, 1, 1), ProjLine(0, 1, -1))
    return FlagTriple(f0, f1, f2)


def extend_across_edge(f_tail, f_head, e_out, e_in, t_new, aux=None):
    """Unique flag across the directed edge tail -> head.

    The existing triangle sits to the right of the directed edge and its
    third vertex ``aux`` pins the projective frame (defaults to the
    canonical [1,-1,1], which is the correct frame exactly when f_tail and
    f_head are the canonical edge-frame flags).  ``e_out`` is the edge
    ratio of the directed edge, ``e_in`` of its reverse, and ``t_new`` the
    triple ratio of the new triangle on the left.
    """
    e_out, e_in, t_new = Fraction(e_out), Fraction(e_in), Fraction(t_new)
    if e_out <= 0 or e_in <= 0 or t_new <= 0:
        raise NonPositiveParameter("edge and triangle parameters must be positive")
    aux_point = aux.point if isinstance(aux, Flag) else aux
    if aux_point is None:
        aux_point = CANONICAL_AUX_POINT
    if f_tail.line(f_head.point) == 0 or f_head.line(f_tail.point) == 0:
        raise DegeneratePair("tail and head flags are not in general position")
    try:
        corner = meet(f_tail.line, f_head.line)
    except DegenerateConfiguration:
        raise DegeneratePair("tail and head lines coincide")
    src = (f_tail.point.v, aux_point.v, f_head.point.v, corner.v)
    to_canonical = projective_map(src, _EDGE_FRAME)
    if to_canonical is None:
        raise DegeneratePair("flags plus frame point are not a projective basis")
    v3 = (e_out * e_in, e_in, Fraction(1))
    h3 = (Fraction(1), -e_out * (1 + t_new), t_new * e_out * e_in)
    # Pull back along the map: points by the inverse (adjugate), lines by
    # right-composition with the forward matrix.
    back = mat_adjugate(to_canonical)
    return Flag(ProjPoint(mat_vec(back, v3)), ProjLine(vec_mat(h3, to_canonical)))


def c4_rotate(t012, t023, e02, e20):
    """One step of the C4 re-marking action on (t012, t023, e02, e20).

    Returns (t123, t013, e13, e31); applying it four times is the identity.
    """
    t012, t023, e02, e20 = (Fraction(x) for x in (t012, t023, e02, e20))
    if min(t012, t023, e02, e20) <= 0:
        raise NonPositiveParameter("C4 action needs positive parameters")
    d1 = e02 * t012 * e20 + t012 * e20 + e20 + 1
    d2 = e02 * t023 * e20 + e02 * t023 + e02 + 1
    t123 = t012 * d2 / d1
    t013 = t023 * d1 / d2
    e13 = (e20 + 1) / ((e02 + 1) * t012 * e20)
    e31 = (e02 + 1) / (e02 * t023 * (e20 + 1))
    return (t123, t013, e13, e31)
