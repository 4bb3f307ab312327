"""Combinatorial model of an ideally triangulated punctured surface.

A triangulation is stored as (triangle, side) slots.  Triangle ``t`` has
corners 0,1,2 in anticlockwise order for the fixed surface orientation,
and side ``s`` is the directed boundary arc from corner ``s`` to corner
``s+1``.  The gluing is a fixed-point-free involution on slots that is
always traversal-reversing (tail to head), which makes the glued surface
oriented by construction.  Oriented edges of the surface are therefore in
bijection with slots: slot (t, s) is the direction whose tail sits at
corner ``s`` of ``t``, and its reverse is the paired slot.

Ideal vertices are the orbits of the corner walk
    (t, c)  ->  pairing[(t, (c+2) % 3)]
which lists the corners around a vertex anticlockwise; everything
downstream (links, peripheral monomials, end classification) uses this
orbit order.

Coordinate attachment: the edge ratio stored on a slot is the quadruple
ratio of the ordered flags (tail, right corner, head, left corner) where
the slot's own triangle is the *right* triangle; the slot's boundary
traversal runs head -> tail.  Slot names ("a->b" or explicit labels like
"e21") follow the traversal, which is what makes the peripheral monomials
print in the familiar labelled form.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    EulerMismatch,
    InconsistentPath,
    SelfGluedEdge,
    UnpairedSide,
    VertexCountMismatch,
)

Slot = tuple  # (triangle index, side index)


def slot_key(slot):
    return f"{slot[0]}.{slot[1]}"


def parse_slot_key(text):
    t, s = text.split(".")
    t, s = int(t), int(s)
    if s not in (0, 1, 2) or t < 0:
        raise UnpairedSide(f"bad side label {text!r}")
    return (t, s)


@dataclass(frozen=True)
class Surface:
    """Punctured surface of genus g with n punctures and a fixed ideal triangulation."""

    genus: int
    punctures: int
    pairing: dict
    corner_labels: tuple = None  # tuple of 3-tuples of str, or None
    edge_names: dict = None  # slot -> str, always populated after init
    n_triangles: int = field(init=False, default=0)
    vertex_orbits: tuple = field(init=False, default=())

    def __post_init__(self):
        n_tri = self._validate_pairing()
        object.__setattr__(self, "n_triangles", n_tri)
        self._check_euler()
        orbits = self._corner_orbits()
        object.__setattr__(self, "vertex_orbits", orbits)
        if len(orbits) != self.punctures:
            raise VertexCountMismatch(
                f"{len(orbits)} ideal vertices derived, {self.punctures} declared"
            )
        object.__setattr__(self, "edge_names", self._build_edge_names())

    # --- construction-time checks -----------------------------------------

    def _validate_pairing(self):
        pairing = self.pairing
        if not pairing:
            raise UnpairedSide("empty gluing list")
        tris = {t for (t, _s) in pairing}
        n_tri = max(tris) + 1
        slots = {(t, s) for t in range(n_tri) for s in range(3)}
        if set(pairing) != slots:
            missing = sorted(slots - set(pairing))
            extra = sorted(set(pairing) - slots)
            raise UnpairedSide(f"missing sides {missing}, unknown sides {extra}")
        for a, b in pairing.items():
            if a == b:
                raise UnpairedSide(f"side {slot_key(a)} glued to itself")
            if pairing.get(b) != a:
                raise UnpairedSide(f"gluing at {slot_key(a)} is not an involution")
        # connectivity of the triangle adjacency graph
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for s in range(3):
                t2 = pairing[(t, s)][0]
                if t2 not in seen:
                    seen.add(t2)
                    stack.append(t2)
        if len(seen) != n_tri:
            raise UnpairedSide("triangulation is not connected")
        return n_tri

    def _check_euler(self):
        expected = 2 * (2 * self.genus - 2 + self.punctures)
        if expected <= 0:
            raise EulerMismatch(
                f"S_{self.genus},{self.punctures} has no ideal triangulation"
            )
        if self.n_triangles != expected:
            raise EulerMismatch(
                f"{self.n_triangles} triangles, but -2*chi(S_{self.genus},"
                f"{self.punctures}) = {expected}"
            )

    def _corner_orbits(self):
        todo = {(t, c) for t in range(self.n_triangles) for c in range(3)}
        orbits = []
        while todo:
            start = min(todo)
            cycle = []
            corner = start
            while True:
                cycle.append(corner)
                todo.discard(corner)
                t, c = corner
                corner = self.pairing[(t, (c + 2) % 3)]
                if corner == start:
                    break
                if corner not in todo:
                    raise VertexCountMismatch("corner walk does not close up")
            orbits.append(tuple(cycle))
        return tuple(orbits)

    def _build_edge_names(self):
        names = {}
        explicit = self.edge_names or {}
        for t in range(self.n_triangles):
            for s in range(3):
                slot = (t, s)
                if slot in explicit:
                    names[slot] = explicit[slot]
                elif self.corner_labels is not None:
                    # the slot's coordinate is the ratio of the arrow running
                    # against the boundary traversal, so name it that way
                    lab = self.corner_labels[t]
                    names[slot] = f"{lab[(s + 1) % 3]}->{lab[s]}"
                else:
                    names[slot] = slot_key(slot)
        if len(set(names.values())) != len(names):
            raise UnpairedSide("oriented-edge names are not unique")
        return names

    # --- basic queries ------------------------------------------------------

    def slots(self):
        return [(t, s) for t in range(self.n_triangles) for s in range(3)]

    def reverse(self, slot):
        return self.pairing[slot]

    def edges(self):
        """Unoriented edges as canonical slots (the smaller of the pair)."""
        return sorted({min(s, self.pairing[s]) for s in self.slots()})

    def edge_of(self, slot):
        return min(slot, self.pairing[slot])

    def slot_by_name(self, name):
        for slot, n in self.edge_names.items():
            if n == name:
                return slot
        raise KeyError(f"no oriented edge named {name!r}")

    def triangle_label(self, t):
        if self.corner_labels is not None:
            return "t" + "".join(self.corner_labels[t])
        return str(t)

    def triangle_by_label(self, label):
        for t in range(self.n_triangles):
            if self.triangle_label(t) == label or label == str(t):
                return t
        raise KeyError(f"no triangle labelled {label!r}")

    def vertex_of_corner(self, corner):
        for v, orbit in enumerate(self.vertex_orbits):
            if corner in orbit:
                return v
        raise KeyError(corner)

    def vertex_link(self, v):
        """Anticlockwise cyclic list of (outgoing oriented edge, following triangle).

        The outgoing edge at corner (t, c) is slot (t, c); the triangle
        following it in the anticlockwise walk around the vertex is t
        itself.  The length is the vertex degree counted with multiplicity.
        """
        orbit = self.vertex_orbits[v]
        return [((t, c), t) for (t, c) in orbit]

    def validate_distinct_faces(self):
        """Assumption (I): every edge is contained in two distinct triangles."""
        return all(self.pairing[(t, s)][0] != t for (t, s) in self.slots())

    # --- flips ----------------------------------------------------------------

    def flip(self, edge):
        """Flip the unoriented edge (given by either of its slots).

        Returns a FlipResult carrying the new surface, the relabeling of
        surviving cells, and the local square data needed by the
        coordinate transition map.

        Frame convention: the flipped edge is directed "0 -> 2" so that the
        slot ``d = min(edge, reverse)`` carries the coordinate e02; its
        triangle is then the right triangle t012 of the square 0,1,2,3 and
        the partner slot's triangle is the left triangle t023.  After the
        flip, triangle index tri(d) holds t123 and the partner index holds
        t130, so each index continues the triangle whose value formula
        multiplies its old value.
        """
        d = min(edge, self.pairing[edge])
        sd = self.pairing[d]
        tri_a, sa = d  # right triangle t012 of the directed edge "0 -> 2"
        tri_b, sb = sd  # left triangle t023
        if tri_a == tri_b:
            raise SelfGluedEdge("flip undefined: both sides of the edge in one triangle")

        inner01 = (tri_a, (sa + 1) % 3)
        inner12 = (tri_a, (sa + 2) % 3)
        inner23 = (tri_b, (sb + 1) % 3)
        inner30 = (tri_b, (sb + 2) % 3)
        slot_map = {s: s for s in self.slots()}
        del slot_map[d], slot_map[sd]
        # new triangles: tri_a = (1,2,3) with sides 1->2, 2->3, 3->1(diag),
        #                tri_b = (1,3,0) with sides 1->3(diag), 3->0, 0->1
        slot_map[inner01] = (tri_b, 2)
        slot_map[inner12] = (tri_a, 0)
        slot_map[inner23] = (tri_a, 1)
        slot_map[inner30] = (tri_b, 1)

        pairing = {}
        for a, b in self.pairing.items():
            if a in (d, sd) or b in (d, sd):
                continue
            pairing[slot_map[a]] = slot_map[b]
        new_d, new_sd = (tri_a, 2), (tri_b, 0)
        pairing[new_d] = new_sd
        pairing[new_sd] = new_d
        for inner in (inner01, inner12, inner23, inner30):
            outer = self.pairing[inner]
            a, b = slot_map[inner], slot_map[outer]
            pairing[a] = b
            pairing[b] = a

        corner_labels = None
        if self.corner_labels is not None:
            l2 = self.corner_labels[tri_a][sa]
            l0 = self.corner_labels[tri_a][(sa + 1) % 3]
            l1 = self.corner_labels[tri_a][(sa + 2) % 3]
            l3 = self.corner_labels[tri_b][(sb + 2) % 3]
            corner_labels = list(self.corner_labels)
            corner_labels[tri_a] = (l1, l2, l3)
            corner_labels[tri_b] = (l1, l3, l0)
            corner_labels = tuple(corner_labels)

        edge_names = {slot_map[s]: n for s, n in self.edge_names.items() if s in slot_map}
        for slot in (new_d, new_sd):
            if corner_labels is not None:
                t, s = slot
                lab = corner_labels[t]
                name = f"{lab[(s + 1) % 3]}->{lab[s]}"
            else:
                name = slot_key(slot)
            while name in edge_names.values():
                name += "'"
            edge_names[slot] = name

        new = Surface(
            genus=self.genus,
            punctures=self.punctures,
            pairing=pairing,
            corner_labels=corner_labels,
            edge_names=edge_names,
        )
        square = FlipSquare(
            diagonal=(d, sd),
            new_diagonal=(new_d, new_sd),
            inner=(inner01, inner12, inner23, inner30),
            tri_right=tri_a,
            tri_left=tri_b,
        )
        return FlipResult(surface=new, tri_map={t: t for t in range(self.n_triangles)},
                          slot_map=slot_map, square=square, old=self)

    def regularize(self):
        """Flip edges until every edge lies in two distinct triangles.

        Returns (surface, list of FlipResult).  Identity when assumption (I)
        already holds.
        """
        surf, flips = self, []
        for _ in range(4 * self.n_triangles + 4):
            bad = next(
                (
                    (t, s)
                    for (t, s) in surf.slots()
                    if surf.pairing[(t, s)][0] == t
                ),
                None,
            )
            if bad is None:
                return surf, flips
            t, s = bad
            partner_side = surf.pairing[bad][1]
            third = next(i for i in range(3) if i not in (s, partner_side))
            result = surf.flip((t, third))
            flips.append(result)
            surf = result.surface
        raise SelfGluedEdge("regularize did not terminate")

    # --- structural comparison ------------------------------------------------

    def same_gluing(self, other):
        return (
            self.n_triangles == other.n_triangles
            and self.genus == other.genus
            and self.punctures == other.punctures
            and self.pairing == other.pairing
        )


@dataclass(frozen=True)
class FlipSquare:
    """Local data of one flip, in the frame of the figure convention.

    ``diagonal`` holds (d, reverse d) where d carries the coordinate e02
    (its triangle is the right triangle t012 of the directed edge 0 -> 2);
    ``inner`` lists the square's own boundary slots in the side order
    (01, 12, 23, 30), so their values are (e10, e21, e32, e03) and the
    values of their partners are (e01, e12, e23, e30).  ``new_diagonal``
    holds the slots carrying (e13, e31) after the flip.
    """

    diagonal: tuple
    new_diagonal: tuple
    inner: tuple
    tri_right: int  # t012, keeps index and becomes t123
    tri_left: int  # t023, keeps index and becomes t130


@dataclass(frozen=True)
class FlipResult:
    surface: Surface
    tri_map: dict
    slot_map: dict
    square: FlipSquare
    old: Surface


def build_from_gluing(genus, punctures, gluings, n_triangles=None,
                      corner_labels=None, edge_names=None):
    """Build a validated Surface from a side-pairing list.

    ``gluings`` is an iterable of slot pairs ((t, s), (t', s')); every side
    must appear exactly once.
    """
    pairing = {}
    for a, b in gluings:
        a, b = tuple(a), tuple(b)
        for x, y in ((a, b), (b, a)):
            if x in pairing:
                raise UnpairedSide(f"side {slot_key(x)} glued twice")
            pairing[x] = y
    if n_triangles is not None:
        tris = {t for (t, _s) in pairing}
        if tris != set(range(n_triangles)):
            raise UnpairedSide("gluing list does not cover the declared triangles")
    labels = tuple(tuple(lab) for lab in corner_labels) if corner_labels else None
    return Surface(genus=genus, punctures=punctures, pairing=pairing,
                   corner_labels=labels, edge_names=dict(edge_names or {}))


# --- dual paths -----------------------------------------------------------


TURN = "turn"
CROSS = "cross"


@dataclass(frozen=True)
class DualPath:
    """Curve on the surface as alternating triangle-turns and edge-crossings.

    Steps are ("turn", triangle, eps) with eps in {+1, -1} and
    ("cross", slot) where the slot is the side through which the path
    *leaves* its current triangle (so the slot's triangle is the one being
    left).  Monodromy composes these right-to-left: the first step's matrix
    acts first.

    Between two crossings the net turn is forced by the combinatorics:
    entering through side s_in and leaving through side s_out of the same
    triangle requires sum(eps) = s_in - s_out (mod 3).
    """

    steps: tuple
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def reverse(self, surface):
        """Path traversed backwards; crossings flip to the partner slot."""
        rev = []
        for step in reversed(self.steps):
            if step[0] == TURN:
                rev.append((TURN, step[1], -step[2]))
            else:
                rev.append((CROSS, surface.reverse(step[1])))
        return DualPath(tuple(rev), closed=self.closed)

    def crossings(self):
        return [s[1] for s in self.steps if s[0] == CROSS]

    def validate(self, surface):
        steps = self.steps
        if not steps:
            return
        # triangle occupied before each step
        def tri_entered(slot):
            return surface.reverse(slot)[0]

        for step in steps:
            if step[0] == CROSS:
                t, s = step[1]
                if not (0 <= t < surface.n_triangles and s in (0, 1, 2)):
                    raise InconsistentPath(f"unknown slot {step[1]}")
            elif step[0] == TURN:
                if step[2] not in (1, -1):
                    raise InconsistentPath("turn sign must be +1 or -1")
            else:
                raise InconsistentPath(f"unknown step {step!r}")

        order = list(steps)
        if self.closed:
            order = order + order  # check the wrap
        current = None  # (triangle, side entered through), side None = unknown
        for prev, step in zip(order, order[1:]):
            if prev[0] == TURN and step[0] == TURN:
                if prev[1] != step[1]:
                    raise InconsistentPath("consecutive turns in different triangles")
            if prev[0] == TURN and step[0] == CROSS:
                if prev[1] != step[1][0]:
                    raise InconsistentPath(
                        f"turn in triangle {prev[1]} followed by crossing out of "
                        f"triangle {step[1][0]}"
                    )
            if prev[0] == CROSS and step[0] == TURN:
                if tri_entered(prev[1]) != step[1]:
                    raise InconsistentPath(
                        f"crossing lands in triangle {tri_entered(prev[1])}, "
                        f"turn is in {step[1]}"
                    )
            if prev[0] == CROSS and step[0] == CROSS:
                raise InconsistentPath("two crossings without a turn between them")
        # net-turn consistency between consecutive crossings
        crossings = [i for i, s in enumerate(steps) if s[0] == CROSS]
        if self.closed and crossings:
            for a, b in zip(crossings, crossings[1:] + [crossings[0] + len(steps)]):
                net = 0
                for i in range(a + 1, b):
                    net += steps[i % len(steps)][2]
                slot_in = surface.reverse(steps[a % len(steps)][1])
                slot_out = steps[b % len(steps)][1]
                if slot_in[0] != slot_out[0]:
                    raise InconsistentPath("crossing chain leaves the wrong triangle")
                if (slot_in[1] - slot_out[1] - net) % 3 != 0:
                    raise InconsistentPath(
                        f"net turn {net} inconsistent between sides {slot_in[1]} "
                        f"and {slot_out[1]}"
                    )
                if slot_in == steps[b % len(steps)][1] and net == 0:
                    raise InconsistentPath("path backtracks across an edge")

    def start_triangle(self, surface):
        first = self.steps[0]
        if first[0] == TURN:
            return first[1]
        return first[1][0]


def path_from_crossings(surface, slots, closed=True):
    """Normalized closed path from a cyclic crossing sequence.

    Each slot is the side through which the path leaves a triangle; the
    turns in between are derived (one turn of +-1 per triangle visit).
    """
    slots = [tuple(s) for s in slots]
    if not slots:
        raise InconsistentPath("empty crossing sequence")
    steps = []
    n = len(slots)
    for i, slot in enumerate(slots):
        steps.append((CROSS, slot))
        if not closed and i == n - 1:
            break
        nxt = slots[(i + 1) % n]
        entered = surface.reverse(slot)
        if entered[0] != nxt[0]:
            raise InconsistentPath(
                f"crossing {slot} lands in triangle {entered[0]}, next crossing "
                f"leaves {nxt[0]}"
            )
        diff = (entered[1] - nxt[1]) % 3
        if diff == 1:
            eps = 1
        elif diff == 2:
            eps = -1
        else:
            raise InconsistentPath("path enters and leaves a triangle by the same side")
        steps.append((TURN, nxt[0], eps))
    path = DualPath(tuple(steps), closed=closed)
    path.validate(surface)
    return path


def reduce_crossings(surface, slots):
    """Cancel adjacent backtracks (slot followed by its reverse) cyclically."""
    slots = [tuple(s) for s in slots]
    changed = True
    while changed and slots:
        changed = False
        n = len(slots)
        for i in range(n):
            j = (i + 1) % n
            if i != j and surface.reverse(slots[i]) == slots[j]:
                for k in sorted((i, j), reverse=True):
                    del slots[k]
                changed = True
                break
    return slots


def mirror_slot(slot):
    return (slot[0], (2 - slot[1]) % 3)


def mirrored(surface):
    """The same triangulation with the opposite orientation convention.

    Corner order of every triangle is reversed (corner 1 and 2 swap), so
    slot (t, s) becomes (t, 2 - s).  The oriented-edge cell of an arrow
    moves to the partner slot: values of a coordinate vector transport as
        new_edge[mirror_slot(reverse(k))] = old_edge[k].
    """
    pairing = {mirror_slot(a): mirror_slot(b) for a, b in surface.pairing.items()}
    labels = None
    if surface.corner_labels is not None:
        labels = tuple((lab[0], lab[2], lab[1]) for lab in surface.corner_labels)
    names = {mirror_slot(surface.reverse(k)): n for k, n in surface.edge_names.items()}
    return Surface(
        genus=surface.genus,
        punctures=surface.punctures,
        pairing=pairing,
        corner_labels=labels,
        edge_names=names,
    )


def mirror_path(path):
    """The path of a curve on the mirrored surface: turns flip sign."""
    steps = []
    for step in path.steps:
        if step[0] == TURN:
            steps.append((TURN, step[1], -step[2]))
        else:
            steps.append((CROSS, mirror_slot(step[1])))
    return DualPath(tuple(steps), closed=path.closed)


def concatenate(surface, *paths):
    """Closed path representing the based product of closed paths.

    All paths must be closed and based at the same start triangle; the
    product traverses them in the given order.  Backtracking pairs at the
    seams are cancelled, so the monodromy changes at most by a scalar
    (a cube root of a coordinate monomial), never projectively.
    """
    t0 = paths[0].start_triangle(surface)
    crossings = []
    for p in paths:
        if not p.closed:
            raise InconsistentPath("based products need closed paths")
        if p.start_triangle(surface) != t0:
            raise InconsistentPath("based products need a common start triangle")
        crossings.extend(p.crossings())
    reduced = reduce_crossings(surface, crossings)
    if not reduced:
        raise InconsistentPath("product is null-homotopic")
    return path_from_crossings(surface, reduced, closed=True)


def commutator_path(surface, alpha, beta):
    """Closed path whose monodromy is M(alpha) M(beta) M(alpha)^-1 M(beta)^-1.

    With the right-to-left product convention this is the based loop that
    traverses beta^-1, alpha^-1, beta, alpha in that order.
    """
    return concatenate(
        surface, beta.reverse(surface), alpha.reverse(surface), beta, alpha
    )


def peripheral_path(surface, v, sign=1):
    """Closed dual path circling vertex v once with constant turn sign.

    sign=+1 walks the link anticlockwise (the monodromy is then lower
    triangular in the start frame), sign=-1 clockwise (upper triangular).
    """
    orbit = surface.vertex_orbits[v]
    if sign not in (1, -1):
        raise InconsistentPath("sign must be +1 or -1")
    if sign == 1:
        # leave the wedge at corner (t, c) through side (c + 2): the inbound side
        slots = [(t, (c + 2) % 3) for (t, c) in orbit]
    else:
        # reversed wedge order, leaving through the outbound side (t, c)
        slots = [(t, c) for (t, c) in reversed(orbit)]
    return path_from_crossings(surface, slots, closed=True)
