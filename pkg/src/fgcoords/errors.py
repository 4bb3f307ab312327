"""Exception hierarchy shared by all fgcoords modules."""


class FgcError(Exception):
    """Base class for all library errors."""


# --- surface / combinatorics ---

class UnpairedSide(FgcError):
    """A triangle side is missing from the gluing list, listed twice, or glued to itself."""


class EulerMismatch(FgcError):
    """Triangle count does not equal -2*chi = 2*(2g - 2 + n)."""


class VertexCountMismatch(FgcError):
    """Derived ideal-vertex count differs from the declared puncture count."""


class SelfGluedEdge(FgcError):
    """Both sides of the edge lie in a single triangle; flip/dualize undefined."""


class InconsistentPath(FgcError):
    """Dual-path steps are not combinatorially consistent with the triangulation."""


# --- projective kernel ---

class DegenerateConfiguration(FgcError):
    """Flags are not in general position (a ratio denominator vanishes)."""


class NotCollinear(FgcError):
    """Cross-ratio input points do not lie on a common line."""


class CoincidentBasePoints(FgcError):
    """First three cross-ratio points are not pairwise distinct."""


class NotConcurrent(FgcError):
    """Cross-ratio input lines do not pass through a common point."""


class NonPositiveParameter(FgcError):
    """A coordinate that must be a positive rational is zero or negative."""


class DegeneratePair(FgcError):
    """Flag pair (plus frame point) does not span a projective basis."""


class ZeroDeterminant(FgcError):
    """Matrix invariant undefined because the determinant vanishes."""


# --- developing map ---

class DepthLimitExceeded(FgcError):
    """Tessellation growth exceeded the depth or denominator-size cap."""


class PatchOverflow(FgcError):
    """A tessellation vertex left the working affine patch."""


class TooFewVertices(FgcError):
    """Not enough distinct vertices for a conic fit."""


# --- poisson ---

class AssumptionIViolated(FgcError):
    """Triangulation has an edge contained in only one triangle (assumption (I) fails)."""
