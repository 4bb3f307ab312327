"""Tiny exact 3x3 / 3-vector helpers.

Everything here is generic over the scalar ring: Fraction for the exact
kernel, float or Dual for numerical evaluation.  Matrices are tuples of
row tuples, vectors are 3-tuples.
"""

from fractions import Fraction


def vec3(a, b, c):
    return (a, b, c)


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    """Cross product; meet of two lines / join of two points in RP^2."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u, v, w):
    return dot(u, cross(v, w))


def mat_identity(one=Fraction(1)):
    zero = one - one
    return ((one, zero, zero), (zero, one, zero), (zero, zero, one))


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))


def vec_mat(v, a):
    """Row vector times matrix; how lines transform under the inverse map."""
    return tuple(sum(v[k] * a[k][j] for k in range(3)) for j in range(3))


def mat_scale(a, s):
    return tuple(tuple(x * s for x in row) for row in a)


def mat_det(a):
    return det3(a[0], a[1], a[2])


def mat_transpose(a):
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def mat_adjugate(a):
    """Adjugate: a * adj(a) = det(a) * I, entries polynomial in a."""
    return tuple(
        tuple(
            a[(j + 1) % 3][(i + 1) % 3] * a[(j + 2) % 3][(i + 2) % 3]
            - a[(j + 1) % 3][(i + 2) % 3] * a[(j + 2) % 3][(i + 1) % 3]
            for j in range(3)
        )
        for i in range(3)
    )


def mat_inv(a):
    d = mat_det(a)
    if d == 0:
        raise ZeroDivisionError("singular 3x3 matrix")
    return mat_scale(mat_adjugate(a), 1 / d if not isinstance(d, Fraction) else Fraction(1) / d)


def mat_trace(a):
    return a[0][0] + a[1][1] + a[2][2]


def columns_to_matrix(c0, c1, c2):
    return tuple((c0[i], c1[i], c2[i]) for i in range(3))


def frame_matrix(p0, p1, p2, p3):
    """Matrix sending the standard basis e0,e1,e2,e0+e1+e2 to p0..p3.

    Returns None when the four points are not in general position.
    Standard projective-frame construction: scale the first three
    representatives so their sum is a representative of p3.
    """
    m = columns_to_matrix(p0, p1, p2)
    d = mat_det(m)
    if d == 0:
        return None
    coeffs = mat_vec(mat_adjugate(m), p3)  # d * (a,b,c) with a*p0+b*p1+c*p2 = p3
    if any(x == 0 for x in coeffs):
        return None
    return columns_to_matrix(
        tuple(coeffs[0] * x for x in p0),
        tuple(coeffs[1] * x for x in p1),
        tuple(coeffs[2] * x for x in p2),
    )


def projective_map(src, dst):
    """Exact projective map sending four source points to four target points.

    src and dst are quadruples of homogeneous 3-vectors, each in general
    position.  Returns a matrix with Fraction entries, unique up to scale.
    Returns None when either quadruple is degenerate.
    """
    a = frame_matrix(*src)
    b = frame_matrix(*dst)
    if a is None or b is None:
        return None
    return mat_mul(b, mat_adjugate(a))


def rank(rows):
    """Exact rank of a matrix given as a list of row sequences of Fractions."""
    m = [list(map(Fraction, row)) for row in rows]
    rank_ = 0
    ncols = len(m[0]) if m else 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                factor = m[r][col] / pv
                m[r] = [x - factor * y for x, y in zip(m[r], m[row])]
        row += 1
        rank_ += 1
        if row == len(m):
            break
    return rank_
