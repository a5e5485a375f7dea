"""Points, hyperplanes and transformations of P^n and S^n.

Points and hyperplane covectors are plain tuples of exact scalars in
homogeneous coordinates.  Two canonical forms are used throughout:

* projective: integer entries, gcd 1, first nonzero entry positive;
* signed (spherical): same scaling but the original orientation is kept.

Over Q(sqrt 3) "integer entries" means integer rational parts a, b of every
entry, with gcd 1 over all of them.
"""

from fractions import Fraction
from math import gcd, lcm

from .scalars import Matrix, QuadExt, sign_of


def signed_canonical(vec):
    """Scale by a positive rational so entries are integers with gcd 1."""
    vec = tuple(vec)
    if all(not v for v in vec):
        raise ValueError("zero vector has no canonical form")
    parts = []
    for v in vec:
        if isinstance(v, QuadExt):
            parts.extend([v.a, v.b])
        else:
            parts.append(Fraction(v))
    den = 1
    for p in parts:
        den = lcm(den, p.denominator)
    ints = [int(p * den) for p in parts]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    scale = Fraction(den, g)
    out = []
    for v in vec:
        if isinstance(v, QuadExt):
            out.append(QuadExt(v.a * scale, v.b * scale))
        else:
            out.append(Fraction(v) * scale)
    return tuple(out)


def canonical(vec):
    """Projective canonical form: signed form with first nonzero entry > 0."""
    out = signed_canonical(vec)
    for v in out:
        s = sign_of(v)
        if s < 0:
            return tuple(-x for x in out)
        if s > 0:
            break
    return out


def pairing(h, p):
    """Exact evaluation <H, p> of a covector on a point."""
    it = iter(zip(h, p))
    a, b = next(it)
    s = a * b
    for a, b in it:
        s = s + a * b
    return s


def proportional(u, v):
    """True iff u = lambda v for some nonzero scalar (2x2 minors vanish)."""
    if len(u) != len(v):
        return False
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return any(u) and any(v)


class ProjTransform:
    """Invertible projective transformation of P^n.

    Acts on points by ``matrix . p`` and on hyperplane covectors by
    ``h . matrix^-1``, so incidence is preserved.  Equality is modulo a
    scalar factor.
    """

    def __init__(self, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        if matrix.nrows != matrix.ncols:
            raise ValueError("transform matrix must be square")
        self.matrix = matrix
        self._inv = None

    def inverse_matrix(self):
        if self._inv is None:
            self._inv = self.matrix.inverse()
        return self._inv

    def apply_point(self, p):
        return canonical(self.matrix.vecmul(p))

    def apply_covector(self, h):
        inv = self.inverse_matrix()
        return canonical(tuple(Matrix([h]).mul(inv).rows[0]))

    def compose(self, other):
        """self after other: (self.compose(other))(p) = self(other(p))."""
        return ProjTransform(self.matrix.mul(other.matrix))

    def inverse(self):
        return ProjTransform(self.inverse_matrix())

    def __eq__(self, other):
        if not isinstance(other, ProjTransform):
            return NotImplemented
        a = [x for row in self.matrix.rows for x in row]
        b = [x for row in other.matrix.rows for x in row]
        return proportional(a, b)

    def __repr__(self):
        return "ProjTransform(%r)" % (self.matrix,)


def frame_normalize(points):
    """Transform taking n+2 general-position points to the standard frame.

    The images are e_1, ..., e_{n+1}, (1, ..., 1), in the order given.
    Raises ValueError("not in general position") on degenerate input.
    """
    points = [tuple(p) for p in points]
    n1 = len(points[0])
    if len(points) != n1 + 1:
        raise ValueError("need n+2 points in P^n")
    base = Matrix(points[:n1]).transpose()  # columns are the first n+1 points
    if base.det() == 0:
        raise ValueError("not in general position")
    lam = base.inverse().vecmul(points[n1])
    if any(not l for l in lam):
        raise ValueError("not in general position")
    scaled = Matrix([[points[j][i] * lam[j] for j in range(n1)]
                     for i in range(n1)])
    return ProjTransform(scaled.inverse())


def grassmann_dual_covectors(covectors):
    """Dual family in P^(m-n-2) from m >= n+2 covectors in P^n.

    Rows of the returned list are the rows of a kernel-basis matrix B with
    A.B = 0; the basis comes from the reduced echelon form, so the dual is
    deterministic.
    """
    m = len(covectors)
    n1 = len(covectors[0])
    if m < n1 + 1:
        raise ValueError("dual undefined: need m >= n+2 hyperplanes")
    a = Matrix(covectors)  # m x (n+1); its transpose is the classical A
    basis = a.transpose().kernel_basis()  # vectors in R^m, count m-n-1
    if len(basis) != m - n1:
        raise ValueError("not in general position")
    # entry j of each basis vector -> coordinates of dual hyperplane j
    return [canonical(tuple(b[j] for b in basis)) for j in range(m)]
