"""Polynomial curves of degree n in P^n and their osculating duality.

A curve is a tuple of n+1 polynomials of degree <= n.  Evaluation at t =
infinity reads off the degree-n coefficient vector, which is the same as
evaluating the reversed-coefficient curve at 0; that trick keeps everything
in a single affine chart of the parameter line.
"""

from fractions import Fraction

from .scalars import Matrix, Poly, binomial
from .projective import canonical, pairing

INFINITY = "inf"


class PolyCurve:
    """A rational curve t -> (p_0(t) : ... : p_n(t)) of degree <= n."""

    def __init__(self, components):
        comps = tuple(p if isinstance(p, Poly) else Poly(p) for p in components)
        if all(p.is_zero() for p in comps):
            raise ValueError("zero curve")
        self.components = comps
        self.n = len(comps) - 1

    def degree(self):
        return max(p.degree() for p in self.components)

    def at(self, t):
        """Canonical projective point at parameter t (or INFINITY)."""
        if t == INFINITY:
            return self.reversed().at(0)
        return canonical(tuple(p(Fraction(t)) for p in self.components))

    def reversed(self):
        """The curve with parameter t replaced by 1/t, cleared of denominators.

        Coefficient lists are padded to the curve degree and reversed, so the
        value at 0 is the original leading-coefficient vector.
        """
        d = self.degree()
        comps = []
        for p in self.components:
            cs = list(p.coeffs) + [Fraction(0)] * (d + 1 - len(p.coeffs))
            comps.append(Poly(cs[::-1]))
        return PolyCurve(comps)

    def pairing_poly(self, h):
        """<h, c(t)> as a polynomial in t."""
        acc = Poly([])
        for a, p in zip(h, self.components):
            acc = acc + p * a
        return acc

    def osculation_order(self, h, t):
        """Vanishing order of <h, c(.)> at t; at INFINITY it is the degree drop."""
        p = self.pairing_poly(h)
        if p.is_zero():
            raise ValueError("curve lies inside the hyperplane")
        if t == INFINITY:
            return self.degree() - p.degree()
        return p.root_multiplicity(Fraction(t))

    def derivative_matrix(self, order):
        """Rows c(t), c'(t), ..., c^(order-1)(t) as polynomial entries."""
        rows = []
        ps = list(self.components)
        for _ in range(order):
            rows.append(ps)
            ps = [p.derivative() for p in ps]
        return rows

    def projectively_equal(self, other):
        """True iff all 2x2 minors of the two component vectors vanish identically."""
        a, b = self.components, other.components
        if len(a) != len(b):
            return False
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if a[i] * b[j] != a[j] * b[i]:
                    return False
        return True

    def __repr__(self):
        return "PolyCurve(%r)" % (list(self.components),)


def veronese_curve(n):
    """The degree-n rational normal curve with components C(n,k) (-t)^(n-k)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    comps = []
    for k in range(n + 1):
        coeffs = [Fraction(0)] * (n - k) + [Fraction(binomial(n, k) * (-1) ** (n - k))]
        comps.append(Poly(coeffs))
    return PolyCurve(comps)


def veronese_covector(n, t):
    """Covector (1, t, t^2, ..., t^n) of the osculating hyperplane at x(t)."""
    t = Fraction(t)
    return canonical(tuple(t ** k for k in range(n + 1)))


def osculating_hyperplane(curve, t):
    """The unique hyperplane meeting the curve to order n at parameter t.

    Computed as the kernel of the n x (n+1) matrix of the curve and its
    first n-1 derivatives at t; raises if that matrix drops rank.
    """
    if t == INFINITY:
        return osculating_hyperplane(curve.reversed(), 0)
    t = Fraction(t)
    n = curve.n
    rows = [[p(t) for p in row] for row in curve.derivative_matrix(n)]
    ker = Matrix(rows).kernel_basis()
    if len(ker) != 1:
        raise ValueError("no unique osculating hyperplane at t=%s" % (t,))
    return canonical(ker[0])


def dual_curve(curve):
    """The curve of osculating covectors, cleared of common polynomial content.

    Component k is (-1)^k times the maximal minor of the derivative matrix
    omitting column k; the result has the same degree as the input.
    """
    n = curve.n
    rows = curve.derivative_matrix(n)
    minors = []
    for k in range(n + 1):
        sub = [[row[j] for j in range(n + 1) if j != k] for row in rows]
        sign = 1 if k % 2 == 0 else -1
        minors.append(_poly_det(sub) * sign)
    if all(p.is_zero() for p in minors):
        raise ValueError("degenerate curve: osculating hyperplane nowhere unique")
    g = Poly([])
    for p in minors:
        g = g.gcd(p)
    comps = [p.divmod(g)[0] for p in minors]
    # normalize to integer coefficients with overall content 1
    prim = [p.primitive() for p in comps]
    scale = None
    for p, q in zip(comps, prim):
        if not p.is_zero():
            scale = q.coeffs[-1] / p.coeffs[-1]
            break
    comps = [p * scale for p in comps]
    lead = next(c for p in comps for c in [p.coeffs[-1] if not p.is_zero() else 0] if c)
    if lead < 0:
        comps = [-p for p in comps]
    return PolyCurve(comps)


def _poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = Poly([])
    for i in range(n):
        if rows[i][0].is_zero():
            continue
        minor = [r[1:] for k, r in enumerate(rows) if k != i]
        term = rows[i][0] * _poly_det(minor)
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


def reparametrize(curve, a, b, c, d):
    """The curve t -> c((a t + b)/(c t + d)), cleared of denominators.

    Components p(t) of degree <= n become (ct+d)^n p((at+b)/(ct+d)), again
    polynomials of degree <= n; the Moebius matrix must be invertible.
    """
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    if a * d - b * c == 0:
        raise ValueError("singular parameter change")
    n = curve.n
    num = Poly([b, a])
    den = Poly([d, c])
    num_pow = [Poly([1])]
    den_pow = [Poly([1])]
    for _ in range(n):
        num_pow.append(num_pow[-1] * num)
        den_pow.append(den_pow[-1] * den)
    comps = []
    for p in curve.components:
        cs = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
        acc = Poly([])
        for k in range(n + 1):
            acc = acc + num_pow[k] * den_pow[n - k] * cs[k]
        comps.append(acc)
    return PolyCurve(comps)


def curve_through_points(points):
    """The unique degree-n curve through n+3 general-position points.

    The points are visited at infinity, 0, 1, q_3 < ... < q_{n+1}, r in the
    order given.  Returns (curve, qs, r) with qs = (q_3, ..., q_{n+1}).
    After normalizing the first n+2 points to the standard frame, the last
    point must have strictly increasing positive coordinates; otherwise the
    caller gets ValueError("not in the normal-form cone") and must permute.
    """
    points = [tuple(p) for p in points]
    n = len(points[0]) - 1
    if len(points) != n + 3:
        raise ValueError("need n+3 points in P^n")
    from .projective import frame_normalize

    # Prop-style frame: p_1..p_{n+1} -> basis vectors, p_0 -> all-ones.
    frame = frame_normalize(points[1:n + 2] + [points[0]])
    a = frame.apply_point(points[n + 2])
    if a[0] < 0:
        a = tuple(-x for x in a)
    if any(x <= 0 for x in a) or any(a[i] >= a[i + 1] for i in range(n)):
        raise ValueError("not in the normal-form cone")
    a = [Fraction(x) for x in a]  # a_1, ..., a_{n+1} in 1-based speech
    a1, a2 = a[0], a[1]
    r = a2 / (a2 - a1)
    qs = [ (a[j - 1] - a1) * a2 / ((a2 - a1) * a[j - 1]) for j in range(3, n + 2)]
    params = [Fraction(0), Fraction(1)] + qs
    comps_norm = [Poly.from_roots([q for k, q in enumerate(params) if k != j])
                  for j in range(n + 1)]
    # back to the original coordinates: columns of frame^-1 recombine components
    inv = frame.inverse_matrix()
    comps = []
    for i in range(n + 1):
        acc = Poly([])
        for j in range(n + 1):
            acc = acc + comps_norm[j] * inv.rows[i][j]
        comps.append(acc)
    curve = PolyCurve(comps)
    order = [Fraction(0), Fraction(1)] + qs + [r]
    if any(order[i] >= order[i + 1] for i in range(len(order) - 1)):
        raise ValueError("parameter ordering broken; input not admissible")
    return curve, tuple(qs), r
