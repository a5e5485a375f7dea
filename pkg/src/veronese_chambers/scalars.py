"""Exact scalar arithmetic: rationals, the extension Q(sqrt 3), matrices, polynomials.

Everything here is exact.  Rationals are ``fractions.Fraction``; the only
irrationality the library ever needs is sqrt(3), provided by ``QuadExt``.
``Matrix`` and ``Poly`` are generic over any exact ordered field whose
elements support +, -, *, / and comparison with 0, so the same elimination
and division code runs over Q and over Q(sqrt 3).
"""

from fractions import Fraction
from math import gcd, lcm


def rat(x):
    """Coerce ints, strings like "3/4", Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, QuadExt):
        if x.b != 0:
            raise ValueError("not a rational: %s" % (x,))
        return x.a
    return Fraction(x)


def format_rational(q):
    """Render "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class QuadExt:
    """An element a + b*sqrt(3) with rational a, b.

    Zero iff a = b = 0; ordering is the real-number one, decided exactly by
    comparing squares.  Only d = 3 is supported.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, *args):
        raise AttributeError("QuadExt is immutable")

    @staticmethod
    def coerce(x):
        if isinstance(x, QuadExt):
            return x
        return QuadExt(Fraction(x))

    def __add__(self, other):
        o = QuadExt.coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QuadExt.coerce(other))

    def __rsub__(self, other):
        return QuadExt.coerce(other) + (-self)

    def __mul__(self, other):
        o = QuadExt.coerce(other)
        return QuadExt(self.a * o.a + 3 * self.b * o.b,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b)

    def norm(self):
        # a^2 - 3 b^2, the field norm down to Q
        return self.a * self.a - 3 * self.b * self.b

    def __truediv__(self, other):
        o = QuadExt.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt3)")
        num = self * o.conjugate()
        return QuadExt(num.a / n, num.b / n)

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (QuadExt, int, Fraction)):
            o = QuadExt.coerce(other)
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, "sqrt3"))

    def sign(self):
        """Exact sign of the real number a + b*sqrt(3)."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == sb or sa == 0:
            return sb
        # opposite signs: compare a^2 with 3 b^2
        n = self.norm()
        if n == 0:
            # impossible: sqrt3 is irrational unless a = b = 0
            return 0
        return sa * ((n > 0) - (n < 0))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __lt__(self, other):
        return (self - QuadExt.coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - QuadExt.coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - QuadExt.coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - QuadExt.coerce(other)).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        return format_quadext(self)


SQRT3 = QuadExt(0, 1)


def format_quadext(x):
    """Render "p/q+r/s*sqrt3"; pure-rational values render as "p/q"."""
    x = QuadExt.coerce(x)
    if x.b == 0:
        return format_rational(x.a)
    if x.a == 0 and x.b == 1:
        return "sqrt3"
    s = format_rational(x.a) + ("+" if x.b >= 0 else "-")
    b = abs(x.b)
    return s + (("%s*sqrt3" % format_rational(b)) if b != 1 else "sqrt3")


def parse_scalar(text):
    """Parse "p/q", "p/q+r/s*sqrt3", "-sqrt3", ... to Fraction or QuadExt."""
    t = text.strip().replace(" ", "")
    if "sqrt3" not in t:
        return Fraction(t)
    body = t
    sign = 1
    if body.startswith(("+", "-")):
        if body[0] == "-":
            sign = -1
        rest = body[1:]
    else:
        rest = body
    # split off the sqrt3 term: the last +/-, if any, not at position 0
    for i in range(len(rest) - 1, 0, -1):
        if rest[i] in "+-" and rest[i - 1] not in "+-/*":
            a = Fraction(rest[:i]) * sign
            tb = rest[i:]
            break
    else:
        a = Fraction(0)
        tb = ("+" if sign > 0 else "-") + rest
    bsign = -1 if tb[0] == "-" else 1
    tb = tb.lstrip("+-")
    if tb == "sqrt3":
        b = Fraction(1)
    elif tb.endswith("*sqrt3"):
        b = Fraction(tb[: -len("*sqrt3")])
    else:
        raise ValueError("cannot parse scalar %r" % text)
    return QuadExt(a, bsign * b)


def sign_of(x):
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def is_quadext(x):
    return isinstance(x, QuadExt) and x.b != 0


class Matrix:
    """Dense exact matrix over Q or Q(sqrt 3).

    Rows are tuples; the matrix is immutable.  Elimination uses the first
    nonzero entry in row-major scan as pivot; exactness makes the choice
    irrelevant to the results.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) if isinstance(x, int) else x for x in r)
                     for r in rows)
        if not rows:
            raise ValueError("empty matrix")
        w = len(rows[0])
        if any(len(r) != w for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", w)

    def __setattr__(self, *args):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(%r)" % (self.rows,)

    def transpose(self):
        return Matrix(list(zip(*self.rows)))

    def mul(self, other):
        bt = list(zip(*other.rows))
        return Matrix([[_dot(r, c) for c in bt] for r in self.rows])

    def vecmul(self, v):
        """M . v for a column vector v."""
        return tuple(_dot(r, v) for r in self.rows)

    def rref(self):
        """Reduced row echelon form; returns (list of rows, pivot columns)."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = None
            for i in range(r, len(rows)):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            pv = rows[r][c]
            rows[r] = [x / pv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return rows, pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right kernel, one vector per free column of the rref.

        Deterministic: free columns are scanned left to right, so repeated
        calls give identical bases.
        """
        rows, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        zero = Fraction(0)
        for fc in free:
            v = [zero] * self.ncols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -rows[r][fc]
            basis.append(tuple(v))
        return basis

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = Fraction(1)
        for c in range(n):
            pr = None
            for i in range(c, n):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                return Fraction(0)
            if pr != c:
                rows[c], rows[pr] = rows[pr], rows[c]
                det = -det
            pv = rows[c][c]
            det = det * pv
            for i in range(c + 1, n):
                if rows[i][c]:
                    f = rows[i][c] / pv
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
        return det

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix([tuple(r) + tuple(Fraction(i == j) for j in range(n))
                      for i, r in enumerate(self.rows)])
        rows, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([r[n:] for r in rows])


def _dot(u, v):
    it = iter(zip(u, v))
    a, b = next(it)
    s = a * b
    for a, b in it:
        s = s + a * b
    return s


class Poly:
    """Univariate polynomial, coefficients ascending; zero poly has no coeffs."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([Fraction(0), Fraction(1)])

    @classmethod
    def from_roots(cls, roots, lead=Fraction(1)):
        p = cls([lead])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other):
        """Exact polynomial division with remainder over the field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.coeffs[-1]
        q = [Fraction(0)] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - f * c
            while rem and not rem[-1]:
                rem.pop()
        return Poly(q), Poly(rem)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a * (Fraction(1) / a.coeffs[-1])

    def root_multiplicity(self, r):
        """Largest k with (t - r)^k dividing self, by repeated exact division."""
        if self.is_zero():
            raise ValueError("undefined multiplicity: zero polynomial")
        lin = Poly([-r, 1])
        k = 0
        p = self
        while True:
            q, rem = p.divmod(lin)
            if not rem.is_zero():
                return k
            k += 1
            p = q

    def primitive(self):
        """Divide by rational content; integer coefficients, content 1.

        Only defined for rational-coefficient polynomials; the sign of the
        leading coefficient is kept.
        """
        if self.is_zero():
            return self
        den = lcm(*[Fraction(c).denominator for c in self.coeffs]) \
            if len(self.coeffs) > 1 else Fraction(self.coeffs[0]).denominator
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, abs(c))
        return Poly([Fraction(c, g) for c in ints])

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*t^%d" % (c, i))
        return "Poly(%s)" % " + ".join(terms)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
