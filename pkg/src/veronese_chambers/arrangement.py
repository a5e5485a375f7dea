"""Hyperplane arrangements in P^n: construction, general position, signs.

The order of hyperplanes is significant everywhere: indices drive the cyclic
shift action, the facet labels and the census bookkeeping.  Covectors are
stored in signed canonical form, so the sign conventions of the defining
equations survive construction (the first nonzero coefficient of each input
equation fixes the orientation).
"""

import itertools
from fractions import Fraction

from .curves import PolyCurve, veronese_curve
from .projective import canonical, grassmann_dual_covectors, pairing, signed_canonical
from .scalars import Matrix, Poly, QuadExt, parse_scalar, format_quadext, sign_of


class Arrangement:
    """Ordered list of m hyperplane covectors in n+1 homogeneous coordinates."""

    def __init__(self, n, covectors):
        self.n = n
        self.covectors = [signed_canonical(h) for h in covectors]
        for h in self.covectors:
            if len(h) != n + 1:
                raise ValueError("covector length != n+1")
        self._vertex_cache = {}

    @property
    def m(self):
        return len(self.covectors)

    def __repr__(self):
        return "Arrangement(n=%d, m=%d)" % (self.n, self.m)

    def evaluate(self, j, point):
        """<H_j, point> with 1-based hyperplane index."""
        return pairing(self.covectors[j - 1], point)

    def sign_at(self, point):
        """Sign vector of a point, entries in {-1, 0, +1}, 1-based order."""
        return tuple(sign_of(self.evaluate(j, point)) for j in range(1, self.m + 1))

    def coefficient_matrix(self):
        return Matrix(self.covectors)

    def general_position(self):
        """(True, None) or (False, witness) with a violating (n+1)-subset."""
        for subset in itertools.combinations(range(1, self.m + 1), self.n + 1):
            rows = [self.covectors[j - 1] for j in subset]
            if Matrix(rows).det() == 0:
                return False, subset
        return True, None

    def vertex_point(self, subset):
        """Canonical intersection point of the n hyperplanes in `subset` (1-based)."""
        key = frozenset(subset)
        if key not in self._vertex_cache:
            rows = [self.covectors[j - 1] for j in sorted(key)]
            ker = Matrix(rows).kernel_basis()
            if len(ker) != 1:
                raise ValueError("hyperplanes %s do not meet in a point" % (sorted(key),))
            self._vertex_cache[key] = canonical(ker[0])
        return self._vertex_cache[key]

    def add_hyperplane(self, covector):
        """New arrangement with the covector appended; must stay in general position."""
        arr = Arrangement(self.n, self.covectors + [tuple(covector)])
        ok, witness = arr.general_position()
        if not ok:
            raise ValueError("general position violated by subset %s" % (witness,))
        return arr

    def restrict(self, indices):
        """Sub-arrangement keeping the 1-based indices given, in order."""
        return Arrangement(self.n, [self.covectors[j - 1] for j in indices])

    def to_text(self):
        lines = ["%d %d" % (self.n, self.m)]
        for h in self.covectors:
            lines.append(" ".join(format_quadext(x) if isinstance(x, QuadExt)
                                  else _fmt(x) for x in h))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [l for l in text.splitlines() if l.strip()]
        n, m = map(int, lines[0].split())
        covs = []
        for l in lines[1:m + 1]:
            covs.append(tuple(parse_scalar(tok) for tok in l.split()))
        return cls(n, covs)


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def veronese(n, ts):
    """The arrangement with covectors (1, t_j, t_j^2, ..., t_j^n).

    Parameters must be strictly increasing; general position is automatic
    (Vandermonde).
    """
    ts = [Fraction(t) for t in ts]
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise ValueError("parameters must be strictly increasing")
    if not ts:
        raise ValueError("need at least one parameter")
    covs = [tuple(t ** k for k in range(n + 1)) for t in ts]
    return Arrangement(n, covs)


# The six-plane model in P^3, coordinates (x, y, z, t), listed in the order
# in which the cubic below osculates them.
SIX_PLANE_NAMES = ("H_x", "H^y", "H_z", "H^x", "H_y", "H^z")
_SIX = [
    (1, 0, 0, 0),    # x = 0
    (-1, 0, 1, -1),  # z - x - t = 0
    (0, 0, 1, 0),    # z = 0
    (0, 1, -1, -1),  # y - z - t = 0
    (0, 1, 0, 0),    # y = 0
    (1, -1, 0, -1),  # x - y - t = 0
]

# parameter values at which the cubic touches the six planes, in order
SIX_PLANE_SCHEDULE = (Fraction(0), Fraction(1), Fraction(3, 2), Fraction(2),
                      Fraction(3), "inf")


def six_planes():
    """The distinguished six-plane arrangement with its visible symmetry group."""
    return Arrangement(3, [tuple(Fraction(c) for c in h) for h in _SIX])


def six_plane_cubic():
    """The cubic osculating the six planes at parameters 0, 1, 3/2, 2, 3, inf."""
    half3 = Fraction(3, 2)
    return PolyCurve([
        Poly.from_roots([0, 0, 0]),                       # s^3
        Poly.from_roots([3, 3, 3]),                       # (s-3)^3
        Poly.from_roots([half3, half3, half3], Fraction(-8)),
        Poly.from_roots([1, 2], Fraction(9)),             # 9(s-1)(s-2)
    ])


def six_plane_dual_cubic():
    """The cubic through the six dual points, in the same cyclic order."""
    return PolyCurve([
        Poly.from_roots([1, Fraction(3, 2), 2], Fraction(2)),
        Poly.from_roots([0, 1], Fraction(-1)),
        Poly.from_roots([2, 3]),
        Poly.from_roots([1, 2], Fraction(-3)),
    ])


def sqrt3_plane(sign=1):
    """Covector of x + y + z -+ t*sqrt(3) = 0; sign=+1 is the -sqrt(3) one."""
    one = QuadExt(1)
    return (one, one, one, QuadExt(0, -sign))


def mirror(arr):
    """Negate the last coordinate of every covector (the mirror arrangement)."""
    covs = [tuple(list(h[:-1]) + [-h[-1]]) for h in arr.covectors]
    return Arrangement(arr.n, covs)
