"""Cyclic shift action on chambers, central chambers, and the six-plane group.

The shift moves hyperplane j to j+1 cyclically.  On sign vectors it acts as
a rotation, with a sign flip on the wrapped entry exactly when the ambient
dimension n is odd: the induced linear map multiplies each defining form by
(a - c t_j)^n, and for odd n the wrap factor is the one with the odd count
of negative signs.  (For even n the chamber containing the moment curve is
visibly fixed, as it must be.)

The six-plane model has, over and above the shift, a visible matrix group of
order twelve; verify_six_plane_symmetry checks every numeric claim attached
to it: plane permutations, the twenty triple points with their distances and
orbits, the invariant quadric, the two cubics, and selfadjointness.
"""

import itertools
from fractions import Fraction

from .arrangement import (six_planes, six_plane_cubic, six_plane_dual_cubic,
                          sqrt3_plane, SIX_PLANE_SCHEDULE)
from .chambers import Chamber, canonical_sign, enumerate_chambers, sign_str
from .projective import canonical, pairing, proportional, signed_canonical
from .scalars import Matrix, Poly, QuadExt, sign_of


def shift(eps, flip):
    """One step of the cyclic shift on a spherical sign vector.

    flip=True is the odd-dimensional rule (-eps_m, eps_1, ..., eps_{m-1});
    flip=False the plain rotation (eps_m, eps_1, ..., eps_{m-1}).
    """
    last = eps[-1]
    return ((-last if flip else last),) + tuple(eps[:-1])


class ShiftAction:
    """The Z_m shift on the chambers of an n-dimensional Veronese arrangement."""

    def __init__(self, m, n):
        self.m = m
        self.flip = n % 2 == 1

    def apply(self, eps):
        return shift(eps, self.flip)

    def apply_projective(self, eps):
        return canonical_sign(shift(eps, self.flip))

    def orbit(self, eps):
        out = [canonical_sign(eps)]
        cur = out[0]
        while True:
            cur = self.apply_projective(cur)
            if cur == out[0]:
                return out
            out.append(cur)


def chamber_orbits(arr, chambers=None):
    """Partition of the chambers into shift orbits (lists of sign vectors).

    Raises ValueError("arrangement not Veronese-ordered") if a shift image
    is infeasible; this doubles as a Veronese-order detector.
    """
    if chambers is None:
        chambers = enumerate_chambers(arr)
    signs = {c.sign for c in chambers}
    action = ShiftAction(arr.m, arr.n)
    seen = set()
    orbits = []
    for c in sorted(signs, key=sign_str):
        if c in seen:
            continue
        orb = action.orbit(c)
        for e in orb:
            if e not in signs:
                raise ValueError("arrangement not Veronese-ordered: shift of %s "
                                 "lands on infeasible %s" % (sign_str(c), sign_str(e)))
        seen |= set(orb)
        orbits.append(orb)
    return orbits


def central_chamber(arr, chambers=None):
    """The unique shift-fixed chamber of an even-dimensional Veronese
    arrangement."""
    if arr.n % 2 == 1:
        raise ValueError("no central chamber for odd dimension")
    orbits = chamber_orbits(arr, chambers)
    fixed = [o[0] for o in orbits if len(o) == 1]
    if len(fixed) != 1:
        raise ValueError("expected a unique shift-fixed chamber, found %d"
                         % len(fixed))
    return Chamber(arr, fixed[0])


# ---------------------------------------------------------------------------
# finite matrix groups modulo scalars

def _scalar_canonical(matrix):
    flat = [x for row in matrix.rows for x in row]
    return canonical(flat)


class MatrixGroup:
    """Closure of a generator list under multiplication, modulo scalars."""

    def __init__(self, generators, bound=10000):
        gens = [g if isinstance(g, Matrix) else Matrix(g) for g in generators]
        gens = gens + [g.inverse() for g in gens]
        self.n = gens[0].nrows
        elements = {_scalar_canonical(Matrix.identity(self.n)):
                    Matrix.identity(self.n)}
        frontier = list(elements.values())
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = a.mul(g)
                    key = _scalar_canonical(b)
                    if key not in elements:
                        if len(elements) >= bound:
                            raise ValueError("group too large")
                        elements[key] = b
                        nxt.append(b)
            frontier = nxt
        self.elements = [elements[k] for k in sorted(elements)]

    @property
    def order(self):
        return len(self.elements)

    @staticmethod
    def is_scalar(matrix):
        n = matrix.nrows
        ident = [Fraction(i == j) for i in range(n) for j in range(n)]
        flat = [x for row in matrix.rows for x in row]
        return proportional(flat, ident)


def group_closure(generators, bound=10000):
    return MatrixGroup(generators, bound)


# ---------------------------------------------------------------------------
# the six-plane group

RHO = Matrix([(0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0), (0, 0, 0, 1)])
SIGMA = Matrix([(0, -1, 0, 0), (-1, 0, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)])
TAU = Matrix([(0, 1, -1, -1), (-1, 0, 1, -1), (1, -1, 0, -1), (1, 1, 1, 0)])

# stated plane permutations, in the arrangement's order 1..6 =
# H_x, H^y, H_z, H^x, H_y, H^z
RHO_PERM = {1: 5, 5: 3, 3: 1, 4: 2, 2: 6, 6: 4}      # x->y->z->x on both families
SIGMA_PERM = {1: 5, 5: 1, 3: 3, 4: 2, 2: 4, 6: 6}    # swap x,y
TAU_PERM = {1: 4, 4: 1, 5: 2, 2: 5, 3: 6, 6: 3}      # H_a <-> H^a

QUADRIC = Matrix([(0, 1, 1, 0), (1, 0, 1, 0), (1, 1, 0, 0), (0, 0, 0, 2)])
# twice the matrix of xy + yz + zx + t^2; scale is irrelevant modulo scalars


def plane_action(g, covectors):
    """Permutation and sign of h -> h.g on a covector list.

    Returns (perm, signs) with perm[j] = image index and signs[j] in {+1,-1}
    the sign of the proportionality factor, both 1-based; raises if some
    image is not in the list.
    """
    perm, signs = {}, {}
    for j, h in enumerate(covectors, start=1):
        img = tuple(Matrix([h]).mul(g).rows[0])
        for k, h2 in enumerate(covectors, start=1):
            if proportional(img, h2):
                perm[j] = k
                ratio = next(a / b for a, b in zip(img, h2) if sign_of(b))
                signs[j] = sign_of(ratio)
                break
        else:
            raise ValueError("image of plane %d not in the arrangement" % j)
    return perm, signs


def chamber_image(eps, perm, signs):
    """Sign vector of the transformed chamber: delta_perm[j] = sign_j eps_j."""
    out = [0] * len(eps)
    for j in range(1, len(eps) + 1):
        out[perm[j] - 1] = signs[j] * eps[j - 1]
    return canonical_sign(out)


def chamber_group_orbits(arr, generators, chambers=None):
    """Orbits of the chambers under a matrix group given by generators."""
    if chambers is None:
        chambers = enumerate_chambers(arr)
    actions = []
    for g in generators:
        actions.append(plane_action(g, arr.covectors))
        actions.append(plane_action(g.inverse(), arr.covectors))
    signs = {c.sign for c in chambers}
    seen = set()
    orbits = []
    for s in sorted(signs, key=sign_str):
        if s in seen:
            continue
        orb = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for e in frontier:
                for perm, sg in actions:
                    img = chamber_image(e, perm, sg)
                    if img not in signs:
                        raise ValueError("group does not act on the chambers")
                    if img not in orb:
                        orb.add(img)
                        nxt.append(img)
            frontier = nxt
        seen |= orb
        orbits.append(sorted(orb, key=sign_str))
    return orbits


# the twenty triple points: label, defining triple (1-based indices into the
# six-plane order), stated coordinates, marker
TRIPLE_POINT_TABLE = [
    ("P_0", (1, 3, 5), (0, 0, 0, 1), "center"),
    ("P^0", (2, 4, 6), (1, 1, 1, 0), "center-dual"),
    ("H^{yz}_x", (1, 2, 6), (0, -1, 1, 1), "bsq"),
    ("H^{zx}_y", (5, 6, 4), (1, 0, -1, 1), "bsq"),
    ("H^{xy}_z", (3, 4, 2), (-1, 1, 0, 1), "bsq"),
    ("H_{yz}^x", (5, 3, 4), (1, 0, 0, 0), "wsq"),
    ("H_{zx}^y", (3, 1, 2), (0, 1, 0, 0), "wsq"),
    ("H_{xy}^z", (1, 5, 6), (0, 0, 1, 0), "wsq"),
    ("H_{xy}^x", (1, 5, 4), (0, 0, -1, 1), "bdot"),
    ("H_{yz}^y", (5, 3, 2), (-1, 0, 0, 1), "bdot"),
    ("H_{zx}^z", (3, 1, 6), (0, -1, 0, 1), "bdot"),
    ("H^{xy}_x", (4, 2, 1), (0, 2, 1, 1), "wdot"),
    ("H^{yz}_y", (2, 6, 5), (1, 0, 2, 1), "wdot"),
    ("H^{zx}_z", (6, 4, 3), (2, 1, 0, 1), "wdot"),
    ("H_{yx}^y", (5, 1, 2), (0, 0, 1, 1), "bdot"),
    ("H_{zy}^z", (3, 5, 6), (1, 0, 0, 1), "bdot"),
    ("H_{xz}^x", (1, 3, 4), (0, 1, 0, 1), "bdot"),
    ("H^{yx}_y", (2, 4, 5), (-2, 0, -1, 1), "wdot"),
    ("H^{zy}_z", (6, 2, 3), (-1, -2, 0, 1), "wdot"),
    ("H^{xz}_x", (4, 6, 1), (0, -1, -2, 1), "wdot"),
]


def six_plane_group():
    return group_closure([RHO, SIGMA, TAU])


def verify_six_plane_symmetry():
    """Run every numeric check of the six-plane model; returns an ordered
    dict check-name -> {"pass": bool, ...witness fields}."""
    arr = six_planes()
    report = {}

    # (a) the stated permutations of the six planes
    perms = {"rho": (RHO, RHO_PERM), "sigma": (SIGMA, SIGMA_PERM),
             "tau": (TAU, TAU_PERM)}
    ok = True
    witness = {}
    for name, (g, stated) in perms.items():
        perm, _ = plane_action(g, arr.covectors)
        witness[name] = perm
        ok = ok and perm == stated
    report["a_plane_permutations"] = {"pass": ok, "permutations": witness}

    # (b) the twenty triple points, their table and distances
    pts = {}
    ok = True
    mism = []
    for name, triple, stated, marker in TRIPLE_POINT_TABLE:
        p = arr.vertex_point(triple)
        pts[name] = p
        if p != canonical([Fraction(c) for c in stated]):
            ok = False
            mism.append(name)
    sq = {"finite": [], "infinite": 0}
    for name, triple, stated, marker in TRIPLE_POINT_TABLE:
        x, y, z, t = pts[name]
        if t == 0:
            sq["infinite"] += 1
        else:
            sq["finite"].append(Fraction(x, t) ** 2 + Fraction(y, t) ** 2
                                + Fraction(z, t) ** 2)
    want = sorted([Fraction(0)] + [Fraction(1)] * 6 + [Fraction(2)] * 3
                  + [Fraction(5)] * 6)
    dist_ok = sorted(sq["finite"]) == want and sq["infinite"] == 4
    report["b_twenty_points"] = {"pass": ok and dist_ok,
                                 "coordinate_mismatches": mism,
                                 "squared_distances": sorted(map(str, sq["finite"])),
                                 "points_at_infinity": sq["infinite"]}

    # (c) group order, relations, and orbits on the twenty points
    group = six_plane_group()
    rel_ok = (MatrixGroup.is_scalar(SIGMA.mul(SIGMA))
              and MatrixGroup.is_scalar(_power(RHO.mul(TAU), 6))
              and MatrixGroup.is_scalar(_power(RHO.mul(TAU).mul(SIGMA), 2))
              and proportional([x for r in TAU.mul(TAU).rows for x in r],
                               [x for r in Matrix.identity(4).rows for x in r]))
    orbit_sizes = _point_orbit_sizes(group, [pts[n] for n, _, _, _ in
                                             TRIPLE_POINT_TABLE])
    report["c_group_and_orbits"] = {
        "pass": group.order == 12 and rel_ok and orbit_sizes == [2, 6, 12],
        "order": group.order, "relations": rel_ok,
        "point_orbit_sizes": orbit_sizes}

    # (d) invariance of the quadric xy + yz + zx + t^2
    ok = True
    for g in group.elements:
        q2 = g.transpose().mul(QUADRIC).mul(g)
        if not proportional([x for r in q2.rows for x in r],
                            [x for r in QUADRIC.rows for x in r]):
            ok = False
    report["d_quadric_invariance"] = {"pass": ok}

    # (e) the quadric along the osculating cubic
    k = six_plane_cubic()
    qk = _quadric_along(k)
    target = Poly([Fraction(3), Fraction(-3), Fraction(1)])  # s^2 - 3s + 3
    target = target * target * target * Fraction(-15)
    report["e_quadric_on_cubic"] = {"pass": qk == target,
                                    "poly": [str(c) for c in qk.coeffs]}

    # (f) the quadric vanishes identically on the dual cubic
    kd = six_plane_dual_cubic()
    report["f_quadric_on_dual_cubic"] = {"pass": _quadric_along(kd).is_zero()}

    # (g) tau swaps the two sqrt(3)-planes
    h_plus = sqrt3_plane(+1)   # x + y + z - t sqrt3
    h_minus = sqrt3_plane(-1)  # x + y + z + t sqrt3
    img = tuple(Matrix([h_minus]).mul(TAU).rows[0])
    report["g_tau_sqrt3"] = {"pass": proportional(img, h_plus)}

    # (h) selfadjointness: the plane spanned by three consecutive dual points
    # is again one of the six planes; exact computation pins the alignment:
    # the triple centered at index i spans the plane i+3 (mod 6).
    ok = True
    alignment = {}
    for i in range(6):
        tri = [arr.covectors[(i + d) % 6] for d in (-1, 0, 1)]
        ker = Matrix(tri).kernel_basis()
        plane = canonical(ker[0])
        hit = [k for k in range(6) if plane == canonical(arr.covectors[k])]
        alignment[i] = hit[0] if hit else None
        if alignment[i] != (i + 3) % 6:
            ok = False
    report["h_selfadjoint"] = {"pass": ok, "alignment": alignment}

    # osculation schedule of the cubic against the six planes
    sched_ok = all(k.osculation_order(arr.covectors[j], SIX_PLANE_SCHEDULE[j]) == 3
                   for j in range(6))
    report["i_osculation_schedule"] = {"pass": sched_ok}

    # the negative claims, certified over the visible planes only: the six
    # planes form one orbit of six, the two pairs at infinity and sqrt(3)
    # are orbits of two
    sizes = _plane_orbit_sizes(group, arr.covectors)
    inf_pair = _plane_orbit_sizes(group, [(Fraction(0),) * 3 + (Fraction(1),),
                                          (Fraction(1),) * 3 + (Fraction(0),)])
    report["j_plane_orbits"] = {"pass": sizes == [6] and inf_pair == [2],
                                "six_plane_orbits": sizes,
                                "infinity_pair": inf_pair}
    return report


def _power(m, k):
    out = Matrix.identity(m.nrows)
    for _ in range(k):
        out = out.mul(m)
    return out


def _point_orbit_sizes(group, points):
    pts = [canonical(p) for p in points]
    index = {p: i for i, p in enumerate(pts)}
    seen = set()
    sizes = []
    for p in pts:
        if p in seen:
            continue
        orb = set()
        frontier = [p]
        orb.add(p)
        while frontier:
            nxt = []
            for q in frontier:
                for g in group.elements:
                    img = canonical(g.vecmul(q))
                    if img not in index:
                        raise ValueError("group does not permute the points")
                    if img not in orb:
                        orb.add(img)
                        nxt.append(img)
            frontier = nxt
        seen |= orb
        sizes.append(len(orb))
    return sorted(sizes)


def _plane_orbit_sizes(group, covectors):
    covs = [canonical(h) for h in covectors]
    index = set(covs)
    seen = set()
    sizes = []
    for h in covs:
        if h in seen:
            continue
        orb = {h}
        frontier = [h]
        while frontier:
            nxt = []
            for q in frontier:
                for g in group.elements:
                    img = canonical(tuple(Matrix([q]).mul(g).rows[0]))
                    if img not in index:
                        raise ValueError("group does not permute the planes")
                    if img not in orb:
                        orb.add(img)
                        nxt.append(img)
            frontier = nxt
        seen |= orb
        sizes.append(len(orb))
    return sorted(sizes)


def _quadric_along(curve):
    x, y, z, t = curve.components
    return x * y + y * z + z * x + t * t
