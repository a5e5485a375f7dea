"""Chambers of an arrangement: exact feasibility, enumeration, classification.

A chamber is an antipodal pair of strictly feasible sign vectors; we store
the projective representative whose first sign is +.  Faces of a chamber are
named by their support set Z (the hyperplanes they lie on) and carry the
vertex labels {S : S >= Z}; identity of a face across chambers is its
zero-extended sign vector, canonicalized.

The feasibility engine is homogeneous Fourier-Motzkin elimination over the
exact scalars; it is complete, and small enough instances never blow up at
this scale (m <= 10, n+1 <= 7 variables).
"""

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .polytopes import AbstractPolytope, classify
from .projective import pairing
from .scalars import Matrix, binomial, sign_of


def canonical_sign(eps):
    """Flip the whole vector if needed so the first nonzero entry is +1."""
    for e in eps:
        if e > 0:
            return tuple(eps)
        if e < 0:
            return tuple(-x for x in eps)
    raise ValueError("zero sign vector")


def sign_str(eps):
    return "".join("+" if e > 0 else "-" if e < 0 else "0" for e in eps)


def parse_sign(text):
    return tuple({"+": 1, "-": -1, "0": 0}[c] for c in text.strip())


# ---------------------------------------------------------------------------
# Fourier-Motzkin feasibility

def _normalize_row(row):
    for x in row:
        s = sign_of(x)
        if s:
            a = abs(x)
            return tuple(v / a for v in row)
    return None  # all-zero row


def _fm_strict(rows, nvars):
    """Does some y satisfy r . y > 0 for every row r?  Exact and complete.

    Runs homogeneous Fourier-Motzkin with the classical history acceleration:
    every derived row remembers which original rows it combines, and a row
    combining more than eliminated+1 originals is a consequence of the kept
    ones, so it is dropped without changing the projection.
    """
    work = {}
    for idx, r in enumerate(rows):
        nr = _normalize_row(r)
        if nr is None:
            return False  # 0 > 0
        h = frozenset({idx})
        if nr not in work or len(work[nr]) > 1:
            work[nr] = h
    eliminated = 0
    for _ in range(nvars - 1):
        if not work:
            return True
        # eliminate the variable with the cheapest positive x negative split
        best, best_cost = None, None
        for k in range(nvars):
            pos = sum(1 for r in work if sign_of(r[k]) > 0)
            neg = sum(1 for r in work if sign_of(r[k]) < 0)
            cost = pos * neg - (pos + neg)
            if best_cost is None or cost < best_cost:
                best, best_cost = k, cost
        k = best
        eliminated += 1
        cap = eliminated + 1
        pos, neg, zero = [], [], []
        for r, h in work.items():
            s = sign_of(r[k])
            (pos if s > 0 else neg if s < 0 else zero).append((r, h))
        new = {}

        def put(row, h):
            nr = _normalize_row(row)
            if nr is None:
                return False  # kept zero row certifies 0 > 0
            if nr not in new or len(new[nr]) > len(h):
                new[nr] = h
            return True

        for r, h in zero:
            if not put(r[:k] + r[k + 1:], h):
                return False
        for p, hp in pos:
            for q, hq in neg:
                h = hp | hq
                if len(h) > cap:
                    continue
                comb = tuple(p[i] * (-q[k]) + q[i] * p[k]
                             for i in range(nvars) if i != k)
                if not put(comb, h):
                    return False
        work = new
        nvars -= 1
    if not work:
        return True
    # one variable left: rows are single coefficients
    signs = {sign_of(r[0]) for r in work}
    return signs == {1} or signs == {-1}


def _reduced_rows(arr, eps, fixed_zeros):
    """Strict rows of the system restricted to the kernel of the zero set."""
    zeros = sorted(set(fixed_zeros))
    if zeros:
        ker = Matrix([arr.covectors[j - 1] for j in zeros]).kernel_basis()
        if not ker:
            return None, 0
        basis = ker
        nvars = len(basis)
    else:
        basis = None
        nvars = arr.n + 1
    rows = []
    for j in range(1, arr.m + 1):
        if j in set(zeros):
            continue
        cov = arr.covectors[j - 1]
        if basis is None:
            row = cov
        else:
            row = tuple(pairing(cov, b) for b in basis)
        e = eps[j - 1]
        if e == 0:
            raise ValueError("sign vector has a zero outside fixed_zeros")
        rows.append(tuple(x * e for x in row))
    return rows, nvars


def feasible(arr, eps, fixed_zeros=(), mode="strict"):
    """Exact decision: is there x with eps_j f_j(x) > 0 off the zero set and
    f_j(x) = 0 on it?  mode="closure" asks for >= 0 with x nonzero instead."""
    if len(eps) != arr.m:
        raise ValueError("sign vector length != m")
    rows, nvars = _reduced_rows(arr, eps, fixed_zeros)
    if rows is None:
        return False
    if mode == "strict":
        if not rows:
            return nvars > 0
        return _fm_strict(rows, nvars)
    if mode != "closure":
        raise ValueError("mode must be 'strict' or 'closure'")
    if nvars == 0:
        return False
    if _fm_strict(rows, nvars):
        return True
    # nonzero x with all >= 0: probe each open coordinate halfspace
    for k in range(nvars):
        for s in (1, -1):
            probe = tuple(Fraction(s if i == k else 0) for i in range(nvars))
            if _fm_mixed(rows, [probe], nvars):
                return True
    return False


def _fm_mixed(weak_rows, strict_rows, nvars):
    """Feasibility of {weak . y >= 0, strict . y > 0}: same elimination, with
    strictness inherited by any combination that uses a strict parent."""
    work = set()
    for r, st in [(r, False) for r in weak_rows] + [(r, True) for r in strict_rows]:
        nr = _normalize_row(r)
        if nr is None:
            if st:
                return False
            continue
        work.add((nr, st))
    for _ in range(nvars - 1):
        if not work:
            return True
        k = 0
        pos, neg, zero = [], [], []
        for r, st in work:
            s = sign_of(r[k])
            (pos if s > 0 else neg if s < 0 else zero).append((r, st))
        new = set()
        for r, st in zero:
            nr = _normalize_row(r[1:])
            if nr is None:
                if st:
                    return False
                continue
            new.add((nr, st))
        for p, stp in pos:
            for q, stq in neg:
                comb = tuple(p[i] * (-q[k]) + q[i] * p[k]
                             for i in range(1, nvars))
                st = stp or stq
                nr = _normalize_row(comb)
                if nr is None:
                    if st:
                        return False
                    continue
                new.add((nr, st))
        work = new
        nvars -= 1
    if not work:
        return True
    pos = any(st for r, st in work if sign_of(r[0]) > 0)
    neg = any(st for r, st in work if sign_of(r[0]) < 0)
    strict_zero = any(st and sign_of(r[0]) == 0 for r, st in work)
    if strict_zero:
        return False
    has_pos = any(sign_of(r[0]) > 0 for r, _ in work)
    has_neg = any(sign_of(r[0]) < 0 for r, _ in work)
    if not (has_pos and has_neg):
        return True
    # mixed signs: y must be 0, which kills strict rows if any
    return not any(st for _, st in work)


def count_formula(n, m):
    """Closed-form chamber count: alternating binomial tail of matching parity."""
    total = 0
    k = n
    while k >= 0:
        total += binomial(m, k)
        k -= 2
    return total


class Chamber:
    """A projective chamber of an arrangement, keyed by its sign vector."""

    def __init__(self, arr, sign):
        self.arr = arr
        self.sign = canonical_sign(sign)
        self._vertices = None
        self._facets = None

    def __repr__(self):
        return "Chamber(%s)" % sign_str(self.sign)

    def __eq__(self, other):
        return isinstance(other, Chamber) and self.sign == other.sign \
            and self.arr is other.arr

    def __hash__(self):
        return hash(self.sign)

    @property
    def vertex_lifts(self):
        """dict {frozenset S: lift sign}: S the n hyperplanes through the
        vertex, lift the sign making the spherical point lie in the cone."""
        if self._vertices is None:
            arr, eps = self.arr, self.sign
            out = {}
            for subset in itertools.combinations(range(1, arr.m + 1), arr.n):
                v = arr.vertex_point(subset)
                ok_plus = ok_minus = True
                for j in range(1, arr.m + 1):
                    if j in subset:
                        continue
                    s = sign_of(arr.evaluate(j, v))
                    if s != eps[j - 1]:
                        ok_plus = False
                    if -s != eps[j - 1]:
                        ok_minus = False
                    if not (ok_plus or ok_minus):
                        break
                if ok_plus:
                    out[frozenset(subset)] = 1
                elif ok_minus:
                    out[frozenset(subset)] = -1
            self._vertices = out
        return self._vertices

    @property
    def vertex_labels(self):
        return frozenset(self.vertex_lifts)

    @property
    def facet_supports(self):
        """Hyperplane indices carrying a facet; needs m >= n+1 (pointed cone)."""
        if self._facets is None:
            present = set()
            for s in self.vertex_labels:
                present |= s
            self._facets = tuple(sorted(present))
        return self._facets

    def face_vertex_sets(self, codim):
        """dict {support tuple of size codim: frozenset of vertex labels}."""
        out = {}
        for z in itertools.combinations(self.facet_supports, codim):
            zs = frozenset(z)
            verts = frozenset(s for s in self.vertex_labels if zs <= s)
            if verts:
                out[z] = verts
        return out

    def face_sign(self, zeros):
        """Zero-extended canonical sign vector of the face on `zeros`."""
        eps = list(self.sign)
        for j in zeros:
            eps[j - 1] = 0
        return canonical_sign(eps)

    def lattice(self):
        """Vertex-facet incidence as an AbstractPolytope."""
        facets = [frozenset(s for s in self.vertex_labels if j in s)
                  for j in self.facet_supports]
        return AbstractPolytope(sorted(self.vertex_labels, key=sorted), facets)

    def type_name(self):
        return classify(self.lattice())


def _thread_count():
    try:
        return max(1, int(os.environ.get("VC_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_chambers(arr):
    """All projective chambers, by exhaustive feasibility over the 2^(m-1)
    canonical sign vectors; sorted by sign string for determinism."""
    m = arr.m
    candidates = [(1,) + tail for tail in
                  itertools.product((1, -1), repeat=m - 1)]
    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(lambda e: feasible(arr, e), candidates))
    else:
        flags = [feasible(arr, e) for e in candidates]
    signs = sorted((e for e, ok in zip(candidates, flags) if ok),
                   key=sign_str)
    return [Chamber(arr, e) for e in signs]


def chambers_via_vertices(arr):
    """Independent enumeration for cross-checks: every chamber of a pointed
    arrangement (m >= n+1) is seen from one of its vertices, so collect the
    sign vectors completed from each vertex lift."""
    m, n = arr.m, arr.n
    if m < n + 1:
        raise ValueError("needs m >= n+1")
    found = set()
    for subset in itertools.combinations(range(1, m + 1), n):
        v = arr.vertex_point(subset)
        base = {j: sign_of(arr.evaluate(j, v)) for j in range(1, m + 1)
                if j not in subset}
        free = sorted(subset)
        for lift in (1, -1):
            for fill in itertools.product((1, -1), repeat=n):
                eps = []
                it = iter(fill)
                for j in range(1, m + 1):
                    eps.append(next(it) if j in subset else lift * base[j])
                found.add(canonical_sign(eps))
    return sorted(found, key=sign_str)


def census(arr, chambers=None):
    """Counter {type name: count} over all chambers."""
    from collections import Counter
    if chambers is None:
        chambers = enumerate_chambers(arr)
    return Counter(c.type_name() for c in chambers)


def adjacency_graph(arr, chambers):
    """Edges between chambers sharing a facet, labeled by the hyperplane.

    Returns dict {frozenset {i1, i2}: support j} on chamber list indices.
    """
    owners = {}
    for idx, c in enumerate(chambers):
        for j in c.facet_supports:
            key = sign_str(c.face_sign([j]))
            owners.setdefault(key, []).append((idx, j))
    edges = {}
    for key, inc in owners.items():
        if len(inc) == 2:
            (i1, j1), (i2, j2) = inc
            if i1 != i2:
                edges[frozenset({i1, i2})] = j1
        elif len(inc) > 2:
            raise ValueError("facet %s shared by more than two chambers" % key)
    return edges


def union_boundary_surface(arr, cells):
    """Boundary surface of a union of 3-dimensional chambers.

    Collects the 2-faces lying in exactly one cell of the set, assembles the
    closed surface and reports (components, euler, orientable).  Faces and
    edges are identified across cells by their zero-extended sign vectors.
    """
    if arr.n != 3:
        raise ValueError("boundary surfaces only implemented for n = 3")
    from .topology import CWComplex, surface_type

    counts = {}
    for c in cells:
        for j in c.facet_supports:
            key = sign_str(c.face_sign([j]))
            counts.setdefault(key, []).append((c, j))
    boundary = [(key, inc[0]) for key, inc in counts.items() if len(inc) == 1]
    if not boundary:
        raise ValueError("union has empty boundary")

    cw = CWComplex()
    for key, (c, j) in sorted(boundary):
        edge_faces = c.face_vertex_sets(2)
        verts = {s for s in c.vertex_labels if j in s}
        poly_edges = []
        for z, vs in edge_faces.items():
            if j in z and vs <= verts:
                if len(vs) != 2:
                    raise ValueError("1-face with %d endpoints" % len(vs))
                poly_edges.append((z, vs))
        cycle = _order_polygon(verts, [vs for _, vs in poly_edges])
        edge_ids = []
        for k in range(len(cycle)):
            a, b = cycle[k], cycle[(k + 1) % len(cycle)]
            zpair = next(z for z, vs in poly_edges if vs == {a, b})
            eid = sign_str(c.face_sign(zpair))
            edge_ids.append((eid, a, b))
        for eid, a, b in edge_ids:
            cw.ensure_vertex(_vlabel(a))
            cw.ensure_vertex(_vlabel(b))
            cw.ensure_edge(eid, _vlabel(a), _vlabel(b))
        cw.add_face(key, [(eid, _vlabel(a)) for eid, a, b in edge_ids])
    return surface_type(cw)


def _vlabel(s):
    return tuple(sorted(s))


def _order_polygon(verts, edge_pairs):
    """Order polygon vertices into a cycle from its edge list."""
    adj = {v: [] for v in verts}
    for vs in edge_pairs:
        a, b = sorted(vs, key=sorted)
        adj[a].append(b)
        adj[b].append(a)
    for v, nb in adj.items():
        if len(nb) != 2:
            raise ValueError("vertex %s has %d polygon edges" % (sorted(v), len(nb)))
    start = min(verts, key=sorted)
    cycle = [start]
    prev = None
    while True:
        cur = cycle[-1]
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        cycle.append(nxt)
        prev = cur
    if len(cycle) != len(verts):
        raise ValueError("polygon edges do not form a single cycle")
    return cycle
