"""CW complexes of dimension <= 3 and the certificates built on them.

Cells are explicit: edges are distinct entities with ordered endpoints
(parallel edges allowed), 2-cells are closed directed edge walks, 3-cells
are sets of 2-cells whose union is a closed surface.  On top of that sit
the Euler characteristic, surface recognition (connectivity, orientability,
boundary circles), vertex links assembled from cell corners, and a
generators-and-relators fundamental group with bounded Tietze
simplification.  No geometry enters here; everything is label pushing.
"""

from collections import Counter, deque


class CWComplex:
    """Explicit cell complex; all mutation happens through the add_* methods."""

    def __init__(self):
        self.vertices = {}
        self.edges = {}       # eid -> (u, v)
        self.faces = {}       # fid -> tuple of (eid, direction)
        self.cells = {}       # cid -> frozenset of fids

    # -- construction ------------------------------------------------------
    def ensure_vertex(self, label):
        self.vertices[label] = True

    def ensure_edge(self, eid, u, v):
        if eid in self.edges:
            if set(self.edges[eid]) != {u, v}:
                raise ValueError("edge %r redefined with new endpoints" % (eid,))
            return
        if u == v:
            raise ValueError("loops are not supported (edge %r)" % (eid,))
        self.ensure_vertex(u)
        self.ensure_vertex(v)
        self.edges[eid] = (u, v)

    def add_face(self, fid, walk):
        """walk: list of (eid, start_vertex); must be a closed edge path."""
        if fid in self.faces:
            raise ValueError("duplicate face %r" % (fid,))
        steps = []
        prev_end = None
        first_start = None
        for eid, start in walk:
            u, v = self.edges[eid]
            if start == u:
                d, end = 1, v
            elif start == v:
                d, end = -1, u
            else:
                raise ValueError("face %r: %r does not start edge %r" % (fid, start, eid))
            if prev_end is not None and prev_end != start:
                raise ValueError("face %r: boundary walk broken" % (fid,))
            if first_start is None:
                first_start = start
            prev_end = end
            steps.append((eid, d))
        if prev_end != first_start:
            raise ValueError("face %r: boundary walk not closed" % (fid,))
        self.faces[fid] = tuple(steps)

    def add_cell(self, cid, fids):
        fids = frozenset(fids)
        for f in fids:
            if f not in self.faces:
                raise ValueError("cell %r uses unknown face %r" % (cid, f))
        usage = Counter()
        for f in fids:
            for eid, _ in self.faces[f]:
                usage[eid] += 1
        bad = [e for e, k in usage.items() if k != 2]
        if bad:
            raise ValueError("cell %r boundary is not closed at edges %r" % (cid, bad))
        self.cells[cid] = fids

    # -- accessors ----------------------------------------------------------
    def face_vertices(self, fid):
        out = []
        for eid, d in self.faces[fid]:
            u, v = self.edges[eid]
            out.append(u if d > 0 else v)
        return out

    def euler(self):
        return (len(self.vertices) - len(self.edges)
                + len(self.faces) - len(self.cells))

    def subcomplex(self, fids):
        """The subcomplex spanned by the given 2-cells."""
        sub = CWComplex()
        for f in fids:
            walk = []
            for eid, d in self.faces[f]:
                u, v = self.edges[eid]
                sub.ensure_edge(eid, u, v)
                walk.append((eid, u if d > 0 else v))
            sub.add_face(f, walk)
        return sub

    def edge_face_usage(self):
        usage = {}
        for fid, steps in self.faces.items():
            for eid, d in steps:
                usage.setdefault(eid, []).append((fid, d))
        return usage


class SurfaceReport:
    def __init__(self, components, euler, orientable, boundary_circles):
        self.components = components
        self.euler = euler
        self.orientable = orientable
        self.boundary_circles = boundary_circles  # list of vertex cycles

    @property
    def connected(self):
        return self.components == 1

    def is_sphere(self):
        return self.connected and self.euler == 2 and self.orientable \
            and not self.boundary_circles

    def is_torus(self):
        return self.connected and self.euler == 0 and self.orientable \
            and not self.boundary_circles

    def is_mobius(self):
        return self.connected and self.euler == 0 and not self.orientable \
            and len(self.boundary_circles) == 1

    def is_cylinder(self):
        return self.connected and self.euler == 0 and self.orientable \
            and len(self.boundary_circles) == 2

    def is_disc(self):
        return self.connected and self.euler == 1 and self.orientable \
            and len(self.boundary_circles) == 1

    def __repr__(self):
        return ("SurfaceReport(components=%d, euler=%d, orientable=%s, "
                "boundary_circles=%d)" % (self.components, self.euler,
                                          self.orientable,
                                          len(self.boundary_circles)))


def surface_type(cw):
    """Classify a pure 2-complex; raises if an edge lies in more than two faces."""
    usage = cw.edge_face_usage()
    for eid, inc in usage.items():
        if len(inc) > 2:
            raise ValueError("not a surface: edge %r in %d faces" % (eid, len(inc)))
    # components, via vertices
    parent = {v: v for v in cw.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in cw.edges.values():
        parent[find(u)] = find(v)
    components = len({find(v) for v in cw.vertices})
    euler = len(cw.vertices) - len(cw.edges) + len(cw.faces)
    circles = _boundary_circles(cw, usage)
    # orientability: 2-color faces so that shared edges are traversed oppositely
    flip = {}
    orientable = True
    fids = sorted(cw.faces, key=repr)
    for start in fids:
        if start in flip:
            continue
        flip[start] = 1
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for eid, d in cw.faces[f]:
                inc = usage[eid]
                if len(inc) != 2:
                    continue
                (f1, d1), (f2, d2) = inc
                if f1 == f2:
                    if d1 == d2:
                        orientable = False
                    continue
                other, dother = (f2, d2) if f == f1 else (f1, d1)
                dself = d1 if f == f1 else d2
                want = flip[f] if dself != dother else -flip[f]
                if other not in flip:
                    flip[other] = want
                    queue.append(other)
                elif flip[other] != want:
                    orientable = False
    return SurfaceReport(components, euler, orientable, circles)


def _boundary_circles(cw, usage):
    """Boundary circles of a 2-complex, by rotating through the face fan at
    each vertex; works even when two circles cross at a shared vertex."""
    boundary = [eid for eid, inc in usage.items() if len(inc) == 1]
    if not boundary:
        return []
    # the two edges each face meets at each of its vertices
    corner = {}
    for fid, steps in cw.faces.items():
        k = len(steps)
        for i, (eid, d) in enumerate(steps):
            u, v = cw.edges[eid]
            w = u if d > 0 else v
            prev = steps[(i - 1) % k][0]
            if (fid, w) in corner:
                raise ValueError("face %r visits vertex %r twice" % (fid, w))
            corner[(fid, w)] = (prev, eid)

    def other_edge(fid, w, eid):
        a, b = corner[(fid, w)]
        return b if a == eid else a

    def next_boundary(eid, w):
        fid = usage[eid][0][0]
        e2 = other_edge(fid, w, eid)
        while len(usage[e2]) == 2:
            (f1, _), (f2, _) = usage[e2]
            fid = f2 if fid == f1 else f1
            e2 = other_edge(fid, w, e2)
        return e2

    visited = set()
    circles = []
    for start in sorted(boundary, key=repr):
        if start in visited:
            continue
        verts = []
        edges = []
        eid = start
        u, v = cw.edges[eid]
        w = v  # walk out of v; the circle closes regardless of direction
        while True:
            visited.add(eid)
            edges.append(eid)
            verts.append(w)
            eid2 = next_boundary(eid, w)
            u2, v2 = cw.edges[eid2]
            w = v2 if u2 == w else u2
            eid = eid2
            if eid == start:
                break
        circles.append((verts, edges))
    return circles


def _edge_cycles(cw, edge_ids):
    """Decompose a set of edges into cycles; raises if some vertex degree != 2."""
    if not edge_ids:
        return []
    adj = {}
    for eid in edge_ids:
        u, v = cw.edges[eid]
        adj.setdefault(u, []).append((eid, v))
        adj.setdefault(v, []).append((eid, u))
    for v, nb in adj.items():
        if len(nb) != 2:
            raise ValueError("boundary vertex %r has degree %d" % (v, len(nb)))
    seen = set()
    cycles = []
    for eid in sorted(edge_ids, key=repr):
        if eid in seen:
            continue
        u, v = cw.edges[eid]
        cycle_v = [u, v]
        cycle_e = [eid]
        seen.add(eid)
        cur = v
        prev_e = eid
        while True:
            nxt = [(e, w) for e, w in adj[cur] if e != prev_e]
            e, w = nxt[0]
            if e in seen:
                break
            seen.add(e)
            cycle_e.append(e)
            cycle_v.append(w)
            cur, prev_e = w, e
        cycles.append((cycle_v[:-1] if cycle_v[0] == cycle_v[-1] else cycle_v,
                       cycle_e))
    return cycles


# ---------------------------------------------------------------------------
# chamber boundaries

def boundary_complex(chamber):
    """The boundary of a 4-dimensional chamber as a 3-dimensional CW complex.

    Vertices are the 4-element support sets, edges the triples, 2-cells the
    pairs, 3-cells the facets; all incidences come from the chamber's vertex
    labels.
    """
    arr = chamber.arr
    if arr.n != 4:
        raise ValueError("boundary_complex needs a 4-dimensional arrangement")
    cw = CWComplex()
    verts = {s: tuple(sorted(s)) for s in chamber.vertex_labels}
    for s in sorted(verts.values()):
        cw.ensure_vertex(s)
    edges = chamber.face_vertex_sets(3)   # support triple -> two vertex labels
    for z, vs in sorted(edges.items()):
        if len(vs) != 2:
            raise ValueError("edge %s has %d endpoints" % (z, len(vs)))
        a, b = sorted((verts[s] for s in vs))
        cw.ensure_edge(z, a, b)
    faces = chamber.face_vertex_sets(2)
    for z, vs in sorted(faces.items()):
        poly_edges = [(z3, es) for z3, es in edges.items()
                      if set(z) <= set(z3) and es <= vs]
        cycle = _polygon_cycle({verts[s] for s in vs},
                               [(z3, tuple(sorted(verts[s] for s in es)))
                                for z3, es in poly_edges])
        cw.add_face(z, cycle)
    for i in chamber.facet_supports:
        cw.add_cell(("D", i), [z for z in faces if i in z])
    return cw


def _polygon_cycle(vertices, labeled_edges):
    """Order labeled edges (eid, (a, b)) into a closed walk over `vertices`."""
    adj = {v: [] for v in vertices}
    for eid, (a, b) in labeled_edges:
        adj[a].append((eid, b))
        adj[b].append((eid, a))
    for v, nb in adj.items():
        if len(nb) != 2:
            raise ValueError("polygon vertex %r has degree %d" % (v, len(nb)))
    start = min(vertices)
    walk = []
    cur = start
    prev_eid = None
    while True:
        options = [(e, w) for e, w in adj[cur] if e != prev_eid]
        eid, nxt = options[0]
        walk.append((eid, cur))
        cur, prev_eid = nxt, eid
        if cur == start:
            break
    if len(walk) != len(labeled_edges):
        raise ValueError("polygon edges do not close into one cycle")
    return walk


def cyclic_distance(i, j, m):
    d = (i - j) % m
    return min(d, m - d)


def special_edges(m):
    """Edge ids of the special circle: for facet i the face on {i-1, i, i+1}."""
    out = []
    for i in range(1, m + 1):
        prev = (i - 2) % m + 1
        nxt = i % m + 1
        out.append(tuple(sorted({prev, i, nxt})))
    return out


def mobius_and_circle(cw, m):
    """Split the 2-skeleton of a central-chamber boundary into the Moebius
    strip M (drop the m consecutive-facet 2-cells) and the special circle C.

    Returns (M subcomplex, C edge ids, band subcomplex of removed cells).
    Raises unless C is a single cycle of length m and the boundary of M is
    exactly C.
    """
    removed = [z for z in cw.faces if cyclic_distance(z[0], z[1], m) == 1]
    kept = [z for z in cw.faces if z not in set(removed)]
    strip = cw.subcomplex(kept)
    band = _abstract_band(cw, removed, m)
    c_edges = [z for z in special_edges(m) if z in cw.edges]
    if len(c_edges) != m:
        raise ValueError("expected %d special edges, found %d" % (m, len(c_edges)))
    cycles = _edge_cycles(cw, c_edges)
    if len(cycles) != 1 or len(cycles[0][1]) != m:
        raise ValueError("special edges do not form a single %d-cycle" % m)
    report = surface_type(strip)
    if len(report.boundary_circles) != 1 or \
            set(report.boundary_circles[0][1]) != set(c_edges):
        raise ValueError("boundary of the strip is not the special circle")
    return strip, c_edges, band


def _abstract_band(cw, removed, m):
    """The chain of removed consecutive-facet cells glued only along the
    special edges.  As a subcomplex its two sides can pinch at shared
    vertices; the abstract chain is the surface the cylinder-vs-Moebius
    parity statement is about."""
    specials = set(special_edges(m))
    shared = set()
    for eid in specials:
        if eid in cw.edges:
            shared.update(cw.edges[eid])
    band = CWComplex()
    for fid in removed:
        def vname(w, fid=fid):
            return ("S", w) if w in shared else ("B", fid, w)
        walk = []
        for eid, d in cw.faces[fid]:
            u, v = cw.edges[eid]
            start = u if d > 0 else v
            name = eid if eid in specials else ("B", fid, eid)
            band.ensure_edge(name, vname(u), vname(v))
            walk.append((name, vname(start)))
        band.add_face(fid, walk)
    return band


def verify_disc(cw, fids, c_edges):
    """True iff the subcomplex spanned by `fids` is a disc bounded by c_edges."""
    sub = cw.subcomplex(fids)
    report = surface_type(sub)
    if not report.is_disc():
        return False
    return set(report.boundary_circles[0][1]) == set(c_edges)


# ---------------------------------------------------------------------------
# vertex links

def vertex_links(cw):
    """Per-vertex link surfaces of a 3-dimensional complex.

    The link of v has one vertex per edge at v, one edge per 2-cell corner
    at v, and one polygon per 3-cell corner at v.  For a closed 3-manifold
    every report must be a 2-sphere.
    """
    out = {}
    for v in sorted(cw.vertices, key=repr):
        out[v] = _link_of(cw, v)
    return out


def _link_of(cw, v):
    edges_at = [eid for eid, (a, b) in cw.edges.items() if v in (a, b)]
    link = CWComplex()
    for eid in edges_at:
        link.ensure_vertex(("E", eid))
    corner_of_face = {}
    for fid, steps in cw.faces.items():
        walk = [(eid, d) for eid, d in steps]
        visits = []
        k = len(walk)
        for i, (eid, d) in enumerate(walk):
            u, w = cw.edges[eid]
            start = u if d > 0 else w
            if start == v:
                visits.append(i)
        if not visits:
            continue
        if len(visits) > 1:
            raise ValueError("2-cell %r visits vertex %r more than once" % (fid, v))
        i = visits[0]
        e_out = walk[i][0]
        e_in = walk[(i - 1) % k][0]
        corner_of_face[fid] = (e_in, e_out)
        link.ensure_edge(("F", fid), ("E", e_in), ("E", e_out))
    for cid, fids in cw.cells.items():
        local = {f: corner_of_face[f] for f in fids if f in corner_of_face}
        if not local:
            continue
        verts = {("E", e) for pair in local.values() for e in pair}
        labeled = [(("F", f), tuple(sorted((("E", a), ("E", b)))))
                   for f, (a, b) in local.items()]
        cycle = _polygon_cycle(verts, labeled)
        link.add_face(("C", cid), cycle)
    return surface_type(link)


def closed_manifold_certificate(cw):
    """(ok, reports): ok iff every vertex link is a 2-sphere."""
    reports = vertex_links(cw)
    ok = all(r.is_sphere() for r in reports.values())
    return ok, reports


# ---------------------------------------------------------------------------
# fundamental group

class GroupPresentation:
    def __init__(self, generators, relators):
        self.generators = list(generators)
        self.relators = [tuple(r) for r in relators]

    def __repr__(self):
        return "GroupPresentation(gens=%d, relators=%d)" % (
            len(self.generators), len(self.relators))


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    # cyclic reduction
    while len(out) >= 2 and out[0] == -out[-1]:
        out = out[1:-1]
    return out


def pi1(cw, basepoint=None):
    """Presentation of the fundamental group of the 2-skeleton, plus verdict.

    Generators are the edges outside a breadth-first spanning tree rooted at
    the lexicographically least vertex; relators are the 2-cell boundary
    words.  Simplification is bounded Tietze: free reduction, removal of
    length-one relators, and elimination of a generator occurring exactly
    once in some relator.  Verdict "trivial" iff no generators remain,
    "nontrivial" if a nontrivial quotient is visible (free rank or
    abelianization), else "inconclusive".
    """
    if not cw.vertices:
        raise ValueError("empty complex")
    order = sorted(cw.vertices, key=repr)
    root = basepoint if basepoint is not None else order[0]
    adj = {}
    for eid, (u, v) in sorted(cw.edges.items(), key=repr):
        adj.setdefault(u, []).append((eid, v))
        adj.setdefault(v, []).append((eid, u))
    tree = set()
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for eid, w in adj.get(u, []):
            if w not in seen:
                seen.add(w)
                tree.add(eid)
                queue.append(w)
    if seen != set(cw.vertices):
        raise ValueError("complex is not connected")
    gens = [eid for eid in sorted(cw.edges, key=repr) if eid not in tree]
    gen_index = {eid: i + 1 for i, eid in enumerate(gens)}
    relators = []
    for fid in sorted(cw.faces, key=repr):
        word = []
        for eid, d in cw.faces[fid]:
            if eid in gen_index:
                word.append(d * gen_index[eid])
        word = _free_reduce(word)
        if word:
            relators.append(word)
    presentation = GroupPresentation([str(g) for g in gens], relators)
    verdict = _tietze_verdict(len(gens), [list(r) for r in relators])
    return presentation, verdict


def _substitute(word, g, repl):
    out = []
    for x in word:
        if x == g:
            out.extend(repl)
        elif x == -g:
            out.extend(-y for y in reversed(repl))
        else:
            out.append(x)
    return _free_reduce(out)


def _tietze_verdict(n_gens, relators, budget=10 ** 4):
    alive = set(range(1, n_gens + 1))
    relators = [_free_reduce(r) for r in relators]
    steps = 0
    changed = True
    while changed and steps < budget:
        changed = False
        relators = [r for r in relators if r]
        relators.sort(key=len)
        # a length-1 relator kills its generator
        for r in relators:
            if len(r) == 1:
                g = abs(r[0])
                relators = [_free_reduce([x for x in w if abs(x) != g])
                            for w in relators if w is not r]
                alive.discard(g)
                changed = True
                steps += 1
                break
        if changed:
            continue
        # a generator occurring exactly once in some relator can be solved for
        counts = Counter()
        for r in relators:
            for x in r:
                counts[abs(x)] += 1
        done = False
        for r in relators:
            for i, x in enumerate(r):
                g = abs(x)
                if sum(1 for y in r if abs(y) == g) != 1:
                    continue
                rot = r[i + 1:] + r[:i]
                repl = [-y for y in reversed(rot)] if x > 0 else list(rot)
                relators = [_substitute(w, g, repl)
                            for w in relators if w is not r]
                alive.discard(g)
                changed = True
                done = True
                steps += 1
                break
            if done:
                break
    relators = [r for r in relators if r]
    if not alive:
        return "trivial"
    if not relators:
        return "nontrivial"  # free of positive rank
    if _abelianization_nontrivial(sorted(alive), relators):
        return "nontrivial"
    return "inconclusive"


def _abelianization_nontrivial(gens, relators):
    from fractions import Fraction
    from .scalars import Matrix
    index = {g: i for i, g in enumerate(gens)}
    rows = []
    for r in relators:
        row = [Fraction(0)] * len(gens)
        for x in r:
            row[index[abs(x)]] += 1 if x > 0 else -1
        rows.append(row)
    mat = Matrix(rows)
    if mat.rank() < len(gens):
        return True  # infinite abelianization
    # full rank: finite; nontrivial iff some elementary divisor exceeds 1,
    # i.e. the gcd of the maximal minors exceeds 1
    import itertools as it
    from math import gcd
    g = 0
    for subset in it.combinations(range(len(rows)), len(gens)):
        sub = Matrix([rows[i] for i in subset])
        d = sub.det()
        g = gcd(g, abs(int(d * 1)))  # determinants here are integers
        if g == 1:
            return False
    return g != 1
