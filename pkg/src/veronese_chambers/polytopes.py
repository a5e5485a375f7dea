"""Abstract polytopes as vertex-facet incidences, with a combinatorial catalog.

A polytope's combinatorial type is determined by which vertices lie on which
facets, so isomorphism testing reduces to canonical labeling of the bipartite
vertex-facet incidence graph.  The catalog is generated from three
constructors (simplices, polygons, and the product / rotate operations) plus
the combinatorial model of the central chamber in dimension four; classify()
matches an arbitrary lattice against it.
"""

import itertools
from functools import lru_cache


class AbstractPolytope:
    """Face structure given by a facet list; vertices are arbitrary hashables."""

    def __init__(self, vertices, facets):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        self.facets = tuple(frozenset(f) for f in facets)
        for f in self.facets:
            if not f <= vset:
                raise ValueError("facet contains unknown vertex")
        self._canon = None
        self._lattice = None

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_facets(self):
        return len(self.facets)

    def facet_sizes(self):
        return sorted(len(f) for f in self.facets)

    def canonical_form(self):
        if self._canon is None:
            index = {v: i for i, v in enumerate(self.vertices)}
            self._canon = _canonical_incidence(
                len(self.vertices),
                [frozenset(index[v] for v in f) for f in self.facets])
        return self._canon

    def is_isomorphic(self, other):
        return self.canonical_form() == other.canonical_form()

    def face_lattice(self):
        """All faces as vertex sets: intersections of facet subsets, plus the
        polytope itself and the empty face."""
        if self._lattice is not None:
            return self._lattice
        faces = set(self.facets)
        frontier = set(self.facets)
        while frontier:
            new = set()
            for f in frontier:
                for g in self.facets:
                    h = f & g
                    if h not in faces:
                        new.add(h)
            faces |= new
            frontier = new
        faces.add(frozenset(self.vertices))
        faces.add(frozenset())
        self._lattice = faces
        return faces

    def graded_faces(self):
        """dict rank -> set of faces; rank 0 = vertices, top = whole polytope."""
        faces = sorted(self.face_lattice(), key=len)
        rank = {}
        for f in faces:
            below = [rank[g] for g in faces if g < f and g in rank]
            rank[f] = (max(below) + 1) if below else (-1 if not f else 0)
        # vertices must be the atoms
        out = {}
        for f, r in rank.items():
            out.setdefault(r, set()).add(f)
        return out

    def f_vector(self):
        graded = self.graded_faces()
        top = max(graded)
        return tuple(len(graded[r]) for r in range(0, top))

    def dimension(self):
        return max(self.graded_faces())

    def facet_polytope(self, i):
        """The i-th facet as a polytope: its facets are the maximal proper
        intersections with the other facets."""
        f = self.facets[i]
        ridges = set()
        for j, g in enumerate(self.facets):
            if j != i:
                ridges.add(f & g)
        maximal = [r for r in ridges
                   if r and not any(r < s for s in ridges if s != r)]
        return AbstractPolytope(sorted(f, key=str), maximal)


def _refine(colors, adj, n_nodes):
    """1-dimensional Weisfeiler-Leman refinement until stable."""
    while True:
        sig = [(colors[i], tuple(sorted(colors[j] for j in adj[i])))
               for i in range(n_nodes)]
        order = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _canonical_incidence(n_vertices, facets):
    """Canonical string of a vertex-facet incidence, via backtracking
    canonical labeling of the bipartite graph with partition refinement."""
    n_facets = len(facets)
    n_nodes = n_vertices + n_facets
    adj = [set() for _ in range(n_nodes)]
    for k, f in enumerate(facets):
        for v in f:
            adj[v].add(n_vertices + k)
            adj[n_vertices + k].add(v)
    # vertices and facets can never share a color
    init = [0] * n_vertices + [1] * n_facets
    best = [None]

    def emit(colors):
        verts = sorted(range(n_vertices), key=lambda i: colors[i])
        facs = sorted(range(n_nodes - n_vertices), key=lambda k: colors[n_vertices + k])
        rows = []
        for k in facs:
            row = frozenset(facets[k])
            rows.append("".join("1" if v in row else "0" for v in verts))
        s = "%d;%d;" % (n_vertices, n_facets) + ",".join(sorted(rows))
        # facet rows sorted: stable even though facet colors may tie
        if best[0] is None or s < best[0]:
            best[0] = s

    def search(colors):
        colors = _refine(colors, adj, n_nodes)
        cells = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            emit(colors)
            return
        fresh = max(colors) + 1
        for node in target:
            nxt = list(colors)
            nxt[node] = fresh
            search(nxt)

    search(init)
    return best[0]


# ---------------------------------------------------------------------------
# catalog constructors

def catalog_simplex(k):
    """The k-simplex: k+1 vertices, every k-subset a facet."""
    verts = tuple(range(k + 1))
    facets = [frozenset(s) for s in itertools.combinations(verts, k)]
    return AbstractPolytope(verts, facets)


def catalog_gon(k):
    if k < 3:
        raise ValueError("polygon needs at least 3 vertices")
    verts = tuple(range(k))
    facets = [frozenset({i, (i + 1) % k}) for i in range(k)]
    return AbstractPolytope(verts, facets)


def catalog_product(p, q):
    """Vertex set V(P) x V(Q); facets F x Q and P x F."""
    verts = tuple(itertools.product(p.vertices, q.vertices))
    facets = []
    for f in p.facets:
        facets.append(frozenset((u, v) for u in f for v in q.vertices))
    for g in q.facets:
        facets.append(frozenset((u, v) for u in p.vertices for v in g))
    return AbstractPolytope(verts, facets)


def catalog_rotate(p, sigma):
    """Crush sigma x [0,1] inside P x [0,1]: the rotate construction.

    sigma must be a facet of P.  Facets of the result are the bottom copy of
    P, the top copy (with sigma's vertices falling to the bottom), and the
    collapsed prisms over the other facets.
    """
    sigma = frozenset(sigma)
    if sigma not in set(p.facets):
        raise ValueError("sigma is not a facet")
    verts = tuple((u, 0) for u in p.vertices) + tuple(
        (u, 1) for u in p.vertices if u not in sigma)
    facets = [frozenset((u, 0) for u in p.vertices)]
    facets.append(frozenset(((u, 0) if u in sigma else (u, 1)) for u in p.vertices))
    for tau in p.facets:
        if tau == sigma:
            continue
        facets.append(frozenset((u, t) for u in tau
                                for t in ((0,) if u in sigma else (0, 1))))
    return AbstractPolytope(verts, facets)


def double_dominoes(m):
    """All unions of two disjoint cyclic index pairs {i, i+1} in Z_m (1-based)."""
    doms = [frozenset({i, i % m + 1}) for i in range(1, m + 1)]
    out = set()
    for a, b in itertools.combinations(doms, 2):
        if not (a & b):
            out.add(a | b)
    return sorted(out, key=sorted)


def cc4_lattice(m):
    """Combinatorial model of the 4-dimensional central chamber on m >= 6
    hyperplanes: vertices are double dominoes, facet i takes the labels
    containing i."""
    verts = double_dominoes(m)
    facets = [frozenset(v for v in verts if i in v) for i in range(1, m + 1)]
    return AbstractPolytope(verts, facets)


# ---------------------------------------------------------------------------
# the catalog itself

@lru_cache(maxsize=None)
def _catalog(max_gon=9):
    entries = []  # (name, polytope)
    seen = {}

    def add(name, poly):
        key = poly.canonical_form()
        if key in seen:
            return seen[key]
        seen[key] = name
        entries.append((name, poly))
        return name

    simplex_names = {1: "segment", 2: "triangle", 3: "tetrahedron", 4: "4-simplex"}
    for k, name in simplex_names.items():
        add(name, catalog_simplex(k))
    segment = catalog_simplex(1)
    triangle = catalog_simplex(2)
    add("prism", catalog_product(triangle, segment))
    add("cube", catalog_product(catalog_gon(4), segment))
    add("Delta3xDelta1", catalog_product(catalog_simplex(3), segment))
    add("Delta2xDelta2", catalog_product(triangle, triangle))
    gon_names = {3: "triangle", 4: "4-gon", 5: "pentagon", 6: "hexagon", 7: "heptagon"}
    gons = {}
    for k in range(3, max_gon + 1):
        gons[k] = catalog_gon(k)
        add(gon_names.get(k, "%d-gon" % k), gons[k])
    for k in range(3, max_gon + 1):
        dump_name = {3: "tetrahedron", 4: "prism"}.get(k, "%d-dumpling" % k)
        add(dump_name, catalog_rotate(gons[k], next(iter(gons[k].facets))))

    def classify_now(poly):
        return seen.get(poly.canonical_form(), "unrecognized")

    dim2 = [(n, p) for n, p in entries if p.dimension() == 2]
    dim3 = []
    for name, p in list(dim2):
        nm = add("%sxI" % name, catalog_product(p, segment))
        for f in _facet_classes(p, classify_now):
            add("rot[%s;%s]" % (name, classify_now(_facet_poly(p, f))),
                catalog_rotate(p, f))
    dim3 = [(n, p) for n, p in entries if p.dimension() == 3]
    for name, p in dim3:
        add("%sxI" % name, catalog_product(p, segment))
    for (n1, p1), (n2, p2) in itertools.combinations_with_replacement(dim2, 2):
        add("%sx%s" % tuple(sorted([n1, n2])), catalog_product(p1, p2))
    for name, p in dim3:
        for f in _facet_classes(p, classify_now):
            add("rot[%s;%s]" % (name, classify_now(_facet_poly(p, f))),
                catalog_rotate(p, f))
    for m in range(7, max_gon + 1):
        add("CC(4,%d)" % m, cc4_lattice(m))
    return tuple(entries), dict(seen)


def _facet_poly(p, facet):
    i = list(p.facets).index(facet)
    return p.facet_polytope(i)


def _facet_classes(p, classify_now):
    """One representative facet per combinatorial class."""
    reps = {}
    for i, f in enumerate(p.facets):
        key = p.facet_polytope(i).canonical_form()
        reps.setdefault(key, f)
    return list(reps.values())


def classify(poly, max_gon=9):
    """Name of the catalog member isomorphic to `poly`, or "unrecognized"."""
    _, seen = _catalog(max_gon)
    return seen.get(poly.canonical_form(), "unrecognized")


def catalog_names(max_gon=9):
    entries, _ = _catalog(max_gon)
    return [name for name, _ in entries]
