"""The prism-collapse reconstruction of the central chamber boundary.

Start from a vertical prism over an (m-2)-gon sliced into m thinner prisms,
with vertices carrying 4-element labels (unions of two disjoint cyclic index
pairs).  Collapse the m diagonal rectangles whose corner labels coincide
pairwise into "special edges", glue top to bottom by label matching (the
twist of the classical picture is exactly the induced cyclic offset), and
finally fold the boundary torus along the circle of special edges by
identifying equally-labeled cells.  The result must be label-isomorphic to
the boundary complex of the geometric central chamber; that comparison is
the point of the whole module.

Vertex labels are the single source of truth for every identification; the
tables the construction prints are regenerated, never copied in.
"""

import itertools

from .chambers import Chamber, enumerate_chambers
from .polytopes import AbstractPolytope, double_dominoes
from .topology import CWComplex, special_edges, surface_type


def _norm(k, m):
    return (k - 1) % m + 1


def _dom(k, m):
    return frozenset({_norm(k, m), _norm(k + 1, m)})


def window(j, m):
    """The label {j-1, j, j+1, j+2} (cyclically)."""
    return frozenset(_norm(j + d, m) for d in (-1, 0, 1, 2))


def level_cycle(j, m):
    """Vertex labels of the level polygon on {j, j+1}, in boundary order.

    The window {j-1, j, j+1, j+2} comes first, then {j, j+1} joined with the
    disjoint pairs {k, k+1} for k = j+2, ..., j+m-2.
    """
    base = _dom(j, m)
    cyc = [window(j, m)]
    for k in range(j + 2, j + m - 1):
        cyc.append(base | _dom(k, m))
    if len(cyc) != m - 2:
        raise AssertionError("level cycle has wrong length")
    return cyc


class PileComplex:
    """A CW complex plus the pile bookkeeping (labels, slices, landmarks)."""

    def __init__(self, m, cw, label_of, stage):
        self.m = m
        self.cw = cw
        self.label_of = dict(label_of)   # vertex id -> frozenset label
        self.stage = stage               # "pile", "solid-torus", "folded"

    def vertices_with_label(self, label):
        return [v for v, l in self.label_of.items() if l == label]

    def boundary_face_ids(self):
        """2-cells lying in exactly one 3-cell."""
        count = {}
        for fids in self.cw.cells.values():
            for f in fids:
                count[f] = count.get(f, 0) + 1
        return sorted((f for f, k in count.items() if k == 1), key=repr)

    def special_edge_ids(self):
        return [e for e in self.cw.edges if isinstance(e, tuple) and e[0] == "S"]


def build_pile(m):
    """The sliced prism over the (m-2)-gon, before any identification.

    Levels 0..m each carry a polygon (levels 0 and m are two copies of the
    same labels); slice j sits between levels j-1 and j, its lateral wall
    tiled by m-2 rectangles; column alignment follows the label-matching
    rule, which puts the degenerate (to-be-collapsed) rectangle of every
    slice at columns 0-1.
    """
    if m < 5:
        raise ValueError("pile construction needs m >= 5")
    w = m - 2
    cw = CWComplex()
    label_of = {}

    def vert(level, label):
        vid = (level, tuple(sorted(label)))
        cw.ensure_vertex(vid)
        label_of[vid] = label
        return vid

    cycles = {}
    for level in range(m + 1):
        j = _norm(level, m)
        cycles[level] = [vert(level, lab) for lab in level_cycle(j, m)]
        for c in range(w):
            a, b = cycles[level][c], cycles[level][(c + 1) % w]
            cw.ensure_edge(("L", level, c), a, b)
    for level in range(m + 1):
        walk = [(("L", level, c), cycles[level][c]) for c in range(w)]
        cw.add_face(("lev", level), walk)
    for j in range(1, m + 1):
        top = cycles[j - 1]
        bottom = [cycles[j][(c - 1) % w] for c in range(w)]
        for c in range(w):
            cw.ensure_edge(("V", j, c), top[c], bottom[c])
        for c in range(w):
            c2 = (c + 1) % w
            walk = [
                (("L", j - 1, c), top[c]),
                (("V", j, c2), top[c2]),
                (("L", j, (c - 1) % w), bottom[c2]),
                (("V", j, c), bottom[c]),
            ]
            cw.add_face(("R", j, c), walk)
        cw.add_cell(("slice", j),
                    [("lev", j - 1), ("lev", j)] + [("R", j, c) for c in range(w)])
    pile = PileComplex(m, cw, label_of, "pile")
    _check_diagonals(pile)
    return pile


def _check_diagonals(pile):
    """The rectangle at columns 0-1 of each slice must have pairwise
    label-coincident corners; anything else is a construction bug."""
    m, w = pile.m, pile.m - 2
    for j in range(1, m + 1):
        face = pile.cw.faces[("R", j, 0)]
        corners = [pile.label_of[_walk_vertices(pile.cw, face)[i]] for i in range(4)]
        if {corners[0], corners[3]} != {corners[0]} or \
                {corners[1], corners[2]} != {corners[1]}:
            raise AssertionError("diagonal rectangle of slice %d is not "
                                 "label-degenerate" % j)


def _walk_vertices(cw, steps):
    out = []
    for eid, d in steps:
        u, v = cw.edges[eid]
        out.append(u if d > 0 else v)
    return out


def collapse_and_glue(pile):
    """Collapse the m diagonal rectangles to special edges and glue the top
    of the prism to the bottom by label matching: the solid torus."""
    if pile.stage != "pile":
        raise ValueError("expected a freshly built pile")
    m, w = pile.m, pile.m - 2
    cw = pile.cw

    parent = {v: v for v in cw.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    # vertical collapse of the diagonal rectangle corners of slice j
    for j in range(1, m + 1):
        for lab in (window(j - 1, m), window(j, m)):
            union((j - 1, tuple(sorted(lab))), (j, tuple(sorted(lab))))
    # glue level m onto level 0 (same labels by construction)
    for lab in level_cycle(_norm(m, m), m):
        union((m, tuple(sorted(lab))), (0, tuple(sorted(lab))))

    # the diagonal's top and bottom edges become one special edge per slice;
    # the glue identifies level-m with level-0 edges.  Chains can form (the
    # wrapped special edges run through the glue), so use a union-find.
    eparent = {}

    def efind(x):
        eparent.setdefault(x, x)
        while eparent[x] != x:
            eparent[x] = eparent[eparent[x]]
            x = eparent[x]
        return x

    def eunion(a, b):
        eparent.setdefault(a, a)
        eparent.setdefault(b, b)
        eparent[efind(a)] = efind(b)

    dropped_edges = set()
    dropped_faces = set()
    face_alias = {}
    for j in range(1, m + 1):
        dropped_edges.add(("V", j, 0))
        dropped_edges.add(("V", j, 1))
        dropped_faces.add(("R", j, 0))
        eunion(("L", j - 1, 0), ("S", j))
        eunion(("L", j, w - 1), ("S", j))
    for c in range(w):
        eunion(("L", m, c), ("L", 0, c))
    face_alias[("lev", m)] = ("lev", 0)

    edge_name = {}
    classes = {}
    for eid in list(eparent):
        classes.setdefault(efind(eid), []).append(eid)
    for rep, members in classes.items():
        specials = [e for e in members if e[0] == "S"]
        if len(specials) > 1:
            raise AssertionError("special edges merged: %s" % (specials,))
        name = specials[0] if specials else min(members, key=repr)
        for e in members:
            edge_name[e] = name

    new = CWComplex()
    label_of = {}
    vmap = {}
    for v in cw.vertices:
        r = find(v)
        vmap[v] = r
        label_of[r] = pile.label_of[v]
        new.ensure_vertex(r)

    def canon_edge(eid):
        return edge_name.get(eid, eid)

    for eid, (u, v) in cw.edges.items():
        if eid in dropped_edges:
            if vmap[u] != vmap[v]:
                raise AssertionError("dropped edge %r did not degenerate" % (eid,))
            continue
        new.ensure_edge(canon_edge(eid), vmap[u], vmap[v])

    for fid, steps in cw.faces.items():
        if fid in dropped_faces or fid in face_alias:
            continue
        walk = []
        for eid, d in steps:
            u, v = cw.edges[eid]
            start = u if d > 0 else v
            if eid in dropped_edges:
                continue
            walk.append((canon_edge(eid), vmap[start]))
        new.add_face(fid, walk)

    for cid, fids in cw.cells.items():
        mapped = set()
        for f in fids:
            f = face_alias.get(f, f)
            if f in dropped_faces:
                continue
            mapped.add(f)
        new.add_cell(cid, mapped)

    st = PileComplex(pile.m, new, label_of, "solid-torus")
    _check_special_circle(st)
    return st


def _check_special_circle(st):
    m = st.m
    specials = st.special_edge_ids()
    if len(specials) != m:
        raise AssertionError("expected %d special edges" % m)
    ends = {e: st.cw.edges[e] for e in specials}
    for j in range(1, m + 1):
        want = {window(j - 1, m), window(j, m)}
        got = {st.label_of[v] for v in ends[("S", j)]}
        if got != want:
            raise AssertionError("special edge %d has ends %s" % (j, got))


def boundary_torus(st):
    """The lateral boundary of the solid torus as a 2-subcomplex."""
    return st.cw.subcomplex(st.boundary_face_ids())


def fold(st):
    """Fold the boundary torus along the special circle: identify the pairs
    of boundary 2-cells carrying identical vertex-label sets.

    Returns the closed complex X_m.  Raises if the label pairing is not a
    perfect matching.
    """
    if st.stage != "solid-torus":
        raise ValueError("expected the collapsed and glued solid torus")
    cw = st.cw
    boundary = st.boundary_face_ids()
    groups = {}
    for f in boundary:
        key = frozenset(st.label_of[v] for v in _walk_vertices(cw, cw.faces[f]))
        groups.setdefault(key, []).append(f)
    pairs = []
    for key, fs in sorted(groups.items(), key=lambda kv: repr(kv[1])):
        if len(fs) != 2:
            raise ValueError("boundary cells with labels %s occur %d times"
                             % (sorted(map(sorted, key)), len(fs)))
        pairs.append(tuple(sorted(fs, key=repr)))

    # vertices merge by label
    by_label = {}
    for v in cw.vertices:
        by_label.setdefault(st.label_of[v], []).append(v)
    vmap = {}
    for lab, vs in by_label.items():
        rep = tuple(sorted(lab))
        for v in vs:
            vmap[v] = rep

    # edges merge as forced by the matched faces (match boundary edges by
    # endpoint labels); other edges merge only if labels force nothing new
    eparent = {e: e for e in cw.edges}

    def efind(x):
        while eparent[x] != x:
            eparent[x] = eparent[eparent[x]]
            x = eparent[x]
        return x

    face_alias = {}
    for keep, drop in pairs:
        face_alias[drop] = keep
        keep_edges = {}
        for eid, d in cw.faces[keep]:
            u, v = cw.edges[eid]
            keep_edges[frozenset((vmap[u], vmap[v]))] = eid
        for eid, d in cw.faces[drop]:
            u, v = cw.edges[eid]
            key = frozenset((vmap[u], vmap[v]))
            if key not in keep_edges:
                raise ValueError("no partner edge for %r in folded pair" % (eid,))
            eparent[efind(eid)] = efind(keep_edges[key])

    new = CWComplex()
    label_of = {}
    for eid, (u, v) in cw.edges.items():
        rep = efind(eid)
        new.ensure_edge(rep, vmap[u], vmap[v])
    for v in cw.vertices:
        new.ensure_vertex(vmap[v])
        label_of[vmap[v]] = st.label_of[v]
    for fid, steps in cw.faces.items():
        if fid in face_alias:
            continue
        walk = []
        for eid, d in steps:
            u, v = cw.edges[eid]
            start = u if d > 0 else v
            walk.append((efind(eid), vmap[start]))
        new.add_face(fid, walk)
    for cid, fids in cw.cells.items():
        new.add_cell(cid, {face_alias.get(f, f) for f in fids})
    return PileComplex(st.m, new, label_of, "folded")


def folded_strip(xm):
    """The image of the boundary torus in X_m: the cells that were matched,
    i.e. the lateral cells of the m slices."""
    lateral = [f for f in xm.cw.faces if isinstance(f, tuple) and f[0] == "R"]
    return xm.cw.subcomplex(lateral)


def par_curve(st):
    """A vertical line of the solid torus: follow surviving vertical edges
    from a window vertex; returns the vertex cycle (the classical parallel)."""
    cw = st.cw
    verticals = [e for e in cw.edges if isinstance(e, tuple) and e[0] == "V"]
    adj = {}
    for e in verticals:
        u, v = cw.edges[e]
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    start = min(adj, key=repr)
    cycle = [start]
    prev = None
    cur = start
    while True:
        options = [(e, w) for e, w in adj[cur] if e != prev]
        if not options:
            raise AssertionError("parallel is not a closed curve")
        e, w = options[0]
        if w == start:
            break
        cycle.append(w)
        cur, prev = w, e
    return cycle


def torus_census(st):
    """(triangles, rectangles) in the boundary torus tessellation."""
    tri = rect = 0
    for f in st.boundary_face_ids():
        k = len(st.cw.faces[f])
        if k == 3:
            tri += 1
        elif k == 4:
            rect += 1
        else:
            raise AssertionError("boundary cell with %d edges" % k)
    return tri, rect


def special_circle_level_crossings(st):
    """How often the special circle meets each level polygon's edge set.

    The special edge of slice j is an edge of both adjacent level polygons,
    so the circle runs inside consecutive levels; the classical (2,1)-curve
    statement is that every level polygon carries exactly two special edges.
    """
    m = st.m
    out = {}
    for level in range(m):
        face = st.cw.faces[("lev", level)]
        eids = {eid for eid, _ in face}
        out[level] = sum(1 for e in st.special_edge_ids() if e in eids)
    return out


def compare_with_boundary(xm, bd):
    """Label-preserving isomorphism between X_m and the geometric boundary.

    Both complexes carry 4-set vertex labels; cells are compared through
    their vertex label sets (which must identify cells uniquely on both
    sides dimension by dimension).  Returns (True, None) or (False, witness).
    """
    def tables(cw, label):
        vsets = {}
        for eid, (u, v) in cw.edges.items():
            vsets.setdefault(1, {})[eid] = frozenset((label(u), label(v)))
        for fid, steps in cw.faces.items():
            vsets.setdefault(2, {})[fid] = frozenset(
                label(w) for w in _walk_vertices(cw, steps))
        for cid, fids in cw.cells.items():
            acc = set()
            for f in fids:
                acc |= vsets[2][f]
            vsets.setdefault(3, {})[cid] = frozenset(acc)
        return vsets

    lab_x = lambda v: xm.label_of[v]
    lab_b = lambda v: frozenset(v)
    tx, tb = tables(xm.cw, lab_x), tables(bd, lab_b)
    vx = {frozenset(lab_x(v)) for v in xm.cw.vertices}
    vb = {frozenset(v) for v in bd.vertices}
    if vx != vb:
        return False, ("vertex labels differ", sorted(map(sorted, vx ^ vb)))
    for dim in (1, 2, 3):
        mx, mb = tx.get(dim, {}), tb.get(dim, {})
        if len(set(mx.values())) != len(mx) or len(set(mb.values())) != len(mb):
            return False, ("labels do not identify cells in dimension %d" % dim,)
        if set(mx.values()) != set(mb.values()):
            diff = set(mx.values()) ^ set(mb.values())
            return False, ("cell label sets differ in dimension %d" % dim,
                           sorted(map(sorted, list(diff)[:3])))
    # incidence: 3-cells must decompose into the same 2-cell label sets
    fx = {tx[3][c]: frozenset(tx[2][f] for f in xm.cw.cells[c])
          for c in xm.cw.cells}
    fb = {tb[3][c]: frozenset(tb[2][f] for f in bd.cells[c])
          for c in bd.cells}
    for key in fx:
        if fx[key] != fb.get(key):
            return False, ("3-cell incidence mismatch", sorted(map(sorted, key)))
    # and 2-cells into the same edge label sets
    ex = {tx[2][f]: frozenset(frozenset((xm.label_of[u], xm.label_of[v]))
                              for u, v in (xm.cw.edges[e] for e, _ in xm.cw.faces[f]))
          for f in xm.cw.faces}
    eb = {tb[2][f]: frozenset(frozenset((frozenset(u), frozenset(v)))
                              for u, v in (bd.edges[e] for e, _ in bd.faces[f]))
          for f in bd.faces}
    for key in ex:
        if ex[key] != eb.get(key):
            return False, ("2-cell incidence mismatch", sorted(map(sorted, key)))
    return True, None


def emit_table(m):
    """The table of piles as text: one row per level, the repeated first
    column appended, diagonal (collapsed) rectangles marked by x."""
    w = m - 2
    rows = []
    for level in range(m + 1):
        j = _norm(level, m)
        cyc = level_cycle(j, m)
        printed = [cyc[(g - level) % w] for g in range(w)]
        printed.append(printed[0])
        rows.append(("%d%d:" % (j, _norm(j + 1, m)),
                     ["".join(str(x) for x in sorted(lab)) for lab in printed]))
    lines = []
    for idx, (name, labs) in enumerate(rows):
        lines.append(name + "  " + " - ".join(labs))
        if idx < m:
            marks = ["x" if g == idx % w else " " for g in range(w)]
            lines.append("      " + "   ".join(marks))
    return "\n".join(lines)


def build_folded(m):
    """Convenience: pile -> collapse/glue -> fold."""
    return fold(collapse_and_glue(build_pile(m)))


def central_chamber_vertex_labels(m):
    """Expected vertex labels of the central chamber: double dominoes."""
    return set(double_dominoes(m))
