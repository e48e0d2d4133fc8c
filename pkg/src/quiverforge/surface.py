"""Marked surfaces, combinatorial triangulations and their quivers.

A triangulation is pure gluing data.  Each triangle is a clockwise triple of
side slots; every slot is either a boundary segment or glued to exactly one
other slot (possibly of the same triangle, giving a self-folded triangle).
Quiver vertices are the glued pairs, in the order given, followed by the
boundary slots, so vertex ids survive a flip.
"""

from dataclasses import dataclass

from .errors import (
    DictionaryViolation, GenusNotIntegral, InvalidGluing, NotApplicable, NotClosed,
    NotFlippable, NotSurfaceLike,
)
from .ribbon import Permutation, Quiver
from .triquiver import TriangulationQuiver, as_triangulation, mutate, quiver_1


@dataclass(frozen=True)
class MarkedSurface:
    genus: int
    boundary: tuple
    punctures: int

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(sorted(self.boundary)))
        if self.genus < 0 or self.punctures < 0 or any(n < 1 for n in self.boundary):
            raise ValueError("invalid surface parameters")
        if self.genus == 0 and not self.boundary and self.punctures <= 2:
            raise ValueError("a sphere needs at least three punctures")
        if self.genus == 0 and self.boundary == (2,) and self.punctures == 0:
            raise ValueError("the unpunctured digon is excluded")
        if self.punctures + sum(self.boundary) < 1:
            raise ValueError("at least one marked point is required")

    @property
    def b(self):
        return len(self.boundary)

    @property
    def n_marked(self):
        return self.punctures + sum(self.boundary)

    def is_unpunctured_monogon(self):
        return self.genus == 0 and self.boundary == (1,) and self.punctures == 0

    def vertex_count(self):
        """Number of arcs plus boundary segments of any triangulation."""
        if self.is_unpunctured_monogon():
            return 1
        return (6 * (self.genus - 1) + 3 * (self.punctures + self.b)
                + 2 * sum(self.boundary))

    def to_json(self):
        return {"genus": self.genus, "boundary": list(self.boundary),
                "punctures": self.punctures}


@dataclass(frozen=True)
class CombinatorialTriangulation:
    triangles: tuple
    boundary: tuple
    glue: tuple

    def __post_init__(self):
        tri = tuple(tuple(t) for t in self.triangles)
        glue = tuple(tuple(p) for p in self.glue)
        object.__setattr__(self, "triangles", tri)
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "glue", glue)
        if not tri:
            if len(self.boundary) == 1 and not glue:
                return
            raise InvalidGluing("without triangles only the unpunctured monogon is allowed")
        slots = [s for t in tri for s in t]
        if any(len(t) != 3 for t in tri) or len(set(slots)) != len(slots):
            raise InvalidGluing("triangles must be triples of distinct slots")
        used = list(self.boundary) + [s for p in glue for s in p]
        if any(len(p) != 2 or p[0] == p[1] for p in glue):
            raise InvalidGluing("glued pairs must join two distinct slots")
        if sorted(used) != sorted(slots):
            raise InvalidGluing("every slot must be boundary or glued exactly once")
        # connectivity
        owner = {s: k for k, t in enumerate(tri) for s in t}
        parent = list(range(len(tri)))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for a, b in glue:
            parent[find(owner[a])] = find(owner[b])
        if len({find(k) for k in range(len(tri))}) != 1:
            raise InvalidGluing("the glued surface is disconnected")

    def is_monogon(self):
        return not self.triangles

    def edges(self):
        """Quiver vertices: glued pairs then boundary slots."""
        return [tuple(p) for p in self.glue] + [(s,) for s in self.boundary]

    def vertex_of_slot(self):
        out = {}
        for v, e in enumerate(self.edges()):
            for s in e:
                out[s] = v
        return out

    def partner(self):
        out = {}
        for a, b in self.glue:
            out[a], out[b] = b, a
        return out

    def self_folded(self):
        """Triangles gluing two of their own slots."""
        p = self.partner()
        return [k for k, t in enumerate(self.triangles) if any(p.get(s) in t for s in t)]

    def to_json(self):
        return {"triangles": [list(t) for t in self.triangles],
                "boundary": list(self.boundary), "glue": [list(p) for p in self.glue]}

    @classmethod
    def from_json(cls, d):
        return cls(d["triangles"], d.get("boundary", []), d.get("glue", []))


# ---------------------------------------------------------------------------
# the quiver of a triangulation

def quiver_from_triangulation(t):
    """One f-3-cycle per triangle, one f-fixed loop per boundary segment."""
    if t.is_monogon():
        return quiver_1()
    vert = t.vertex_of_slot()
    src, tgt, names, cycles = [], [], [], []
    for k, tri in enumerate(t.triangles):
        vs = [vert[s] for s in tri]
        ids = []
        for j in range(3):
            ids.append(len(src))
            src.append(vs[j])
            tgt.append(vs[(j + 1) % 3])
            names.append("t%d_%d" % (k, j))
        cycles.append(ids)
    for s in t.boundary:
        v = vert[s]
        cycles.append([len(src)])
        src.append(v)
        tgt.append(v)
        names.append("b%d" % s)
    f = Permutation.from_cycles(len(src), cycles)
    return TriangulationQuiver(Quiver(len(t.edges()), src, tgt, names), f)


def triangulation_from_quiver(tq):
    """Inverse construction: triangles are the f-3-cycles (quiver 1 -> monogon)."""
    tq = as_triangulation(tq)
    cyc = tq.f.cycles()
    if all(len(c) == 1 for c in cyc) and tq.n_vertices == 1:
        return CombinatorialTriangulation((), (0,), ())
    if any(len(c) not in (1, 3) for c in cyc):
        raise NotSurfaceLike("f-cycles must have length 1 or 3")
    triangles = [c for c in cyc if len(c) == 3]
    at = {}
    for c in triangles:
        for a in c:
            at.setdefault(tq.s(a), []).append(a)
    glue, boundary = [], []
    for v in range(tq.n_vertices):
        slots = at.get(v, [])
        if len(slots) == 2:
            glue.append(tuple(slots))
        elif len(slots) == 1:
            boundary.append(slots[0])
        else:
            raise NotSurfaceLike("vertex %d is not a side of any triangle" % v)
    return CombinatorialTriangulation(triangles, boundary, glue)


# ---------------------------------------------------------------------------
# topology straight from the gluing (independent of the quiver)

def _corner_classes(t):
    index = {}
    for k, tri in enumerate(t.triangles):
        for j in range(3):
            index[(k, j)] = len(index)
    parent = list(range(len(index)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pos = {s: (k, j) for k, tri in enumerate(t.triangles) for j, s in enumerate(tri)}

    def start(s):
        k, j = pos[s]
        return index[(k, (j - 1) % 3)]

    def end(s):
        k, j = pos[s]
        return index[(k, j)]

    for a, b in t.glue:
        parent[find(start(a))] = find(end(b))
        parent[find(end(a))] = find(start(b))
    return find, start, end, index


def surface_of_triangulation(t):
    """Genus, boundary multiset and punctures computed from the cell structure."""
    if t.is_monogon():
        return MarkedSurface(0, (1,), 0)
    find, start, end, index = _corner_classes(t)
    points = {find(c) for c in index.values()}
    bpoints = set()
    comp = {s: s for s in t.boundary}

    def cfind(x):
        while comp[x] != x:
            x = comp[x]
        return x

    by_point = {}
    for s in t.boundary:
        for p in (find(start(s)), find(end(s))):
            bpoints.add(p)
            by_point.setdefault(p, []).append(s)
    for segs in by_point.values():
        for s in segs[1:]:
            comp[cfind(s)] = cfind(segs[0])
    sizes = {}
    for s in t.boundary:
        r = cfind(s)
        sizes[r] = sizes.get(r, 0) + 1
    b = len(sizes)
    chi = len(points) - (len(t.glue) + len(t.boundary)) + len(t.triangles)
    genus2 = 2 - b - chi
    if genus2 % 2:
        raise InvalidGluing("gluing does not give an orientable surface")
    return MarkedSurface(genus2 // 2, tuple(sizes.values()), len(points - bpoints))


def puncture_valences(t):
    """Number of arc ends at each puncture (corners around it)."""
    find, start, end, index = _corner_classes(t)
    bpoints = {find(start(s)) for s in t.boundary} | {find(end(s)) for s in t.boundary}
    val = {}
    for c in index.values():
        p = find(c)
        if p not in bpoints:
            val[p] = val.get(p, 0) + 1
    return sorted(val.values())


# ---------------------------------------------------------------------------
# recovering the surface from the quiver

def recover_surface(tq):
    """Read off punctures and boundary components from the g-cycles, solve for genus."""
    tq = as_triangulation(tq)
    if any(len(c) not in (1, 3) for c in tq.f.cycles()):
        raise NotSurfaceLike("f-cycles must have length 1 or 3")
    fixed = set(tq.f.fixed_points())
    p, bnd = 0, []
    for cyc in tq.g.cycles():
        mo = sum(1 for a in cyc if a in fixed)
        if mo == 0:
            p += 1
        else:
            bnd.append(mo)
    rest = tq.n_vertices - 3 * (p + len(bnd)) - 2 * sum(bnd)
    if rest % 6 or rest // 6 + 1 < 0:
        raise GenusNotIntegral("vertex count %d admits no genus" % tq.n_vertices)
    genus = rest // 6 + 1
    if genus == 0 and sorted(bnd) == [2] and p == 0 and tq.n_vertices == 1:
        return MarkedSurface(0, (1,), 0)
    return MarkedSurface(genus, tuple(bnd), p)


# ---------------------------------------------------------------------------
# flips and boundary moves

def flip(t, arc):
    """Flip the arc with quiver vertex id ``arc``."""
    edges = t.edges()
    if not 0 <= arc < len(edges):
        raise NotFlippable("no such arc: %r" % arc)
    if arc >= len(t.glue):
        raise NotFlippable("vertex %d is a boundary segment" % arc)
    a, b = t.glue[arc]
    owner = {s: k for k, tri in enumerate(t.triangles) for s in tri}
    k1, k2 = owner[a], owner[b]
    if k1 == k2:
        raise NotFlippable("arc %d is the inner side of a self-folded triangle" % arc)

    def rotate(tri, s):
        j = tri.index(s)
        return tri[j:] + tri[:j]

    _, x1, y1 = rotate(t.triangles[k1], a)
    _, x2, y2 = rotate(t.triangles[k2], b)
    tris = list(t.triangles)
    tris[k1] = (a, y1, x2)
    tris[k2] = (b, y2, x1)
    return CombinatorialTriangulation(tris, t.boundary, t.glue)


def boundary_move(tq, k):
    """Mutation at a boundary-segment vertex; returns the new quiver and surface."""
    tq = as_triangulation(tq)
    loops = [a for a in tq.quiver.arrows_from(k) if tq.s(a) == tq.t(a)]
    if not any(tq.f(a) == a for a in loops):
        raise NotApplicable("vertex %d carries no f-fixed loop" % k)
    if len(loops) == 2:
        raise NotApplicable("both arrows at vertex %d are loops; mutation is trivial" % k)
    new, _ = mutate(tq, k)
    return new, recover_surface(new)


# ---------------------------------------------------------------------------
# adjacency quivers (closed surfaces)

def adjacency_quiver_coincides(t):
    """Whether the triangulation and adjacency quivers agree (closed surfaces)."""
    if t.is_monogon() or t.boundary:
        raise NotClosed("the triangulation has boundary")
    surf = surface_of_triangulation(t)
    if surf.n_marked == 1:
        return True
    if surf.genus == 0 and surf.punctures < 4:
        return False
    return all(v >= 3 for v in puncture_valences(t))


def adjacency_matrix(t):
    """Signed adjacency counts b_ij summed over triangles (no self-folded ones)."""
    if t.self_folded():
        raise NotApplicable("self-folded triangles need tagged arcs")
    vert = t.vertex_of_slot()
    n = len(t.edges())
    b = [[0] * n for _ in range(n)]
    for tri in t.triangles:
        vs = [vert[s] for s in tri]
        for j in range(3):
            i, k = vs[j], vs[(j + 1) % 3]
            b[i][k] += 1
            b[k][i] -= 1
    return b


def adjacency_quiver_counts(t):
    """Arrow counts i -> j of the adjacency quiver (2-cycles cancelled)."""
    return [[max(x, 0) for x in row] for row in adjacency_matrix(t)]


def quiver_arrow_counts(rq):
    n = rq.n_vertices
    out = [[0] * n for _ in range(n)]
    for a in range(rq.n_arrows):
        out[rq.s(a)][rq.t(a)] += 1
    return out


# ---------------------------------------------------------------------------
# dimer models

@dataclass(frozen=True)
class DimerModel:
    """Bipartite map with edge set E and rotations f (white) and g (black)."""

    f: Permutation
    g: Permutation

    @property
    def white_nodes(self):
        return tuple(self.f.cycles())

    @property
    def black_nodes(self):
        return tuple(self.g.cycles())

    @property
    def edges(self):
        wi = {a: k for k, c in enumerate(self.white_nodes) for a in c}
        bi = {a: k for k, c in enumerate(self.black_nodes) for a in c}
        return tuple((wi[a], bi[a]) for a in range(len(self.f)))

    def faces(self):
        """Cycles of g f^-1, each listed with its four boundary edges."""
        fi = self.f.inverse()
        bar = self.g * fi
        out = []
        for cyc in bar.cycles():
            out.append(tuple(cyc) + tuple(fi(a) for a in cyc))
        return tuple(out)

    def genus(self):
        chi = (len(self.white_nodes) + len(self.black_nodes) - len(self.f)
               + len((self.g * self.f.inverse()).cycles()))
        return (2 - chi) // 2


def to_dimer(tq):
    tq = as_triangulation(tq)
    if tq.f.fixed_points():
        raise DictionaryViolation("boundary segments (f-fixed loops) are not allowed")
    if tq.g.fixed_points():
        raise DictionaryViolation("self-folded triangles (g-fixed loops) are not allowed")
    return DimerModel(tq.f, tq.g)


def from_dimer(d):
    bar = d.g * d.f.inverse()
    n = len(d.f)
    if any(bar(a) == a or bar(bar(a)) != a for a in range(n)):
        raise DictionaryViolation("some 2-cell is not a quadrilateral")
    if any(len(c) != 3 for c in d.f.cycles()):
        raise DictionaryViolation("some white node is not trivalent")
    vert = {}
    for k, c in enumerate(bar.cycles()):
        for a in c:
            vert[a] = k
    src = [vert[a] for a in range(n)]
    tgt = [vert[d.f(a)] for a in range(n)]
    return TriangulationQuiver(Quiver(len(bar.cycles()), src, tgt), d.f)


# ---------------------------------------------------------------------------
# standard triangulations

def square():
    return CombinatorialTriangulation([(0, 1, 2), (3, 4, 5)], [1, 2, 4, 5], [(0, 3)])


def punctured_monogon():
    return CombinatorialTriangulation([(0, 1, 2)], [0], [(1, 2)])


def unpunctured_monogon():
    return CombinatorialTriangulation((), (0,), ())


def triangle():
    return CombinatorialTriangulation([(0, 1, 2)], [0, 1, 2], [])


def once_punctured_torus():
    return CombinatorialTriangulation([(0, 1, 2), (3, 4, 5)], [], [(0, 3), (1, 4), (2, 5)])


def thrice_punctured_sphere():
    return CombinatorialTriangulation([(0, 1, 2), (3, 4, 5)], [], [(0, 3), (1, 5), (2, 4)])


def tetrahedron_sphere():
    faces = [(0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3)]
    slots, where = [], {}
    for k, (a, b, c) in enumerate(faces):
        tri = []
        for j, pair in enumerate(((a, b), (b, c), (c, a))):
            s = 3 * k + j
            tri.append(s)
            where.setdefault(frozenset(pair), []).append(s)
        slots.append(tuple(tri))
    return CombinatorialTriangulation(slots, [], [tuple(v) for v in where.values()])


def polygon(n):
    """Fan triangulation of an unpunctured n-gon (n >= 3)."""
    if n < 3:
        raise ValueError("need at least three sides")
    tris, glue, boundary = [], [], []
    prev = None
    for k in range(n - 2):
        base = 3 * k
        tris.append((base, base + 1, base + 2))
        if prev is not None:
            glue.append((prev, base))
        else:
            boundary.append(base)
        boundary.append(base + 1)
        prev = base + 2
    boundary.append(prev)
    return CombinatorialTriangulation(tris, boundary, glue)
