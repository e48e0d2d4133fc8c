"""Triangulation quivers: ribbon quivers with f^3 = id.

Covers the standard small examples, block decomposition and composition,
enumeration up to isomorphism (with a brute-force oracle), structural
predicates and mutation with transport of multiplicity data.
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools

from .errors import (
    DegreeViolation, InvalidMatching, NoTriangulationStructure, NotAdmissible,
    NotConnected, NotGInvariant, NotTriangulation,
)
from .ribbon import (
    Permutation, Quiver, RibbonQuiver, build_ribbon, dual, ribbon_key,
)


@dataclass(frozen=True)
class TriangulationQuiver(RibbonQuiver):
    def __post_init__(self):
        super().__post_init__()
        f = self.f
        if not all(f(f(f(a))) == a for a in range(self.n_arrows)):
            raise NotTriangulation("f^3 is not the identity")


def is_triangulation(rq):
    f = rq.f
    return all(f(f(f(a))) == a for a in range(rq.n_arrows))


def as_triangulation(rq):
    if isinstance(rq, TriangulationQuiver):
        return rq
    return TriangulationQuiver(rq.quiver, rq.f)


def _tq(arrows, f_cycles, n_vertices=None):
    return as_triangulation(build_ribbon(arrows, f_cycles, n_vertices))


# ---------------------------------------------------------------------------
# the small named examples (vertices renumbered from 0)

def quiver_1():
    """One vertex, two f-fixed loops: the unpunctured monogon."""
    return _tq([("alpha", 0, 0), ("beta", 0, 0)], [["alpha"], ["beta"]])


def quiver_2():
    """The punctured monogon: f = (alpha beta gamma)(eta)."""
    return _tq([("alpha", 0, 0), ("beta", 0, 1), ("eta", 1, 1), ("gamma", 1, 0)],
               [["alpha", "beta", "gamma"], ["eta"]])


def quiver_3a():
    return _tq([("alpha", 0, 0), ("beta", 0, 1), ("gamma", 1, 0), ("delta", 1, 2),
                ("eta", 2, 1), ("xi", 2, 2)],
               [["alpha", "beta", "gamma"], ["delta", "xi", "eta"]])


def quiver_3b():
    return _tq([("alpha1", 0, 1), ("alpha2", 1, 2), ("alpha3", 2, 0),
                ("beta1", 1, 0), ("beta2", 2, 1), ("beta3", 0, 2)],
               [["alpha1", "alpha2", "alpha3"], ["beta3", "beta2", "beta1"]])


def quiver_3prime():
    """The unpunctured triangle."""
    return _tq([("alpha1", 0, 0), ("alpha2", 1, 1), ("alpha3", 2, 2),
                ("beta1", 0, 1), ("beta2", 1, 2), ("beta3", 2, 0)],
               [["alpha1"], ["alpha2"], ["alpha3"], ["beta1", "beta2", "beta3"]])


def quiver_3dprime():
    """The Markov quiver: the once-punctured torus."""
    return _tq([("alpha0", 0, 1), ("alpha1", 1, 2), ("alpha2", 2, 0),
                ("alpha3", 0, 1), ("alpha4", 1, 2), ("alpha5", 2, 0)],
               [["alpha4", "alpha2", "alpha0"], ["alpha5", "alpha3", "alpha1"]])


def tetrahedron():
    """Sphere with four punctures triangulated as the boundary of a tetrahedron."""
    faces = [(0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3)]
    edges = sorted({tuple(sorted(p)) for fc in faces for p in itertools.combinations(fc, 2)})
    vid = {e: i for i, e in enumerate(edges)}
    arrows, cycles = [], []
    for k, (a, b, c) in enumerate(faces):
        sides = [vid[tuple(sorted(p))] for p in ((a, b), (b, c), (c, a))]
        names = ["t%d_%d" % (k, j) for j in range(3)]
        for j in range(3):
            arrows.append((names[j], sides[j], sides[(j + 1) % 3]))
        cycles.append(names)
    return _tq(arrows, cycles, len(edges))


STANDARD = {
    "1": quiver_1, "2": quiver_2, "3a": quiver_3a, "3b": quiver_3b,
    "3'": quiver_3prime, "3''": quiver_3dprime, "tetrahedron": tetrahedron,
}
ALIASES = {"monogon": "1", "punctured_monogon": "2", "triangle": "3'",
           "3prime": "3'", "3dprime": "3''", "markov": "3''"}


def standard(name):
    name = ALIASES.get(name, name)
    if name not in STANDARD:
        raise KeyError("unknown standard quiver %r; known: %s" % (name, sorted(STANDARD)))
    return STANDARD[name]()


# ---------------------------------------------------------------------------
# multiplicity data

@dataclass(frozen=True)
class MultiplicityData:
    """g-invariant multiplicities m and scalars c, loop scalars lam on f-fixed arrows.

    All three are stored per arrow id; ``lam`` is zero off the f-fixed arrows.
    """

    m: tuple
    c: tuple
    lam: tuple

    def validate(self, rq):
        n = rq.n_arrows
        if not (len(self.m) == len(self.c) == len(self.lam) == n):
            raise NotGInvariant("data length does not match the arrow count")
        for a in range(n):
            b = rq.g(a)
            if self.m[a] != self.m[b] or self.c[a] != self.c[b]:
                raise NotGInvariant("m or c differs along the g-cycle of %s" % rq.name(a))
            if not (isinstance(self.m[a], int) and self.m[a] >= 1):
                raise NotGInvariant("multiplicities must be positive integers")
            if not self.c[a]:
                raise NotGInvariant("scalars c must be nonzero")
            if self.lam[a] and rq.f(a) != a:
                raise NotGInvariant("lambda is only defined on f-fixed arrows")
        return self


def _spread(rq, value, default, what):
    n = rq.n_arrows
    if value is None:
        value = default
    if isinstance(value, (list, tuple)):
        out = list(value)
        if len(out) != n:
            raise NotGInvariant("%s needs one entry per arrow" % what)
        return out
    if isinstance(value, dict):
        out = [None] * n
        for key, v in value.items():
            a = rq.arrow_by_name(key) if isinstance(key, str) else key
            for b in rq.g.orbit(a):
                if out[b] is not None and out[b] != v:
                    raise NotGInvariant("conflicting %s values on one g-cycle" % what)
                out[b] = v
        missing = [a for a in range(n) if out[a] is None]
        if missing and default is None:
            raise NotGInvariant("%s missing on arrow %s" % (what, rq.name(missing[0])))
        return [default if x is None else x for x in out]
    return [value] * n


def make_data(rq, m, c=1, lam=None):
    """Build validated ``MultiplicityData``.

    ``m`` and ``c`` may be a constant, a per-arrow list, or a dict keyed by
    arrow name or id whose value is spread along that arrow's g-cycle.
    ``lam`` is a dict on f-fixed arrows (default 0).
    """
    mm = _spread(rq, m, None, "m")
    cc = [x if isinstance(x, int) else Fraction(x) if isinstance(x, str) else x
          for x in _spread(rq, c, 1, "c")]
    ll = [0] * rq.n_arrows
    for key, v in (lam or {}).items():
        a = rq.arrow_by_name(key) if isinstance(key, str) else key
        ll[a] = Fraction(v) if isinstance(v, str) else v
    return MultiplicityData(tuple(mm), tuple(cc), tuple(ll)).validate(rq)


def data_to_json(rq, data):
    from .field import scalar_to_json
    return {"m": {str(a): data.m[a] for a in range(rq.n_arrows)},
            "c": {str(a): scalar_to_json(data.c[a]) for a in range(rq.n_arrows)},
            "lambda": {str(a): scalar_to_json(data.lam[a])
                       for a in range(rq.n_arrows) if rq.f(a) == a}}


def data_from_json(rq, d):
    def key(k):
        return int(k) if str(k).lstrip("-").isdigit() else k

    m = {key(k): int(v) for k, v in d["m"].items()} if isinstance(d["m"], dict) else d["m"]
    c = d.get("c", 1)
    if isinstance(c, dict):
        c = {key(k): Fraction(str(v)) for k, v in c.items()}
    lam = {key(k): Fraction(str(v)) for k, v in d.get("lambda", {}).items()}
    return make_data(rq, m, c, lam)


# ---------------------------------------------------------------------------
# blocks

@dataclass(frozen=True)
class Block:
    kind: str
    outlets: tuple


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    matching: Permutation


_BLOCK_SIZE = {"A": 1, "B": 1, "C": 3}


def compose_blocks(bd):
    """Glue blocks along the matching; returns the triangulation quiver."""
    owner = {}
    for k, blk in enumerate(bd.blocks):
        if blk.kind not in _BLOCK_SIZE or len(blk.outlets) != _BLOCK_SIZE[blk.kind]:
            raise InvalidMatching("malformed block %r" % (blk,))
        for o in blk.outlets:
            if o in owner:
                raise InvalidMatching("outlet %d used twice" % o)
            owner[o] = k
    theta = bd.matching
    if sorted(owner) != list(range(len(theta))):
        raise InvalidMatching("outlets must be numbered 0..n-1 and match the involution")
    for o in range(len(theta)):
        p = theta(o)
        if p == o or theta(p) != o:
            raise InvalidMatching("matching must be a fixed-point-free involution")
        if owner[p] == owner[o]:
            raise InvalidMatching("outlets %d and %d lie in the same block" % (o, p))
    vert = {}
    for o in range(len(theta)):
        if o not in vert:
            vert[o] = vert[theta(o)] = len(set(vert.values()))
    nv = len(set(vert.values()))
    src, tgt, cycles = [], [], []

    def arrow(s, t):
        src.append(s)
        tgt.append(t)
        return len(src) - 1

    for blk in bd.blocks:
        if blk.kind == "A":
            v = vert[blk.outlets[0]]
            cycles.append([arrow(v, v)])
        elif blk.kind == "B":
            v, w = vert[blk.outlets[0]], nv
            nv += 1
            cycles.append([arrow(w, w), arrow(w, v), arrow(v, w)])
        else:
            vs = [vert[o] for o in blk.outlets]
            cycles.append([arrow(vs[j], vs[(j + 1) % 3]) for j in range(3)])
    f = Permutation.from_cycles(len(src), cycles)
    return TriangulationQuiver(Quiver(nv, src, tgt), f)


def block_decompose(tq):
    """Blocks: A per f-fixed loop, B per f-cycle through a g-fixed loop, C otherwise."""
    tq = as_triangulation(tq)
    blocks, outlet_vertex = [], []
    for cyc in tq.f.cycles():
        if len(cyc) == 1:
            kind, vs = "A", [tq.s(cyc[0])]
        else:
            loops = [a for a in cyc if tq.s(a) == tq.t(a)]
            if loops:
                w = tq.s(loops[0])
                kind, vs = "B", [next(tq.s(a) for a in cyc if tq.s(a) != w)]
            else:
                kind, vs = "C", [tq.s(a) for a in cyc]
        ids = []
        for v in vs:
            ids.append(len(outlet_vertex))
            outlet_vertex.append(v)
        blocks.append(Block(kind, tuple(ids)))
    at = {}
    for o, v in enumerate(outlet_vertex):
        at.setdefault(v, []).append(o)
    images = list(range(len(outlet_vertex)))
    for v, os_ in at.items():
        if len(os_) != 2:
            raise InvalidMatching("vertex %d carries %d outlets" % (v, len(os_)))
        images[os_[0]], images[os_[1]] = os_[1], os_[0]
    return BlockDecomposition(tuple(blocks), Permutation(images))


# ---------------------------------------------------------------------------
# enumeration

def _matchings(owner):
    """All fixed-point-free involutions on range(len(owner)) never pairing one owner."""
    n = len(owner)
    mate = [None] * n

    def rec():
        try:
            i = mate.index(None)
        except ValueError:
            yield tuple(mate)
            return
        for j in range(i + 1, n):
            if mate[j] is None and owner[j] != owner[i]:
                mate[i], mate[j] = j, i
                yield from rec()
                mate[i] = mate[j] = None

    if n % 2 == 0:
        yield from rec()


def _block_multisets(n):
    for b in range(n + 1):
        n_out = 2 * (n - b)
        for c in range(n_out // 3 + 1):
            a = n_out - b - 3 * c
            if a >= 0:
                yield a, b, c


def enumerate_triangulation_quivers(n):
    """Connected triangulation quivers with n vertices, one per isomorphism class."""
    if n < 1:
        return []
    found = {}
    for a, b, c in _block_multisets(n):
        blocks, owner = [], []
        for kind, count in (("A", a), ("B", b), ("C", c)):
            for _ in range(count):
                k = len(blocks)
                ids = tuple(range(len(owner), len(owner) + _BLOCK_SIZE[kind]))
                owner.extend([k] * len(ids))
                blocks.append(Block(kind, ids))
        for mate in _matchings(owner):
            tq = compose_blocks(BlockDecomposition(tuple(blocks), Permutation(mate)))
            if not tq.is_connected():
                continue
            key = ribbon_key(tq)
            if key not in found:
                found[key] = tq
    return [found[k] for k in sorted(found)]


def _degree_valid_quivers(n):
    """All n x n nonnegative integer matrices with row and column sums 2."""
    rows = [r for r in itertools.product(range(3), repeat=n) if sum(r) == 2]

    def rec(prefix, colsum):
        if len(prefix) == n:
            if all(x == 2 for x in colsum):
                yield prefix
            return
        for r in rows:
            new = [x + y for x, y in zip(colsum, r)]
            if max(new) <= 2:
                yield from rec(prefix + [r], new)

    for mat in rec([], [0] * n):
        src, tgt = [], []
        for i in range(n):
            for j in range(n):
                for _ in range(mat[i][j]):
                    src.append(i)
                    tgt.append(j)
        yield Quiver(n, src, tgt)


def all_triangulation_structures(q):
    """Every permutation f making q a triangulation quiver (possibly none)."""
    for i in range(q.n_vertices):
        if len(q.arrows_from(i)) != 2 or len(q.arrows_to(i)) != 2:
            raise DegreeViolation("vertex %d does not have in/out degree 2" % i)
    local = [(q.arrows_to(i), q.arrows_from(i)) for i in range(q.n_vertices)]
    for choice in itertools.product((0, 1), repeat=q.n_vertices):
        f = [None] * q.n_arrows
        for (inc, out), ch in zip(local, choice):
            f[inc[0]], f[inc[1]] = (out[0], out[1]) if ch == 0 else (out[1], out[0])
        if all(f[f[f[a]]] == a for a in range(q.n_arrows)):
            yield TriangulationQuiver(q, Permutation(f))


def brute_force_triangulation_quivers(n):
    """Independent oracle: every f with f^3 = id on every degree-valid quiver."""
    found = {}
    for q in _degree_valid_quivers(n):
        if not q.is_connected():
            continue
        for tq in all_triangulation_structures(q):
            found.setdefault(ribbon_key(tq), tq)
    return [found[k] for k in sorted(found)]


def structure_for_quiver(q):
    """Some triangulation structure on q, or NoTriangulationStructure."""
    for tq in all_triangulation_structures(q):
        return tq
    raise NoTriangulationStructure("the quiver admits no permutation f with f^3 = id")


# ---------------------------------------------------------------------------
# predicates

def shortest_cycle_length(q):
    """Length of the shortest nontrivial oriented cycle (None if acyclic)."""
    best = None
    for v in range(q.n_vertices):
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for a in q.arrows_from(u):
                    w = q.target[a]
                    if w == v:
                        length = dist[u] + 1
                        best = length if best is None else min(best, length)
                    elif w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
    return best


def min_cycle_at_least_3(tq):
    """No f-fixed arrows and every g-cycle has length at least 3."""
    if tq.f.fixed_points():
        return False
    return all(len(c) >= 3 for c in tq.g.cycles())


def _require_connected(tq):
    if not tq.is_connected():
        raise NotConnected("the triangulation quiver must be connected")


def g_cycle_count_bound(tq):
    _require_connected(tq)
    count = len(tq.g.cycles())
    return count, count == tq.n_vertices


def is_admissible(tq, m):
    return all(m[a] * len(tq.g.orbit(a)) >= 3 for a in range(tq.n_arrows))


def is_exceptional(tq, m):
    """m_a n_a = 3 for every arrow (admissible m, connected tq)."""
    _require_connected(tq)
    m = m.m if isinstance(m, MultiplicityData) else m
    if not is_admissible(tq, m):
        raise NotAdmissible("multiplicities are not admissible")
    return all(m[a] * len(tq.g.orbit(a)) == 3 for a in range(tq.n_arrows))


def is_exceptional_structural(tq, m):
    """Exceptional by shape: punctured monogon with (3,1,..) or tetrahedron with m = 1."""
    from .ribbon import are_isomorphic
    m = m.m if isinstance(m, MultiplicityData) else m
    q2 = quiver_2()
    iso = are_isomorphic(q2, tq)
    if iso is not None:
        loop = iso.arrow_map[q2.arrow_by_name("alpha")]
        return all(m[a] == (3 if a == loop else 1) for a in range(tq.n_arrows))
    if are_isomorphic(tetrahedron(), tq) is not None:
        return all(x == 1 for x in m)
    return False


def is_self_dual(rq):
    return ribbon_key(rq) == ribbon_key(dual(rq))


# ---------------------------------------------------------------------------
# mutation

def mutate(tq, k, data=None):
    """Mutation at vertex k, returning ``(new_quiver, new_data)``.

    Arrow ids are kept: a reversed arrow keeps its id, and the two new arrows
    take the ids of the two removed ones (delta_12 <- beta_1, delta_21 <- beta_2),
    so transported data can be compared arrow by arrow.
    """
    tq = as_triangulation(tq)
    q = tq.quiver
    out = q.arrows_from(k)
    loops = [a for a in out if q.is_loop(a)]
    src, tgt = list(q.source), list(q.target)
    f = list(tq.f.images)
    m = c = lam = None
    if data is not None:
        m, c, lam = list(data.m), list(data.c), list(data.lam)

    if loops:
        d = loops[0]
        if tq.g(d) == d or len(loops) == 2:
            return tq, data
        a = next(x for x in out if x != d)
        b, g_ = tq.f(a), tq.f(tq.f(a))
        for x in (a, b, g_):
            src[x], tgt[x] = tgt[x], src[x]
        f[a], f[g_], f[b] = g_, b, a
        if data is not None:
            for arr in (m, c):
                vb, vg = arr[b], arr[g_]
                arr[a] = arr[g_] = arr[d] = vb
                arr[b] = vg
    else:
        a1, a2 = out
        b1, b2 = tq.f(a1), tq.f(a2)
        g1, g2 = tq.f(b1), tq.f(b2)
        j1, j2 = q.target[a1], q.target[a2]
        l1, l2 = q.source[g1], q.source[g2]
        src[a1], tgt[a1] = j1, k
        src[a2], tgt[a2] = j2, k
        src[g1], tgt[g1] = k, l1
        src[g2], tgt[g2] = k, l2
        src[b1], tgt[b1] = l1, j2
        src[b2], tgt[b2] = l2, j1
        f[a1], f[g2], f[b2] = g2, b2, a1
        f[a2], f[g1], f[b1] = g1, b1, a2
        if data is not None:
            for arr in (m, c):
                vb1, vb2, vg1, vg2 = arr[b1], arr[b2], arr[g1], arr[g2]
                arr[a1] = arr[g1] = vb1
                arr[a2] = arr[g2] = vb2
                arr[b1] = vg1
                arr[b2] = vg2
    new = TriangulationQuiver(Quiver(q.n_vertices, src, tgt, q.arrow_names), Permutation(f))
    new_data = None
    if data is not None:
        new_data = MultiplicityData(tuple(m), tuple(c), tuple(lam)).validate(new)
    return new, new_data
