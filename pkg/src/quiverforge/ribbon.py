"""Permutations, ribbon quivers, ribbon graphs and their dictionary.

A ribbon quiver is a quiver in which every vertex has exactly two outgoing
and two incoming arrows (a loop counts once on each side), together with a
permutation ``f`` of the arrows such that ``f(a)`` starts where ``a`` ends.
Two further permutations are derived from it:

* ``bar(a)``: the other arrow starting at the source of ``a``;
* ``g(a) = bar(f(a))``.

Arrow and vertex ids are dense integers starting at 0.
"""

from dataclasses import dataclass, field as dc_field

from .errors import DegreeViolation, FlowViolation, NotAPermutation


class Permutation:
    """A bijection of {0, ..., n-1}, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise NotAPermutation("not a bijection: %r" % (images,))
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, cycles):
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in seen:
                    raise NotAPermutation("element %r repeated in cycles" % x)
                seen.add(x)
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    def __call__(self, i):
        return self.images[i]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other):
        """Composition: (self * other)(x) = self(other(x))."""
        return Permutation(self.images[j] for j in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def orbit(self, i):
        out = [i]
        j = self.images[i]
        while j != i:
            out.append(j)
            j = self.images[j]
        return tuple(out)

    def cycles(self):
        """All cycles, each starting at its least element, sorted."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i not in seen:
                cyc = self.orbit(i)
                seen.update(cyc)
                out.append(cyc)
        return out

    def cycle_type(self):
        return tuple(sorted(len(c) for c in self.cycles()))

    def fixed_points(self):
        return [i for i, j in enumerate(self.images) if i == j]

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return "Permutation(%s)" % (cyc or "()")


@dataclass(frozen=True)
class Quiver:
    n_vertices: int
    source: tuple
    target: tuple
    arrow_names: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        if len(self.source) != len(self.target):
            raise ValueError("source and target must have equal length")
        for v in self.source + self.target:
            if not 0 <= v < self.n_vertices:
                raise ValueError("vertex %r out of range" % v)
        if self.arrow_names is not None:
            names = tuple(self.arrow_names)
            if len(names) != len(self.source) or len(set(names)) != len(names):
                raise ValueError("arrow names must be distinct, one per arrow")
            object.__setattr__(self, "arrow_names", names)

    @property
    def n_arrows(self):
        return len(self.source)

    def name(self, a):
        return self.arrow_names[a] if self.arrow_names else "a%d" % a

    def names(self):
        return tuple(self.name(a) for a in range(self.n_arrows))

    def arrow_by_name(self, name):
        names = self.names()
        if name in names:
            return names.index(name)
        raise KeyError(name)

    def arrows_from(self, i):
        return [a for a, s in enumerate(self.source) if s == i]

    def arrows_to(self, i):
        return [a for a, t in enumerate(self.target) if t == i]

    def is_loop(self, a):
        return self.source[a] == self.target[a]

    def is_connected(self):
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in zip(self.source, self.target):
            parent[find(s)] = find(t)
        return len({find(v) for v in range(self.n_vertices)}) <= 1


@dataclass(frozen=True)
class RibbonQuiver:
    """A quiver with a permutation f; bar and g are derived on construction."""

    quiver: Quiver
    f: Permutation
    bar: Permutation = dc_field(init=False, compare=False, repr=False)
    g: Permutation = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        q, f = self.quiver, self.f
        if len(f) != q.n_arrows:
            raise NotAPermutation("f has %d entries for %d arrows" % (len(f), q.n_arrows))
        bar = [None] * q.n_arrows
        for i in range(q.n_vertices):
            out, inc = q.arrows_from(i), q.arrows_to(i)
            if len(out) != 2 or len(inc) != 2:
                raise DegreeViolation(
                    "vertex %d has in-degree %d and out-degree %d" % (i, len(inc), len(out)))
            bar[out[0]], bar[out[1]] = out[1], out[0]
        for a in range(q.n_arrows):
            if q.source[f(a)] != q.target[a]:
                raise FlowViolation("f(%s) does not start where %s ends" % (q.name(a), q.name(a)))
        bar = Permutation(bar)
        object.__setattr__(self, "bar", bar)
        object.__setattr__(self, "g", bar * f)

    @property
    def n_vertices(self):
        return self.quiver.n_vertices

    @property
    def n_arrows(self):
        return self.quiver.n_arrows

    def s(self, a):
        return self.quiver.source[a]

    def t(self, a):
        return self.quiver.target[a]

    def name(self, a):
        return self.quiver.name(a)

    def check_lemma(self):
        """f^-1(a) = g^-1(bar a) and g f^-2(a) = f g^-2(bar a) for every arrow."""
        f, g, bar = self.f, self.g, self.bar
        fi, gi = f.inverse(), g.inverse()
        for a in range(self.n_arrows):
            if fi(a) != gi(bar(a)):
                return False
            if g(fi(fi(a))) != f(gi(gi(bar(a)))):
                return False
        return True

    def is_connected(self):
        return self.quiver.is_connected()

    def arrow_by_name(self, name):
        return self.quiver.arrow_by_name(name)


def validate_ribbon(q, f):
    """Check the ribbon axioms and return the ribbon quiver (bar, g derived)."""
    if not isinstance(f, Permutation):
        f = Permutation(f)
    return RibbonQuiver(q, f)


def build_ribbon(arrows, f_cycles, n_vertices=None):
    """Convenience constructor from named arrows and named f-cycles.

    ``arrows`` is a list of ``(name, source, target)``; cycles list names.
    """
    names = [a[0] for a in arrows]
    src = [a[1] for a in arrows]
    tgt = [a[2] for a in arrows]
    if n_vertices is None:
        n_vertices = max(src + tgt) + 1 if arrows else 0
    idx = {n: i for i, n in enumerate(names)}
    f = Permutation.from_cycles(len(names), [[idx[x] for x in c] for c in f_cycles])
    return RibbonQuiver(Quiver(n_vertices, src, tgt, names), f)


def relabel(rq, arrow_perm):
    """Rename arrows: arrow a of ``rq`` becomes arrow ``arrow_perm[a]``."""
    n = rq.n_arrows
    inv = [0] * n
    for a, b in enumerate(arrow_perm):
        inv[b] = a
    src = [rq.s(inv[b]) for b in range(n)]
    tgt = [rq.t(inv[b]) for b in range(n)]
    names = None
    if rq.quiver.arrow_names:
        names = [rq.quiver.arrow_names[inv[b]] for b in range(n)]
    f = [arrow_perm[rq.f(inv[b])] for b in range(n)]
    return RibbonQuiver(Quiver(rq.n_vertices, src, tgt, names), Permutation(f))


def dual(rq):
    """The dual ribbon quiver (Q, g)."""
    return RibbonQuiver(rq.quiver, rq.g)


# ---------------------------------------------------------------------------
# ribbon graphs

@dataclass(frozen=True)
class RibbonGraph:
    iota: Permutation
    sigma: Permutation
    half_edge_names: tuple = None

    def __post_init__(self):
        if len(self.iota) != len(self.sigma):
            raise ValueError("iota and sigma act on different sets")
        for h in range(len(self.iota)):
            if self.iota(h) == h or self.iota(self.iota(h)) != h:
                raise NotAPermutation("iota must be a fixed-point-free involution")

    @property
    def n_half_edges(self):
        return len(self.iota)

    def nodes(self):
        return self.sigma.cycles()

    def edges(self):
        return self.iota.cycles()


def to_ribbon_graph(rq):
    return RibbonGraph(rq.bar, rq.g, rq.quiver.arrow_names)


def from_ribbon_graph(rg):
    """Vertices are iota-cycles, s(h) is the cycle of h, t = s o sigma, f = iota o sigma."""
    cyc = rg.iota.cycles()
    vert = {}
    for i, c in enumerate(cyc):
        for h in c:
            vert[h] = i
    n = rg.n_half_edges
    src = [vert[h] for h in range(n)]
    tgt = [vert[rg.sigma(h)] for h in range(n)]
    f = rg.iota * rg.sigma
    return RibbonQuiver(Quiver(len(cyc), src, tgt, rg.half_edge_names), f)


# ---------------------------------------------------------------------------
# canonical forms and isomorphism

def _bfs_code(perms, colors, start):
    label = {start: 0}
    order = [start]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for p in perms:
            y = p[x]
            if y not in label:
                label[y] = len(order)
                order.append(y)
    code = tuple((tuple(label[p[x]] for p in perms), colors[x]) for x in order)
    return code, order


def _orbits(perms, n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x in range(n):
            parent[find(x)] = find(p[x])
    comps = {}
    for x in range(n):
        comps.setdefault(find(x), []).append(x)
    return list(comps.values())


def canonical_labeling(perms, colors=None):
    """Canonical form of a tuple of permutations acting on one set.

    Returns ``(key, order)`` where ``key`` is a complete invariant under
    simultaneous conjugation (respecting optional per-element ``colors``) and
    ``order[k]`` is the element receiving canonical label ``k``.  Each
    connected orbit is labelled by breadth-first search from every possible
    start, keeping the lexicographically least code.
    """
    perms = [p.images if isinstance(p, Permutation) else tuple(p) for p in perms]
    n = len(perms[0]) if perms else 0
    if colors is None:
        colors = (0,) * n
    comps = []
    for comp in _orbits(perms, n):
        best = None
        for s in comp:
            code, order = _bfs_code(perms, colors, s)
            if best is None or code < best[0]:
                best = (code, order)
        comps.append(best)
    comps.sort(key=lambda c: c[0])
    key = tuple(c[0] for c in comps)
    order = [x for c in comps for x in c[1]]
    return key, order


def ribbon_key(rq, colors=None):
    """Complete isomorphism invariant of a ribbon quiver."""
    return canonical_labeling([rq.f, rq.bar], colors)[0]


@dataclass(frozen=True)
class Isomorphism:
    vertex_map: tuple
    arrow_map: tuple


def are_isomorphic(a, b, colors_a=None, colors_b=None):
    """Return an ``Isomorphism`` a -> b commuting with s, t, f, bar, or None.

    Optional arrow colors (any comparable labels) must also be preserved.
    """
    if a.n_arrows != b.n_arrows or a.n_vertices != b.n_vertices:
        return None
    ka, oa = canonical_labeling([a.f, a.bar], colors_a)
    kb, ob = canonical_labeling([b.f, b.bar], colors_b)
    if ka != kb:
        return None
    amap = [0] * a.n_arrows
    for x, y in zip(oa, ob):
        amap[x] = y
    vmap = [None] * a.n_vertices
    for x in range(a.n_arrows):
        vmap[a.s(x)] = b.s(amap[x])
    return Isomorphism(tuple(vmap), tuple(amap))


def check_isomorphism(a, b, iso):
    """Verify that ``iso`` really is an isomorphism of ribbon quivers."""
    am, vm = iso.arrow_map, iso.vertex_map
    if sorted(am) != list(range(b.n_arrows)) or sorted(vm) != list(range(b.n_vertices)):
        return False
    for x in range(a.n_arrows):
        if vm[a.s(x)] != b.s(am[x]) or vm[a.t(x)] != b.t(am[x]):
            return False
        if am[a.f(x)] != b.f(am[x]) or am[a.bar(x)] != b.bar(am[x]):
            return False
    return True


# ---------------------------------------------------------------------------
# cycle data

@dataclass(frozen=True)
class CyclePath:
    """Cycle data of an arrow under g (or f).

    ``path`` is a.g(a)...g^{n-1}(a) (the cycle omega_a, or xi_a for f) and
    ``prime`` drops its last arrow; an empty ``prime`` is the trivial path at
    ``base`` = s(a).
    """

    arrow: int
    length: int
    path: tuple
    prime: tuple
    base: int


def _cycle_data(rq, perm, a):
    cyc = perm.orbit(a)
    return CyclePath(a, len(cyc), cyc, cyc[:-1], rq.s(a))


def g_cycle_data(rq, a):
    """n_a, omega_a and omega'_a."""
    return _cycle_data(rq, rq.g, a)


def f_cycle_data(rq, a):
    """k_a, xi_a and xi'_a."""
    return _cycle_data(rq, rq.f, a)


@dataclass(frozen=True)
class IncidenceMatrix:
    cycles: tuple
    rows: tuple


def incidence_matrix(rq):
    """chi_omega(i) = number of arrows of the g-cycle omega starting at i."""
    cycles = tuple(rq.g.cycles())
    rows = []
    for c in cycles:
        row = [0] * rq.n_vertices
        for a in c:
            row[rq.s(a)] += 1
        rows.append(tuple(row))
    return IncidenceMatrix(cycles, tuple(rows))


# ---------------------------------------------------------------------------
# JSON and DOT

def ribbon_to_json(rq):
    q = rq.quiver
    arrows = []
    for a in range(q.n_arrows):
        d = {"id": a, "s": q.source[a], "t": q.target[a]}
        if q.arrow_names:
            d["name"] = q.arrow_names[a]
        arrows.append(d)
    return {"vertices": list(range(q.n_vertices)), "arrows": arrows, "f": list(rq.f.images)}


def ribbon_from_json(d):
    vids = sorted(d["vertices"])
    vmap = {v: i for i, v in enumerate(vids)}
    arrows = sorted(d["arrows"], key=lambda x: x["id"])
    if [x["id"] for x in arrows] != list(range(len(arrows))):
        raise ValueError("arrow ids must be 0..n-1")
    names = None
    if arrows and all("name" in x for x in arrows):
        names = [x["name"] for x in arrows]
    q = Quiver(len(vids), [vmap[x["s"]] for x in arrows], [vmap[x["t"]] for x in arrows], names)
    return validate_ribbon(q, Permutation(d["f"]))


_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
            "cyan4", "gold3", "gray40"]


def ribbon_to_dot(rq, name="Q"):
    """DOT rendering; arrows of one f-cycle share a color."""
    lines = ["digraph %s {" % name]
    for v in range(rq.n_vertices):
        lines.append('  %d [label="%d"];' % (v, v))
    for k, cyc in enumerate(rq.f.cycles()):
        color = _PALETTE[k % len(_PALETTE)]
        for a in cyc:
            lines.append('  %d -> %d [label="%s", color="%s"];'
                         % (rq.s(a), rq.t(a), rq.name(a), color))
    lines.append("}")
    return "\n".join(lines) + "\n"
