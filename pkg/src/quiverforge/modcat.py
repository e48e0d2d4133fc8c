"""Finite-dimensional algebras given by path bases, and their right modules.

A right module is a vector space whose basis vectors each carry a vertex
label (``v = v e_i``) together with one action matrix per arrow, acting on
row vectors: ``v . a = v @ actions[a]``.  Every algebra here is basic with a
path basis, so the radical is spanned by the positive-length basis paths
and is generated by the arrows.
"""

import itertools
import random
from dataclasses import dataclass

from .errors import InconclusiveOverSmallField
from .field import QQ
from .linalg import Echelon, det, left_kernel, nullspace


@dataclass(frozen=True)
class FDModule:
    labels: tuple
    actions: tuple          # per arrow: dim x dim matrix (rows of row-vector images)
    field: object = QQ

    @property
    def dim(self):
        return len(self.labels)

    def dim_vector(self, n):
        out = [0] * n
        for v in self.labels:
            out[v] += 1
        return tuple(out)

    def act(self, vec, a):
        m = self.actions[a]
        acc = [self.field.zero] * self.dim
        for i, x in enumerate(vec):
            if x:
                for j, y in enumerate(m[i]):
                    if y:
                        acc[j] = acc[j] + x * y
        return acc

    def act_path(self, vec, arrows):
        for a in arrows:
            vec = self.act(vec, a)
        return vec

    def to_json(self, n_vertices=None):
        from .field import scalar_to_json
        n = n_vertices if n_vertices is not None else (max(self.labels) + 1 if self.labels else 0)
        return {"dim_vector": list(self.dim_vector(n)), "labels": list(self.labels),
                "actions": [[[scalar_to_json(x) for x in row] for row in m] for m in self.actions]}


class FDAlgebra:
    """Basic algebra with a path basis and structure constants."""

    def __init__(self, spec):
        self.spec = spec
        self.quiver = spec.quiver
        self.field = spec.field
        self.basis = list(spec.basis)
        self.n = len(self.basis)
        self.mult = spec.mult
        self.idempotents = list(spec.idempotents)
        q = self.quiver
        self.start = [p[0] for p in self.basis]
        self.end = [q.target[p[1][-1]] if p[1] else p[0] for p in self.basis]
        self.arrow_coords = [list(v) for v in spec.arrow_coords]
        self._right = {}

    @property
    def n_vertices(self):
        return self.quiver.n_vertices

    def product(self, x, y):
        acc = [self.field.zero] * self.n
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in self.mult.get((i, j), ()):
                    acc[k] = acc[k] + a * b * c
        return acc

    def unit_vector(self, k):
        v = [self.field.zero] * self.n
        v[k] = self.field.one
        return v

    def one(self):
        v = [self.field.zero] * self.n
        for k in self.idempotents:
            v[k] = self.field.one
        return v

    def right_arrow(self, a):
        """Rows: coordinates of b_i . a."""
        if a not in self._right:
            coords = self.arrow_coords[a]
            self._right[a] = [self.product(self.unit_vector(i), coords) for i in range(self.n)]
        return self._right[a]

    def check_associative(self, samples=200, rng=None):
        rng = rng or random.Random(0)
        for _ in range(samples):
            i, j, k = (rng.randrange(self.n) for _ in range(3))
            x, y, z = self.unit_vector(i), self.unit_vector(j), self.unit_vector(k)
            if self.product(self.product(x, y), z) != self.product(x, self.product(y, z)):
                return False
        one = self.one()
        return all(self.product(one, self.unit_vector(i)) == self.unit_vector(i)
                   == self.product(self.unit_vector(i), one) for i in range(self.n))


# ---------------------------------------------------------------------------
# standard modules

def projective(A, i):
    """P_i = e_i A with the basis paths starting at i."""
    idx = [k for k in range(A.n) if A.start[k] == i]
    pos = {k: r for r, k in enumerate(idx)}
    actions = []
    for a in range(A.quiver.n_arrows):
        R = A.right_arrow(a)
        actions.append([[R[k][l] for l in idx] for k in idx])
        for k in idx:
            if any(R[k][l] for l in range(A.n) if l not in pos):
                raise ValueError("basis is not compatible with the idempotents")
    return FDModule(tuple(A.end[k] for k in idx), tuple(actions), A.field)


def projectives(A):
    return [projective(A, i) for i in range(A.n_vertices)]


def simple(A, i):
    z = A.field.zero
    return FDModule((i,), tuple([[z]] for _ in range(A.quiver.n_arrows)), A.field)


def simples(A):
    return [simple(A, i) for i in range(A.n_vertices)]


def direct_sum(mods, field):
    labels, offs = [], []
    for M in mods:
        offs.append(len(labels))
        labels.extend(M.labels)
    d = len(labels)
    n_arrows = len(mods[0].actions) if mods else 0
    actions = []
    for a in range(n_arrows):
        mat = [[field.zero] * d for _ in range(d)]
        for M, o in zip(mods, offs):
            for i, row in enumerate(M.actions[a]):
                for j, x in enumerate(row):
                    if x:
                        mat[o + i][o + j] = x
        actions.append(mat)
    return FDModule(tuple(labels), tuple(actions), field)


def submodule(M, vectors):
    """Closure of vertex-homogeneous vectors under the arrows, as a module."""
    field = M.field
    ech = Echelon(M.dim, field)
    todo = [list(v) for v in vectors]
    while todo:
        v = todo.pop()
        if ech.add(v):
            todo.extend(M.act(v, a) for a in range(len(M.actions)))
    rows = ech.rows
    labels = tuple(M.labels[pc] for pc in ech.pivots)
    actions = []
    for a in range(len(M.actions)):
        actions.append([ech.coordinates(M.act(r, a)) for r in rows])
    return FDModule(labels, tuple(actions), field), rows


def is_zero(M):
    return M.dim == 0


# ---------------------------------------------------------------------------
# tops, projective covers, syzygies

def radical_image(M):
    """Echelon basis of M . rad = sum over arrows of M . a."""
    ech = Echelon(M.dim, M.field)
    for mat in M.actions:
        for row in mat:
            if any(row):
                ech.add(row)
    return ech


def top_vectors(M):
    """Standard basis vectors of M spanning a complement of M . rad."""
    ech = radical_image(M)
    out = []
    for u in range(M.dim):
        e = [M.field.zero] * M.dim
        e[u] = M.field.one
        if ech.add(e):
            out.append(u)
    return out


def projective_cover(A, M):
    """(P, phi) with phi given row-wise: image of each basis vector of P in M."""
    tops = top_vectors(M)
    summands, rows = [], []
    for u in tops:
        i = M.labels[u]
        P = projective(A, i)
        summands.append(P)
        e = [M.field.zero] * M.dim
        e[u] = M.field.one
        for k in range(A.n):
            if A.start[k] == i:
                rows.append(M.act_path(e, A.basis[k][1]))
    if not summands:
        return FDModule((), tuple([] for _ in range(A.quiver.n_arrows)), M.field), []
    return direct_sum(summands, M.field), rows


def syzygy(A, M):
    """Kernel of a projective cover of M."""
    P, phi = projective_cover(A, M)
    field = M.field
    kernel = []
    for v in range(A.n_vertices):
        prow = [r for r in range(P.dim) if P.labels[r] == v]
        mcol = [c for c in range(M.dim) if M.labels[c] == v]
        if not prow:
            continue
        sub = [[phi[r][c] for c in mcol] for r in prow]
        if mcol:
            ker = left_kernel(sub, len(mcol), field)
        else:
            ker = [[field.one if i == j else field.zero for j in range(len(prow))]
                   for i in range(len(prow))]
        for x in ker:
            vec = [field.zero] * P.dim
            for r, c in zip(prow, x):
                vec[r] = c
            kernel.append(vec)
    K, _ = submodule(P, kernel)
    return K


def syzygy_power(A, M, r):
    for _ in range(r):
        M = syzygy(A, M)
    return M


# ---------------------------------------------------------------------------
# isomorphism

def hom_space(M, N):
    """Basis of module maps M -> N as dim M x dim N matrices (vertex preserving)."""
    field = M.field
    cells = [(i, j) for i in range(M.dim) for j in range(N.dim) if M.labels[i] == N.labels[j]]
    pos = {c: k for k, c in enumerate(cells)}
    rows = []
    for a in range(len(M.actions)):
        Am, An = M.actions[a], N.actions[a]
        # (Am X - X An)[i][l] = sum_j Am[i][j] X[j][l] - sum_k X[i][k] An[k][l]
        for i in range(M.dim):
            for l in range(N.dim):
                row = [field.zero] * len(cells)
                nz = False
                for j in range(M.dim):
                    if Am[i][j] and (j, l) in pos:
                        row[pos[(j, l)]] = row[pos[(j, l)]] + Am[i][j]
                        nz = True
                for k in range(N.dim):
                    if An[k][l] and (i, k) in pos:
                        row[pos[(i, k)]] = row[pos[(i, k)]] - An[k][l]
                        nz = True
                if nz:
                    rows.append(row)
    basis = nullspace(rows, len(cells), field) if cells else []
    out = []
    for vec in basis:
        X = [[field.zero] * N.dim for _ in range(M.dim)]
        for (i, j), k in pos.items():
            X[i][j] = vec[k]
        out.append(X)
    return out


def _combo(mats, coeffs, field):
    d1, d2 = len(mats[0]), len(mats[0][0])
    X = [[field.zero] * d2 for _ in range(d1)]
    for c, m in zip(coeffs, mats):
        if c:
            c = field(c)
            for i in range(d1):
                for j in range(d2):
                    if m[i][j]:
                        X[i][j] = X[i][j] + c * m[i][j]
    return X


def _find_invertible(mats, field, rng, trials, size):
    """Search a nonsingular combination; returns True, False (exact) or None."""
    n = len(mats[0])
    h = len(mats)
    p = field.char
    bound = (p if p else size)
    for _ in range(trials):
        coeffs = [rng.randrange(bound) for _ in range(h)]
        if det(_combo(mats, coeffs, field), field):
            return True
    # det of a generic combination has degree <= n in each coefficient, so a
    # grid of n+1 values per coefficient decides it exactly
    if p == 0 and (n + 1) ** h <= 20000:
        for coeffs in itertools.product(range(n + 1), repeat=h):
            if det(_combo(mats, coeffs, field), field):
                return True
        return False
    if p and p ** h <= 20000:
        # the whole Hom space over GF(p) was searched, so the answer is exact
        for coeffs in itertools.product(range(p), repeat=h):
            if det(_combo(mats, coeffs, field), field):
                return True
        return False
    return None


def modules_isomorphic(M, N, n_vertices=None, rng=None, trials=12):
    """Decide M = N.  Over the rationals a failed search after ``trials`` random
    combinations from a range of size 10^6 * dim is reported as non-isomorphic
    (error probability below (dim / 10^6 dim)^trials); small prime fields raise
    ``InconclusiveOverSmallField`` when no certificate is found."""
    if M.dim != N.dim:
        return False
    nv = n_vertices or (max(M.labels + N.labels) + 1 if M.dim else 0)
    if M.dim_vector(nv) != N.dim_vector(nv):
        return False
    if M.dim == 0:
        return True
    field = M.field
    rng = rng or random.Random(0)
    H = hom_space(M, N)
    if not H:
        return False
    res = _find_invertible(H, field, rng, trials, 10 ** 6 * M.dim)
    if res is None:
        if field.char:
            raise InconclusiveOverSmallField(
                "no invertible map found over GF(%d); extend scalars" % field.char)
        return False
    return res


def omega_period(A, M, max_r=8, rng=None):
    """Least r <= max_r with Omega^r M = M, or None."""
    X = M
    for r in range(1, max_r + 1):
        X = syzygy(A, X)
        if X.dim == 0:
            return None
        if modules_isomorphic(X, M, A.n_vertices, rng):
            return r
    return None


def omega_orbit_dims(A, M, r):
    out, X = [M.dim_vector(A.n_vertices)], M
    for _ in range(r):
        X = syzygy(A, X)
        out.append(X.dim_vector(A.n_vertices))
    return out


# ---------------------------------------------------------------------------
# symmetrizing forms

@dataclass(frozen=True)
class SymmetrizingForm:
    values: tuple

    def __call__(self, x):
        acc = 0
        for a, b in zip(self.values, x):
            if a and b:
                acc = acc + a * b
        return acc


def _gram(A, lam):
    G = [[A.field.zero] * A.n for _ in range(A.n)]
    for (i, j), terms in A.mult.items():
        for k, c in terms:
            if lam[k]:
                G[i][j] = G[i][j] + c * lam[k]
    return G


def symmetrizing_form(A, rng=None, trials=8):
    """A functional with lam(xy) = lam(yx) and nondegenerate pairing, or None."""
    field = A.field
    rng = rng or random.Random(0)
    rows = []
    for i in range(A.n):
        for j in range(i + 1, A.n):
            if A.end[i] != A.start[j] and A.end[j] != A.start[i]:
                continue
            row = [field.zero] * A.n
            for k, c in A.mult.get((i, j), ()):
                row[k] = row[k] + c
            for k, c in A.mult.get((j, i), ()):
                row[k] = row[k] - c
            if any(row):
                rows.append(row)
    sols = nullspace(rows, A.n, field)
    if not sols:
        return None
    p = field.char
    bound = p if p else 10 ** 6 * A.n
    for _ in range(trials):
        coeffs = [rng.randrange(bound) for _ in sols]
        lam = [field.zero] * A.n
        for c, s in zip(coeffs, sols):
            if c:
                lam = [x + field(c) * y for x, y in zip(lam, s)]
        if det(_gram(A, lam), field):
            return SymmetrizingForm(tuple(lam))
    return None


def check_symmetrizing(A, form):
    G = _gram(A, list(form.values))
    sym = all(G[i][j] == G[j][i] for i in range(A.n) for j in range(A.n))
    return sym and bool(det(G, A.field))


# ---------------------------------------------------------------------------
# Cartan cross-check

def cartan_counts(A):
    n = A.n_vertices
    C = [[0] * n for _ in range(n)]
    for k in range(A.n):
        C[A.start[k]][A.end[k]] += 1
    return C


def cartan_cross_check(A, cartan):
    C = cartan_counts(A)
    return tuple(tuple(r) for r in C) == tuple(tuple(r) for r in cartan.matrix)
