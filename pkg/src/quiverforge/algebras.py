"""Brauer graph algebras, triangulation algebras and named families.

Relations are built as untruncated ``TruncatedElement`` values (``N=None``);
``TruncatedIdeal`` truncates them when membership or a basis is needed.
Multiplicities and scalars come as ``MultiplicityData`` (per-arrow tuples).
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

from .errors import (
    ConditionStarViolation, Exceptional, ExceptionalScalarViolation, NotAdmissible,
    ParamViolation, StabilizationFailure, Undefined,
)
from .field import QQ, scalar_to_json
from .linalg import det, inverse, rank, vecmat
from .pathalg import (
    Potential, TruncatedElement, TruncatedIdeal, format_element, format_path,
    jacobian_generators, path_target,
)
from .ribbon import Quiver, build_ribbon, incidence_matrix
from .triquiver import (
    MultiplicityData, TriangulationQuiver, as_triangulation, is_admissible, is_exceptional,
    make_data, quiver_2, quiver_3a, tetrahedron,
)
from .ribbon import are_isomorphic


# ---------------------------------------------------------------------------
# path helpers

def _pe(q, start, word, coef=1, field=QQ):
    return TruncatedElement(q, None, {(start, tuple(word)): coef}, field)


def _zero(q, field=QQ):
    return TruncatedElement(q, None, {}, field)


def omega(rq, a):
    """The g-cycle word starting at a."""
    return tuple(rq.g.orbit(a))


def omega_power_prime(rq, a, m):
    """omega_a^(m-1) omega'_a as a word."""
    w = omega(rq, a)
    return w * (m - 1) + w[:-1]


def _data(rq, data):
    if isinstance(data, MultiplicityData):
        return data.validate(rq)
    return make_data(rq, data)


# ---------------------------------------------------------------------------
# Cartan data

@dataclass(frozen=True)
class CartanData:
    matrix: tuple
    dimension: int
    rank: int
    det: int

    def to_json(self):
        return {"matrix": [list(r) for r in self.matrix], "dimension": self.dimension,
                "rank": self.rank, "det": self.det}


def cartan_from_data(rq, data):
    """C = sum over g-cycles of m * chi^T chi."""
    inc = incidence_matrix(rq)
    n = rq.n_vertices
    C = [[0] * n for _ in range(n)]
    for cyc, row in zip(inc.cycles, inc.rows):
        m = data.m[cyc[0]]
        for i in range(n):
            for j in range(n):
                C[i][j] += m * row[i] * row[j]
    return cartan_from_matrix(C)


def cartan_from_matrix(C):
    n = len(C)
    d = det(C, QQ) if n else Fraction(1)
    return CartanData(tuple(tuple(r) for r in C), sum(map(sum, C)),
                      rank(C, n, QQ) if n else 0, int(d))


def data_dimension(rq, data):
    """sum over g-cycles of m |omega|^2."""
    return sum(data.m[c[0]] * len(c) ** 2 for c in rq.g.cycles())


# ---------------------------------------------------------------------------
# Brauer graph algebras

@dataclass(frozen=True)
class BrauerGraphPresentation:
    rq: object
    data: MultiplicityData
    zero_relations: tuple
    comm_relations: tuple
    field: object = QQ

    def relations(self):
        return list(self.zero_relations) + list(self.comm_relations)


def brauer_presentation(rq, data, field=QQ):
    data = _data(rq, data)
    q = rq.quiver
    zero = tuple(_pe(q, rq.s(a), (a, rq.f(a)), 1, field) for a in range(rq.n_arrows))
    comm = []
    for v in range(rq.n_vertices):
        a = min(q.arrows_from(v))
        b = rq.bar(a)
        comm.append(_pe(q, v, omega(rq, a) * data.m[a], field(data.c[a]), field)
                    - _pe(q, v, omega(rq, b) * data.m[b], field(data.c[b]), field))
    return BrauerGraphPresentation(rq, data, zero, tuple(comm), field)


def bga_basis(p):
    rq, m = p.rq, p.data.m
    out = [(v, ()) for v in range(rq.n_vertices)]
    for a in range(rq.n_arrows):
        w = omega(rq, a) * m[a]
        out.extend((rq.s(a), w[:r + 1]) for r in range(len(w) - 1))
    for v in range(rq.n_vertices):
        a = min(rq.quiver.arrows_from(v))
        out.append((v, omega(rq, a) * m[a]))
    return out


def bga_dimension(p):
    return data_dimension(p.rq, p.data)


def bga_cartan(p):
    return cartan_from_data(p.rq, p.data)


# ---------------------------------------------------------------------------
# triangulation algebras

@dataclass(frozen=True)
class TriangulationPresentation:
    tq: object
    data: MultiplicityData
    generators: tuple
    extended: tuple
    admissible: bool
    exceptional: bool
    scalars_ok: bool
    field: object = QQ
    notes: tuple = ()


def _exceptional_scalars_ok(tq, data, field):
    """Scalar condition for the two exceptional shapes."""
    if are_isomorphic(quiver_2(), tq) is not None:
        prod = field.one
        for a in range(tq.n_arrows):
            prod = prod * field(data.c[a])
        return prod != field.one
    if are_isomorphic(tetrahedron(), tq) is not None:
        for a in range(tq.n_arrows):
            b = tq.bar(a)
            prod = field(data.c[a]) * field(data.c[b]) * field(data.c[tq.f(a)]) * field(data.c[tq.f(b)])
            if prod != field.one:
                return True
        return False
    return True


def _comm_generator(tq, data, a, field, extended):
    """Relation indexed by a: bar(a) f(bar a) - c_a omega_a^(m-1) omega'_a (+ loop terms)."""
    q = tq.quiver
    b = tq.bar(a)
    c = field(data.c[a])
    m = data.m[a]
    s = tq.s(a)
    tail = _pe(q, s, omega_power_prime(tq, a, m), c, field)
    if tq.f(b) != b:
        return _pe(q, s, (b, tq.f(b)), 1, field) - tail
    lam = field(data.lam[b])
    if extended:
        return (_pe(q, s, (b, b), 1, field) - tail
                - _pe(q, s, omega(tq, a) * m, c * lam, field))
    return _pe(q, s, (b, b), 1, field) - _pe(q, s, (b, b, b), lam, field) - tail


def zigzag(tq, a):
    fa = tq.f(a)
    return (tq.s(a), (a, fa, tq.g(fa)))


def triangulation_presentation(tq, data, field=QQ, allow_violation=False):
    tq = as_triangulation(tq)
    data = _data(tq, data)
    for a in range(tq.n_arrows):
        if data.m[a] * len(tq.g.orbit(a)) < 2:
            raise Undefined("m n < 2 at arrow %s" % tq.name(a))
    gens = tuple(_comm_generator(tq, data, a, field, False) for a in range(tq.n_arrows))
    adm = is_admissible(tq, data.m)
    exc = adm and tq.is_connected() and is_exceptional(tq, data.m)
    ok = not exc or _exceptional_scalars_ok(tq, data, field)
    notes = []
    if not ok and not allow_violation:
        raise ExceptionalScalarViolation("exceptional multiplicities with forbidden scalars")
    extended = ()
    if adm and ok:
        ext = [_comm_generator(tq, data, a, field, True) for a in range(tq.n_arrows)]
        loops_lam = any(data.lam[a] for a in tq.f.fixed_points())
        if exc and loops_lam and are_isomorphic(quiver_2(), tq) is not None:
            notes.append("zig-zag relations omitted: exceptional punctured monogon with nonzero lambda")
        else:
            ext.extend(TruncatedElement(tq.quiver, None, {zigzag(tq, a): 1}, field)
                       for a in range(tq.n_arrows))
        extended = tuple(ext)
    return TriangulationPresentation(tq, data, gens, extended, adm, exc, ok, field, tuple(notes))


def default_truncation(tq, data):
    return 2 * max(data.m[a] * len(tq.g.orbit(a)) for a in range(tq.n_arrows)) + 3


def prop_basis(tq, data):
    """e_i, the proper prefixes a g(a) ... of omega_a^m, and z_i = omega^m at each vertex."""
    return bga_basis(BrauerGraphPresentation(tq, data, (), ()))


@dataclass(frozen=True)
class FDAlgebraSpec:
    """Basis paths with structure constants: mult[(i, j)] = ((k, c), ...)."""

    quiver: object
    field: object
    basis: tuple
    mult: dict
    idempotents: tuple
    socle: tuple = ()
    truncation: int = None
    checks: dict = dc_field(default_factory=dict)
    arrow_coords: tuple = ()

    @property
    def dimension(self):
        return len(self.basis)

    def to_json(self):
        return {
            "basis": [format_path(self.quiver, p) for p in self.basis],
            "mult": [[i, j, k, scalar_to_json(c)]
                     for (i, j), terms in sorted(self.mult.items()) for k, c in terms],
            "idempotents": list(self.idempotents),
            "socle": list(self.socle),
            "truncation": self.truncation,
            "checks": dict(self.checks),
        }


def fd_algebra_from_ideal(I, basis=None, socle_paths=(), checks=None):
    """Structure constants of KQ/I on the given basis paths (default: normal words).

    Raises StabilizationFailure unless the ideal stabilized.
    """
    if not I.stabilized():
        raise StabilizationFailure(
            "normal words did not die out below truncation %d (Hilbert %s)" % (I.N, I.hilbert()))
    q, field = I.quiver, I.field
    words = I.normal_words()
    widx = {p: i for i, p in enumerate(words)}
    n = len(words)
    checks = dict(checks or {})

    def coords(p):
        v = [field.zero] * n
        nf = I.normal_form(TruncatedElement(q, I.N, {p: 1}, field))
        for w, c in nf.terms.items():
            v[widx[w]] = c
        return v

    if basis is None:
        basis = list(words)
        to_basis = None
    else:
        basis = list(basis)
        P = [coords(p) for p in basis]
        ok = len(basis) == n and rank(P, n, field) == n if n else len(basis) == 0
        checks["basis_paths_independent"] = ok
        if not ok:
            basis = list(words)
            to_basis = None
        else:
            to_basis = inverse(P, field)
    bidx = {p: i for i, p in enumerate(basis)}
    mult = {}
    for i, p in enumerate(basis):
        end = path_target(q, p)
        for j, r in enumerate(basis):
            if r[0] != end:
                continue
            prod = (p[0], p[1] + r[1])
            if len(prod[1]) > I.N:
                continue
            if prod in bidx and to_basis is None and prod in widx:
                mult[(i, j)] = ((bidx[prod], field.one),)
                continue
            v = coords(prod)
            if to_basis is not None:
                v = vecmat(v, to_basis, n, field)
            terms = tuple((k, c) for k, c in enumerate(v) if c)
            if terms:
                mult[(i, j)] = terms
    idem = tuple(bidx[(v, ())] for v in range(q.n_vertices) if (v, ()) in bidx)
    socle = tuple(bidx[p] for p in socle_paths if p in bidx)
    arrows = []
    for a in range(q.n_arrows):
        v = coords((q.source[a], (a,)))
        if to_basis is not None:
            v = vecmat(v, to_basis, n, field)
        arrows.append(tuple(v))
    return FDAlgebraSpec(q, field, tuple(basis), mult, idem, socle, I.N, checks, tuple(arrows))


def triangulation_ideal(p, N=None, extended=False):
    N = N or default_truncation(p.tq, p.data)
    gens = p.extended if extended else p.generators
    return TruncatedIdeal(p.tq.quiver, gens, N, p.field)


def verify_finite_dimensional(p, N=None):
    """Certify finite dimension via pathalg and return the algebra with checks."""
    tq, data, field = p.tq, p.data, p.field
    if not p.admissible:
        raise NotAdmissible("multiplicities are not admissible")
    if not p.scalars_ok:
        raise ExceptionalScalarViolation("exceptional multiplicities with forbidden scalars")
    N = N or default_truncation(tq, data)
    I = triangulation_ideal(p, N)
    if not I.stabilized():
        raise StabilizationFailure("no stabilization at truncation %d (Hilbert %s)" % (N, I.hilbert()))
    q = tq.quiver
    checks = {}
    checks["extended_relations_in_ideal"] = all(I.contains(x.truncate(N)) for x in p.extended)
    checks["zigzags_in_ideal"] = all(
        I.contains(TruncatedElement(q, N, {zigzag(tq, a): 1}, field)) for a in range(tq.n_arrows))
    checks["dimension_matches_formula"] = I.dimension() == data_dimension(tq, data)
    z_ok = True
    for a in range(tq.n_arrows):
        b = tq.bar(a)
        s = tq.s(a)
        vals = [
            _pe(q, s, (a, tq.f(a), tq.f(tq.f(a))), 1, field),
            _pe(q, s, omega(tq, b) * data.m[b], field(data.c[b]), field),
            _pe(q, s, omega(tq, a) * data.m[a], field(data.c[a]), field),
            _pe(q, s, (b, tq.f(b), tq.f(tq.f(b))), 1, field),
        ]
        nfs = [I.normal_form(v.truncate(N)) for v in vals]
        z_ok = z_ok and all(x == nfs[0] for x in nfs) and not nfs[0].is_zero()
    checks["socle_equalities"] = z_ok
    socle = [(v, omega(tq, min(q.arrows_from(v))) * data.m[min(q.arrows_from(v))])
             for v in range(tq.n_vertices)]
    return fd_algebra_from_ideal(I, prop_basis(tq, data), socle, checks)


def tri_cartan(p):
    return cartan_from_data(p.tq, p.data)


def cartan_of_ideal(I):
    """C_ij = number of normal words from i to j (needs stabilization)."""
    if not I.stabilized():
        raise StabilizationFailure("no stabilization at truncation %d" % I.N)
    n = I.quiver.n_vertices
    C = [[0] * n for _ in range(n)]
    for p in I.normal_words():
        C[p[0]][path_target(I.quiver, p)] += 1
    return cartan_from_matrix(C)


# ---------------------------------------------------------------------------
# degeneration family

def degeneration_exponents(tq, data):
    """N = lcm(m n) and the exponent maps N e_a, N e'_a."""
    mn = [data.m[a] * len(tq.g.orbit(a)) for a in range(tq.n_arrows)]
    big = 1
    for x in mn:
        big = big * x // gcd(big, x)
    e, e1 = {}, {}
    for a in range(tq.n_arrows):
        fa = tq.f(a)
        frac = 1 - sum(Fraction(1, mn[b]) for b in (a, fa, tq.f(fa)))
        e[a] = big * frac
        e1[a] = big * (1 - Fraction(2, mn[a]))
    return big, e, e1


def degeneration_family(p, t):
    """Relations of I_t; t = 1 gives the extended presentation.

    When every exponent N e_a is positive, t = 0 gives the Brauer graph algebra.
    A zero exponent (an f-fixed arrow with m n = 3 outside the exceptional case)
    is allowed, but then the t = 0 member keeps a square relation of the form
    a^2 = c * path and differs from the Brauer graph algebra.
    """
    tq, data, field = p.tq, p.data, p.field
    if not p.admissible:
        raise NotAdmissible("multiplicities are not admissible")
    if p.exceptional:
        raise Exceptional("the degeneration family is undefined in the exceptional case")
    big, e, e1 = degeneration_exponents(tq, data)
    q = tq.quiver
    t = field(t)
    rels = []
    for a in range(tq.n_arrows):
        b = tq.bar(a)
        s, m, c = tq.s(a), data.m[a], field(data.c[a])
        if e[b] < 0 or e[b].denominator != 1:
            raise Exceptional("exponent N e is not a non-negative integer")
        tail = _pe(q, s, omega_power_prime(tq, a, m), c * t ** int(e[b]), field)
        if tq.f(b) != b:
            rels.append(_pe(q, s, (b, tq.f(b)), 1, field) - tail)
        else:
            lam = field(data.lam[b])
            rels.append(_pe(q, s, (b, b), 1, field) - tail
                        - _pe(q, s, omega(tq, a) * m, c * lam * t ** int(e1[b]), field))
    for a in range(tq.n_arrows):
        rels.append(TruncatedElement(q, None, {zigzag(tq, a): 1}, field))
    for v in range(tq.n_vertices):
        a = min(q.arrows_from(v))
        b = tq.bar(a)
        rels.append(_pe(q, v, omega(tq, a) * data.m[a], field(data.c[a]), field)
                    - _pe(q, v, omega(tq, b) * data.m[b], field(data.c[b]), field))
    return rels


def degeneration_rescaling(p, t):
    """The substitution a -> t^(N/(m_a n_a)) a taking I_1 onto I_t."""
    tq, data, field = p.tq, p.data, p.field
    big, _, _ = degeneration_exponents(tq, data)
    t = field(t)
    return {a: _pe(tq.quiver, tq.s(a), (a,), t ** (big // (data.m[a] * len(tq.g.orbit(a)))), field)
            for a in range(tq.n_arrows)}


# ---------------------------------------------------------------------------
# named families

@dataclass(frozen=True)
class FamilyInstance:
    name: str
    quiver: object
    relations: tuple = ()
    tq: object = None
    data: MultiplicityData = None
    notes: tuple = ()

    def presentation(self, field=QQ):
        if self.data is None:
            raise ParamViolation("%s carries no triangulation data" % self.name)
        return triangulation_presentation(self.tq, self.data, field)


def _rel(q, spec, field=QQ):
    """Build an element from [(coef, [arrow names]), ...]; words repeat via tuples."""
    out = _zero(q, field)
    for coef, names in spec:
        word = tuple(q.arrow_by_name(x) for x in names)
        out = out + _pe(q, q.source[word[0]], word, coef, field)
    return out


def _cube_root(x):
    x = Fraction(x)

    def icbrt(n):
        r = round(abs(n) ** (1 / 3))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** 3 == abs(n):
                return c if n >= 0 else -c
        return None

    a, b = icbrt(x.numerator), icbrt(x.denominator)
    return None if a is None or b is None else Fraction(a, b)


def q2b(k, s, a, c, field=QQ):
    """Q(2B)_1^{k,s}(a, c): printed relations plus triangulation data."""
    a, c = Fraction(a), Fraction(c)
    if not (k >= 1 and s >= 2 and k + s >= 4):
        raise ParamViolation("need k >= 1, s >= 2, k + s >= 4")
    if a == 0:
        raise ParamViolation("a must be nonzero")
    if (k, s) == (1, 3) and a == 1:
        raise ParamViolation("a != 1 is required when (k, s) = (1, 3)")
    tq = build_ribbon([("alpha", 0, 0), ("beta", 0, 1), ("gamma", 1, 0), ("eta", 1, 1)],
                      [["alpha"], ["eta", "gamma", "beta"]])
    tq = TriangulationQuiver(tq.quiver, tq.f)
    q = tq.quiver
    bga, abg, gab = ["beta", "gamma", "alpha"], ["alpha", "beta", "gamma"], ["gamma", "alpha", "beta"]
    rels = [
        _rel(q, [(1, ["alpha", "alpha"]), (-a, bga * (k - 1) + ["beta", "gamma"]),
                 (-c, bga * k)], field),
        _rel(q, [(1, ["beta", "eta"]), (-1, abg * (k - 1) + ["alpha", "beta"])], field),
        _rel(q, [(1, ["eta", "gamma"]), (-1, gab * (k - 1) + ["gamma", "alpha"])], field),
        _rel(q, [(1, ["gamma", "beta"])] + ([(-1, ["eta"] * (s - 1))] if s > 1 else []), field),
        _rel(q, [(1, ["alpha", "alpha", "beta"])], field),
        _rel(q, [(1, ["gamma", "alpha", "alpha"])], field),
    ]
    r = _cube_root(a)
    notes, data = [], None
    if r is None:
        notes.append("a is not a rational cube; triangulation identification unverified")
    else:
        lam = c / (r * r)
        data = make_data(tq, {"alpha": k, "eta": s}, {"alpha": r ** k, "eta": 1}, {"alpha": lam})
    return FamilyInstance("Q(2B)_1^{%d,%d}(%s,%s)" % (k, s, a, c), q, tuple(rels), tq, data,
                          tuple(notes))


def q3k(a, b, c, d=1, field=QQ):
    """Q(3K)^{a,b,c}: printed relations plus triangulation data (d only for (1,2,2))."""
    d = Fraction(d)
    if not (a >= 1 and max(2, a) <= b <= c):
        raise ParamViolation("need 1 <= a and max(2, a) <= b <= c")
    if (a, b, c) == (1, 2, 2):
        if d in (0, 1):
            raise ParamViolation("d must differ from 0 and 1 when (a, b, c) = (1, 2, 2)")
    elif d != 1:
        raise ParamViolation("d = 1 unless (a, b, c) = (1, 2, 2)")
    rq = build_ribbon([("beta", 0, 1), ("gamma", 1, 0), ("delta", 1, 2), ("eta", 2, 1),
                       ("kappa", 0, 2), ("lambda", 2, 0)],
                      [["beta", "delta", "lambda"], ["kappa", "eta", "gamma"]])
    tq = TriangulationQuiver(rq.quiver, rq.f)
    q = tq.quiver
    kl, lk, gb, bg, ed, de = (["kappa", "lambda"], ["lambda", "kappa"], ["gamma", "beta"],
                              ["beta", "gamma"], ["eta", "delta"], ["delta", "eta"])
    rels = [
        _rel(q, [(1, ["beta", "delta"]), (-1, kl * (a - 1) + ["kappa"])], field),
        _rel(q, [(1, ["eta", "gamma"]), (-1, lk * (a - 1) + ["lambda"])], field),
        _rel(q, [(1, ["delta", "lambda"]), (-1, gb * (b - 1) + ["gamma"])], field),
        _rel(q, [(1, ["kappa", "eta"]), (-1, bg * (b - 1) + ["beta"])], field),
        _rel(q, [(1, ["lambda", "beta"]), (-d, ed * (c - 1) + ["eta"])], field),
        _rel(q, [(1, ["gamma", "kappa"]), (-d, de * (c - 1) + ["delta"])], field),
        _rel(q, [(1, ["lambda", "beta", "gamma"])], field),
        _rel(q, [(1, ["kappa", "eta", "delta"])], field),
    ]
    data = make_data(tq, {"kappa": a, "beta": b, "delta": c}, {"kappa": 1, "beta": 1, "delta": d})
    return FamilyInstance("Q(3K)^{%d,%d,%d}" % (a, b, c), q, tuple(rels), tq, data)


def q3a(k, field=QQ):
    """Q(3A)_3^k from its printed relations (k > 2)."""
    if k <= 2:
        raise ParamViolation("need k > 2")
    q = Quiver(3, [1, 0, 0, 2], [0, 1, 2, 0], ["beta", "gamma", "delta", "eta"])
    de, ed = ["delta", "eta"], ["eta", "delta"]
    rels = [
        _rel(q, [(1, ["beta", "delta", "eta"]), (-1, ["beta", "gamma", "beta"])], field),
        _rel(q, [(1, ["delta", "eta", "gamma"]), (-1, ["gamma", "beta", "gamma"])], field),
        _rel(q, [(1, ["eta", "gamma", "beta"]), (-1, ["eta", "delta", "eta"]),
                 (1, ed * (k - 1) + ["eta"])], field),
        _rel(q, [(1, ["gamma", "beta", "delta"]), (-1, ["delta", "eta", "delta"]),
                 (1, de * (k - 1) + ["delta"])], field),
        _rel(q, [(1, de * k + ["delta"])], field),
        _rel(q, [(1, ed * k + ["eta"])], field),
    ]
    return FamilyInstance("Q(3A)_3^{%d}" % k, q, tuple(rels))


def elliptic_a(qq, lam):
    """A_q(lambda) on the punctured monogon quiver."""
    lam = Fraction(lam)
    if qq < 1 or lam == 0:
        raise ParamViolation("need q >= 1 and lambda != 0")
    tq = quiver_2()
    data = make_data(tq, {"alpha": qq + 1, "beta": 1}, {"alpha": 1 / lam, "beta": 1})
    return FamilyInstance("A_%d(%s)" % (qq, lam), tq.quiver, (), tq, data)


def elliptic_b(p, qq, lam):
    """B_{p,q}(lambda) on quiver 3a."""
    lam = Fraction(lam)
    if p < 1 or qq < 1 or lam == 0:
        raise ParamViolation("need p, q >= 1 and lambda != 0")
    tq = quiver_3a()
    data = make_data(tq, {"alpha": p + 1, "beta": 1, "xi": qq + 1},
                     {"alpha": 1, "beta": 1, "xi": lam})
    return FamilyInstance("B_{%d,%d}(%s)" % (p, qq, lam), tq.quiver, (), tq, data)


def bga2cy(kind, m, field=QQ):
    """Representation-finite 2-CY-tilted symmetric families: 'loop', 'two_cycle', 'loop_two_cycle'."""
    if m < 1:
        raise ParamViolation("need m >= 1")
    if kind == "loop":
        q = Quiver(1, [0], [0], ["alpha"])
        rels = [_rel(q, [(1, ["alpha"] * (m + 1))], field)]
    elif kind == "two_cycle":
        q = Quiver(2, [0, 1], [1, 0], ["beta", "gamma"])
        rels = [_rel(q, [(1, ["gamma", "beta"] * m + ["gamma"])], field),
                _rel(q, [(1, ["beta", "gamma"] * m + ["beta"])], field)]
    elif kind == "loop_two_cycle":
        if m < 2:
            raise ParamViolation("need m >= 2")
        q = Quiver(2, [0, 0, 1], [0, 1, 0], ["alpha", "beta", "gamma"])
        rels = [_rel(q, [(1, ["beta", "gamma"]), (-1, ["alpha"] * m)], field),
                _rel(q, [(1, ["gamma", "alpha"])], field),
                _rel(q, [(1, ["alpha", "beta"])], field)]
    else:
        raise ParamViolation("unknown family %r" % kind)
    return FamilyInstance("BGA2CY-%s(%d)" % (kind, m), q, tuple(rels))


def brauer_star(n, m, field=QQ):
    """Symmetric Nakayama algebra on the n-cycle: all paths of length nm + 1 vanish."""
    if n < 1 or m < 1:
        raise ParamViolation("need n, m >= 1")
    q = Quiver(n, list(range(n)), [(i + 1) % n for i in range(n)],
               ["alpha%d" % i for i in range(n)])
    L = n * m + 1
    rels = [_pe(q, v, tuple((v + j) % n for j in range(L)), 1, field) for v in range(n)]
    return FamilyInstance("BrauerStar(%d,%d)" % (n, m), q, tuple(rels))


FAMILIES = {
    "q2b": q2b, "q3k": q3k, "q3a": q3a, "A": elliptic_a, "B": elliptic_b,
    "bga2cy": bga2cy, "brauer_star": brauer_star,
}


def family_constructor(name, *params, **kw):
    if name not in FAMILIES:
        raise ParamViolation("unknown family %r; known: %s" % (name, sorted(FAMILIES)))
    return FAMILIES[name](*params, **kw)


def printed_ideal(inst, N, field=QQ):
    return TruncatedIdeal(inst.quiver, [r.truncate(N) for r in inst.relations], N, field)


# ---------------------------------------------------------------------------
# non-degenerate potentials on one-g-cycle quivers

def check_condition_star(tq):
    if len(tq.g.cycles()) != 1 or any(len(c) != 3 for c in tq.f.cycles()):
        raise ConditionStarViolation("need a single g-cycle and all f-cycles of length 3")


def nondegenerate_family_W(tq, R, N, field=QQ):
    """W_R = -R(omega) + sum of f-triangles; R is a coefficient list, constant first."""
    tq = as_triangulation(tq)
    check_condition_star(tq)
    w = omega(tq, 0)
    terms = {}
    for k, r in enumerate(R):
        if k and r and k * len(w) <= N:
            terms[w * k] = terms.get(w * k, 0) - Fraction(r)
    for cyc in tq.f.cycles():
        terms[tuple(cyc)] = terms.get(tuple(cyc), 0) + 1
    return Potential(tq.quiver, N, terms, field)


def jacobian_ideal(W, N=None):
    N = N or W.N
    return TruncatedIdeal(W.quiver, [g.truncate(N) for g in jacobian_generators(W)], N, W.field)


def relations_text(rels):
    return [format_element(r) for r in rels]
