"""The twelve acceptance criteria, one test each.

Each test prints a single PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  Run ``python tests/test_acceptance.py`` for the lines alone.
"""

import itertools
import os
import random
import sys

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_report import run_criterion  # noqa: E402

from quiverforge import algebras as alg  # noqa: E402
from quiverforge import modcat, surface  # noqa: E402
from quiverforge.errors import NotFlippable  # noqa: E402
from quiverforge.pathalg import (  # noqa: E402
    Potential, TruncatedElement, TruncatedIdeal, cyclic_derivative, invert_substitution,
    jacobian_generators, parse_element, substitute,
)
from quiverforge.ribbon import Quiver, are_isomorphic  # noqa: E402
from quiverforge.triquiver import (  # noqa: E402
    brute_force_triangulation_quivers, enumerate_triangulation_quivers, is_self_dual,
    make_data, mutate, standard, tetrahedron, quiver_2,
)


def _fd(I):
    return modcat.FDAlgebra(alg.fd_algebra_from_ideal(I))


def _verified(name, m, c=1, lam=None):
    tq = standard(name)
    p = alg.triangulation_presentation(tq, make_data(tq, m, c, lam))
    return p, alg.verify_finite_dimensional(p)


def _symmetric(A):
    form = modcat.symmetrizing_form(A)
    return form is not None and modcat.check_symmetrizing(A, form)


# 1 -------------------------------------------------------------------------

def test_criterion_01_enumeration():
    def body():
        counts = [len(enumerate_triangulation_quivers(n)) for n in (1, 2, 3)]
        assert counts == [1, 1, 4], counts
        listed = [q for n in (1, 2, 3) for q in enumerate_triangulation_quivers(n)]
        for name in ("1", "2", "3a", "3b", "3'", "3''"):
            assert sum(are_isomorphic(standard(name), q) is not None for q in listed) == 1, name
        for n in (1, 2, 3):
            fast = enumerate_triangulation_quivers(n)
            brute = brute_force_triangulation_quivers(n)
            assert len(fast) == len(brute)
            assert all(any(are_isomorphic(a, b) for b in brute) for a in fast)
    run_criterion(1, "enumeration counts 1, 1, 4 and brute-force agreement", body, 10)


# 2 -------------------------------------------------------------------------

def test_criterion_02_self_duality():
    def body():
        found = [q for n in range(1, 7) for q in enumerate_triangulation_quivers(n)
                 if q.is_connected() and is_self_dual(q)]
        assert len(found) == 2, len(found)
        assert any(are_isomorphic(q, quiver_2()) for q in found)
        assert any(are_isomorphic(q, tetrahedron()) for q in found)
    run_criterion(2, "exactly two self-dual quivers up to 6 vertices", body, 60)


# 3 -------------------------------------------------------------------------

def _random_admissible(name, rng):
    if name == "1":
        return rng.randint(2, 4)
    if name == "2":
        while True:
            m = {"alpha": rng.randint(3, 5), "beta": rng.randint(1, 2)}
            if (m["alpha"], m["beta"]) != (3, 1):
                return m
    if name == "3a":
        return {"alpha": rng.randint(3, 4), "beta": rng.randint(1, 2), "xi": rng.randint(3, 4)}
    return {"alpha1": rng.randint(2, 3), "alpha2": rng.randint(2, 3), "alpha3": rng.randint(2, 3)}


def _det_formula(tq, data):
    prod = 4
    for cyc in tq.g.cycles():
        prod *= data.m[cyc[0]]
    return prod


def test_criterion_03_cartan_dimension():
    def body():
        rng = random.Random(3)
        for name in ("1", "2", "3a", "3b"):
            for _ in range(3):
                tq = standard(name)
                data = make_data(tq, _random_admissible(name, rng))
                p = alg.triangulation_presentation(tq, data)
                cart = alg.tri_cartan(p)
                assert cart.det == _det_formula(tq, data)
                spec = alg.verify_finite_dimensional(p)
                dim = alg.data_dimension(tq, data)
                assert len(alg.prop_basis(tq, data)) == dim
                assert spec.dimension == dim and all(spec.checks.values()), spec.checks
                A = modcat.FDAlgebra(spec)
                assert sum(map(sum, modcat.cartan_counts(A))) == dim
                assert modcat.cartan_cross_check(A, cart)
    run_criterion(3, "det C = 4 prod m and dim = sum m|w|^2 on quivers 1, 2, 3a, 3b", body, 10)


# 4 -------------------------------------------------------------------------

def test_criterion_04_one_vertex():
    def body():
        tq = standard("1")
        for m in (2, 3, 4):
            p = alg.triangulation_presentation(tq, make_data(tq, m))
            N = 4 * m + 3
            I = alg.triangulation_ideal(p, N)
            x = parse_element(tq.quiver, "alpha.alpha.beta", N)
            assert I.contains(x)
            assert I.stabilized() and I.dimension() == 4 * m
    run_criterion(4, "one-vertex algebra: alpha^2 beta in the ideal, dimension 4m", body, 60)


# 5 -------------------------------------------------------------------------

def test_criterion_05_markov():
    def body():
        tq = standard("3''")
        for m in (1, 2):
            p, spec = _verified("3''", m)
            assert spec.dimension == 36 * m and all(spec.checks.values())
            assert alg.tri_cartan(p).det == 0
            W = alg.nondegenerate_family_W(tq, [0] * m + [1], 12 * m + 3)
            I = alg.jacobian_ideal(W)
            assert I.stabilized() and I.dimension() == 36 * m
    run_criterion(5, "Markov quiver: dimensions 36 and 72, det C = 0", body, 300)


# 6 -------------------------------------------------------------------------

def _three_cycle():
    return Quiver(3, [0, 1, 2], [1, 2, 0], ["alpha", "beta", "gamma"])


def test_criterion_06_qp_example():
    def body():
        q = _three_cycle()
        N = 12
        W = Potential(q, N, {(0, 1, 2): 1, (0, 1, 2, 0, 1, 2): -1})
        assert cyclic_derivative(W, 2) == parse_element(q, "alpha.beta - 2 * alpha.beta.gamma.alpha.beta", N)
        I = TruncatedIdeal(q, jacobian_generators(W), N)
        for s in ("alpha.beta", "beta.gamma", "gamma.alpha"):
            assert I.contains(parse_element(q, s, N))
        assert I.stabilized() and I.dimension() == 6
        phi = {0: parse_element(q, "alpha - alpha.beta.gamma.alpha", 13)}
        psi = invert_substitution(phi, q, 13)
        coeffs = [psi[0].coefficient((0, (0, 1, 2) * k + (0,))) for k in range(5)]
        assert coeffs == [1, 1, 2, 5, 14], coeffs
        assert substitute(psi, substitute(phi, TruncatedElement.arrow(q, 0, 13))) == \
            TruncatedElement.arrow(q, 0, 13)
    run_criterion(6, "quiver with potential example and Catalan inverse", body, 10)


# 7 -------------------------------------------------------------------------

def _mutual(gens_a, gens_b, q, N, field):
    Ia = TruncatedIdeal(q, [g.truncate(N) for g in gens_a], N, field)
    Ib = TruncatedIdeal(q, [g.truncate(N) for g in gens_b], N, field)
    return (all(Ib.contains(g.truncate(N)) for g in gens_a)
            and all(Ia.contains(g.truncate(N)) for g in gens_b)), Ia, Ib


# cases with every exponent N e_a positive
DEGENERATION_CASES = (("1", 2), ("2", {"alpha": 3, "beta": 2}), ("3b", 2))
# quiver 2 with m = (4, 1) is not exceptional, yet its f-fixed arrow eta has
# m n = 3 and so exponent 0.  The t = 0 member keeps eta.eta = gamma.beta, which
# is nonzero modulo rad^3, while eta.eta = 0 in the Brauer graph algebra.  The
# two are therefore not isomorphic and the t = 0 check below fails for this case.
DEGENERATION_REQUIRED = DEGENERATION_CASES + (("2", {"alpha": 4, "beta": 1}),)


def test_criterion_07_degeneration():
    def body():
        failed = []
        for name, m in DEGENERATION_REQUIRED:
            tq = standard(name)
            data = make_data(tq, m)
            p = alg.triangulation_presentation(tq, data)
            N = alg.default_truncation(tq, data) + 2
            q = tq.quiver
            brauer = alg.brauer_presentation(tq, data).relations()
            same, I0, Ib = _mutual(alg.degeneration_family(p, 0), brauer, q, N, p.field)
            if not (same and I0.stabilized() and I0.normal_words() == Ib.normal_words()):
                failed.append((name, m))
            same, I1, J = _mutual(alg.degeneration_family(p, 1), p.generators, q, N, p.field)
            assert same and I1.dimension() == J.dimension()
            for t in (2, 3):
                It = TruncatedIdeal(q, [r.truncate(N) for r in alg.degeneration_family(p, t)], N)
                phi = alg.degeneration_rescaling(p, t)
                phi = {a: x.truncate(N) for a, x in phi.items()}
                back = {a: x.truncate(N).scale(1 / (x.coefficient((q.source[a], (a,))) ** 2))
                        for a, x in phi.items()}
                assert all(It.contains(substitute(phi, r.truncate(N)))
                           for r in alg.degeneration_family(p, 1))
                assert all(I1.contains(substitute(back, r.truncate(N)))
                           for r in alg.degeneration_family(p, t))
                assert It.dimension() == I1.dimension()
        assert not failed, "t = 0 is not the Brauer graph algebra for %s" % failed
    run_criterion(7, "degeneration family at t = 0, 1 and rescaling for t = 2, 3", body)


# 8 -------------------------------------------------------------------------

def _kxn_modules(n):
    inst = alg.bga2cy("loop", n - 1)
    A = _fd(alg.printed_ideal(inst, n + 3))
    P = modcat.projective(A, 0)
    mods = []
    for i in range(1, n):
        k = A.basis.index((0, (0,) * i))
        mods.append(modcat.submodule(P, [[1 if j == k else 0 for j in range(A.n)]])[0])
    return A, mods


def test_criterion_08_periodicity():
    def body():
        for n in range(2, 7):
            A, mods = _kxn_modules(n)
            for i, M in enumerate(mods, start=1):
                O = modcat.syzygy(A, M)
                assert O.dim == i
                assert modcat.modules_isomorphic(modcat.syzygy(A, O), M)
        for n, m in ((1, 1), (2, 1), (2, 2), (3, 1)):
            A = _fd(alg.printed_ideal(alg.brauer_star(n, m), n * m + 4))
            want = 1 if (n, m) == (1, 1) else 2 * n
            for S in modcat.simples(A):
                assert modcat.omega_period(A, S, 2 * n + 1) == want
        for name, m in (("1", 2), ("2", {"alpha": 4, "beta": 1}), ("3b", 2), ("3''", 1)):
            _, spec = _verified(name, m)
            A = modcat.FDAlgebra(spec)
            for S in modcat.simples(A):
                assert modcat.modules_isomorphic(modcat.syzygy_power(A, S, 4), S)
    run_criterion(8, "syzygy periodicity over K[x]/(x^n), Brauer stars, triangulation algebras",
                  body, 300)


# 9 -------------------------------------------------------------------------

def test_criterion_09_symmetry():
    def body():
        rng = random.Random(9)
        algebras = []
        for name in ("1", "2", "3a", "3b"):
            for _ in range(3):
                algebras.append(_verified(name, _random_admissible(name, rng))[1])
        for m in (2, 3, 4):
            algebras.append(_verified("1", m)[1])
        for m in (1, 2):
            algebras.append(_verified("3''", m)[1])
        algebras.append(_verified("2", {"alpha": 4, "beta": 1})[1])
        algebras.append(_verified("3b", 2)[1])
        specs = [modcat.FDAlgebra(s) for s in algebras]
        for n in range(2, 7):
            specs.append(_kxn_modules(n)[0])
        for n, m in ((1, 1), (2, 1), (2, 2), (3, 1)):
            specs.append(_fd(alg.printed_ideal(alg.brauer_star(n, m), n * m + 4)))
        for name, m in DEGENERATION_REQUIRED:
            tq = standard(name)
            data = make_data(tq, m)
            p = alg.triangulation_presentation(tq, data)
            N = alg.default_truncation(tq, data) + 2
            for t in (0, 1, 2, 3):
                rels = [r.truncate(N) for r in alg.degeneration_family(p, t)]
                specs.append(_fd(TruncatedIdeal(tq.quiver, rels, N)))
            bp = alg.brauer_presentation(tq, data)
            specs.append(_fd(TruncatedIdeal(tq.quiver, [r.truncate(N) for r in bp.relations()], N)))
        for A in specs:
            assert _symmetric(A), A.basis[:4]
    run_criterion(9, "symmetrizing forms on the Brauer graph and triangulation instances", body)


# 10 ------------------------------------------------------------------------

def test_criterion_10_mutation_flip():
    def body():
        for n in range(1, 5):
            for tq in enumerate_triangulation_quivers(n):
                for k in range(n):
                    m1, _ = mutate(tq, k)
                    m2, _ = mutate(m1, k)
                    assert are_isomorphic(m2, tq) is not None
                    assert m1.f.cycle_type() == tq.f.cycle_type()
                    assert len(m1.g.cycles()) == len(tq.g.cycles())
        for k in range(3):
            assert are_isomorphic(mutate(standard("3b"), k)[0], standard("3a")) is not None
        for t in (surface.square(), surface.once_punctured_torus()):
            q = surface.quiver_from_triangulation(t)
            for arc in range(len(t.glue)):
                flipped = surface.quiver_from_triangulation(surface.flip(t, arc))
                assert are_isomorphic(flipped, mutate(q, arc)[0]) is not None
        try:
            surface.flip(surface.punctured_monogon(), 0)
            raise AssertionError("self-folded arc was flipped")
        except NotFlippable:
            pass
    run_criterion(10, "mutation involution, cycle data, and flip = mutation", body, 60)


# 11 ------------------------------------------------------------------------

def surface_corpus():
    hand = [surface.square(), surface.punctured_monogon(), surface.unpunctured_monogon(),
            surface.triangle(), surface.once_punctured_torus(),
            surface.thrice_punctured_sphere(), surface.tetrahedron_sphere(),
            surface.polygon(5), surface.polygon(6)]
    derived = [surface.triangulation_from_quiver(q)
               for n in range(1, 7) for q in enumerate_triangulation_quivers(n) if q.is_connected()]
    return hand + derived


def test_criterion_11_surface_roundtrip():
    def body():
        corpus = surface_corpus()
        assert len(corpus) >= 10
        seen_g, seen_b, seen_p = set(), set(), set()
        for t in corpus:
            surf = surface.surface_of_triangulation(t)
            q = surface.quiver_from_triangulation(t)
            assert q.n_vertices == surf.vertex_count()
            assert surface.recover_surface(q) == surf
            seen_g.add(surf.genus)
            seen_b.add(surf.b)
            seen_p.add(surf.punctures)
        assert {0, 1} <= seen_g and {0, 1, 2} <= seen_b and set(range(5)) <= seen_p, \
            (seen_g, seen_b, seen_p)
    run_criterion(11, "vertex-count formula and surface recovery on the corpus", body)


# 12 ------------------------------------------------------------------------

def _perm_equal(C, D):
    n = len(C)
    if n != len(D):
        return False
    return any(all(C[i][j] == D[s[i]][s[j]] for i in range(n) for j in range(n))
               for s in itertools.permutations(range(n)))


def test_criterion_12_families():
    def body():
        for inst in (alg.q2b(2, 3, 8, 1), alg.q2b(3, 3, 1, 2), alg.q2b(1, 4, 27, 5),
                     alg.q3k(2, 2, 2), alg.q3k(2, 3, 4), alg.q3k(3, 3, 3)):
            p = inst.presentation()
            spec = alg.verify_finite_dimensional(p)
            assert all(spec.checks.values()), spec.checks
            I = alg.printed_ideal(inst, alg.default_truncation(p.tq, p.data) + 4)
            assert I.stabilized() and I.dimension() == spec.dimension
            assert alg.cartan_of_ideal(I).matrix == alg.tri_cartan(p).matrix
        new = alg.printed_ideal(alg.q3a(3), 20)
        C = alg.cartan_of_ideal(new)
        for a, b, c in itertools.product(range(1, 7), repeat=3):
            if not (max(2, a) <= b <= c):
                continue
            other = alg.q3k(a, b, c, 2 if (a, b, c) == (1, 2, 2) else 1)
            D = alg.cartan_from_data(other.tq, other.data)
            assert not _perm_equal(C.matrix, D.matrix), (a, b, c)
    run_criterion(12, "Q(2B) and Q(3K) data match printed relations; Q(3A) Cartan is new", body)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                failed += 1
    sys.exit(1 if failed else 0)
