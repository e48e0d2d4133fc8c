import random

import pytest

from quiverforge import algebras as alg
from quiverforge.errors import (
    ConditionStarViolation, Exceptional, ExceptionalScalarViolation, NotAdmissible,
    ParamViolation, StabilizationFailure, Undefined,
)
from quiverforge.pathalg import TruncatedIdeal, hyperpotential_from_data, parse_element
from quiverforge.triquiver import make_data, standard

CASES = [("1", 2), ("1", 3), ("2", {"alpha": 4, "beta": 1}), ("2", {"alpha": 3, "beta": 2}),
         ("3a", {"alpha": 3, "beta": 1, "xi": 4}), ("3b", 2), ("3''", 1)]


def presentation(name, m, c=1, lam=None):
    tq = standard(name)
    return alg.triangulation_presentation(tq, make_data(tq, m, c, lam))


@pytest.mark.parametrize("name,m", CASES + [("3'", 1), ("tetrahedron", 2)])
def test_brauer_graph_algebra(name, m):
    tq = standard(name)
    data = make_data(tq, m)
    p = alg.brauer_presentation(tq, data)
    assert alg.bga_dimension(p) == alg.data_dimension(tq, data) == len(alg.bga_basis(p))
    N = alg.default_truncation(tq, data) + 2
    I = TruncatedIdeal(tq.quiver, [r.truncate(N) for r in p.relations()], N)
    assert I.stabilized() and I.dimension() == alg.bga_dimension(p)
    assert alg.cartan_of_ideal(I).matrix == alg.bga_cartan(p).matrix


def test_cartan_sum_of_entries_is_dimension():
    tq = standard("2")
    data = make_data(tq, {"alpha": 2, "beta": 1})
    C = alg.cartan_from_data(tq, data)
    assert [list(r) for r in C.matrix] == [[3, 2], [2, 4]]
    assert sum(map(sum, C.matrix)) == C.dimension == 11
    assert sum(C.matrix[i][i] for i in range(2)) != C.dimension


@pytest.mark.parametrize("name,m", CASES)
def test_triangulation_algebra_checks(name, m):
    p = presentation(name, m)
    spec = alg.verify_finite_dimensional(p)
    assert all(spec.checks.values()), spec.checks
    assert spec.dimension == alg.data_dimension(p.tq, p.data)
    assert alg.tri_cartan(p).matrix == alg.cartan_of_ideal(alg.triangulation_ideal(p)).matrix


@pytest.mark.parametrize("name,m", CASES)
def test_hyperpotential_reproduces_generators(name, m):
    rng = random.Random(7)
    tq = standard(name)
    c = {cyc[0]: rng.randint(1, 5) for cyc in tq.g.cycles()}
    lam = {a: rng.randint(0, 3) for a in tq.f.fixed_points()}
    data = make_data(tq, m, c, lam)
    p = alg.triangulation_presentation(tq, data)
    N = alg.default_truncation(tq, data)
    pp = {a: ([1] if tq.f(a) != a else [0, 0, 1, -data.lam[a]]) for a in range(tq.n_arrows)}
    qq = {a: [0] * (data.m[a] - 1) + [data.c[a]] for a in range(tq.n_arrows)}
    rho = hyperpotential_from_data(tq, pp, qq, N)
    for a in range(tq.n_arrows):
        assert rho[a] == p.generators[tq.g(a)].truncate(N)


def test_exceptional_scalars():
    tq = standard("2")
    with pytest.raises(ExceptionalScalarViolation):
        alg.triangulation_presentation(tq, make_data(tq, {"alpha": 3, "beta": 1}))
    p = alg.triangulation_presentation(tq, make_data(tq, {"alpha": 3, "beta": 1}),
                                       allow_violation=True)
    assert not p.scalars_ok and not p.extended
    p = presentation("2", {"alpha": 3, "beta": 1}, {"alpha": 2})
    assert p.exceptional and p.scalars_ok
    assert alg.verify_finite_dimensional(p).dimension == 12
    p = presentation("2", {"alpha": 3, "beta": 1}, {"alpha": 2}, {"eta": 1})
    assert p.notes
    t = standard("tetrahedron")
    with pytest.raises(ExceptionalScalarViolation):
        alg.triangulation_presentation(t, make_data(t, 1))


def test_undefined_and_not_admissible():
    with pytest.raises(Undefined):
        presentation("2", {"alpha": 1, "beta": 1})
    p = presentation("2", {"alpha": 2, "beta": 1})
    assert not p.admissible
    with pytest.raises(NotAdmissible):
        alg.degeneration_family(p, 0)


def test_degeneration_exponents_example():
    tq = standard("1")
    big, e, e1 = alg.degeneration_exponents(tq, make_data(tq, 2))
    assert big == 4
    assert set(e.values()) == {1} and set(e1.values()) == {2}


def test_degeneration_refuses_exceptional():
    p = presentation("2", {"alpha": 3, "beta": 1}, {"alpha": 2})
    with pytest.raises(Exceptional):
        alg.degeneration_family(p, 1)


def test_degeneration_dimension_constant():
    p = presentation("1", 2, 1, {"alpha": 1, "beta": 1})
    N = alg.default_truncation(p.tq, p.data) + 2
    dims = set()
    for t in (0, 1, 3):
        rels = [r.truncate(N) for r in alg.degeneration_family(p, t)]
        dims.add(TruncatedIdeal(p.tq.quiver, rels, N).dimension())
    assert dims == {8}


def test_family_parameter_checks():
    with pytest.raises(ParamViolation):
        alg.q2b(1, 3, 1, 2)
    with pytest.raises(ParamViolation):
        alg.q2b(1, 1, 2, 2)
    with pytest.raises(ParamViolation):
        alg.q3k(1, 2, 2, 1)
    with pytest.raises(ParamViolation):
        alg.q3k(2, 3, 4, 5)
    with pytest.raises(ParamViolation):
        alg.q3a(2)
    with pytest.raises(ParamViolation):
        alg.bga2cy("loop_two_cycle", 1)
    with pytest.raises(ParamViolation):
        alg.family_constructor("nope")


def test_q2b_needs_rational_cube():
    inst = alg.q2b(2, 3, 2, 1)
    assert inst.data is None and inst.notes
    with pytest.raises(ParamViolation):
        inst.presentation()


@pytest.mark.parametrize("kind,m,dim", [("loop", 3, 4), ("two_cycle", 2, 10),
                                        ("loop_two_cycle", 3, 8)])
def test_bga2cy_dimensions(kind, m, dim):
    I = alg.printed_ideal(alg.bga2cy(kind, m), 4 * m + 4)
    assert I.stabilized() and I.dimension() == dim


def test_brauer_star_dimension():
    for n, m in ((1, 1), (2, 1), (2, 2), (3, 1)):
        I = alg.printed_ideal(alg.brauer_star(n, m), n * m + 4)
        assert I.dimension() == n * (n * m + 1)


def test_markov_potentials():
    tq = standard("3''")
    for k, dim in ((1, 36), (2, 72), (3, 108)):
        W = alg.nondegenerate_family_W(tq, [0] * k + [1], 12 * k + 3)
        I = alg.jacobian_ideal(W)
        assert I.stabilized() and I.dimension() == dim
    W0 = alg.nondegenerate_family_W(tq, [0], 15)
    assert not alg.jacobian_ideal(W0).stabilized()
    with pytest.raises(StabilizationFailure):
        alg.fd_algebra_from_ideal(alg.jacobian_ideal(W0))
    with pytest.raises(ConditionStarViolation):
        alg.nondegenerate_family_W(standard("2"), [0, 1], 10)


def test_one_vertex_relation():
    p = presentation("1", 3)
    I = alg.triangulation_ideal(p, 15)
    assert I.contains(parse_element(p.tq.quiver, "alpha.alpha.beta", 15))
    assert I.dimension() == 12


def test_spec_json_shape():
    spec = alg.verify_finite_dimensional(presentation("1", 2))
    d = spec.to_json()
    assert len(d["basis"]) == 8 and d["basis"][0] == "e_0"
    assert all(d["checks"].values())


def test_degeneration_zero_exponent_is_not_brauer():
    # quiver 2, m = (4, 1): eta is f-fixed with m n = 3, so N e_eta = 0
    p = presentation("2", {"alpha": 4, "beta": 1})
    assert alg.degeneration_exponents(p.tq, p.data)[1][2] == 0
    q = p.tq.quiver
    eta2 = parse_element(q, "eta.eta", 2)
    lam0 = TruncatedIdeal(q, [r.truncate(2) for r in alg.degeneration_family(p, 0)], 2)
    bga = TruncatedIdeal(q, [r.truncate(2) for r in alg.brauer_presentation(p.tq, p.data).relations()], 2)
    # eta^2 survives modulo rad^3 at t = 0 but vanishes in the Brauer graph algebra
    assert not lam0.contains(eta2) and bga.contains(eta2)
