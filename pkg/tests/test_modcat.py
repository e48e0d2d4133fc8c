import random

import pytest

from quiverforge import algebras as alg
from quiverforge import modcat
from quiverforge.errors import InconclusiveOverSmallField
from quiverforge.field import GF
from quiverforge.pathalg import TruncatedIdeal, Potential, jacobian_generators
from quiverforge.ribbon import Quiver
from quiverforge.triquiver import make_data, standard


def fd(I):
    return modcat.FDAlgebra(alg.fd_algebra_from_ideal(I))


def truncated_polynomial(n, field=None):
    if field is None:
        return fd(alg.printed_ideal(alg.bga2cy("loop", n - 1), n + 3))
    return fd(alg.printed_ideal(alg.bga2cy("loop", n - 1, field), n + 3, field))


def tri_algebra(name, m, c=1):
    tq = standard(name)
    p = alg.triangulation_presentation(tq, make_data(tq, m, c))
    return modcat.FDAlgebra(alg.verify_finite_dimensional(p))


def uniserial(A, i):
    """x^i K[x]/(x^n) inside the regular module."""
    P = modcat.projective(A, 0)
    k = A.basis.index((0, (0,) * i))
    return modcat.submodule(P, [[int(j == k) for j in range(A.n)]])[0]


def test_algebra_structure():
    for A in (truncated_polynomial(4), tri_algebra("2", {"alpha": 4, "beta": 1})):
        assert A.check_associative(rng=random.Random(1))
        one = A.one()
        for k in range(A.n):
            e = A.unit_vector(k)
            assert A.product(one, e) == e == A.product(e, one)


def test_projectives_and_simples():
    A = tri_algebra("3b", 2)
    Ps = modcat.projectives(A)
    assert sum(P.dim for P in Ps) == A.n
    for P in Ps:
        assert len(modcat.top_vectors(P)) == 1
        cover, _ = modcat.projective_cover(A, P)
        assert modcat.modules_isomorphic(cover, P)
        assert modcat.syzygy(A, P).dim == 0
    S = modcat.simples(A)
    assert all(s.dim == 1 for s in S)
    assert not modcat.modules_isomorphic(S[0], S[1])


@pytest.mark.parametrize("n", range(2, 7))
def test_truncated_polynomial_syzygies(n):
    A = truncated_polynomial(n)
    for i in range(1, n):
        M = uniserial(A, i)
        assert M.dim == n - i
        O = modcat.syzygy(A, M)
        assert O.dim == i
        assert modcat.modules_isomorphic(modcat.syzygy(A, O), M)
        expected = 1 if 2 * i == n else 2
        assert modcat.omega_period(A, M, 4) == expected


def test_direct_sum_and_dims():
    A = truncated_polynomial(4)
    M = modcat.direct_sum([uniserial(A, 1), uniserial(A, 3)], A.field)
    assert M.dim == 4
    N = modcat.direct_sum([uniserial(A, 3), uniserial(A, 1)], A.field)
    assert modcat.modules_isomorphic(M, N)
    assert not modcat.modules_isomorphic(M, modcat.direct_sum([uniserial(A, 2)] * 2, A.field))


@pytest.mark.parametrize("name,m", [("1", 2), ("2", {"alpha": 4, "beta": 1}), ("3b", 2)])
def test_simples_have_period_four(name, m):
    A = tri_algebra(name, m)
    for S in modcat.simples(A):
        assert modcat.omega_period(A, S, 4) == 4
        dims = modcat.omega_orbit_dims(A, S, 4)
        assert dims[0] == dims[4]


def test_inconclusive_over_small_field():
    A = truncated_polynomial(2, GF(2))
    P, S = modcat.projective(A, 0), modcat.simple(A, 0)
    M = modcat.direct_sum([P] * 8, A.field)
    N = modcat.direct_sum([S] * 16, A.field)
    with pytest.raises(InconclusiveOverSmallField):
        modcat.modules_isomorphic(M, N)


def test_prime_field_isomorphism():
    A = truncated_polynomial(3, GF(3))
    M = uniserial(A, 1)
    assert modcat.modules_isomorphic(modcat.syzygy(A, modcat.syzygy(A, M)), M)
    assert not modcat.modules_isomorphic(M, modcat.direct_sum(modcat.simples(A) * 2, A.field))


@pytest.mark.parametrize("name,m", [("1", 3), ("3a", {"alpha": 3, "beta": 1, "xi": 3}),
                                    ("3''", 1)])
def test_symmetrizing_forms(name, m):
    A = tri_algebra(name, m, 1)
    form = modcat.symmetrizing_form(A)
    assert form is not None and modcat.check_symmetrizing(A, form)
    tq = standard(name)
    assert modcat.cartan_cross_check(A, alg.cartan_from_data(tq, make_data(tq, m)))


def test_non_symmetric_algebras():
    q = Quiver(2, [0], [1], ["a"])
    A2 = fd(TruncatedIdeal(q, [], 3))
    assert A2.n == 3 and modcat.symmetrizing_form(A2) is None
    q3 = Quiver(3, [0, 1, 2], [1, 2, 0], ["alpha", "beta", "gamma"])
    W = Potential(q3, 12, {(0, 1, 2): 1, (0, 1, 2, 0, 1, 2): -1})
    QP = fd(TruncatedIdeal(q3, jacobian_generators(W), 12))
    assert QP.n == 6 and modcat.symmetrizing_form(QP) is None


def test_module_json():
    A = truncated_polynomial(3)
    d = uniserial(A, 1).to_json(1)
    assert d["dim_vector"] == [2] and len(d["actions"]) == 1
