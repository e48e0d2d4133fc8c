import pytest

from quiverforge.errors import (
    InvalidMatching, NoTriangulationStructure, NotAdmissible, NotConnected, NotGInvariant,
    NotTriangulation,
)
from quiverforge.ribbon import Permutation, Quiver, are_isomorphic, build_ribbon
from quiverforge.triquiver import (
    Block, BlockDecomposition, TriangulationQuiver, all_triangulation_structures,
    block_decompose, compose_blocks, data_from_json, data_to_json,
    enumerate_triangulation_quivers, g_cycle_count_bound, is_admissible, is_exceptional,
    is_exceptional_structural, make_data, min_cycle_at_least_3, mutate,
    shortest_cycle_length, standard, structure_for_quiver,
)

NAMES = ["1", "2", "3a", "3b", "3'", "3''", "tetrahedron"]


def test_f_cubed_is_required():
    rq = build_ribbon([("a", 0, 0), ("b", 0, 0)], [["a", "b"]])
    with pytest.raises(NotTriangulation):
        TriangulationQuiver(rq.quiver, rq.f)


@pytest.mark.parametrize("name", NAMES)
def test_block_roundtrip(name):
    tq = standard(name)
    again = compose_blocks(block_decompose(tq))
    assert are_isomorphic(again, tq) is not None


def test_bad_matchings():
    with pytest.raises(InvalidMatching):
        compose_blocks(BlockDecomposition((Block("A", (0,)), Block("A", (1,))),
                                          Permutation([0, 1])))
    with pytest.raises(InvalidMatching):
        compose_blocks(BlockDecomposition((Block("C", (0, 1, 2)), Block("A", (3,))),
                                          Permutation([1, 0, 3, 2])))


def test_enumeration_counts_grow():
    counts = [len(enumerate_triangulation_quivers(n)) for n in range(1, 6)]
    assert counts[:3] == [1, 1, 4]
    assert all(x > 0 for x in counts)
    for n in range(1, 6):
        for tq in enumerate_triangulation_quivers(n):
            assert tq.n_vertices == n and tq.is_connected()
            assert g_cycle_count_bound(tq)[0] <= n


def test_structure_search():
    q = standard("3b").quiver
    tq = structure_for_quiver(q)
    assert tq.quiver == q
    assert all(t.quiver == q for t in all_triangulation_structures(q))
    # one loop at each vertex plus a 2-cycle carries a structure
    assert list(all_triangulation_structures(Quiver(2, [0, 0, 1, 1], [0, 1, 0, 1])))
    # a double 2-cycle does not: every choice of f has a 2-cycle
    with pytest.raises(NoTriangulationStructure):
        structure_for_quiver(Quiver(2, [0, 0, 1, 1], [1, 1, 0, 0]))


def test_predicates():
    assert shortest_cycle_length(standard("3b").quiver) == 2
    assert shortest_cycle_length(standard("3''").quiver) == 3
    assert min_cycle_at_least_3(standard("3''"))
    assert not min_cycle_at_least_3(standard("2"))
    assert g_cycle_count_bound(standard("3''")) == (1, False)
    disconnected = compose_blocks(BlockDecomposition(
        (Block("A", (0,)), Block("A", (1,)), Block("A", (2,)), Block("A", (3,))),
        Permutation([1, 0, 3, 2])))
    with pytest.raises(NotConnected):
        g_cycle_count_bound(disconnected)


def test_admissible_and_exceptional():
    tq = standard("2")
    m = make_data(tq, {"alpha": 3, "beta": 1}).m
    assert is_admissible(tq, m) and is_exceptional(tq, m)
    assert is_exceptional_structural(tq, m)
    bad = make_data(tq, {"alpha": 2, "beta": 1}).m
    assert not is_admissible(tq, bad)
    with pytest.raises(NotAdmissible):
        is_exceptional(tq, bad)
    t = standard("tetrahedron")
    assert is_exceptional(t, make_data(t, 1).m) and is_exceptional_structural(t, make_data(t, 1).m)
    assert not is_exceptional(standard("1"), make_data(standard("1"), 2).m)


def test_data_validation_and_json():
    tq = standard("3a")
    with pytest.raises(NotGInvariant):
        make_data(tq, [1, 2, 3, 4, 5, 6])
    with pytest.raises(NotGInvariant):
        make_data(tq, 2, 0)
    with pytest.raises(NotGInvariant):
        make_data(tq, 2, lam={"beta": 1})
    d = make_data(tq, {"alpha": 3, "beta": 1, "xi": 4}, {"alpha": "1/2"})
    assert data_from_json(tq, data_to_json(tq, d)) == d


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mutation_involution_and_data(n):
    for tq in enumerate_triangulation_quivers(n):
        # distinct multiplicities per g-cycle, so transport is actually tested
        data = make_data(tq, {cyc[0]: 3 + i for i, cyc in enumerate(tq.g.cycles())})
        per_cycle = sorted(data.m[c[0]] for c in tq.g.cycles())
        for k in range(n):
            m1, d1 = mutate(tq, k, data)
            m2, d2 = mutate(m1, k, d1)
            assert are_isomorphic(m2, tq, d2.m, data.m) is not None
            assert sorted(d1.m[c[0]] for c in m1.g.cycles()) == per_cycle
            assert m1.f.cycle_type() == tq.f.cycle_type()


def test_mutation_of_3b_gives_3a():
    for k in range(3):
        assert are_isomorphic(mutate(standard("3b"), k)[0], standard("3a")) is not None
