import pytest

from rigidpack import (
    GraphInputError,
    Multigraph,
    Partition,
    adjacent_number,
    cross_edge_count,
    format_graph,
    induced_edge_count,
    parse_graph,
    random_multigraph,
)

import corpus


def test_loops_rejected():
    with pytest.raises(GraphInputError):
        Multigraph(3, ((0, 0),))


def test_out_of_range_endpoint_rejected():
    with pytest.raises(GraphInputError):
        Multigraph(3, ((0, 3),))


def test_edges_normalized_and_ids_stable():
    G = Multigraph(3, ((2, 0), (1, 0)))
    assert G.edges == ((0, 2), (0, 1))
    assert G.endpoints(1) == (0, 1)


def test_multiplicity():
    assert corpus.triangle().multiplicity() == 1
    assert corpus.double_edge().multiplicity() == 2
    assert Multigraph(2).multiplicity() == 0


def test_induced_edge_count_examples():
    tri = corpus.triangle()
    assert induced_edge_count(tri, {0, 1, 2}) == 3
    assert induced_edge_count(tri, {0, 1}) == 1
    assert induced_edge_count(corpus.double_edge(), {0, 1}) == 2


def test_induced_edge_count_rejects_bad_vertex():
    with pytest.raises(GraphInputError):
        induced_edge_count(corpus.triangle(), {0, 7})


def test_cross_edge_count_examples():
    tri = corpus.triangle()
    singletons = Partition((frozenset({0}), frozenset({1}), frozenset({2})))
    assert cross_edge_count(tri, singletons) == 3
    halves = Partition((frozenset({0, 1}), frozenset({2, 3})))
    assert cross_edge_count(corpus.k4(), halves) == 4
    p3 = corpus.path(3)
    assert cross_edge_count(p3, Partition((frozenset({0, 2}), frozenset({1})))) == 2


def test_overlapping_blocks_rejected():
    with pytest.raises(GraphInputError):
        Partition((frozenset({0, 1}), frozenset({1, 2})))


def test_empty_block_rejected():
    with pytest.raises(GraphInputError):
        Partition((frozenset(),))


def test_trivial_count():
    pi = Partition((frozenset({0, 1}), frozenset({2}), frozenset({3})))
    assert pi.trivial_count == 2
    assert len(pi) == 3
    assert pi.ground == frozenset({0, 1, 2, 3})


def test_adjacent_number_star():
    G = corpus.star(3)  # centre 0, leaves 1..3
    singles = Partition((frozenset({1}), frozenset({2}), frozenset({3})))
    assert adjacent_number(G, {0}, singles) == 3
    merged = Partition((frozenset({1, 2, 3}),))
    assert adjacent_number(G, {0}, merged) == 1


def test_adjacent_number_triangle():
    tri = corpus.triangle()
    pi = Partition((frozenset({0}), frozenset({1})))
    assert adjacent_number(tri, {2}, pi) == 2


def test_adjacent_number_parallel_edges_count_once():
    G = Multigraph(3, ((0, 1), (0, 1), (0, 2)))
    pi = Partition((frozenset({1}), frozenset({2})))
    assert adjacent_number(G, {0}, pi) == 2


def test_adjacent_number_rejects_overlap():
    tri = corpus.triangle()
    with pytest.raises(GraphInputError):
        adjacent_number(tri, {0}, Partition((frozenset({0}), frozenset({1, 2}))))
    with pytest.raises(GraphInputError):
        adjacent_number(tri, {0}, Partition((frozenset({1}),)))


def test_adjacent_number_monotone_under_refinement():
    # Merging two blocks of any partition can only lower the adjacent number.
    from rigidpack.enumeration import enumerate_partitions

    for G in corpus.random_corpus(15, seed=5, n_range=(3, 5)):
        Z = frozenset({0})
        rest = set(range(G.n)) - Z
        for pi in enumerate_partitions(rest):
            if len(pi) < 2:
                continue
            fine = adjacent_number(G, Z, pi)
            merged = Partition((pi.blocks[0] | pi.blocks[1],) + pi.blocks[2:])
            assert fine >= adjacent_number(G, Z, merged)


def test_induced_count_bounded_by_multiplicity():
    from math import comb

    from rigidpack.enumeration import enumerate_vertex_subsets

    for G in corpus.random_corpus(20, seed=7, n_range=(2, 5), mult_max=3):
        mult = G.multiplicity()
        for X in enumerate_vertex_subsets(G, 0):
            assert 0 <= induced_edge_count(G, X) <= mult * comb(len(X), 2)


def test_cross_plus_induced_identity():
    from rigidpack.enumeration import enumerate_partitions

    for G in corpus.random_corpus(20, seed=6, n_range=(2, 5)):
        for pi in enumerate_partitions(G.vertices()):
            inside = sum(induced_edge_count(G, b) for b in pi)
            assert cross_edge_count(G, pi) + inside == G.m
        # partitions of a proper subset: edges leaving the ground are ignored
        if G.n >= 3:
            ground = set(range(G.n - 1))
            for pi in enumerate_partitions(ground):
                inside = sum(induced_edge_count(G, b) for b in pi)
                assert cross_edge_count(G, pi) + inside == induced_edge_count(G, ground)


def test_random_multigraph_deterministic():
    a = random_multigraph(5, 8, 2, seed=42)
    b = random_multigraph(5, 8, 2, seed=42)
    assert a == b
    assert a.m == 8 and a.multiplicity() <= 2


def test_random_multigraph_forced_k4():
    G = random_multigraph(4, 6, 1, seed=7)
    assert sorted(G.edges) == sorted(corpus.k4().edges)


def test_random_multigraph_infeasible():
    with pytest.raises(GraphInputError):
        random_multigraph(2, 3, 2, seed=1)


def test_parse_and_format_round_trip():
    text = "4 3\n0 1\n1 2\n3 2\n"
    G = parse_graph(text)
    assert G.n == 4 and G.m == 3
    assert parse_graph(format_graph(G)) == G


@pytest.mark.parametrize(
    "bad,fragment",
    [
        ("", "line 1"),
        ("2\n", "header"),
        ("2 1\n", "1 edges"),
        ("2 1\n0 0\n", "loops"),
        ("2 1\n0 5\n", "out of range"),
        ("2 1\n0 x\n", "integer"),
    ],
)
def test_parse_errors_carry_line_info(bad, fragment):
    with pytest.raises(GraphInputError) as exc:
        parse_graph(bad)
    assert fragment in str(exc.value)
