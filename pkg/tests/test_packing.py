import pytest

from rigidpack import (
    ConditionReport,
    GraphInputError,
    Packing,
    PackingFailure,
    check_necessary_condition,
    check_parthm_condition,
    pack_rigid_and_trees,
    pack_spanning_trees,
    verify_packing,
)

import corpus
import oracles


def test_tree_itself_is_its_packing():
    G = corpus.path(5)
    result = pack_spanning_trees(G, 1)
    assert isinstance(result, Packing)
    assert result.tree_parts == (frozenset(range(4)),)
    assert verify_packing(G, result) == (True, None)


def test_k4_two_spanning_trees():
    G = corpus.k4()
    result = pack_spanning_trees(G, 2)
    assert isinstance(result, Packing)
    assert len(result.tree_parts) == 2
    ok, reason = verify_packing(G, result)
    assert ok, reason


def test_cycle_cannot_pack_two_trees():
    result = pack_spanning_trees(corpus.cycle(4), 2)
    assert isinstance(result, ConditionReport)
    assert not result.holds
    pi = result.witness
    assert oracles.cross(corpus.cycle(4), [sorted(b) for b in pi]) < 2 * (len(pi) - 1)


def test_pack_triangle_single_rigid():
    G = corpus.triangle()
    result = pack_rigid_and_trees(G, 1, 0)
    assert isinstance(result, Packing)
    assert result.rigid_parts == (frozenset(range(3)),)
    assert verify_packing(G, result) == (True, None)


def test_pack_k5_spanning_minimally_rigid():
    G = corpus.k5()
    result = pack_rigid_and_trees(G, 1, 0)
    assert isinstance(result, Packing)
    (part,) = result.rigid_parts
    assert len(part) == 7  # 2*5 - 3
    ok, reason = verify_packing(G, result)
    assert ok, reason


def test_pack_bowtie_fails():
    result = pack_rigid_and_trees(corpus.bowtie(), 1, 0)
    assert isinstance(result, PackingFailure)
    assert result.achieved == 6 and result.target == 7


def test_pack_parameter_validation():
    with pytest.raises(GraphInputError):
        pack_rigid_and_trees(corpus.triangle(), 0, 1)
    with pytest.raises(GraphInputError):
        pack_spanning_trees(corpus.triangle(), 0)


def test_verify_packing_rejects_overlap_and_cycles():
    G = corpus.k4()
    packing = pack_spanning_trees(G, 2)
    assert isinstance(packing, Packing)
    t1, t2 = packing.tree_parts
    overlapping = Packing((), (t1, t1))
    ok, reason = verify_packing(G, overlapping)
    assert not ok and "two parts" in reason

    # n - 1 edges containing a cycle is not a spanning tree
    cyclic = Packing((), (frozenset({0, 1, 3}),))  # 01, 02, 12 in K4 ids
    ok, reason = verify_packing(G, cyclic)
    assert not ok


def test_verify_packing_rejects_wrong_sizes():
    G = corpus.k4()
    ok, reason = verify_packing(G, Packing((frozenset({0, 1}),), ()))
    assert not ok and "expected 5" in reason


def test_tree_packing_iff_partition_condition():
    for G in corpus.random_corpus(40, seed=31, n_range=(1, 6), m_max=12):
        for l in (1, 2):
            result = pack_spanning_trees(G, l)
            packed = isinstance(result, Packing)
            assert packed == oracles.tree_packing_def(G, l)
            if packed:
                ok, reason = verify_packing(G, result)
                assert ok, reason


def test_partition_connectivity_implies_packing():
    # [3k+l, k]-partition-connected (or (6k+2l, 2k)-connected) graphs with
    # multiplicity at most k pack k rigid spanning subgraphs and l trees
    import itertools

    from rigidpack import Multigraph, is_bracket_partition_connected, is_pq_connected

    k7 = Multigraph(7, tuple(itertools.combinations(range(7), 2)))
    dk6 = Multigraph(6, tuple(p for p in itertools.combinations(range(6), 2) for _ in range(2)))
    graphs = corpus.connected_corpus(15, seed=33, n_range=(3, 6), m_max=12, mult_max=2)
    graphs += [corpus.k4(), k7, dk6]
    hits = 0
    for G in graphs:
        for k, l in ((1, 0), (1, 1), (2, 0)):
            if G.multiplicity() > k:
                continue
            bracket = is_bracket_partition_connected(G, 3 * k + l, k)
            if is_pq_connected(G, 6 * k + 2 * l, 2 * k):
                assert bracket  # the stronger hypothesis implies the weaker
            if bracket:
                hits += 1
                result = pack_rigid_and_trees(G, k, l)
                assert isinstance(result, Packing), (G, k, l)
                assert verify_packing(G, result)[0]
    assert hits >= 2  # K7 at (1,0) and doubled K6 at (2,0) at least


def test_parthm_implies_packing_and_packing_implies_necessary():
    interesting = 0
    for G in corpus.connected_corpus(50, seed=32, n_range=(3, 6), m_max=12, mult_max=2):
        for k, l in ((1, 0), (1, 1), (2, 0)):
            if G.multiplicity() > k:
                continue
            sufficient = check_parthm_condition(G, k, l)
            result = pack_rigid_and_trees(G, k, l)
            packed = isinstance(result, Packing)
            if sufficient.holds:
                interesting += 1
                assert packed, (G, k, l)
                assert verify_packing(G, result)[0]
            if packed:
                assert check_necessary_condition(G, k, l).holds
    assert interesting > 0
