"""Named graphs, powers of the Petersen graph, lifts, expansions, replacements."""

import math

import pytest

from regraph.core import Multigraph, is_connected, mask_of
from regraph.cuts import is_r_graph, min_odd_cut
from regraph.factors import is_class2, pi
from regraph.hcoloring import verify_hcoloring
from regraph.construct import (
    MeredithExpansion,
    add_one_factor,
    class1_coloring,
    compositions,
    lift,
    lift_to_rgraph,
    meredith_expand_all,
    meredith_extension,
    meredith_natural_coloring,
    p_power,
    partitions_count,
    partitions_list,
    petersen,
    petersen_pms,
    replace_all,
    replace_edge,
    simple_class2,
)

import oracles


def complete_graph(n):
    return Multigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_petersen_shape():
    p = petersen()
    assert p.n == 10 and p.m == 15
    assert p.regular_degree() == 3
    assert p.is_simple() and is_connected(p)
    assert oracles.cycles_of_length(p, 3) == 0
    assert oracles.cycles_of_length(p, 4) == 0
    assert oracles.cycles_of_length(p, 5) == 12


def test_petersen_pms_structure():
    p = petersen()
    pms = petersen_pms()
    assert len(pms) == 6
    cover = [0] * p.m
    for pm in pms:
        assert len(pm) == 5
        seen = set()
        for i in pm:
            u, v = p.edges[i]
            seen.update((u, v))
            cover[i] += 1
        assert len(seen) == 10
    # any two distinct one-factors share exactly one edge
    for i in range(6):
        for j in range(i + 1, 6):
            assert len(set(pms[i]) & set(pms[j])) == 1
    assert cover == [2] * p.m


def test_p_power_zero_is_petersen():
    g = p_power([0] * 6)
    assert g.edges == petersen().edges


def test_p_power_adds_one_factors():
    p = petersen()
    pms = petersen_pms()
    g = p_power([2, 0, 1, 0, 0, 0])
    assert g.n == 10
    assert g.regular_degree() == 6
    for i in range(p.m):
        want = 1 + 2 * (i in pms[0]) + (i in pms[2])
        assert g.multiplicity(*p.edges[i]) == want
    assert is_r_graph(g, 6)


def test_p_power_validates_counts():
    with pytest.raises(ValueError):
        p_power([1, 2, 3])
    with pytest.raises(ValueError):
        p_power([-1, 0, 0, 0, 0, 0])


def test_partitions_count_small_values():
    count6 = oracles.partitions_brute(6)
    for n in range(8):
        assert partitions_count(n, 6) == count6(n)
    assert partitions_count(0, 6) == 1
    assert partitions_count(3, 6) == 3
    assert partitions_count(6, 6) == 11


def test_partitions_list_matches_count():
    for n in range(7):
        parts = partitions_list(n, 6)
        assert len(parts) == partitions_count(n, 6)
        assert len(set(parts)) == len(parts)
        for p in parts:
            assert len(p) == 6 and sum(p) == n
            assert all(p[i] >= p[i + 1] for i in range(5))


def test_compositions_count_and_contents():
    for n, k in ((0, 6), (3, 6), (6, 6), (4, 3)):
        comps = list(compositions(n, k))
        assert len(comps) == math.comb(n + k - 1, k - 1)
        assert len(set(comps)) == len(comps)
        for c in comps:
            assert len(c) == k and sum(c) == n and min(c) >= 0


def test_add_one_factor():
    p = petersen()
    pairs = [tuple(sorted(p.edges[i])) for i in petersen_pms()[0]]
    g = add_one_factor(p, pairs)
    assert g.regular_degree() == 4
    assert g.n == 10 and g.m == 20
    with pytest.raises(ValueError):
        add_one_factor(p, pairs[:4])
    with pytest.raises(ValueError):
        add_one_factor(p, [(0, 1), (0, 2), (3, 4), (5, 6), (7, 8)])


def test_lift_mechanics():
    path = Multigraph(3, [(0, 1), (1, 2)])
    h = lift(path, 0, 1)
    assert h.n == 2 and h.edges == ((0, 1),)  # isolated middle vertex dropped
    star = Multigraph(4, [(0, 1), (0, 2), (0, 3)])
    h = lift(star, 0, 1)
    assert h.n == 4 and set(h.edges) == {(1, 2), (0, 3)}
    with pytest.raises(ValueError):
        lift(Multigraph(4, [(0, 1), (2, 3)]), 0, 1)
    with pytest.raises(ValueError):
        lift(Multigraph(2, [(0, 1), (0, 1)]), 0, 1)
    with pytest.raises(ValueError):
        lift(path, 0, 0)


def test_lift_to_rgraph_petersen_outer_circuit():
    p = petersen()
    g, steps = lift_to_rgraph(p, mask_of([0, 1, 2, 3, 4]), 3)
    assert g.n == 6 and g.m == 9
    assert len(steps) == 1
    assert is_r_graph(g, 3)


def test_lift_to_rgraph_whole_side_of_k4():
    k4 = complete_graph(4)
    g, steps = lift_to_rgraph(k4, mask_of([1, 2, 3]), 3)
    assert g.n == 2 and g.m == 3
    assert steps == []
    assert is_r_graph(g, 3)


def test_lift_to_rgraph_even_boundary_removes_vertex():
    # contracting two adjacent vertices of a cubic graph gives degree 4,
    # so the lifts must suppress the vertex entirely
    p = petersen()
    g, steps = lift_to_rgraph(p, mask_of([0, 1]), 3)
    assert g.n == 8
    assert len(steps) == 2
    assert is_r_graph(g, 3)


def test_lift_to_rgraph_rejects_non_rgraph():
    with pytest.raises(ValueError):
        lift_to_rgraph(Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), mask_of([0]), 3)


def test_meredith_extension_shape():
    k4 = complete_graph(4)
    g = meredith_extension(k4, 0)
    assert g.n == 8 and g.m == 12
    assert g.regular_degree() == 3
    assert g.is_simple() and is_connected(g)
    p = petersen()
    h = meredith_extension(p, 3)
    assert h.n == 14 and h.regular_degree() == 3


def test_meredith_extension_pairing_argument():
    p = petersen()
    a = meredith_extension(p, 0, pairing=(0, 1, 2))
    b = meredith_extension(p, 0, pairing=(2, 0, 1))
    assert a.n == b.n == 14
    assert a.regular_degree() == b.regular_degree() == 3
    with pytest.raises(ValueError):
        meredith_extension(p, 0, pairing=(0, 1))
    with pytest.raises(ValueError):
        meredith_extension(p, 0, pairing=(0, 1, 1))


def test_meredith_expand_all_petersen():
    p = petersen()
    exp = meredith_expand_all(p)
    assert isinstance(exp, MeredithExpansion)
    assert exp.graph.n == 50 and exp.graph.m == 75
    assert exp.graph.regular_degree() == 3
    assert len(exp.blocks) == 10
    total = 0
    for blk in exp.blocks:
        total |= blk
    assert total == (1 << 50) - 1


def test_meredith_natural_coloring_verifies():
    p = petersen()
    exp = meredith_expand_all(p)
    col = meredith_natural_coloring(p, exp)
    assert verify_hcoloring(exp.graph, p, col).ok


def test_class1_coloring_of_k4_by_petersen():
    p = petersen()
    k4 = complete_graph(4)
    col = class1_coloring(k4, p, 0)
    assert verify_hcoloring(k4, p, col).ok
    assert set(col.f_V) == {0}


def test_simple_class2_shape():
    g = simple_class2(4)
    assert g.n == 30
    assert g.regular_degree() == 4
    assert g.is_simple() and is_connected(g)
    assert is_r_graph(g, 4)


def test_replace_edge_petersen_pair():
    p = petersen()
    g = replace_edge(p, 0, p, 0)
    assert g.n == 20 and g.m == 30
    assert g.regular_degree() == 3
    assert is_r_graph(g, 3)
    assert is_class2(g)
    swapped = replace_edge(p, 0, p, 0, swap=True)
    assert swapped.n == 20 and swapped.regular_degree() == 3


def test_replace_all_k4():
    k4 = complete_graph(4)
    g = replace_all(k4, k4, 0)
    assert g.n == 4 + 6 * 4
    assert g.regular_degree() == 3
    assert is_r_graph(g, 3)


def test_meredith_pi_example():
    g = meredith_extension(petersen(), 0)
    assert is_class2(g)
    assert pi(g)[0] == 1
