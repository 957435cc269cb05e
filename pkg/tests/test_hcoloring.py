"""Search, verification, and structure transport for H-colorings."""

import pytest

from regraph.core import Multigraph, mask_of, popcount
from regraph.hcoloring import (
    DomainError,
    HColoring,
    check_structure_transport,
    circuits_upto,
    find_hcoloring,
    image_subgraph,
    two_edge_cuts,
    unused_vertices,
    verify_hcoloring,
)
from regraph.construct import class1_coloring, petersen
from regraph.iso import are_isomorphic

import oracles


def complete_graph(n):
    return Multigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def bond3():
    return Multigraph(2, [(0, 1)] * 3)


def test_self_coloring_of_petersen_is_isomorphism():
    p = petersen()
    res = find_hcoloring(p, p)
    assert res.status == "found"
    col = res.coloring
    assert verify_hcoloring(p, p, col).ok
    # edge map and vertex map are both bijections
    assert len(set(col.f)) == p.m
    assert len(set(col.f_V)) == p.n
    h = Multigraph(p.n, [(col.f_V[u], col.f_V[v]) for u, v in p.edges])
    assert are_isomorphic(h, p)


def test_k4_colored_by_petersen():
    res = find_hcoloring(complete_graph(4), petersen())
    assert res.status == "found"
    assert verify_hcoloring(complete_graph(4), petersen(), res.coloring).ok


def test_petersen_not_colored_by_k4():
    assert find_hcoloring(petersen(), complete_graph(4)).status == "none"


def test_petersen_not_colored_by_triple_edge():
    assert find_hcoloring(petersen(), bond3()).status == "none"


def test_count_mode():
    assert find_hcoloring(bond3(), bond3(), mode="count").count == 6
    res = find_hcoloring(petersen(), petersen(), mode="count")
    assert res.status == "counted" and res.count == 120


def test_all_mod_aut_mode():
    res = find_hcoloring(petersen(), petersen(), mode="all_mod_aut")
    assert res.status == "enumerated"
    assert len(res.colorings) == 1
    for col in res.colorings:
        assert verify_hcoloring(petersen(), petersen(), col).ok


def test_degree_mismatch_rejected():
    c6 = Multigraph(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(DomainError):
        find_hcoloring(c6, bond3())


def test_node_cap_gives_undecided():
    res = find_hcoloring(petersen(), petersen(), node_cap=1)
    assert res.status == "undecided"
    assert res.nodes >= 1


def test_verify_codes():
    p = petersen()
    k4 = complete_graph(4)
    col = class1_coloring(k4, p, 0)
    assert verify_hcoloring(k4, p, col).ok
    bad_f = list(col.f)
    bad_f[1] = bad_f[0]
    res = verify_hcoloring(k4, p, HColoring(tuple(bad_f), col.f_V))
    assert not res.ok and res.code == "adjacent-collision"
    res = verify_hcoloring(k4, p, HColoring(col.f[:3], col.f_V))
    assert not res.ok and res.code == "malformed"
    bad_v = list(col.f_V)
    bad_v[0] = 9
    res = verify_hcoloring(k4, p, HColoring(col.f, tuple(bad_v)))
    assert not res.ok and res.code == "vertex-mismatch"


def test_class1_coloring_image_is_one_star():
    p = petersen()
    k4 = complete_graph(4)
    col = class1_coloring(k4, p, 2)
    assert set(col.f_V) == {2}
    img = image_subgraph(k4, p, col)
    assert img.m == 3  # one host star
    unused = unused_vertices(k4, p, col)
    assert popcount(unused) == p.n - 1
    assert not (unused >> 2) & 1


def test_self_coloring_uses_every_vertex():
    p = petersen()
    col = find_hcoloring(p, p).coloring
    assert unused_vertices(p, p, col) == 0
    assert image_subgraph(p, p, col).m == p.m


def test_two_edge_cuts():
    c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert len(two_edge_cuts(c4)) == 6
    for a, b in two_edge_cuts(c4):
        assert 0 <= a < b < 4
    assert two_edge_cuts(petersen()) == []
    # a doubled edge between triangles is a 2-cut by itself
    g = Multigraph(
        6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3), (2, 3)]
    )
    assert (6, 7) in two_edge_cuts(g)


def test_circuits_upto_counts():
    p = petersen()
    assert len(circuits_upto(p, 4)) == 0
    assert len(circuits_upto(p, 5)) == oracles.cycles_of_length(p, 5) == 12
    assert len(circuits_upto(p, 6)) == 12 + oracles.cycles_of_length(p, 6)
    c5 = Multigraph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert len(circuits_upto(c5, 5)) == 1


def test_circuits_are_closed_edge_sets():
    # each circuit is a sorted edge id tuple whose support is a single cycle
    p = petersen()
    for circ in circuits_upto(p, 6):
        assert list(circ) == sorted(set(circ))
        touched = {}
        for eid in circ:
            for v in p.edges[eid]:
                touched[v] = touched.get(v, 0) + 1
        assert all(c == 2 for c in touched.values())
        assert len(touched) == len(circ)
        reach = {next(iter(touched))}
        frontier = list(reach)
        while frontier:
            v = frontier.pop()
            for eid in circ:
                a, b = p.edges[eid]
                if v in (a, b):
                    w = b if v == a else a
                    if w not in reach:
                        reach.add(w)
                        frontier.append(w)
        assert reach == set(touched)


def test_transport_on_star_coloring():
    p = petersen()
    k4 = complete_graph(4)
    col = class1_coloring(k4, p, 0)
    rep = check_structure_transport(k4, p, col, samples=5, seed=3)
    assert rep.pm_checked > 0
    assert rep.pm_failures == []
    assert rep.two_regular_failures == []
    assert rep.factor_failures == []
    assert rep.two_cut_failures == []
    assert rep.tight_cut_failures == []


def test_transport_on_self_coloring():
    p = petersen()
    col = find_hcoloring(p, p).coloring
    rep = check_structure_transport(p, p, col, samples=5, seed=4)
    assert rep.pm_failures == []
    assert rep.tight_cut_checked > 0
    assert rep.tight_cut_failures == []
