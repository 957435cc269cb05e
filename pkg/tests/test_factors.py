"""Perfect matchings, edge-chromatic class, pi, 2-matchings, regularizability."""

import itertools

import pytest

from regraph.core import Multigraph, add_edges
from regraph.factors import (
    DomainError,
    SearchCapExceeded,
    has_pm_avoiding,
    is_class1,
    is_class2,
    is_regularizable,
    perfect_2_matching,
    perfect_matchings,
    pi,
    pm_batch,
    regularizable_lp,
    two_matching_deleted_everywhere,
)
from regraph.construct import petersen, petersen_pms
from regraph.sampling import child_rng, random_multigraph, random_rgraph

import oracles


def complete_graph(n):
    return Multigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n):
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def _is_pm(g, pm):
    seen = set()
    for i in pm:
        u, v = g.edges[i]
        assert u not in seen and v not in seen
        seen.update((u, v))
    assert len(seen) == g.n


def test_perfect_matching_counts():
    assert sum(1 for _ in perfect_matchings(cycle(6))) == 2
    assert sum(1 for _ in perfect_matchings(complete_graph(4))) == 3
    assert sum(1 for _ in perfect_matchings(complete_graph(6))) == 15
    assert sum(1 for _ in perfect_matchings(complete_graph(10))) == 945
    assert sum(1 for _ in perfect_matchings(petersen())) == 6


def test_perfect_matchings_match_recursion_on_random_graphs():
    for i in range(25):
        rng = child_rng(21, i)
        g = random_multigraph(rng.randrange(2, 11, 2), rng, density=0.4)
        got = {tuple(sorted(pm)) for pm in perfect_matchings(g)}
        assert got == set(oracles.perfect_matchings_recursive(g))
        for pm in got:
            _is_pm(g, pm)


def test_pm_batch_collapse_counts_parallel_classes_once():
    g = Multigraph(4, [(0, 1), (0, 1), (2, 3), (0, 2), (1, 3)])
    full, overflow = pm_batch(g)
    assert not overflow and len(full) == 3
    collapsed, _ = pm_batch(g, collapse=True)
    assert len(collapsed) == 2


def test_petersen_pms_agree_with_enumeration():
    p = petersen()
    got = {tuple(sorted(pm)) for pm in perfect_matchings(p)}
    assert got == {tuple(sorted(pm)) for pm in petersen_pms()}


def test_class1_examples():
    for g in (complete_graph(4), cycle(6), Multigraph(2, [(0, 1)] * 3)):
        ok, classes = is_class1(g)
        assert ok
        r = g.regular_degree()
        assert len(classes) == r
        for pm in classes:
            _is_pm(g, pm)
        assert sorted(i for pm in classes for i in pm) == list(range(g.m))


def test_class2_examples():
    assert is_class2(petersen())
    assert not is_class2(complete_graph(4))
    # odd cycles are 2-regular but have no perfect matching at all
    assert is_class2(cycle(5))


def test_class1_rejects_irregular():
    with pytest.raises(DomainError):
        is_class1(Multigraph(3, [(0, 1), (1, 2)]))


def test_class1_cap_raises():
    g = complete_graph(14)
    with pytest.raises(SearchCapExceeded):
        is_class1(g, node_cap=3)


def test_pi_examples():
    assert pi(petersen())[0] == 1
    assert pi(complete_graph(4))[0] == 3
    assert pi(cycle(6))[0] == 2
    value, pms = pi(petersen())
    assert len(pms) == value
    p_plus = add_edges(petersen(), [petersen().edges[i] for i in petersen_pms()[0]])
    assert pi(p_plus)[0] == 2


def test_pi_certificate_is_disjoint():
    for i in range(10):
        rng = child_rng(31, i)
        g = random_rgraph(3, rng.choice([4, 6, 8]), rng)
        value, pms = pi(g)
        assert value == oracles.max_disjoint_pms(g)
        used = set()
        for pm in pms:
            assert not (set(pm) & used)
            used.update(pm)
            _is_pm(g, pm)


def test_pi_without_perfect_matching_is_zero():
    assert pi(Multigraph(3, [(0, 1), (1, 2), (0, 2)]))[0] == 0


def test_has_pm_avoiding_petersen():
    p = petersen()
    # removing any perfect matching leaves two 5-circuits, so nothing remains
    for pm in petersen_pms():
        assert has_pm_avoiding(p, pm) is None
    # avoiding less than a full matching is fine
    pm = petersen_pms()[0]
    witness = has_pm_avoiding(p, pm[:2])
    assert witness is not None
    _is_pm(p, witness)
    assert not (set(witness) & set(pm[:2]))


def test_has_pm_avoiding_k4():
    g = complete_graph(4)
    for pm in oracles.perfect_matchings_recursive(g):
        witness = has_pm_avoiding(g, pm)
        assert witness is not None
        assert not (set(witness) & set(pm))
        _is_pm(g, witness)


def test_two_matching_examples():
    c5 = cycle(5)
    tm = perfect_2_matching(c5)
    assert tm is not None
    assert tm.components == (("cycle", (0, 1, 2, 3, 4)),)
    assert perfect_2_matching(Multigraph(4, [(0, 1), (0, 2), (0, 3)])) is None
    k23 = Multigraph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert perfect_2_matching(k23) is None
    bond = perfect_2_matching(Multigraph(2, [(0, 1), (0, 1)]))
    assert bond is not None and bond.components[0][0] == "edge"


def test_two_matching_structure_and_existence_match_brute():
    checked = 0
    for i in range(200):
        if checked >= 60:
            break
        rng = child_rng(41, i)
        g = random_multigraph(rng.randint(2, 7), rng, density=0.5)
        if g.m > 10:  # the 3^m oracle sweep gets slow past this
            continue
        checked += 1
        tm = perfect_2_matching(g)
        brute = oracles.two_matching_brute_weights(g)
        assert (tm is None) == (brute is None)
        if tm is None:
            continue
        deg = [0] * g.n
        for kind, eids in tm.components:
            if kind == "edge":
                (i0,) = eids
                u, v = g.edges[i0]
                deg[u] += 2
                deg[v] += 2
            else:
                assert len(eids) >= 3
                for i0 in eids:
                    u, v = g.edges[i0]
                    deg[u] += 1
                    deg[v] += 1
        assert deg == [2] * g.n


def _equal_part_bipartite(g):
    color = [-1] * g.n
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    stack = [0]
    color[0] = 0
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if color[w] == -1:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return False
    return color.count(0) == color.count(1)


def test_regularizable_routes_agree_with_brute():
    # the deficiency sweep characterizes regularizability away from
    # equal-part bipartite graphs, which is its documented domain
    cases = {
        "triangle": (Multigraph(3, [(0, 1), (1, 2), (0, 2)]), True),
        "path3": (Multigraph(3, [(0, 1), (1, 2)]), False),
        "star": (Multigraph(4, [(0, 1), (0, 2), (0, 3)]), False),
        "paw": (Multigraph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), False),
        "c5": (cycle(5), True),
        "k4": (complete_graph(4), True),
    }
    for name, (g, want) in cases.items():
        assert not _equal_part_bipartite(g), name
        assert is_regularizable(g) == want, name
        assert regularizable_lp(g) == want, name
        assert oracles.regular_multiplication_brute(g) == want, name


def test_regularizable_lp_covers_elementary_bipartite():
    # already-regular bipartite graphs are regularizable even though the
    # deficiency sweep is out of its domain there
    assert regularizable_lp(cycle(4))
    assert regularizable_lp(Multigraph(2, [(0, 1)]))
    assert oracles.regular_multiplication_brute(cycle(4))
    assert not is_regularizable(cycle(4))


def test_regularizable_domain_errors():
    with pytest.raises(DomainError):
        is_regularizable(Multigraph(2, [(0, 1), (0, 1)]))
    with pytest.raises(DomainError):
        is_regularizable(Multigraph(4, [(0, 1), (2, 3)]))


def test_regularizable_brute_crosscheck_random():
    for i in range(40):
        rng = child_rng(51, i)
        n = rng.randint(2, 5)
        edges = list(itertools.combinations(range(n), 2))
        keep = [e for e in edges if rng.random() < 0.7]
        g = Multigraph(n, keep)
        from regraph.core import is_connected

        if not is_connected(g):
            continue
        brute = oracles.regular_multiplication_brute(g, max_mult=5, max_degree=12)
        assert regularizable_lp(g) == brute
        if not _equal_part_bipartite(g):
            assert is_regularizable(g) == brute


def test_two_matching_deleted_everywhere_examples():
    # the condition asks for a perfect 2-matching of every single-vertex deletion
    assert two_matching_deleted_everywhere(complete_graph(4))
    assert not two_matching_deleted_everywhere(Multigraph(4, [(0, 1), (0, 2), (0, 3)]))
    assert two_matching_deleted_everywhere(petersen())
