"""Exhaustive generation: regular multigraphs by augmentation, simple graphs."""

import itertools
from collections import Counter

import pytest

from regraph.core import Multigraph, is_connected
from regraph.cuts import is_r_graph
from regraph.factors import is_class1, is_class2
from regraph.generate import (
    GenSpec,
    all_simple_graphs,
    brute_regular_multigraphs,
    generate,
)
from regraph.iso import are_isomorphic, canonical_form
from regraph.construct import petersen

import oracles


def test_connected_cubic_simple_counts():
    out = generate(GenSpec(3, 10, connected=True, simple=True))
    counts = Counter(g.n for g in out)
    assert counts == {4: 1, 6: 2, 8: 5, 10: 19}


def test_connected_cubic_multigraph_counts():
    out = generate(GenSpec(3, 6, connected=True))
    counts = Counter(g.n for g in out)
    assert counts == {2: 1, 4: 2, 6: 6}


def test_generated_graphs_satisfy_spec_and_are_distinct():
    spec = GenSpec(3, 8, connected=True, r_graph=True)
    out = generate(spec)
    certs = set()
    for g in out:
        assert g.regular_degree() == 3
        assert is_connected(g)
        assert is_r_graph(g, 3)
        certs.add(canonical_form(g).certificate)
    assert len(certs) == len(out)


def test_generation_matches_brute_enumeration():
    for r, n in ((3, 2), (3, 4), (3, 6), (4, 4)):
        brute = brute_regular_multigraphs(r, n)
        brute_connected = [g for g in brute if is_connected(g)]
        gen = [g for g in generate(GenSpec(r, n, connected=True)) if g.n == n]
        assert len(gen) == len(brute_connected)
        for g in gen:
            assert any(are_isomorphic(g, h) for h in brute_connected)


def test_brute_enumeration_is_isomorph_free():
    for r, n in ((3, 4), (4, 4)):
        out = brute_regular_multigraphs(r, n)
        for i, g in enumerate(out):
            for h in out[i + 1 :]:
                assert not are_isomorphic(g, h)


def test_class_filters_partition_output():
    base = generate(GenSpec(3, 6, connected=True))
    one = generate(GenSpec(3, 6, connected=True, edge_class=1))
    two = generate(GenSpec(3, 6, connected=True, edge_class=2))
    assert len(one) + len(two) == len(base)
    assert len(two) == 1
    for g in one:
        assert is_class1(g)[0]
    for g in two:
        assert is_class2(g)


def test_rgraph_filter_drops_bridged_graph():
    allg = generate(GenSpec(3, 6, connected=True))
    rg = generate(GenSpec(3, 6, connected=True, r_graph=True))
    assert len(allg) - len(rg) == 1
    dropped = [
        g
        for g in allg
        if not any(are_isomorphic(g, h) for h in rg)
    ]
    assert len(dropped) == 1
    assert not is_r_graph(dropped[0], 3)


def test_two_regular_generation_is_circuits():
    out = generate(GenSpec(2, 8, connected=True))
    assert Counter(g.n for g in out) == {n: 1 for n in range(2, 9)}
    for g in out:
        assert g.regular_degree() == 2 and is_connected(g)


def test_petersen_appears_at_order_ten():
    out = generate(GenSpec(3, 10, connected=True, simple=True, r_graph=True))
    hits = [g for g in out if are_isomorphic(g, petersen())]
    assert len(hits) == 1


def test_generate_is_deterministic():
    a = generate(GenSpec(3, 6, connected=True))
    b = generate(GenSpec(3, 6, connected=True))
    assert [g.edges for g in a] == [g.edges for g in b]


def test_generate_input_validation():
    with pytest.raises(ValueError):
        generate(GenSpec(3, 7))
    with pytest.raises(ValueError):
        generate(GenSpec(3, 14))
    with pytest.raises(ValueError):
        generate(GenSpec(5, 6))


def test_all_simple_graphs_counts():
    table = all_simple_graphs(7)
    got = [len(table[n]) for n in range(1, 8)]
    assert got == [1, 2, 4, 11, 34, 156, 1044]


def _canonical_key(g):
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return best


def test_all_simple_graphs_matches_permutation_dedup():
    table = all_simple_graphs(5)
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for sel in range(1 << len(pairs)):
            g = Multigraph(n, [e for i, e in enumerate(pairs) if (sel >> i) & 1])
            seen.add(_canonical_key(g))
        assert len(table[n]) == len(seen)
        assert len({canonical_form(g).certificate for g in table[n]}) == len(table[n])
