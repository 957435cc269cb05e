"""Canonical labeling, isomorphism, automorphisms, matching actions."""

import itertools
import random

import pytest

from regraph.core import Multigraph
from regraph.iso import (
    AutomorphismCapExceeded,
    are_isomorphic,
    automorphisms,
    canonical_form,
    edge_permutation,
    pm_action,
    vertex_orbits,
)
from regraph.construct import petersen, petersen_pms
from regraph.sampling import child_rng, random_multigraph

import oracles


def _relabel(g, perm):
    return Multigraph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def test_certificate_invariant_under_relabeling():
    rng = random.Random(3)
    for i in range(30):
        crng = child_rng(61, i)
        g = random_multigraph(crng.randint(2, 9), crng, density=0.4)
        cert = canonical_form(g).certificate
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(_relabel(g, perm)).certificate == cert


def test_certificate_separates_nonisomorphic():
    # all simple graphs on 5 vertices: certificates collide iff isomorphic
    graphs = []
    edges5 = list(itertools.combinations(range(5), 2))
    for bitsel in range(1 << len(edges5)):
        chosen = [e for i, e in enumerate(edges5) if (bitsel >> i) & 1]
        graphs.append(Multigraph(5, chosen))
    by_cert = {}
    for g in graphs:
        by_cert.setdefault(canonical_form(g).certificate, []).append(g)
    assert len(by_cert) == 34  # simple graphs on 5 unlabeled vertices
    rng = random.Random(5)
    for group in by_cert.values():
        g = group[0]
        h = rng.choice(group)
        assert oracles.isomorphic_permutation(g, h)


def test_labeling_maps_to_canonical_graph():
    for i in range(10):
        crng = child_rng(62, i)
        g = random_multigraph(crng.randint(2, 8), crng, density=0.5)
        cf = canonical_form(g)
        assert sorted(cf.labeling) == list(range(g.n))
        h = _relabel(g, cf.labeling)
        assert canonical_form(h).certificate == cf.certificate


def test_are_isomorphic_matches_permutation_oracle():
    rng = random.Random(9)
    for i in range(25):
        crng = child_rng(63, i)
        n = crng.randint(2, 6)
        g = random_multigraph(n, crng, density=0.5)
        perm = list(range(n))
        rng.shuffle(perm)
        assert are_isomorphic(g, _relabel(g, perm))
        h = random_multigraph(n, child_rng(64, i), density=0.5)
        assert are_isomorphic(g, h) == oracles.isomorphic_permutation(g, h)


def test_are_isomorphic_counts_multiplicities():
    g = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
    h = Multigraph(3, [(0, 1), (1, 2), (1, 2)])
    k = Multigraph(3, [(0, 1), (0, 1), (0, 2)])
    assert are_isomorphic(g, h)
    assert are_isomorphic(g, k)
    assert not are_isomorphic(g, Multigraph(3, [(0, 1), (1, 2), (0, 2)]))


def test_automorphism_counts():
    assert len(automorphisms(petersen())) == 120
    assert len(automorphisms(Multigraph(2, [(0, 1)] * 3))) == 2
    k4 = Multigraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert len(automorphisms(k4)) == 24
    c5 = Multigraph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert len(automorphisms(c5)) == 10
    k33 = Multigraph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    assert len(automorphisms(k33)) == 72


def test_automorphisms_match_permutation_oracle():
    for i in range(15):
        crng = child_rng(65, i)
        g = random_multigraph(crng.randint(2, 6), crng, density=0.5)
        assert len(automorphisms(g)) == oracles.automorphism_count(g)


def test_automorphisms_are_valid_and_distinct():
    g = petersen()
    auts = automorphisms(g)
    assert len(set(auts)) == len(auts)
    target = sorted(g.edges)
    for sigma in auts[:20]:
        assert sorted(tuple(sorted((sigma[u], sigma[v]))) for u, v in g.edges) == target


def test_automorphism_cap():
    with pytest.raises(AutomorphismCapExceeded):
        automorphisms(petersen(), cap=5)


def test_vertex_orbits():
    assert vertex_orbits(petersen()) == [list(range(10))]
    paw = Multigraph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert sorted(map(len, vertex_orbits(paw))) == [1, 1, 2]


def test_edge_permutation_follows_vertex_images():
    c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert edge_permutation(c4, (0, 1, 2, 3)) == (0, 1, 2, 3)
    assert edge_permutation(c4, (1, 2, 3, 0)) == (1, 2, 3, 0)
    g = Multigraph(3, [(0, 1), (0, 1), (0, 2), (1, 2)])
    tau = edge_permutation(g, (1, 0, 2))
    assert tau[2] == 3 and tau[3] == 2 and sorted(tau[:2]) == [0, 1]
    with pytest.raises(ValueError):
        edge_permutation(Multigraph(3, [(0, 1), (0, 1), (1, 2)]), (1, 0, 2))


def test_pm_action_is_a_permutation_group_action():
    p = petersen()
    pms = [tuple(sorted(pm)) for pm in petersen_pms()]
    action = pm_action(p, pms)
    assert len(action) == 120
    for perm in action:
        assert sorted(perm) == list(range(6))
    assert tuple(range(6)) in action
    # closure under composition
    seen = set(action)
    for a in action[:10]:
        for b in action[:10]:
            assert tuple(a[b[i]] for i in range(6)) in seen
