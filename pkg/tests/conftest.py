import os
import random

import pytest

from ribbonpd import RibbonGraph, connected_components

SEED = int(os.environ.get("RGPD_SEED", "20260810"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_connected_graph(rng, n_edges, n_vertices):
    """Random valid connected rotation system with the requested counts."""
    nd = 2 * n_edges
    assert 1 <= n_vertices <= n_edges + 1
    while True:
        darts = list(range(nd))
        rng.shuffle(darts)
        cuts = sorted(rng.sample(range(1, nd), n_vertices - 1)) if n_vertices > 1 else []
        rotations = []
        prev = 0
        for c in cuts + [nd]:
            rotations.append(tuple(darts[prev:c]))
            prev = c
        pairing = list(range(nd))
        rng.shuffle(pairing)
        edges = tuple((pairing[2 * i], pairing[2 * i + 1]) for i in range(n_edges))
        g = RibbonGraph(tuple(rotations), edges)
        g.validate()
        if connected_components(g)[0] == 1:
            return g


def relabel_random(g, rng):
    """The same map under a random dart permutation, vertex order and rotation starts."""
    perm = list(range(g.num_darts))
    rng.shuffle(perm)
    verts = []
    for rot in g.vertices:
        mapped = tuple(perm[d] for d in rot)
        k = rng.randrange(len(mapped)) if mapped else 0
        verts.append(mapped[k:] + mapped[:k])
    rng.shuffle(verts)
    edges = [(perm[a], perm[b]) for a, b in g.edges]
    rng.shuffle(edges)
    return RibbonGraph(tuple(verts), tuple(edges))
