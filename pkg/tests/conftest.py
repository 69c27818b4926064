"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the package's search code: they scan
every injective map or every vertex permutation directly.
"""

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from satsharp.graph import Graph, add_isolated, complete, disjoint_cliques, path, star


def brute_contains(g: Graph, h: Graph, required=None) -> bool:
    hedges = h.edges()
    for image in permutations(range(g.n), h.n):
        if all(g.adj[image[u]] >> image[v] & 1 for u, v in hedges):
            if required is None or any({image[u], image[v]} == set(required) for u, v in hedges):
                return True
    return False


def brute_saturated(g: Graph, h: Graph) -> bool:
    if brute_contains(g, h):
        return False
    return all(brute_contains(g.add_edge(x, y), h) for x, y in g.non_edges())


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    e2 = set(g2.edges())
    for perm in permutations(range(g1.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in e2 for u, v in g1.edges()):
            return True
    return False


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def brute_iso_classes(n: int) -> list[Graph]:
    reps: list[Graph] = []
    for g in all_labeled_graphs(n):
        if not any(brute_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def brute_sat(h: Graph, n: int) -> int:
    """Minimum edge count over all labeled H-saturated graphs on n vertices."""
    return min(g.m for g in all_labeled_graphs(n) if brute_saturated(g, h))


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def k4_pendant() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])


# forbidden graphs used by the lower-bound soundness sweep
FIXTURES = {
    "K3": complete(3),
    "K4": complete(4),
    "K13": star(3),
    "K4+pendant": k4_pendant(),
    "2K2": disjoint_cliques([2, 2]),
    "K2+K3": disjoint_cliques([2, 3]),
    "P3": path(3),
}

# bases for the dominating-vertex inequality; K2 plus an isolated vertex is
# the one-edge extension of empty(3)
LIFT_BASES = {
    "K3": complete(3),
    "K12": star(2),
    "2K2": disjoint_cliques([2, 2]),
    "K2+K1": add_isolated(complete(2)),
}


@pytest.fixture(params=sorted(FIXTURES))
def fixture_graph(request):
    return request.param, FIXTURES[request.param]


