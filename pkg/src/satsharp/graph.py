"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps the
embedding search and canonical labeling cheap at the sizes this package
targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GraphFormatError, InputError

Edge = tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full or mask >> v & 1:
                raise InputError(f"invalid adjacency at vertex {v}")
            for w in _bits(mask):
                if not self.adj[w] >> v & 1:
                    raise InputError(f"asymmetric adjacency {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad edge ({u}, {v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def _check(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise InputError(f"vertex {x} out of range 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, x: int) -> frozenset[int]:
        self._check(x)
        return frozenset(_bits(self.adj[x]))

    def closed_neighbors(self, x: int) -> frozenset[int]:
        return self.neighbors(x) | {x}

    def degree(self, x: int) -> int:
        self._check(x)
        return self.adj[x].bit_count()

    def degree_in(self, x: int, s: Iterable[int]) -> int:
        self._check(x)
        mask = 0
        for v in s:
            self._check(v)
            mask |= 1 << v
        return (self.adj[x] & mask).bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.adj]

    def add_edge(self, u: int, v: int) -> Graph:
        """Return ``G + uv``; the edge must be missing."""
        if u == v or self.has_edge(u, v):
            raise InputError(f"({u}, {v}) is not a non-edge")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def has_isolated(self) -> bool:
        return any(mask == 0 for mask in self.adj)

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


def complete(k: int) -> Graph:
    return Graph.from_edges(k, combinations(range(k), 2))


def empty(k: int) -> Graph:
    return Graph(k, (0,) * k)


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star(k: int) -> Graph:
    """K_{1,k} with the center at vertex 0."""
    return join(complete(1), empty(k))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 on ``0..n1-1`` followed by G2 relabeled to ``n1..n1+n2-1``."""
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(mask << shift for mask in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between G1 and G2 (G1 labeled first)."""
    n1, n2 = g1.n, g2.n
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    adj = tuple(mask | high for mask in g1.adj) + tuple((mask << n1) | low for mask in g2.adj)
    return Graph(n1 + n2, adj)


def add_isolated(g: Graph) -> Graph:
    return disjoint_union(g, empty(1))


def add_dominating(g: Graph) -> Graph:
    """Append vertex ``n`` adjacent to all of ``0..n-1``."""
    return join(g, complete(1))


def disjoint_cliques(sizes: Iterable[int]) -> Graph:
    g = empty(0)
    for p in sizes:
        g = disjoint_union(g, complete(p))
    return g


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented edge-list format.

    ``#`` lines are comments and blank lines are skipped. The first data
    line holds ``n``; each further line is ``u v`` with ``0 <= u < v < n``.
    """
    n: int | None = None
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise GraphFormatError(lineno, raw, "expected integers") from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise GraphFormatError(lineno, raw, "first data line must be a vertex count")
            n = values[0]
            continue
        if len(values) != 2:
            raise GraphFormatError(lineno, raw, "expected 'u v'")
        u, v = values
        if not 0 <= u < v < n:
            raise GraphFormatError(lineno, raw, f"need 0 <= u < v < {n}")
        if (u, v) in seen:
            raise GraphFormatError(lineno, raw, "duplicate edge")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise GraphFormatError(0, "", "missing vertex count")
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(g.to_text())
