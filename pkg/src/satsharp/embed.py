"""Subgraph embedding search and the H-saturation verifier."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .graph import Edge, Graph

# map[i] is the image of vertex i of H
Embedding = tuple[int, ...]


def _search_order(h: Graph, pinned: tuple[int, ...] = ()) -> list[int]:
    deg = h.degrees()
    rest = sorted((u for u in range(h.n) if u not in pinned), key=lambda u: (-deg[u], u))
    return list(pinned) + rest


def _extend(g: Graph, h: Graph, order: list[int], assign: dict[int, int]) -> Embedding | None:
    gdeg = g.degrees()
    hdeg = h.degrees()
    used = 0
    for w in assign.values():
        used |= 1 << w
    todo = order[len(assign):]

    def step(i: int, used: int) -> bool:
        if i == len(todo):
            return True
        u = todo[i]
        need = hdeg[u]
        allowed = ~used
        for x in assign:
            if h.adj[u] >> x & 1:
                allowed &= g.adj[assign[x]]
        for w in range(g.n):
            if not allowed >> w & 1 or gdeg[w] < need:
                continue
            assign[u] = w
            if step(i + 1, used | 1 << w):
                return True
            del assign[u]
        return False

    if not step(0, used):
        return None
    return tuple(assign[u] for u in range(h.n))


def contains_subgraph(g: Graph, h: Graph, required_edge: Edge | None = None) -> Embedding | None:
    """Find a (non-induced) copy of ``h`` in ``g``.

    With ``required_edge=(x, y)`` only copies in which some edge of ``h``
    lands on ``{x, y}`` are accepted; if ``xy`` is not an edge of ``g``
    there are none.
    """
    if h.n < 1:
        raise InputError("H needs at least one vertex")
    if h.n > g.n:
        return None
    if required_edge is None:
        return _extend(g, h, _search_order(h), {})
    x, y = required_edge
    if not g.has_edge(x, y):
        return None
    gdeg = g.degrees()
    hdeg = h.degrees()
    for u, v in h.edges():
        for a, b in ((x, y), (y, x)):
            if gdeg[a] < hdeg[u] or gdeg[b] < hdeg[v]:
                continue
            found = _extend(g, h, _search_order(h, (u, v)), {u: a, v: b})
            if found is not None:
                return found
    return None


def is_embedding(g: Graph, h: Graph, emb: Embedding) -> bool:
    if len(emb) != h.n or len(set(emb)) != h.n:
        return False
    if not all(0 <= w < g.n for w in emb):
        return False
    return all(g.adj[emb[u]] >> emb[v] & 1 for u, v in h.edges())


def uses_edge(h: Graph, emb: Embedding, edge: Edge) -> bool:
    """True when some edge of ``h`` is mapped onto ``edge``."""
    target = set(edge)
    return any({emb[u], emb[v]} == target for u, v in h.edges())


@dataclass(frozen=True)
class SaturationVerdict:
    is_h_free: bool
    violating_embedding: Embedding | None = None
    missing: Edge | None = None
    certificates: dict[Edge, Embedding] | None = field(default=None, compare=True)

    @property
    def is_saturated(self) -> bool:
        return self.certificates is not None

    def to_json(self) -> dict:
        out: dict = {"is_h_free": self.is_h_free, "is_saturated": self.is_saturated}
        if self.violating_embedding is not None:
            out["violating_embedding"] = list(self.violating_embedding)
        if self.missing is not None:
            out["missing"] = list(self.missing)
        if self.certificates is not None:
            out["certificates"] = {f"{x}-{y}": list(e) for (x, y), e in self.certificates.items()}
        return out


def verify_saturation(g: Graph, h: Graph) -> SaturationVerdict:
    """Decide whether ``g`` is H-saturated, with a witness either way.

    Every certificate is an embedding into ``g + xy`` that uses ``xy``;
    since ``g`` is H-free any copy in ``g + xy`` must use the new edge.
    """
    if h.m == 0:
        raise InputError("saturation is undefined for edgeless H")
    if g.n < h.n:
        raise InputError(f"host has {g.n} vertices, fewer than H's {h.n}")
    bad = contains_subgraph(g, h)
    if bad is not None:
        return SaturationVerdict(False, violating_embedding=bad)
    certs: dict[Edge, Embedding] = {}
    for x, y in g.non_edges():
        emb = contains_subgraph(g.add_edge(x, y), h, required_edge=(x, y))
        if emb is None:
            return SaturationVerdict(True, missing=(x, y))
        certs[(x, y)] = emb
    return SaturationVerdict(True, certificates=certs)


def is_saturated(g: Graph, h: Graph) -> bool:
    return verify_saturation(g, h).is_saturated
