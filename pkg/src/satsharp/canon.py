"""Exact canonical forms for small graphs.

The form is the minimum upper-triangle adjacency bit-string over every
labeling that respects an isomorphism-invariant ordered vertex partition.
The partition comes from iterated neighbor-count refinement, so most
graphs need only a handful of labelings; twins are skipped because
swapping them is an automorphism and cannot change the minimum.
"""

from __future__ import annotations

from .errors import CapabilityError
from .graph import Graph

CANON_CAP = 10


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbor counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & mk).bit_count() for mk in masks)
                keyed.setdefault(key, []).append(v)
            out.extend(keyed[k] for k in sorted(keyed))
        if len(out) == len(cells):
            return out
        cells = out


def _encode(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def _are_twins(adj: tuple[int, ...], a: int, b: int) -> bool:
    pair = (1 << a) | (1 << b)
    return adj[a] & ~pair == adj[b] & ~pair


def _search(adj: tuple[int, ...], cells: list[list[int]]) -> int:
    cells = _refine(adj, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        return _encode(adj, [c[0] for c in cells])
    best: int | None = None
    tried: list[int] = []
    cell = cells[target]
    for v in cell:
        if any(_are_twins(adj, v, t) for t in tried):
            continue
        tried.append(v)
        rest = [w for w in cell if w != v]
        code = _search(adj, cells[:target] + [[v], rest] + cells[target + 1:])
        if best is None or code < best:
            best = code
    return best


def canonical_form(g: Graph) -> bytes:
    """Byte-string equal for two graphs iff they are isomorphic."""
    if g.n > CANON_CAP:
        raise CapabilityError(f"canonical_form supports n <= {CANON_CAP}, got {g.n}")
    n = g.n
    if n == 0:
        return b"\x00"
    degree_cells: dict[int, list[int]] = {}
    for v in range(n):
        degree_cells.setdefault(g.adj[v].bit_count(), []).append(v)
    cells = [degree_cells[d] for d in sorted(degree_cells)]
    code = _search(g.adj, cells)
    width = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + code.to_bytes(width, "big")


def canonical_graph(g: Graph) -> Graph:
    """Relabeled copy of ``g`` whose adjacency bit-string is the canonical one."""
    return graph_from_form(canonical_form(g))


def graph_from_form(form: bytes) -> Graph:
    n = form[0]
    code = int.from_bytes(form[1:], "big") if n > 1 else 0
    total = n * (n - 1) // 2
    edges = []
    bit = total - 1
    for i in range(n):
        for j in range(i + 1, n):
            if code >> bit & 1:
                edges.append((i, j))
            bit -= 1
    return Graph.from_edges(n, edges)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.m == g2.m and canonical_form(g1) == canonical_form(g2)
