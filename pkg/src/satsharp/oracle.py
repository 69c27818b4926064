"""Exact saturation numbers by isomorphism-free enumeration.

Graphs on ``n`` vertices are generated level by level: every class with
``m + 1`` edges is some class with ``m`` edges plus one edge, so extending
each level-``m`` representative by each non-edge and deduplicating by
canonical form yields every class exactly once. Representatives are kept
sorted by canonical form, which fixes the enumeration order.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .canon import canonical_form, canonical_graph, graph_from_form
from .embed import SaturationVerdict, is_saturated, verify_saturation
from .errors import CapabilityError, ConsistencyError, InputError
from .graph import Graph, empty
from .weights import INF, fraction_str, graph_weight

ENUM_CAP = 8

_levels: dict[int, list[list[Graph]]] = {}


def _level(n: int, m: int) -> list[Graph]:
    levels = _levels.setdefault(n, [[canonical_graph(empty(n))]])
    while len(levels) <= m:
        seen: dict[bytes, Graph] = {}
        for g in levels[-1]:
            for x, y in g.non_edges():
                child = g.add_edge(x, y)
                form = canonical_form(child)
                if form not in seen:
                    seen[form] = graph_from_form(form)
        levels.append([seen[f] for f in sorted(seen)])
    return levels[m]


def enumerate_graphs(n: int, m: int) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class."""
    if n > ENUM_CAP:
        raise CapabilityError(f"enumeration supports n <= {ENUM_CAP}, got {n}")
    if n < 0 or not 0 <= m <= n * (n - 1) // 2:
        raise InputError(f"need 0 <= m <= {n * (n - 1) // 2}")
    return iter(_level(n, m))


def _first_saturated(args: tuple[list[Graph], Graph]) -> int | None:
    graphs, h = args
    for i, g in enumerate(graphs):
        if is_saturated(g, h):
            return i
    return None


def _chunks(items: list, parts: int) -> list[list]:
    size = math.ceil(len(items) / parts)
    return [items[i:i + size] for i in range(0, len(items), size)]


@dataclass(frozen=True)
class SatResult:
    h: Graph
    n: int
    value: int | float
    witness: Graph | None
    verdict: SaturationVerdict | None
    runtime_ms: float = 0.0

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "h": self.h.to_json(),
            "n": self.n,
            "value": "inf" if self.value == INF else self.value,
            "witness_edges": [list(e) for e in self.witness.edges()] if self.witness else None,
        }
        if timing:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def sat_exact(h: Graph, n: int, workers: int = 1) -> SatResult:
    """Minimum edge count of an H-saturated graph on ``n`` vertices.

    Levels are scanned in ascending ``m``; the witness is the first
    saturated graph in enumeration order regardless of ``workers``.
    """
    start = time.perf_counter()
    if n > ENUM_CAP:
        raise CapabilityError(f"sat_exact supports n <= {ENUM_CAP}, got {n}")
    if n < h.n:
        raise InputError(f"n must be at least |V(H)| = {h.n}")
    if h.m == 0:
        return SatResult(h, n, INF, None, None, (time.perf_counter() - start) * 1e3)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for m in range(n * (n - 1) // 2 + 1):
            graphs = list(enumerate_graphs(n, m))
            if pool is None:
                hit = _first_saturated((graphs, h))
            else:
                chunks = _chunks(graphs, workers)
                offsets = [sum(len(c) for c in chunks[:i]) for i in range(len(chunks))]
                hits = pool.map(_first_saturated, [(c, h) for c in chunks])
                found = [off + i for off, i in zip(offsets, hits) if i is not None]
                hit = min(found) if found else None
            if hit is not None:
                witness = graphs[hit]
                verdict = verify_saturation(witness, h)
                elapsed = (time.perf_counter() - start) * 1e3
                return SatResult(h, n, m, witness, verdict, elapsed)
    finally:
        if pool is not None:
            pool.shutdown()
    raise ConsistencyError(f"no H-saturated graph on {n} vertices, but H has an edge")


@dataclass(frozen=True)
class SharpnessProbe:
    h: Graph
    points: list[tuple[int, int]]
    successive_slopes: list[int]
    weight_slope: Fraction | float

    def to_json(self) -> dict:
        ws = self.weight_slope
        return {
            "h": self.h.to_json(),
            "points": [list(p) for p in self.points],
            "successive_slopes": self.successive_slopes,
            "weight_slope": "inf" if ws == INF else fraction_str(ws),
        }


def sharpness_probe(h: Graph, n_lo: int, n_hi: int, workers: int = 1) -> SharpnessProbe:
    """Exact values over ``n_lo..n_hi`` beside the weight slope. Data only."""
    if n_lo > n_hi:
        raise InputError("empty n range")
    if h.m == 0:
        raise InputError("probe needs H with at least one edge")
    points = [(n, int(sat_exact(h, n, workers).value)) for n in range(n_lo, n_hi + 1)]
    slopes = [b[1] - a[1] for a, b in zip(points, points[1:])]
    wt = graph_weight(h)
    return SharpnessProbe(h, points, slopes, Fraction(int(wt) - 1, 2))
