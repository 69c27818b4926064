"""Edge and graph weights, and the weight lower bound on saturation numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .graph import Edge, Graph

INF = math.inf


def edge_weight(h: Graph, u: int, v: int) -> int:
    """``2|N(u) & N(v)| + |N(v) - N(u)|`` with ``u`` the lower-degree end."""
    if not h.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    if h.degree(u) > h.degree(v):
        u, v = v, u
    common = (h.adj[u] & h.adj[v]).bit_count()
    only_v = (h.adj[v] & ~h.adj[u]).bit_count()
    return 2 * common + only_v


@dataclass(frozen=True)
class WeightReport:
    edge_weights: dict[Edge, int]
    graph_weight: int | float
    min_edge: Edge | None

    def to_json(self) -> dict:
        return {
            "edge_weights": {f"{u}-{v}": w for (u, v), w in self.edge_weights.items()},
            "graph_weight": format_weight(self.graph_weight),
            "min_edge": list(self.min_edge) if self.min_edge else None,
        }


def format_weight(w: int | float) -> int | str:
    return "inf" if w == INF else int(w)


def weight_report(h: Graph) -> WeightReport:
    weights = {(u, v): edge_weight(h, u, v) for u, v in h.edges()}
    if not weights:
        return WeightReport({}, INF, None)
    # first minimizing edge in lexicographic order
    min_edge = min(weights, key=lambda e: (weights[e], e))
    return WeightReport(weights, weights[min_edge], min_edge)


def graph_weight(h: Graph) -> int | float:
    """Minimum edge weight; ``INF`` for an edgeless graph."""
    return weight_report(h).graph_weight


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class LowerBound:
    """``sat(H, n) >= slope * n - constant``."""

    weight: int
    slope: Fraction
    constant: Fraction

    def value_at(self, n: int) -> Fraction:
        return self.slope * n - self.constant

    def integer_value_at(self, n: int) -> int:
        return max(0, math.ceil(self.value_at(n)))

    def to_json(self, n: int | None = None) -> dict:
        out = {
            "graph_weight": self.weight,
            "slope": fraction_str(self.slope),
            "constant": fraction_str(self.constant),
        }
        if n is not None:
            out["n"] = n
            out["value"] = fraction_str(self.value_at(n))
            out["integer_value"] = self.integer_value_at(n)
        return out


class InfiniteSaturation(Exception):
    """Raised for edgeless H, whose saturation number is infinite by convention."""


def lower_bound(h: Graph) -> LowerBound:
    wt = graph_weight(h)
    if wt == INF:
        raise InfiniteSaturation("H has no edges; sat(H, n) is infinite")
    wt = int(wt)
    if wt == 1:
        return LowerBound(1, Fraction(0), Fraction(0))
    return LowerBound(wt, Fraction(wt - 1, 2), Fraction(wt * wt - 4 * wt + 5, 2))
