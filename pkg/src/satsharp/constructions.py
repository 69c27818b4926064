"""Explicit saturated-graph builders.

Each builder documents its vertex labeling so certificates are
reproducible. ``ConstructionRecipe`` bundles a builder with its target
forbidden graph and closed-form edge count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import InputError
from .graph import Graph, add_dominating, complete, disjoint_cliques, disjoint_union, empty, join, star
from .threshold import INITIAL, Step, build, dominating_regime, format_sequence, parse_sequence, step_automaton


def dominating_lift(g: Graph) -> Graph:
    """``g`` plus a dominating vertex labeled ``g.n``.

    If ``g`` is H-saturated, the result is saturated for H plus a
    dominating vertex. The edge count is only optimal for a minimum base.
    """
    return add_dominating(g)


def clique_partition(k: int, n: int) -> Graph:
    """``q`` disjoint copies of K_k then one K_r, where ``n = q*k + r``."""
    if k < 1:
        raise InputError("k must be positive")
    if n < k + 1:
        raise InputError(f"clique_partition needs n >= k + 1 = {k + 1}, got {n}")
    q, r = divmod(n, k)
    return disjoint_cliques([k] * q + ([r] if r else []))


def clique_partition_edges(k: int, n: int) -> int:
    q, r = divmod(n, k)
    return q * comb(k, 2) + comb(r, 2)


def _check_cliques(p: Sequence[int]) -> list[int]:
    p = list(p)
    if not p:
        raise InputError("need at least one clique size")
    if any(x < 2 for x in p):
        raise InputError("clique sizes must be >= 2")
    if p != sorted(p):
        raise InputError("clique sizes must be sorted ascending")
    return p


def disjoint_cliques_saturated(p: Sequence[int], n: int) -> Graph:
    """``K_{p1-2}`` joined with ``K_t`` plus isolated vertices, ``t = 1 + p2 + ... + pm``.

    Labels: the joined clique first, then ``K_t``, then the isolated set.
    """
    p = _check_cliques(p)
    total = sum(p)
    if n < total:
        raise InputError(f"n must be at least {total}")
    t = 1 + total - p[0]
    rest = disjoint_union(complete(t), empty(n - t - p[0] + 2))
    return join(complete(p[0] - 2), rest)


def disjoint_cliques_edges(p: Sequence[int], n: int) -> int:
    total = sum(p)
    return (p[0] - 2) * (n + 1 - total) + comb(total - 1, 2)


def join_lift(p: Sequence[int], ell: int, n: int) -> Graph:
    """``ell`` dominating lifts of ``disjoint_cliques_saturated(p, n - ell)``."""
    p = _check_cliques(p)
    if ell < 0:
        raise InputError("ell must be nonnegative")
    if n < ell + sum(p):
        raise InputError(f"n must be at least {ell + sum(p)}")
    g = disjoint_cliques_saturated(p, n - ell)
    for _ in range(ell):
        g = dominating_lift(g)
    return g


def join_lift_edges(p: Sequence[int], ell: int, n: int) -> int:
    base = n - ell
    return disjoint_cliques_edges(p, base) + sum(base + i for i in range(ell))


def _threshold_plan(seq) -> tuple[int, int]:
    """Return (clique size of the last reset, number of later shifts)."""
    s = INITIAL
    k = None
    lifts = 0
    for step in seq:
        if Step(step) is Step.DOMINATING:
            if dominating_regime(s) == "reset":
                k, lifts = s.k, 0
            else:
                lifts += 1
        s = step_automaton(s, step)
    if k is None:
        raise InputError("target threshold graph has no edges; no saturated graph exists")
    return k, lifts


def threshold_saturated(seq, n: int) -> Graph:
    """Saturated graph for ``build(seq)`` on ``n`` vertices.

    The last reset step restarts the construction as a clique partition;
    each later shift step applies a dominating lift. Isolated steps change
    nothing. Spare vertices go to the clique partition.
    """
    seq = tuple(Step(s) for s in seq)
    k, lifts = _threshold_plan(seq)
    if n < 1 + len(seq):
        raise InputError(f"n must be at least {1 + len(seq)}")
    g = clique_partition(k, n - lifts)
    for _ in range(lifts):
        g = dominating_lift(g)
    return g


def threshold_saturated_edges(seq, n: int) -> int:
    k, lifts = _threshold_plan(tuple(Step(s) for s in seq))
    base = n - lifts
    return clique_partition_edges(k, base) + sum(base + i for i in range(lifts))


KINDS = ("dominating-lift", "clique-partition", "disjoint-cliques", "join-lift", "threshold")


@dataclass(frozen=True)
class ConstructionRecipe:
    kind: str
    n: int
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InputError(f"unknown construction kind {self.kind!r}")

    def build(self) -> Graph:
        kind, n, p = self.kind, self.n, self.params
        if kind == "dominating-lift":
            base: Graph = p["base"]
            if base.n + 1 != n:
                raise InputError("dominating lift adds exactly one vertex")
            return dominating_lift(base)
        if kind == "clique-partition":
            return clique_partition(p["k"], n)
        if kind == "disjoint-cliques":
            return disjoint_cliques_saturated(p["cliques"], n)
        if kind == "join-lift":
            return join_lift(p["cliques"], p["ell"], n)
        return threshold_saturated(parse_sequence(p["seq"]), n)

    def predicted_edges(self) -> int:
        kind, n, p = self.kind, self.n, self.params
        if kind == "dominating-lift":
            return p["base"].m + p["base"].n
        if kind == "clique-partition":
            return clique_partition_edges(p["k"], n)
        if kind == "disjoint-cliques":
            return disjoint_cliques_edges(p["cliques"], n)
        if kind == "join-lift":
            return join_lift_edges(p["cliques"], p["ell"], n)
        return threshold_saturated_edges(parse_sequence(p["seq"]), n)

    def target(self) -> Graph | None:
        """The forbidden graph this construction is saturated for, when known."""
        kind, p = self.kind, self.params
        if kind == "dominating-lift":
            h = p.get("base_target")
            return add_dominating(h) if h is not None else None
        if kind == "clique-partition":
            return star(p["k"])
        if kind == "disjoint-cliques":
            return disjoint_cliques(p["cliques"])
        if kind == "join-lift":
            return join(complete(p["ell"]), disjoint_cliques(p["cliques"]))
        return build(parse_sequence(p["seq"]))

    def sidecar(self) -> dict:
        params = {}
        for key, val in self.params.items():
            if isinstance(val, Graph):
                params[key] = val.to_json()
            elif key == "seq":
                params[key] = format_sequence(parse_sequence(val))
            elif isinstance(val, (list, tuple)):
                params[key] = list(val)
            else:
                params[key] = val
        target = self.target()
        return {
            "kind": self.kind,
            "n": self.n,
            "parameters": params,
            "predicted_edges": self.predicted_edges(),
            "target": target.to_json() if target is not None else None,
        }
