"""Threshold graphs: build sequences, recognition by peeling, and the
weight / saturation-slope automaton along a build sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InputError
from .graph import Graph, add_dominating, add_isolated, complete
from .weights import fraction_str

INF = math.inf


class Step(str, Enum):
    ISOLATED = "I"
    DOMINATING = "D"


def parse_sequence(text: str) -> tuple[Step, ...]:
    text = text.strip().upper()
    if any(c not in "ID" for c in text):
        raise InputError(f"sequence must use only 'I' and 'D': {text!r}")
    return tuple(Step(c) for c in text)


def format_sequence(seq) -> str:
    return "".join(Step(s).value for s in seq)


def build(seq) -> Graph:
    """Vertex 0 is the initial K1; step ``i`` adds vertex ``i + 1``."""
    g = complete(1)
    for s in seq:
        g = add_dominating(g) if Step(s) is Step.DOMINATING else add_isolated(g)
    return g


def recognize(g: Graph) -> tuple[Step, ...] | None:
    """Peel isolated (preferred) or dominating vertices; ``None`` if stuck."""
    if g.n < 1:
        raise InputError("recognize needs at least one vertex")
    alive = (1 << g.n) - 1
    count = g.n
    steps: list[Step] = []
    while count > 1:
        degs = {v: (g.adj[v] & alive).bit_count() for v in range(g.n) if alive >> v & 1}
        iso = next((v for v, d in degs.items() if d == 0), None)
        if iso is not None:
            steps.append(Step.ISOLATED)
            alive &= ~(1 << iso)
        else:
            dom = next((v for v, d in degs.items() if d == count - 1), None)
            if dom is None:
                return None
            steps.append(Step.DOMINATING)
            alive &= ~(1 << dom)
        count -= 1
    return tuple(reversed(steps))


def is_threshold(g: Graph) -> bool:
    return recognize(g) is not None


@dataclass(frozen=True)
class AutomatonState:
    k: int
    wt: int | float
    has_isolated: bool
    satlim: Fraction | float

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "wt": "inf" if self.wt == INF else int(self.wt),
            "has_isolated": self.has_isolated,
            "satlim": "inf" if self.satlim == INF else fraction_str(self.satlim),
        }


INITIAL = AutomatonState(k=1, wt=INF, has_isolated=True, satlim=INF)


def dominating_regime(s: AutomatonState) -> str:
    """Which weight update applies when a dominating vertex is added to ``s``.

    ``"shift"``: weight grows by 2 and the slope by 1. ``"reset"``: the new
    weight is the current vertex count and the clique-partition
    construction becomes optimal.
    """
    if not s.has_isolated or s.wt <= s.k - 2:
        return "shift"
    return "reset"


def step_automaton(s: AutomatonState, step) -> AutomatonState:
    if Step(step) is Step.ISOLATED:
        return AutomatonState(s.k + 1, s.wt, True, s.satlim)
    if dominating_regime(s) == "shift":
        return AutomatonState(s.k + 1, s.wt + 2, False, s.satlim + 1)
    return AutomatonState(s.k + 1, s.k, False, Fraction(s.k - 1, 2))


def trace(seq) -> list[AutomatonState]:
    states = [INITIAL]
    for s in seq:
        states.append(step_automaton(states[-1], s))
    return states


def threshold_weight(seq) -> AutomatonState:
    return trace(seq)[-1]
