"""Saturation numbers of graphs: weights, lower bounds, threshold graphs,
saturated constructions and an exact small-order oracle."""

from .canon import canonical_form, is_isomorphic
from .constructions import (
    ConstructionRecipe,
    clique_partition,
    disjoint_cliques_saturated,
    dominating_lift,
    join_lift,
    threshold_saturated,
)
from .embed import Embedding, SaturationVerdict, contains_subgraph, verify_saturation
from .errors import CapabilityError, GraphFormatError, InputError
from .graph import (
    Graph,
    add_dominating,
    add_isolated,
    complete,
    disjoint_union,
    empty,
    join,
    parse_graph,
    read_graph,
    write_graph,
)
from .oracle import SatResult, SharpnessProbe, enumerate_graphs, sat_exact, sharpness_probe
from .threshold import AutomatonState, Step, build, recognize, step_automaton, threshold_weight
from .weights import INF, LowerBound, WeightReport, edge_weight, graph_weight, lower_bound

__version__ = "0.1.0"
