"""Colour-biased Hamilton cycles in dense edge-coloured graphs.

Constructive solver for the guarantee that any r-coloured graph with minimum
degree at least (1/2 + 1/2r) n + 6 d r^2 has a Hamilton cycle carrying at
least n/r + d edges of one colour, plus the extremal constructions showing
the degree bound is nearly sharp and an exhaustive oracle for desk-scale
cross-checks.
"""

from .errors import (
    BestEffortFailedError,
    BiasGuaranteeError,
    DegreeHypothesisError,
    EnumerationSizeError,
    GraphFormatError,
    HambiasError,
    InfeasibilityError,
    InternalInvariantError,
    NonEdgeError,
)
from .extremal import build_layered, build_turan3
from .fileio import (
    dumps_coloured_graph,
    dumps_cycle,
    parse_coloured_graph,
    read_coloured_graph,
    read_cycle,
    write_coloured_graph,
    write_cycle,
)
from .graphs import (
    ColourHistogram,
    Cycle,
    EdgeColouring,
    Graph,
    LinearForest,
    colour_histogram,
    edge,
    induced_subgraph,
    is_t_unbalanced,
    min_degree,
)
from .hamilton import (
    StepCounter,
    dirac_hamilton,
    insert_vertex,
    posa_forced_hamilton,
)
from .instances import (
    random_colouring,
    random_complete,
    random_linear_forest,
    random_min_degree,
)
from .oracle import (
    LandscapeResult,
    VerifyResult,
    bias_landscape,
    enumerate_hamilton_cycles,
    verify_solution,
)
from .switching import (
    SolveOutcome,
    SwitchCandidate,
    SwitchSystem,
    assemble_and_choose,
    chord_triangles,
    collect_switch_system,
    derive_switch_candidate,
    find_unbalanced_hamilton,
    insertion_gain,
    partner_base,
    required_min_degree,
    solve_unbalanced,
    spectrum_cycles,
)

__version__ = "0.1.0"

__all__ = [
    "BestEffortFailedError",
    "BiasGuaranteeError",
    "ColourHistogram",
    "Cycle",
    "DegreeHypothesisError",
    "EdgeColouring",
    "EnumerationSizeError",
    "Graph",
    "GraphFormatError",
    "HambiasError",
    "InfeasibilityError",
    "InternalInvariantError",
    "LandscapeResult",
    "LinearForest",
    "NonEdgeError",
    "SolveOutcome",
    "StepCounter",
    "SwitchCandidate",
    "SwitchSystem",
    "VerifyResult",
    "assemble_and_choose",
    "bias_landscape",
    "build_layered",
    "build_turan3",
    "chord_triangles",
    "collect_switch_system",
    "colour_histogram",
    "derive_switch_candidate",
    "dirac_hamilton",
    "dumps_coloured_graph",
    "dumps_cycle",
    "edge",
    "enumerate_hamilton_cycles",
    "find_unbalanced_hamilton",
    "induced_subgraph",
    "insert_vertex",
    "insertion_gain",
    "is_t_unbalanced",
    "min_degree",
    "parse_coloured_graph",
    "partner_base",
    "posa_forced_hamilton",
    "random_colouring",
    "random_complete",
    "random_linear_forest",
    "random_min_degree",
    "read_coloured_graph",
    "read_cycle",
    "required_min_degree",
    "solve_unbalanced",
    "spectrum_cycles",
    "verify_solution",
    "write_coloured_graph",
    "write_cycle",
]
