"""Graph recolouring toolkit.

Kempe-chain machinery over proper vertex colourings, a constructive
recolouring planner for graphs whose induced odd cycles all have a
low-degree vertex, generators for frozen-colouring witness graphs, and
brute-force oracles that check every claim at desk scale.
"""

from .colouring import (
    Colouring,
    KempeChain,
    all_chains,
    apply_change,
    chain_violation,
    frozen_degree_bound,
    is_frozen,
    kempe_chain,
    missed_colours,
)
from .constructions import (
    LabelledConstruction,
    pentagon_layers,
    pentagon_layers_reduced,
    triangle_clique_tensor,
)
from .errors import (
    BudgetExceededError,
    CliqueBoundViolationError,
    GraphParseError,
    InputClassError,
    InternalLiftError,
    InvalidChainError,
    OddHoleViolationError,
    OpenCaseError,
    PlannerError,
    UnsupportedRegimeError,
)
from .formats import emit_graph, parse_graph
from .graph import (
    Graph,
    HoleWitness,
    boundary_degree,
    clique_number,
    degree_into,
    delete_vertex,
    edges_between,
    find_odd_hole,
    is_triangle_free,
    iter_odd_holes,
    local_clique_number,
    recolouring_threshold,
)
from .oracle import (
    AuditReport,
    BipartitePattern,
    Budget,
    ReconfigurationSummary,
    SearchReport,
    canonical_form,
    enumerate_colourings,
    enumerate_frozen,
    fig7_patterns,
    frozen_4x4_search,
    is_k_recolourable,
    kempe_class_closure,
    reconfiguration_components,
    same_canonical_class,
    threshold_audit,
)
from .planner import (
    FaithfulState,
    RecolouringPlan,
    check_plan,
    finalize,
    lift_base,
    lift_step,
    low_degree_lift,
    pick_vertex,
    plan_recolouring,
    verify_plan,
)

__all__ = [
    "AuditReport",
    "BipartitePattern",
    "Budget",
    "BudgetExceededError",
    "CliqueBoundViolationError",
    "Colouring",
    "FaithfulState",
    "Graph",
    "GraphParseError",
    "HoleWitness",
    "InputClassError",
    "InternalLiftError",
    "InvalidChainError",
    "KempeChain",
    "LabelledConstruction",
    "OddHoleViolationError",
    "OpenCaseError",
    "PlannerError",
    "ReconfigurationSummary",
    "RecolouringPlan",
    "SearchReport",
    "UnsupportedRegimeError",
    "all_chains",
    "apply_change",
    "boundary_degree",
    "canonical_form",
    "chain_violation",
    "check_plan",
    "clique_number",
    "degree_into",
    "delete_vertex",
    "edges_between",
    "emit_graph",
    "enumerate_colourings",
    "enumerate_frozen",
    "fig7_patterns",
    "finalize",
    "find_odd_hole",
    "frozen_4x4_search",
    "frozen_degree_bound",
    "is_frozen",
    "is_k_recolourable",
    "is_triangle_free",
    "iter_odd_holes",
    "kempe_chain",
    "kempe_class_closure",
    "lift_base",
    "lift_step",
    "local_clique_number",
    "low_degree_lift",
    "missed_colours",
    "parse_graph",
    "pentagon_layers",
    "pentagon_layers_reduced",
    "pick_vertex",
    "plan_recolouring",
    "reconfiguration_components",
    "recolouring_threshold",
    "same_canonical_class",
    "threshold_audit",
    "triangle_clique_tensor",
    "verify_plan",
]
