"""Cyber-defense resource allocation on networks.

Thin Python wrapper over the compiled extension: network generators,
protection tensors, contagion risk measures, Stackelberg equilibria,
efficient frontiers, and dynamic contagion simulation.
"""

from ._secnet import (  # noqa: F401
    Network,
    OnePointTensor,
    TwoPointTensor,
    activation_risk,
    attacker_best_response,
    community,
    compare_strategies,
    efficient_frontier,
    equilibrium,
    erdos_renyi,
    example_six_node_network,
    from_edge_list,
    infection_probability_exact,
    infection_probability_mc,
    log_alpha_grid,
    one_point_protection,
    reduce_a_scalar,
    reduce_a_vec,
    reduce_b,
    simulate,
    to_edge_list,
    tree,
    two_point_protection,
    walk_count_risk,
)

__all__ = [
    "Network",
    "OnePointTensor",
    "TwoPointTensor",
    "activation_risk",
    "attacker_best_response",
    "community",
    "compare_strategies",
    "efficient_frontier",
    "equilibrium",
    "erdos_renyi",
    "example_six_node_network",
    "from_edge_list",
    "infection_probability_exact",
    "infection_probability_mc",
    "log_alpha_grid",
    "one_point_protection",
    "reduce_a_scalar",
    "reduce_a_vec",
    "reduce_b",
    "simulate",
    "to_edge_list",
    "tree",
    "two_point_protection",
    "walk_count_risk",
]
